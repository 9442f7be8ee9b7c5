#include "hw/centroid.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace hw {

std::vector<int> branch_weights(const Tree& t) {
    const int n = t.order();
    std::vector<int> bw(n, 0);
    if (n == 1) return bw;

    std::vector<Vertex> order, parent;
    order.reserve(n);
    parent.assign(n, -1);
    parent[0] = 0;
    order.push_back(0);
    for (size_t head = 0; head < order.size(); ++head)
        for (Vertex y : t.neighbors(order[head]))
            if (parent[y] < 0) {
                parent[y] = order[head];
                order.push_back(y);
            }

    std::vector<int> subtree(n, 1);
    for (int i = n - 1; i > 0; --i) {
        Vertex v = order[i];
        subtree[parent[v]] += subtree[v];
        bw[parent[v]] = std::max(bw[parent[v]], subtree[v]);
    }
    for (Vertex v = 1; v < n; ++v) bw[v] = std::max(bw[v], n - subtree[v]);
    return bw;
}

std::vector<Vertex> centroid(const Tree& t) {
    const int n = t.order();
    std::vector<int> bw = branch_weights(t);
    int best = *std::min_element(bw.begin(), bw.end());
    std::vector<Vertex> c;
    for (Vertex v = 0; v < n; ++v)
        if (bw[v] == best) c.push_back(v);

    if (c.size() == 1) {
        if (2 * best > n - 1)
            throw InvariantViolation("single centroid with branch weight " + std::to_string(best) + " > (n-1)/2");
    } else if (c.size() == 2) {
        if (!t.has_edge(c[0], c[1]) || 2 * best != n)
            throw InvariantViolation("centroid pair not adjacent with branch weight n/2");
    } else {
        throw InvariantViolation("centroid set has size " + std::to_string(c.size()));
    }
    return c;
}

std::vector<Vertex> hyper_centroid(const Tree& t) {
    return hyper_centroid(t, profiles_fast(t));
}

std::vector<Vertex> hyper_centroid(const Tree& t, const VertexProfile& p) {
    const int n = t.order();
    long long best = *std::min_element(p.local_ww.begin(), p.local_ww.end());
    std::vector<Vertex> c;
    for (Vertex v = 0; v < n; ++v)
        if (p.local_ww[v] == best) c.push_back(v);

    if (c.size() > 2 || (c.size() == 2 && !t.has_edge(c[0], c[1])))
        throw InvariantViolation("hyper-centroid is not a vertex or an adjacent pair (size " + std::to_string(c.size()) + ")");
    return c;
}

bool hyper_centroid_transfer_check(const Tree& t, Vertex v, Vertex u) {
    if (!t.has_edge(u, v))
        throw NotAnEdge("(" + std::to_string(v) + "," + std::to_string(u) + ") is not an edge");
    std::vector<Vertex> hc = hyper_centroid(t);
    if (!std::binary_search(hc.begin(), hc.end(), v))
        throw NotHyperCentroid("vertex " + std::to_string(v) + " is not in the hyper-centroid");

    SideSums sv = side_sums(t, v, u);
    SideSums su = side_sums(t, u, v);
    long long lhs = sv.count + sv.dist_sum;
    long long rhs = su.count + su.dist_sum;
    bool u_in = std::binary_search(hc.begin(), hc.end(), u);
    return lhs >= rhs && ((lhs == rhs) == u_in);
}

int centroid_distance(const Tree& t) {
    std::vector<Vertex> c = centroid(t);
    std::vector<Vertex> hc = hyper_centroid(t);
    // one multi-source BFS from the hyper-centroid
    std::vector<int> dist(t.order(), -1);
    std::vector<Vertex> queue;
    for (Vertex v : hc) {
        dist[v] = 0;
        queue.push_back(v);
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        Vertex x = queue[head];
        for (Vertex y : t.neighbors(x))
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
    }
    int best = std::numeric_limits<int>::max();
    for (Vertex u : c) best = std::min(best, dist[u]);
    return best;
}

long long distance_bound(long long n) {
    if (n < 2) throw InvalidOrder("distance_bound needs n >= 2, got " + std::to_string(n));
    if (n % 2 == 1) return (n - 1) / 8;
    long long num = n * n - 2 * n - 8;
    long long den = 8 * n + 8;
    // floor division; the numerator is negative only for n = 2
    long long q = num / den;
    if (num % den != 0 && (num < 0) != (den < 0)) --q;
    return q;
}

CentroidReport centroid_report(const Tree& t) {
    CentroidReport r;
    r.centroid = centroid(t);
    r.hyper_centroid = hyper_centroid(t);
    r.branch_weight = branch_weights(t);
    r.min_distance = centroid_distance(t);
    return r;
}

}  // namespace hw
