#include "hw/profiles.hpp"

#include <algorithm>
#include <string>

namespace hw {

namespace {

// sum of local_ww is bounded by n^2 (n-1)^2 < n^4; keep n^4 well inside
// signed 64 bits and refuse anything larger instead of wrapping.
constexpr int kMaxProfileOrder = 50000;

void check_order(const Tree& t) {
    if (t.order() > kMaxProfileOrder)
        throw Overflow("profile sums may overflow 64-bit integers for n = " + std::to_string(t.order()) + " (max " + std::to_string(kMaxProfileOrder) + ")");
}

// BFS order from root plus parent links; order[0] == root.
void bfs_order(const Tree& t, Vertex root, std::vector<Vertex>& order, std::vector<Vertex>& parent) {
    const int n = t.order();
    order.clear();
    order.reserve(n);
    parent.assign(n, -1);
    parent[root] = root;
    order.push_back(root);
    for (size_t head = 0; head < order.size(); ++head) {
        Vertex x = order[head];
        for (Vertex y : t.neighbors(x)) {
            if (parent[y] < 0) {
                parent[y] = x;
                order.push_back(y);
            }
        }
    }
}

}  // namespace

VertexProfile profiles_oracle(const Tree& t) {
    check_order(t);
    const int n = t.order();
    VertexProfile p{std::vector<long long>(n, 0), std::vector<long long>(n, 0), std::vector<long long>(n, 0)};
    std::vector<int> dist(n);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[v] = 0;
        queue.push_back(v);
        long long w = 0, s = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            Vertex x = queue[head];
            w += dist[x];
            s += static_cast<long long>(dist[x]) * dist[x];
            for (Vertex y : t.neighbors(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        p.dist_sum[v] = w;
        p.sq_dist_sum[v] = s;
        p.local_ww[v] = w + s;
    }
    return p;
}

VertexProfile profiles_fast(const Tree& t) {
    check_order(t);
    const int n = t.order();
    VertexProfile p{std::vector<long long>(n, 0), std::vector<long long>(n, 0), std::vector<long long>(n, 0)};
    if (n == 1) return p;

    std::vector<Vertex> order, parent;
    bfs_order(t, 0, order, parent);

    std::vector<long long> subtree(n, 1);   // vertices in the subtree
    std::vector<long long> down_w(n, 0);    // sum of distances to the subtree
    std::vector<long long> down_s(n, 0);    // sum of squared distances to the subtree

    // Children before parents.
    for (int i = n - 1; i > 0; --i) {
        Vertex v = order[i];
        Vertex u = parent[v];
        subtree[u] += subtree[v];
        down_w[u] += down_w[v] + subtree[v];
        down_s[u] += down_s[v] + 2 * down_w[v] + subtree[v];
    }

    p.dist_sum[0] = down_w[0];
    p.sq_dist_sum[0] = down_s[0];

    // Parents before children: transfer the sums across each edge.
    for (int i = 1; i < n; ++i) {
        Vertex v = order[i];
        Vertex u = parent[v];
        long long toward_v = down_w[v] + subtree[v];  // distances from u into v's side
        p.dist_sum[v] = p.dist_sum[u] + n - 2 * subtree[v];
        p.sq_dist_sum[v] = p.sq_dist_sum[u] + 2 * (p.dist_sum[u] - 2 * toward_v) + n;
    }
    for (Vertex v = 0; v < n; ++v) p.local_ww[v] = p.dist_sum[v] + p.sq_dist_sum[v];
    return p;
}

IndexSummary summary(const VertexProfile& p) {
    long long w_total = 0, ww_total = 0;
    for (size_t v = 0; v < p.dist_sum.size(); ++v) {
        w_total += p.dist_sum[v];
        ww_total += p.local_ww[v];
        if (p.local_ww[v] != p.dist_sum[v] + p.sq_dist_sum[v])
            throw NonIntegralAggregate("profile entry " + std::to_string(v) + " violates local_ww = dist_sum + sq_dist_sum");
    }
    if (w_total % 2 != 0) throw NonIntegralAggregate("sum of dist_sum is odd: " + std::to_string(w_total));
    if (ww_total % 4 != 0) throw NonIntegralAggregate("sum of local_ww is not divisible by 4: " + std::to_string(ww_total));
    return IndexSummary{w_total / 2, ww_total / 4};
}

long long adjacent_difference(const Tree& t, Vertex u, Vertex v) {
    if (!t.has_edge(u, v))
        throw NotAnEdge("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    SideSums su = side_sums(t, u, v);
    SideSums sv = side_sums(t, v, u);
    return 2 * (su.dist_sum - sv.dist_sum + su.count - sv.count);
}

long long ww_recursive(const Tree& t, Vertex root) {
    t.check_vertex(root);
    const int n = t.order();
    if (n == 1) return 0;

    std::vector<Vertex> order, parent;
    bfs_order(t, root, order, parent);
    std::vector<long long> count(n, 1), w_sub(n, 0), ww_sub(n, 0);
    // ww(v) = 2(size-1) + 2*sum_children w_sub + sum_children ww_sub, and
    // w_sub[v] = sum_children w_sub + (size-1), so ww(v) = 2*w_sub[v] + sum_children ww_sub.
    for (int i = n - 1; i > 0; --i) {
        Vertex v = order[i];
        Vertex u = parent[v];
        ww_sub[v] += 2 * w_sub[v];
        count[u] += count[v];
        w_sub[u] += w_sub[v] + count[v];
        ww_sub[u] += ww_sub[v];
    }
    return 2 * w_sub[root] + ww_sub[root];
}

bool check_component_balance(const Tree& t, Vertex v) {
    t.check_vertex(v);
    const int n = t.order();
    VertexProfile p = profiles_fast(t);
    long long min_ww = *std::min_element(p.local_ww.begin(), p.local_ww.end());
    if (p.local_ww[v] != min_ww)
        throw NotHyperCentroid("vertex " + std::to_string(v) + " does not minimize local_ww");

    long long total = p.dist_sum[v];
    for (Vertex nb : t.neighbors(v)) {
        SideSums side = side_sums(t, nb, v);
        long long inner = side.dist_sum + side.count;  // sum over the component of d(v, .)
        long long outer = total - inner;               // includes d(v,v) = 0
        long long size = side.count;
        if (outer + n - size < inner) return false;
        if (inner >= size && 2 * size > outer + n) return false;
    }
    return true;
}

}  // namespace hw
