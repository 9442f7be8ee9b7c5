#include "hw/tree.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace hw {

namespace {

std::string edge_str(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

// Minimal union-find, path halving.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    // false if already joined
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

Tree Tree::from_edge_list(int n, const std::vector<Edge>& edges) {
    if (n < 1) throw InvalidSpec("tree order must be >= 1, got " + std::to_string(n));

    std::vector<int> degree(n, 0);
    Dsu dsu(n);
    std::unordered_set<uint64_t> seen;
    seen.reserve(edges.size() * 2);

    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n) throw IndexOutOfRange("vertex " + std::to_string(u) + " of edge " + edge_str(u, v) + " not in [0," + std::to_string(n) + ")");
        if (v < 0 || v >= n) throw IndexOutOfRange("vertex " + std::to_string(v) + " of edge " + edge_str(u, v) + " not in [0," + std::to_string(n) + ")");
        if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
        uint64_t key = (static_cast<uint64_t>(std::min(u, v)) << 32) | static_cast<uint32_t>(std::max(u, v));
        if (!seen.insert(key).second) throw DuplicateEdge("duplicate edge " + edge_str(u, v));
        if (!dsu.unite(u, v)) throw CycleDetected("edge " + edge_str(u, v) + " closes a cycle");
        ++degree[u];
        ++degree[v];
    }

    if (static_cast<int>(edges.size()) != n - 1) {
        // With no cycle among the given edges, too few edges is the only
        // possibility left; name the first vertex cut off from vertex 0.
        int root = dsu.find(0);
        for (Vertex v = 1; v < n; ++v)
            if (dsu.find(v) != root)
                throw Disconnected("vertex " + std::to_string(v) + " unreachable from vertex 0");
        throw Disconnected("edge count " + std::to_string(edges.size()) + " != n-1");
    }

    std::vector<int> offsets(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + degree[v];
    std::vector<Vertex> adj(offsets[n]);
    std::vector<int> fill(offsets.begin(), offsets.end() - 1);
    for (const auto& [u, v] : edges) {
        adj[fill[u]++] = v;
        adj[fill[v]++] = u;
    }
    for (Vertex v = 0; v < n; ++v)
        std::sort(adj.begin() + offsets[v], adj.begin() + offsets[v + 1]);

    return Tree(n, std::move(offsets), std::move(adj));
}

void Tree::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw IndexOutOfRange("vertex " + std::to_string(v) + " not in [0," + std::to_string(n_) + ")");
}

bool Tree::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Tree::edge_list() const {
    std::vector<Edge> out;
    out.reserve(n_ > 0 ? n_ - 1 : 0);
    for (Vertex v = 0; v < n_; ++v)
        for (Vertex u : neighbors(v))
            if (u > v) out.emplace_back(v, u);
    return out;
}

std::vector<int> bfs_distances(const Tree& t, Vertex v) {
    t.check_vertex(v);
    const int n = t.order();
    std::vector<int> dist(n, -1);
    std::vector<Vertex> queue;
    queue.reserve(n);
    dist[v] = 0;
    queue.push_back(v);
    for (size_t head = 0; head < queue.size(); ++head) {
        Vertex x = queue[head];
        for (Vertex y : t.neighbors(x)) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

std::vector<Vertex> path_between(const Tree& t, Vertex u, Vertex v) {
    t.check_vertex(u);
    t.check_vertex(v);
    if (u == v) return {u};
    const int n = t.order();
    std::vector<Vertex> parent(n, -1);
    std::vector<Vertex> queue;
    queue.reserve(n);
    parent[u] = u;
    queue.push_back(u);
    for (size_t head = 0; head < queue.size() && parent[v] < 0; ++head) {
        Vertex x = queue[head];
        for (Vertex y : t.neighbors(x)) {
            if (parent[y] < 0) {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    std::vector<Vertex> path;
    for (Vertex x = v; x != u; x = parent[x]) path.push_back(x);
    path.push_back(u);
    std::reverse(path.begin(), path.end());
    return path;
}

SideSums side_sums(const Tree& t, Vertex src, Vertex excluded_neighbor) {
    const int n = t.order();
    std::vector<int> dist(n, -1);
    std::vector<Vertex> queue;
    queue.reserve(n);
    dist[src] = 0;
    dist[excluded_neighbor] = -2;  // wall
    queue.push_back(src);
    long long sum = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        Vertex x = queue[head];
        sum += dist[x];
        for (Vertex y : t.neighbors(x)) {
            if (dist[y] == -1) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return {static_cast<long long>(queue.size()), sum};
}

EdgeCut cut_edge(const Tree& t, Vertex u, Vertex v) {
    if (!t.has_edge(u, v)) throw NotAnEdge(edge_str(u, v) + " is not an edge");
    SideSums su = side_sums(t, u, v);
    return EdgeCut{u, v, static_cast<int>(su.count), t.order() - static_cast<int>(su.count)};
}

std::vector<Vertex> leaves(const Tree& t) {
    const int n = t.order();
    if (n == 1) return {0};
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (t.degree(v) == 1) out.push_back(v);
    return out;
}

// --- text format ---------------------------------------------------------

namespace {

// Next non-comment line, nullopt at EOF. Blank lines are significant to the
// record reader, so they are returned as-is.
std::optional<std::string> next_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '#') continue;
        return line;
    }
    return std::nullopt;
}

Tree parse_record(std::istream& in, const std::string& first) {
    int n;
    {
        std::istringstream iss(first);
        if (!(iss >> n)) throw TreeFormatError("expected vertex count, got \"" + first + "\"");
        std::string rest;
        if (iss >> rest) throw TreeFormatError("trailing tokens after vertex count: \"" + first + "\"");
    }
    if (n < 1) throw TreeFormatError("vertex count must be >= 1, got " + std::to_string(n));
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    while (static_cast<int>(edges.size()) < n - 1) {
        auto line = next_line(in);
        if (!line) throw TreeFormatError("unexpected end of input: got " + std::to_string(edges.size()) + " of " + std::to_string(n - 1) + " edges");
        if (line->empty()) throw TreeFormatError("blank line inside a tree record");
        std::istringstream iss(*line);
        int u, v;
        if (!(iss >> u >> v)) throw TreeFormatError("malformed edge line \"" + *line + "\"");
        std::string rest;
        if (iss >> rest) throw TreeFormatError("trailing tokens on edge line \"" + *line + "\"");
        edges.emplace_back(u, v);
    }
    return Tree::from_edge_list(n, edges);
}

}  // namespace

std::optional<Tree> read_tree_record(std::istream& in) {
    for (;;) {
        auto line = next_line(in);
        if (!line) return std::nullopt;
        if (line->empty()) continue;  // record separator / leading blank
        return parse_record(in, *line);
    }
}

Tree read_tree(std::istream& in) {
    auto t = read_tree_record(in);
    if (!t) throw TreeFormatError("empty input");
    return *std::move(t);
}

Tree read_tree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TreeFormatError("cannot open file: " + path);
    try {
        return read_tree(in);
    } catch (const Error& e) {
        throw TreeFormatError(path + ": " + e.what());
    }
}

void write_tree(std::ostream& out, const Tree& t) {
    out << t.order() << "\n";
    for (const auto& [u, v] : t.edge_list()) out << u << " " << v << "\n";
}

}  // namespace hw
