#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hw/errors.hpp"

namespace hw {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable tree on n vertices with dense ids 0..n-1.
///
/// Construction validates everything (edge count, ranges, self-loops,
/// duplicates, acyclicity, connectivity); all queries may assume a valid
/// tree afterwards. Adjacency is stored CSR-style with sorted neighbor
/// lists, and instances are safe to share across threads.
class Tree {
public:
    static Tree from_edge_list(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    bool has_edge(Vertex u, Vertex v) const;

    /// Edges as (min,max) pairs, sorted; n-1 entries.
    std::vector<Edge> edge_list() const;

    void check_vertex(Vertex v) const;

private:
    Tree(int n, std::vector<int> offsets, std::vector<Vertex> adj)
        : n_(n), offsets_(std::move(offsets)), adj_(std::move(adj)) {}

    int n_ = 0;
    std::vector<int> offsets_;
    std::vector<Vertex> adj_;
};

/// Result of removing one edge: the two component sizes.
struct EdgeCut {
    Vertex u, v;
    int u_side, v_side;  // u_side + v_side == n
};

/// distances[x] = number of edges on the x..v path; distances[v] = 0.
std::vector<int> bfs_distances(const Tree& t, Vertex v);

/// The unique simple path from u to v, endpoints included.
std::vector<Vertex> path_between(const Tree& t, Vertex u, Vertex v);

EdgeCut cut_edge(const Tree& t, Vertex u, Vertex v);

/// Degree-1 vertices, ascending. Degenerate orders: {0} for n=1, {0,1} for n=2.
std::vector<Vertex> leaves(const Tree& t);

/// Vertex count and sum of distances from `src` over the component of `src`
/// in the tree with the edge (src_side_of, other) removed. Used by the
/// difference identities, which are all phrased in terms of one side of an
/// edge cut.
struct SideSums {
    long long count;
    long long dist_sum;
};
SideSums side_sums(const Tree& t, Vertex src, Vertex excluded_neighbor);

// --- text format ---------------------------------------------------------
// line 1: n
// next n-1 lines: "u v" (0-based, ascii decimal, single space, LF)
// lines starting with '#' are ignored anywhere.

Tree read_tree(std::istream& in);
Tree read_tree_file(const std::string& path);
void write_tree(std::ostream& out, const Tree& t);

/// Reads the next record from a multi-record stream (records separated by
/// blank lines); std::nullopt at end of input.
std::optional<Tree> read_tree_record(std::istream& in);

}  // namespace hw
