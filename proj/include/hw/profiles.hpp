#pragma once

#include <vector>

#include "hw/tree.hpp"

namespace hw {

/// Per-vertex distance sums, all exact integers:
///   dist_sum[v]    = sum over u of d(u,v)
///   sq_dist_sum[v] = sum over u of d(u,v)^2
///   local_ww[v]    = dist_sum[v] + sq_dist_sum[v]
struct VertexProfile {
    std::vector<long long> dist_sum;
    std::vector<long long> sq_dist_sum;
    std::vector<long long> local_ww;
};

struct IndexSummary {
    long long wiener;        // (1/2) sum of dist_sum
    long long hyper_wiener;  // (1/4) sum of local_ww
};

/// Reference implementation: one BFS per vertex, O(n^2). Kept permanently as
/// the oracle every faster path is checked against.
VertexProfile profiles_oracle(const Tree& t);

/// Rerooting implementation, O(n) total.
///
/// First pass accumulates subtree counts and down-sums; second pass walks the
/// tree from the root transferring sums across each edge parent->child:
/// dist_sum changes by (n - 2*subtree), sq_dist_sum by
/// 2*(dist_sum[parent] - 2*(down_sum[child] + subtree)) + n.
/// Output is bit-identical to profiles_oracle.
VertexProfile profiles_fast(const Tree& t);

/// Exact halving/quartering of the profile sums; throws NonIntegralAggregate
/// if the divisions do not come out even (which would mean a corrupt profile).
IndexSummary summary(const VertexProfile& p);

/// Right-hand side of the adjacency difference identity for the edge uv:
///   2 * (dist_u_side(u) - dist_v_side(v) + |u side| - |v side|)
/// computed from the two components of the tree with uv removed. Equals
/// local_ww[v] - local_ww[u] on any correct profile.
long long adjacent_difference(const Tree& t, Vertex u, Vertex v);

/// local_ww[root] evaluated by the subtree recursion
///   ww(v) = 2(n-1) + 2*sum_i dist(child subtree i) + sum_i ww(child subtree i)
/// in one post-order traversal. 0 for n = 1.
long long ww_recursive(const Tree& t, Vertex root);

/// Component-balance inequalities at a hyper-centroid vertex v: for every
/// component C of the forest T - v,
///   sum_{y not in C} d(v,y) + n - |C|  >=  sum_{x in C} d(v,x)
/// and additionally 2|C| <= sum_{y not in C} d(v,y) + n whenever
/// sum_{x in C} d(v,x) >= |C|. Throws NotHyperCentroid if local_ww[v] is not
/// minimal.
bool check_component_balance(const Tree& t, Vertex v);

}  // namespace hw
