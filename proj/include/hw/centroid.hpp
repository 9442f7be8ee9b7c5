#pragma once

#include <vector>

#include "hw/profiles.hpp"
#include "hw/tree.hpp"

namespace hw {

/// Everything about the two "middle parts" of one tree.
struct CentroidReport {
    std::vector<Vertex> centroid;        // branch-weight argmin, sorted
    std::vector<Vertex> hyper_centroid;  // local_ww argmin, sorted
    std::vector<int> branch_weight;      // per vertex
    int min_distance;                    // min d(v,u), v in hyper_centroid, u in centroid
};

/// branch_weight[v] = max component size of the forest T - v
/// (equivalently, the edge count of the heaviest branch at v). 0 for n = 1.
std::vector<int> branch_weights(const Tree& t);

/// Branch-weight argmin. Always a single vertex or two adjacent vertices;
/// checked on every call (InvariantViolation otherwise), since the extremal
/// searches depend on it.
std::vector<Vertex> centroid(const Tree& t);

/// local_ww argmin; same size/adjacency guarantee as centroid(), checked on
/// every call. The second form reuses an already computed profile.
std::vector<Vertex> hyper_centroid(const Tree& t);
std::vector<Vertex> hyper_centroid(const Tree& t, const VertexProfile& p);

/// For an edge uv with v in the hyper-centroid, checks
///   closer(v) + dist_v_side(v) >= closer(u) + dist_u_side(u)
/// and that equality holds exactly when u is in the hyper-centroid too.
bool hyper_centroid_transfer_check(const Tree& t, Vertex v, Vertex u);

/// min over (v in hyper_centroid, u in centroid) of d(v,u).
int centroid_distance(const Tree& t);

/// Worst-case centroid/hyper-centroid separation over all trees of order n:
/// floor((n-1)/8) for odd n, floor((n^2-2n-8)/(8n+8)) for even n.
/// True floor (the even formula is negative at n = 2).
long long distance_bound(long long n);

CentroidReport centroid_report(const Tree& t);

}  // namespace hw
