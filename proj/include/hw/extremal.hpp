#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hw/ratio.hpp"
#include "hw/tree.hpp"
#include "hw/treegen.hpp"

namespace hw {

enum class Objective {
    LEAF_LEAF_MAX,      // max local_ww(w)/local_ww(u) over leaf pairs
    LEAF_HC_MAX,        // max local_ww(w)/local_ww(v), w leaf, v hyper-centroid
    LEAF_HC_MIN,        // min of the same
    CENTROID_DIST_MAX,  // centroid / hyper-centroid separation
};

std::string objective_name(Objective o);
std::optional<Objective> parse_objective(std::string_view s);

struct RatioRecord {
    Ratio value;
    Vertex witness_w = -1;      // numerator vertex (or hyper-centroid side for distances)
    Vertex witness_other = -1;  // denominator vertex (or centroid side)
    CanonicalCode tree_code;
};

/// Extremal ratios on one tree (n >= 2). Ties break toward smaller vertex ids.
RatioRecord leaf_leaf_max(const Tree& t);
RatioRecord leaf_hcentroid_max(const Tree& t);
RatioRecord leaf_hcentroid_min(const Tree& t);

// ---- closed forms over the branch decomposition --------------------------
//
// Both closed forms describe trees where a distinguished path leaves a single
// branch B: for the leaf/leaf form the branch hangs at the neighbor of u and
// every other internal path vertex has degree 2; for the leaf/anchor form the
// branch hangs at the far endpoint v itself.

struct LeafPairSplit {
    long long path_edges;   // edge count of the u..w path
    long long branch_dist;  // distance sum of the branch from its attachment
    long long branch_sq;    // squared-distance sum of the same
    long long attach_ww;    // local_ww of the attachment vertex in the whole tree
};
LeafPairSplit split_leaf_pair(const Tree& t, Vertex u, Vertex w);

struct LeafAnchorSplit {
    long long path_vertices;  // vertex count of the w..v path
    long long branch_dist;
    long long branch_sq;
};
LeafAnchorSplit split_leaf_to_vertex(const Tree& t, Vertex w, Vertex v);

/// The leaf/leaf ratio computed two ways from the same split: once from the
/// two transfer identities, once from the simplified 1 + 3(...)/(...) form.
/// The pair must always be equal; both are returned so callers can check.
std::pair<Ratio, Ratio> leaf_leaf_closed_form(long long n, long long path_edges,
                                              long long branch_dist, long long branch_sq,
                                              long long attach_ww);

/// The leaf/anchor ratio; the denominator equals local_ww of the anchor.
Ratio leaf_hc_closed_form(long long n, long long path_vertices,
                          long long branch_dist, long long branch_sq);

// ---- conjectured bounds ---------------------------------------------------

struct BoundChoice {
    long long r;  // comet parameter the bound is built from
    Ratio bound;
};

/// Conjectured max of the leaf/leaf ratio at order n (n >= 8): the value the
/// r-comet attains, with r picked from 4n = k^2 + s, 0 <= s <= 2k.
BoundChoice leaf_leaf_bound(long long n);

/// Same for the leaf/hyper-centroid ratio (n >= 2), with r picked from
/// 2n = k^2 + s, 0 <= s <= 2k.
BoundChoice leaf_hc_bound(long long n);

// ---- exhaustive searches --------------------------------------------------

struct SearchResult {
    Objective objective;
    int n;
    Ratio value;                           // distance objectives use value/1
    std::vector<CanonicalCode> witnesses;  // every attaining class, sorted
    RatioRecord best;                      // record on the smallest witness code
};

/// Folds the objective over every tree of order n. Work is sharded over
/// `threads` generator instances (0 = machine parallelism) and merged
/// deterministically.
SearchResult search(int n, Objective objective, int threads = 0);

enum class Question { Q42, Q44, Q46, T32 };

std::string question_name(Question q);
std::optional<Question> parse_question(std::string_view s);

struct QuestionRow {
    int n;
    Ratio extremal;
    Ratio bound;       // {0,1} when the question has no numeric bound
    long long bound_r; // comet parameter behind the bound, -1 if none
    std::vector<CanonicalCode> witnesses;
    std::string verdict;
};

struct QuestionReport {
    Question question;
    int from, to;
    std::vector<QuestionRow> rows;
    bool all_hold;  // every row got the verdict the question conjectures
};

QuestionReport verify_question(Question q, int n_lo, int n_hi, int threads = 0);

std::string question_report_json(const QuestionReport& r);
std::string search_result_json(const SearchResult& r);
/// "n,num,den,witness_code" lines, one per witness.
std::string search_result_csv(const SearchResult& r);

}  // namespace hw
