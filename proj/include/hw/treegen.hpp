#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hw/tree.hpp"

namespace hw {

/// An r-comet of order n: a star on n-r+1 vertices whose center is one end
/// of a path on r vertices. Degenerate cases: r in {1,2} gives the star,
/// r in {n-1,n} gives the path.
struct CometSpec {
    int n;
    int r;
};

/// Fixed labeling: vertex 0 = star center, 1..n-r = star leaves,
/// n-r+1..n-1 = the rest of the path (vertex 0 adjacent to n-r+1).
Tree comet(CometSpec spec);
inline Tree comet(int n, int r) { return comet(CometSpec{n, r}); }

Tree path(int n);               // 0-1-...-(n-1), n >= 1
Tree star(int n);               // center 0, n >= 2

/// Path on n-1 vertices 0..n-2 plus vertex n-1 attached to the lower-middle
/// path vertex floor((n-2)/2). n >= 4. (For odd path length the two middle
/// attachment points give isomorphic trees.)
Tree path_with_mid_pendant(int n);

/// Uniform random labeled tree from a seeded generator; same seed, same tree.
Tree random_tree(int n, std::uint64_t seed);

/// Level sequence of the tree rooted at its centroid, children ordered to
/// make the sequence lexicographically greatest; at a bicentroid the root
/// giving the greater sequence wins. Equal codes <=> isomorphic trees.
struct CanonicalCode {
    std::vector<int> levels;  // length n, root level 1

    bool operator==(const CanonicalCode&) const = default;
    auto operator<=>(const CanonicalCode&) const = default;

    std::string packed() const;  // one byte per level, for hashing
    std::string str() const;     // dotted form, e.g. "1.2.3.2"
};

CanonicalCode canonical_code(const Tree& t);

/// Enumeration cap: HW_MAX_N from the environment, default 18.
int enumeration_cap();

/// Streams every unlabeled tree of order n exactly once.
///
/// Rooted level sequences are generated in decreasing lexicographic order by
/// the classic successor rule (find the last entry above 2, then repeat the
/// block starting at its parent); a sequence is kept when its root is the
/// centroid of the tree it spells, which makes the kept sequence equal to the
/// tree's canonical code, so each isomorphism class surfaces exactly once.
///
/// (start_index, stride) selects a residue class of the stream for sharding:
/// the k-th of m shards is (k, m). Instances hold private cursor state and
/// are not shareable across threads; the produced Trees are.
class FreeTreeStream {
public:
    explicit FreeTreeStream(int n, long long start_index = 0, long long stride = 1);

    std::optional<Tree> next();

private:
    bool advance_rooted();
    bool is_free_canonical();

    int n_;
    long long start_, stride_, emitted_ = 0;
    bool first_ = true, exhausted_ = false;
    std::vector<int> levels_;
    // scratch reused across candidates
    std::vector<int> parent_, subtree_, offsets_, adj_;
};

/// Number of isomorphism classes of trees on n vertices (walks the stream).
long long count_free_trees(int n);

/// Independent count for small n: decode every labeled tree from its Prufer
/// sequence and bucket by canonical code. Exponential; n <= 10.
long long count_free_tree_classes_prufer(int n, int threads = 0);

namespace detail {
/// Canonical level-sequence string (one byte per level) over raw CSR
/// adjacency; shared by canonical_code, the enumeration filter and the
/// Prufer dedup loop so there is exactly one definition of "canonical".
std::string free_canonical_string(int n, const int* offsets, const int* adj);

/// Same encoding for a fixed root (no centroid selection).
std::string rooted_canonical_string(int n, const int* offsets, const int* adj, Vertex root);
void rooted_canonical_string(int n, const int* offsets, const int* adj, Vertex root, std::string& out);

/// Decodes a Prufer sequence (length n-2, symbols in [0,n)) to edges.
void decode_prufer(int n, const int* seq, Edge* edges_out);

/// Decode that also reports parent pointers and subtree sizes of the result
/// rooted at vertex n-1 (they fall out of the leaf-stripping order).
void decode_prufer_oriented(int n, const int* seq, Edge* edges_out, int* parent, int* size);

/// Canonical code computed from an oriented decode with register arithmetic
/// alone (level string packed big-endian into 128 bits, n <= 16). Must agree
/// with free_canonical_string on the same tree; the string form unpacks it.
unsigned __int128 free_canonical_packed(int n, const int* offsets, const int* adj,
                                        const int* parent, const int* size);
void free_canonical_from_oriented(int n, const int* offsets, const int* adj,
                                  const int* parent, const int* size, std::string& out);
}  // namespace detail

}  // namespace hw
