#include "hw/treegen.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <random>
#include <thread>
#include <unordered_set>

namespace hw {

Tree comet(CometSpec spec) {
    const int n = spec.n, r = spec.r;
    if (n < 2 || r < 1 || r > n)
        throw InvalidSpec("comet needs n >= 2 and 1 <= r <= n, got n=" + std::to_string(n) + " r=" + std::to_string(r));
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (Vertex v = 1; v <= n - r; ++v) edges.emplace_back(0, v);
    if (n - r + 1 <= n - 1) edges.emplace_back(0, n - r + 1);
    for (Vertex v = n - r + 1; v + 1 <= n - 1; ++v) edges.emplace_back(v, v + 1);
    return Tree::from_edge_list(n, edges);
}

Tree path(int n) {
    if (n < 1) throw InvalidSpec("path needs n >= 1, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Tree::from_edge_list(n, edges);
}

Tree star(int n) {
    if (n < 2) throw InvalidSpec("star needs n >= 2, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Tree::from_edge_list(n, edges);
}

Tree path_with_mid_pendant(int n) {
    if (n < 4) throw InvalidSpec("mid-pendant tree needs n >= 4, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n - 1; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back((n - 2) / 2, n - 1);
    return Tree::from_edge_list(n, edges);
}

namespace detail {

void decode_prufer_oriented(int n, const int* seq, Edge* edges_out, int* parent, int* size) {
    // n >= 2; seq has n-2 symbols. Pointer-based linear decode. The decode
    // consumes vertices in leaf-stripping order, so each consumed vertex has
    // its fragment complete: accumulating fragment sizes yields the subtree
    // sizes of the tree rooted at vertex n-1, with parent pointers to match.
    int deg[256];
    std::vector<int> deg_heap;
    int* d = deg;
    if (n > 256) {
        deg_heap.assign(n, 0);
        d = deg_heap.data();
    }
    for (int v = 0; v < n; ++v) {
        d[v] = 1;
        size[v] = 1;
    }
    for (int k = 0; k < n - 2; ++k) ++d[seq[k]];

    int ptr = 0;
    while (d[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int k = 0; k < n - 2; ++k) {
        int a = seq[k];
        edges_out[k] = {leaf, a};
        parent[leaf] = a;
        size[a] += size[leaf];
        if (--d[a] == 1 && a < ptr) {
            leaf = a;
        } else {
            ++ptr;
            while (d[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges_out[n - 2] = {leaf, n - 1};
    parent[leaf] = n - 1;
    size[n - 1] += size[leaf];
    parent[n - 1] = -1;
}

void decode_prufer(int n, const int* seq, Edge* edges_out) {
    thread_local std::vector<int> parent, size;
    if (static_cast<int>(parent.size()) < n) {
        parent.resize(n);
        size.resize(n);
    }
    decode_prufer_oriented(n, seq, edges_out, parent.data(), size.data());
}

namespace {

// Scratch reused across calls; every helper below runs allocation-free once
// the thread is warm, which matters in the 10^8-tree dedup loop.
struct CanonScratch {
    std::vector<int> order, parent, size, depth, slot, kid, kid_len;
    std::vector<const char*> kid_ptr;
    std::vector<char> arena;
};

CanonScratch& scratch() {
    thread_local CanonScratch s;
    return s;
}

// a < b as level strings (memcmp order, shorter prefix first)
bool level_str_less(const char* a, int la, const char* b, int lb) {
    int c = std::memcmp(a, b, static_cast<size_t>(std::min(la, lb)));
    if (c != 0) return c < 0;
    return la < lb;
}

// Fills s.order/s.parent/s.size/s.depth for the tree rooted at root.
void orient(const int* offsets, const int* adj, int n, Vertex root, CanonScratch& s) {
    s.order.resize(n);
    s.parent.assign(n, -1);
    s.size.assign(n, 1);
    s.depth.assign(n, 1);
    s.order[0] = root;
    s.parent[root] = root;
    int filled = 1;
    for (int head = 0; head < filled; ++head) {
        Vertex x = s.order[head];
        for (int i = offsets[x]; i < offsets[x + 1]; ++i) {
            Vertex y = adj[i];
            if (s.parent[y] < 0) {
                s.parent[y] = x;
                s.depth[y] = s.depth[x] + 1;
                s.order[filled++] = y;
            }
        }
    }
    s.parent[root] = -1;
    for (int i = n - 1; i > 0; --i) s.size[s.parent[s.order[i]]] += s.size[s.order[i]];
}

// Canonical level string of the tree rooted at root, written bottom-up into
// an arena slot per vertex (slot length = subtree size); children are
// insertion-sorted descending by their finished strings.
void rooted_canonical(const int* offsets, const int* adj, int n, Vertex root, CanonScratch& s, std::string& out) {
    orient(offsets, adj, n, root, s);

    s.slot.resize(n);
    int total = 0;
    for (int i = 0; i < n; ++i) {
        s.slot[s.order[i]] = total;
        total += s.size[s.order[i]];
    }
    s.arena.resize(static_cast<size_t>(total));
    if (static_cast<int>(s.kid.size()) < n) {
        s.kid.resize(n);
        s.kid_len.resize(n);
        s.kid_ptr.resize(n);
    }

    char* arena = s.arena.data();
    for (int i = n - 1; i >= 0; --i) {
        Vertex v = s.order[i];
        char* dst = arena + s.slot[v];
        *dst++ = static_cast<char>(s.depth[v]);

        int kids = 0;
        for (int j = offsets[v]; j < offsets[v + 1]; ++j) {
            Vertex c = adj[j];
            if (c == s.parent[v]) continue;
            const char* ptr = arena + s.slot[c];
            int len = s.size[c];
            // descending insertion
            int at = kids++;
            while (at > 0 && level_str_less(s.kid_ptr[at - 1], s.kid_len[at - 1], ptr, len)) {
                s.kid_ptr[at] = s.kid_ptr[at - 1];
                s.kid_len[at] = s.kid_len[at - 1];
                --at;
            }
            s.kid_ptr[at] = ptr;
            s.kid_len[at] = len;
        }
        for (int k = 0; k < kids; ++k) {
            std::memcpy(dst, s.kid_ptr[k], static_cast<size_t>(s.kid_len[k]));
            dst += s.kid_len[k];
        }
    }
    out.assign(arena + s.slot[root], static_cast<size_t>(n));
}

}  // namespace

namespace {

// Canonical level string of the tree rooted at root, packed big-endian into
// one 128-bit word (n <= 16, one byte per level, left-aligned, zero padded).
// Integer order on these words is exactly lexicographic order on the level
// strings (level bytes are never zero), so the whole construction runs in
// registers: child codes are insertion-sorted as integers and concatenated by
// shift-or. Returns the word; byte length equals the subtree size.
unsigned __int128 rooted_canonical_packed(int n, const int* offsets, const int* adj, int root) {
    int order[16], parent[16], depth[16], bytes[16];
    unsigned __int128 code[16];

    for (int v = 0; v < n; ++v) parent[v] = -1;
    order[0] = root;
    parent[root] = root;
    depth[root] = 1;
    int filled = 1;
    for (int head = 0; head < filled; ++head) {
        int x = order[head];
        for (int i = offsets[x]; i < offsets[x + 1]; ++i) {
            int y = adj[i];
            if (parent[y] < 0) {
                parent[y] = x;
                depth[y] = depth[x] + 1;
                order[filled++] = y;
            }
        }
    }
    parent[root] = -1;

    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        unsigned __int128 kid_val[16];
        int kid_bytes[16];
        int kids = 0;
        for (int j = offsets[v]; j < offsets[v + 1]; ++j) {
            int c = adj[j];
            if (c == parent[v]) continue;
            unsigned __int128 val = code[c];
            int len = bytes[c];
            int at = kids++;
            while (at > 0 && kid_val[at - 1] < val) {
                kid_val[at] = kid_val[at - 1];
                kid_bytes[at] = kid_bytes[at - 1];
                --at;
            }
            kid_val[at] = val;
            kid_bytes[at] = len;
        }
        unsigned __int128 acc = static_cast<unsigned __int128>(depth[v]) << 120;
        int used = 1;
        for (int k = 0; k < kids; ++k) {
            acc |= kid_val[k] >> (8 * used);
            used += kid_bytes[k];
        }
        code[v] = acc;
        bytes[v] = used;
    }
    return code[root];
}

}  // namespace

unsigned __int128 free_canonical_packed(int n, const int* offsets, const int* adj,
                                        const int* parent, const int* size) {
    if (n > 16) throw InvalidSpec("packed canonical codes support n <= 16");
    // parent/size describe the tree rooted at n-1 (decode_prufer_oriented).
    int maxchild[16];
    for (int v = 0; v < n; ++v) maxchild[v] = 0;
    for (int v = 0; v < n - 1; ++v) maxchild[parent[v]] = std::max(maxchild[parent[v]], size[v]);
    int best_bw = n, c1 = -1, c2 = -1;
    for (int v = 0; v < n; ++v) {
        int bw = std::max(maxchild[v], v == n - 1 ? 0 : n - size[v]);
        if (bw < best_bw) {
            best_bw = bw;
            c1 = v;
            c2 = -1;
        } else if (bw == best_bw) {
            c2 = v;
        }
    }
    unsigned __int128 code = rooted_canonical_packed(n, offsets, adj, c1);
    if (c2 >= 0 && 2 * best_bw == n)
        code = std::max(code, rooted_canonical_packed(n, offsets, adj, c2));
    return code;
}

void free_canonical_from_oriented(int n, const int* offsets, const int* adj,
                                  const int* parent, const int* size, std::string& out) {
    unsigned __int128 packed = free_canonical_packed(n, offsets, adj, parent, size);
    out.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        out[i] = static_cast<char>((packed >> (120 - 8 * i)) & 0xff);
}

void rooted_canonical_string(int n, const int* offsets, const int* adj, Vertex root, std::string& out) {
    rooted_canonical(offsets, adj, n, root, scratch(), out);
}

std::string rooted_canonical_string(int n, const int* offsets, const int* adj, Vertex root) {
    std::string out;
    rooted_canonical(offsets, adj, n, root, scratch(), out);
    return out;
}

std::string free_canonical_string(int n, const int* offsets, const int* adj) {
    if (n == 1) return std::string(1, '\001');
    CanonScratch& s = scratch();
    orient(offsets, adj, n, 0, s);

    // Branch-weight argmin: the centroid, one vertex or an adjacent pair.
    int best_bw = n, c1 = -1, c2 = -1;
    for (int v = 0; v < n; ++v) {
        int bw = (s.parent[v] < 0) ? 0 : n - s.size[v];
        for (int j = offsets[v]; j < offsets[v + 1]; ++j) {
            Vertex y = adj[j];
            if (y != s.parent[v]) bw = std::max(bw, s.size[y]);
        }
        if (bw < best_bw) {
            best_bw = bw;
            c1 = v;
            c2 = -1;
        } else if (bw == best_bw) {
            c2 = v;
        }
    }

    std::string code;
    rooted_canonical(offsets, adj, n, c1, s, code);
    if (c2 >= 0) {
        std::string other;
        rooted_canonical(offsets, adj, n, c2, s, other);
        if (other > code) code = std::move(other);
    }
    return code;
}

}  // namespace detail

Tree random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw InvalidSpec("random_tree needs n >= 1, got " + std::to_string(n));
    if (n == 1) return Tree::from_edge_list(1, {});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(std::max(0, n - 2));
    for (int& x : seq) x = pick(rng);
    std::vector<Edge> edges(n - 1);
    detail::decode_prufer(n, seq.data(), edges.data());
    return Tree::from_edge_list(n, edges);
}

std::string CanonicalCode::packed() const {
    std::string s;
    s.reserve(levels.size());
    for (int x : levels) s.push_back(static_cast<char>(x));
    return s;
}

std::string CanonicalCode::str() const {
    std::string s;
    for (size_t i = 0; i < levels.size(); ++i) {
        if (i) s.push_back('.');
        s += std::to_string(levels[i]);
    }
    return s;
}

CanonicalCode canonical_code(const Tree& t) {
    const int n = t.order();
    if (n > 255) throw CapExceeded("canonical codes support n <= 255, got " + std::to_string(n));
    std::vector<int> offsets(n + 1, 0), adj;
    adj.reserve(2 * (n - 1));
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u : t.neighbors(v)) adj.push_back(u);
        offsets[v + 1] = static_cast<int>(adj.size());
    }
    std::string s = detail::free_canonical_string(n, offsets.data(), adj.data());
    CanonicalCode code;
    code.levels.reserve(n);
    for (char ch : s) code.levels.push_back(static_cast<unsigned char>(ch));
    return code;
}

int enumeration_cap() {
    if (const char* env = std::getenv("HW_MAX_N")) {
        int cap = std::atoi(env);
        if (cap >= 1) return cap;
    }
    return 18;
}

FreeTreeStream::FreeTreeStream(int n, long long start_index, long long stride)
    : n_(n), start_(start_index), stride_(stride) {
    int cap = enumeration_cap();
    if (n < 1 || n > cap)
        throw CapExceeded("enumeration supports 1 <= n <= " + std::to_string(cap) + " (HW_MAX_N), got " + std::to_string(n));
    if (start_index < 0 || stride < 1)
        throw InvalidSpec("need start_index >= 0 and stride >= 1");
    levels_.resize(n);
}

bool FreeTreeStream::advance_rooted() {
    if (first_) {
        first_ = false;
        for (int i = 0; i < n_; ++i) levels_[i] = i + 1;  // the rooted path
        return true;
    }
    int p = n_ - 1;
    while (p >= 0 && levels_[p] <= 2) --p;
    if (p < 0) return false;
    int q = p - 1;
    while (levels_[q] != levels_[p] - 1) --q;
    for (int i = p; i < n_; ++i) levels_[i] = levels_[i - (p - q)];
    return true;
}

bool FreeTreeStream::is_free_canonical() {
    const int n = n_;
    if (n == 1) return true;

    // parent of i = nearest j < i with level one less (preorder property)
    parent_.assign(n, -1);
    {
        std::vector<int>& last_at = subtree_;  // reuse as scratch, indexed by level
        last_at.assign(n + 2, -1);
        for (int i = 0; i < n; ++i) {
            int lv = levels_[i];
            if (i > 0) parent_[i] = last_at[lv - 1];
            last_at[lv] = i;
        }
    }
    subtree_.assign(n, 1);
    for (int i = n - 1; i > 0; --i) subtree_[parent_[i]] += subtree_[i];

    int max_child = 0;
    for (int i = 1; i < n; ++i)
        if (parent_[i] == 0) max_child = std::max(max_child, subtree_[i]);

    if (2 * max_child > n) return false;  // root is not a centroid
    if (2 * max_child < n) return true;   // root is the unique centroid

    // Bicentroid: the partner is the unique root child with half the
    // vertices; keep the sequence only if it beats the one rooted there.
    int partner = -1;
    for (int i = 1; i < n; ++i)
        if (parent_[i] == 0 && 2 * subtree_[i] == n) partner = i;

    offsets_.assign(n + 1, 0);
    for (int i = 1; i < n; ++i) {
        ++offsets_[parent_[i] + 1];
        ++offsets_[i + 1];
    }
    for (int v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
    adj_.assign(2 * (n - 1), 0);
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    for (int i = 1; i < n; ++i) {
        adj_[fill[parent_[i]]++] = i;
        adj_[fill[i]++] = parent_[i];
    }
    std::string other = detail::rooted_canonical_string(n, offsets_.data(), adj_.data(), partner);
    std::string self;
    self.reserve(n);
    for (int lv : levels_) self.push_back(static_cast<char>(lv));
    return self >= other;
}

std::optional<Tree> FreeTreeStream::next() {
    if (exhausted_) return std::nullopt;
    for (;;) {
        if (!advance_rooted()) {
            exhausted_ = true;
            return std::nullopt;
        }
        if (!is_free_canonical()) continue;
        long long idx = emitted_++;
        if (idx < start_ || (idx - start_) % stride_ != 0) continue;

        std::vector<Edge> edges;
        edges.reserve(n_ - 1);
        for (int i = 1; i < n_; ++i) edges.emplace_back(parent_[i], i);
        return Tree::from_edge_list(n_, edges);
    }
}

long long count_free_trees(int n) {
    FreeTreeStream stream(n);
    long long count = 0;
    while (stream.next()) ++count;
    return count;
}

long long count_free_tree_classes_prufer(int n, int threads) {
    if (n < 1) throw InvalidSpec("need n >= 1");
    if (n > 10) throw CapExceeded("the Prufer dedup count is exponential; supports n <= 10, got " + std::to_string(n));
    if (n <= 3) return 1;

    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    long long total = 1;
    for (int k = 0; k < n - 2; ++k) total *= n;

    struct Hash128 {
        size_t operator()(unsigned __int128 x) const {
            uint64_t h = static_cast<uint64_t>(x) ^ static_cast<uint64_t>(x >> 64);
            h ^= h >> 33;
            h *= 0xff51afd7ed558ccdULL;
            h ^= h >> 33;
            return static_cast<size_t>(h);
        }
    };
    using KeySet = std::unordered_set<unsigned __int128, Hash128>;

    auto worker = [n](long long lo, long long hi, KeySet* out) {
        int seq[16], parent[16], size[16];
        int offsets[16], fill[16], adj[32];
        Edge edges[16];
        for (long long idx = lo; idx < hi; ++idx) {
            long long x = idx;
            for (int k = n - 3; k >= 0; --k) {
                seq[k] = static_cast<int>(x % n);
                x /= n;
            }
            detail::decode_prufer_oriented(n, seq, edges, parent, size);
            for (int v = 0; v <= n; ++v) offsets[v] = 0;
            for (int k = 0; k < n - 1; ++k) {
                ++offsets[edges[k].first + 1];
                ++offsets[edges[k].second + 1];
            }
            for (int v = 0; v < n; ++v) {
                offsets[v + 1] += offsets[v];
                fill[v] = offsets[v];
            }
            for (int k = 0; k < n - 1; ++k) {
                adj[fill[edges[k].first]++] = edges[k].second;
                adj[fill[edges[k].second]++] = edges[k].first;
            }
            out->insert(detail::free_canonical_packed(n, offsets, adj, parent, size));
        }
    };

    std::vector<KeySet> sets(threads);
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k) {
        long long lo = total * k / threads;
        long long hi = total * (k + 1) / threads;
        pool.emplace_back(worker, lo, hi, &sets[k]);
    }
    for (auto& th : pool) th.join();

    KeySet classes(std::move(sets[0]));
    for (int k = 1; k < threads; ++k) classes.merge(sets[k]);
    return static_cast<long long>(classes.size());
}

}  // namespace hw
