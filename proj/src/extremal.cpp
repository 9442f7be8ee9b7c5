#include "hw/extremal.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <thread>

#include "hw/centroid.hpp"
#include "hw/profiles.hpp"

#include "json.hpp"

namespace hw {

std::string objective_name(Objective o) {
    switch (o) {
        case Objective::LEAF_LEAF_MAX: return "leaf-leaf-max";
        case Objective::LEAF_HC_MAX: return "leaf-hc-max";
        case Objective::LEAF_HC_MIN: return "leaf-hc-min";
        case Objective::CENTROID_DIST_MAX: return "centroid-dist-max";
    }
    return "?";
}

std::optional<Objective> parse_objective(std::string_view s) {
    std::string key;
    for (char c : s) key.push_back(c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (key == "leaf-leaf-max") return Objective::LEAF_LEAF_MAX;
    if (key == "leaf-hc-max") return Objective::LEAF_HC_MAX;
    if (key == "leaf-hc-min") return Objective::LEAF_HC_MIN;
    if (key == "centroid-dist-max") return Objective::CENTROID_DIST_MAX;
    return std::nullopt;
}

std::string question_name(Question q) {
    switch (q) {
        case Question::Q42: return "Q42";
        case Question::Q44: return "Q44";
        case Question::Q46: return "Q46";
        case Question::T32: return "T32";
    }
    return "?";
}

std::optional<Question> parse_question(std::string_view s) {
    std::string key;
    for (char c : s) key.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (key == "Q42") return Question::Q42;
    if (key == "Q44") return Question::Q44;
    if (key == "Q46") return Question::Q46;
    if (key == "T32") return Question::T32;
    return std::nullopt;
}

// ---- per-tree objective evaluation ---------------------------------------

namespace {

void require_order(const Tree& t, int min_n, const char* what) {
    if (t.order() < min_n)
        throw InvalidSpec(std::string(what) + " needs n >= " + std::to_string(min_n) + ", got " + std::to_string(t.order()));
}

RatioRecord leaf_leaf_max_impl(const Tree& t, const VertexProfile& p) {
    std::vector<Vertex> ls = leaves(t);
    Vertex w = ls[0], u = ls[0];
    for (Vertex v : ls) {
        if (p.local_ww[v] > p.local_ww[w]) w = v;
        if (p.local_ww[v] < p.local_ww[u]) u = v;
    }
    if (u == w) {  // all leaves share one value; pick an actual pair
        u = (ls[0] == w) ? ls[1] : ls[0];
    }
    RatioRecord rec;
    rec.value = Ratio::of_local_ww(p.local_ww[w], p.local_ww[u]);
    rec.witness_w = w;
    rec.witness_other = u;
    return rec;
}

RatioRecord leaf_hc_extremum_impl(const Tree& t, const VertexProfile& p, bool want_max) {
    std::vector<Vertex> hc = hyper_centroid(t, p);
    if (hc.size() == 2 && p.local_ww[hc[0]] != p.local_ww[hc[1]])
        throw InvariantViolation("hyper-centroid pair with unequal local_ww");
    Vertex v = hc[0];
    std::vector<Vertex> ls = leaves(t);
    Vertex w = ls[0];
    for (Vertex x : ls) {
        bool better = want_max ? p.local_ww[x] > p.local_ww[w] : p.local_ww[x] < p.local_ww[w];
        if (better) w = x;
    }
    RatioRecord rec;
    rec.value = Ratio::of_local_ww(p.local_ww[w], p.local_ww[v]);
    rec.witness_w = w;
    rec.witness_other = v;
    return rec;
}

RatioRecord centroid_dist_impl(const Tree& t) {
    std::vector<Vertex> c = centroid(t);
    std::vector<Vertex> hc = hyper_centroid(t);
    int best = -1;
    Vertex bv = -1, bu = -1;
    for (Vertex v : hc) {
        std::vector<int> dist = bfs_distances(t, v);
        for (Vertex u : c) {
            if (best < 0 || dist[u] < best) {
                best = dist[u];
                bv = v;
                bu = u;
            }
        }
    }
    RatioRecord rec;
    rec.value = Ratio(best, 1);
    rec.witness_w = bv;
    rec.witness_other = bu;
    return rec;
}

RatioRecord evaluate(const Tree& t, Objective o) {
    switch (o) {
        case Objective::LEAF_LEAF_MAX: {
            VertexProfile p = profiles_fast(t);
            return leaf_leaf_max_impl(t, p);
        }
        case Objective::LEAF_HC_MAX:
        case Objective::LEAF_HC_MIN: {
            VertexProfile p = profiles_fast(t);
            return leaf_hc_extremum_impl(t, p, o == Objective::LEAF_HC_MAX);
        }
        case Objective::CENTROID_DIST_MAX: return centroid_dist_impl(t);
    }
    throw InvalidSpec("unknown objective");
}

// Larger is "more extremal" for every objective except LEAF_HC_MIN.
bool improves(Objective o, const Ratio& candidate, const Ratio& incumbent) {
    int c = Ratio::cmp(candidate, incumbent);
    return o == Objective::LEAF_HC_MIN ? c < 0 : c > 0;
}

}  // namespace

RatioRecord leaf_leaf_max(const Tree& t) {
    require_order(t, 2, "leaf_leaf_max");
    VertexProfile p = profiles_fast(t);
    RatioRecord rec = leaf_leaf_max_impl(t, p);
    rec.tree_code = canonical_code(t);
    return rec;
}

RatioRecord leaf_hcentroid_max(const Tree& t) {
    require_order(t, 2, "leaf_hcentroid_max");
    VertexProfile p = profiles_fast(t);
    RatioRecord rec = leaf_hc_extremum_impl(t, p, true);
    rec.tree_code = canonical_code(t);
    return rec;
}

RatioRecord leaf_hcentroid_min(const Tree& t) {
    require_order(t, 2, "leaf_hcentroid_min");
    VertexProfile p = profiles_fast(t);
    RatioRecord rec = leaf_hc_extremum_impl(t, p, false);
    rec.tree_code = canonical_code(t);
    return rec;
}

// ---- splits ----------------------------------------------------------------

namespace {

struct BranchSums {
    long long count = 0, dist = 0, sq = 0;
};

// Sums over the component of root in the tree with the given neighbors cut off.
BranchSums branch_sums(const Tree& t, Vertex root, std::initializer_list<Vertex> blocked) {
    std::vector<int> dist(t.order(), -1);
    for (Vertex b : blocked)
        if (b >= 0) dist[b] = -2;
    std::vector<Vertex> queue{root};
    dist[root] = 0;
    BranchSums out;
    for (size_t head = 0; head < queue.size(); ++head) {
        Vertex x = queue[head];
        ++out.count;
        out.dist += dist[x];
        out.sq += static_cast<long long>(dist[x]) * dist[x];
        for (Vertex y : t.neighbors(x))
            if (dist[y] == -1) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
    }
    return out;
}

}  // namespace

LeafPairSplit split_leaf_pair(const Tree& t, Vertex u, Vertex w) {
    t.check_vertex(u);
    t.check_vertex(w);
    if (u == w) throw InvalidParameters("leaf pair must be distinct");
    if (t.degree(u) != 1 || t.degree(w) != 1) throw InvalidParameters("both endpoints must be leaves");
    std::vector<Vertex> pth = path_between(t, u, w);
    long long r = static_cast<long long>(pth.size()) - 1;
    // internal vertices except the neighbor of u must have degree 2
    for (size_t i = 2; i + 1 < pth.size(); ++i)
        if (t.degree(pth[i]) != 2)
            throw InvalidParameters("path vertex " + std::to_string(pth[i]) + " has degree " + std::to_string(t.degree(pth[i])));
    Vertex attach = pth[1];
    Vertex beyond = (pth.size() > 2) ? pth[2] : -1;
    BranchSums b = branch_sums(t, attach, {u, beyond});
    VertexProfile p = profiles_fast(t);
    return LeafPairSplit{r, b.dist, b.sq, p.local_ww[attach]};
}

LeafAnchorSplit split_leaf_to_vertex(const Tree& t, Vertex w, Vertex v) {
    t.check_vertex(w);
    t.check_vertex(v);
    if (w == v) throw InvalidParameters("leaf and anchor must be distinct");
    if (t.degree(w) != 1) throw InvalidParameters("w must be a leaf");
    std::vector<Vertex> pth = path_between(t, w, v);
    for (size_t i = 1; i + 1 < pth.size(); ++i)
        if (t.degree(pth[i]) != 2)
            throw InvalidParameters("path vertex " + std::to_string(pth[i]) + " has degree " + std::to_string(t.degree(pth[i])));
    Vertex before = pth[pth.size() - 2];
    BranchSums b = branch_sums(t, v, {before});
    return LeafAnchorSplit{static_cast<long long>(pth.size()), b.dist, b.sq};
}

// ---- closed forms -----------------------------------------------------------

std::pair<Ratio, Ratio> leaf_leaf_closed_form(long long n, long long r, long long branch_dist,
                                              long long branch_sq, long long attach_ww) {
    if (n < 2 || r < 1 || r > n - 1 || branch_dist < 0 || branch_sq < 0 || attach_ww < 0)
        throw InvalidParameters("leaf_leaf_closed_form: parameters do not describe a tree split");
    long long ww_u = attach_ww + 2 * branch_dist + r * (r - 1) + 2 * (n - 2);
    long long ww_w = attach_ww + 2 * (r - 1) * branch_dist + (r - 1) * (n * r - r * r + 2);
    Ratio direct(ww_w, ww_u);

    long long x = 2 * (r - 2) * branch_dist + (r - 1) * (n * r - r * r - r + 2) - 2 * (n - 2);
    long long y = 9 * branch_dist + 3 * branch_sq + 6 * (n - 1) + (r + 4) * r * (r - 1);
    Ratio simplified(y + 3 * x, y);
    return {direct, simplified};
}

Ratio leaf_hc_closed_form(long long n, long long r, long long branch_dist, long long branch_sq) {
    if (n < 2 || r < 1 || r > n || branch_dist < 0 || branch_sq < 0)
        throw InvalidParameters("leaf_hc_closed_form: parameters do not describe a tree split");
    long long cubic = r * (r * r - 1);
    if (cubic % 3 != 0) throw InvalidParameters("r(r^2-1) not divisible by 3");  // impossible
    long long den = cubic / 3 + branch_dist + branch_sq;
    long long num = 2 * (r - 1) * branch_dist + (r - 1) * r * (n - r);
    if (den == 0) throw InvalidParameters("degenerate split: anchor has empty surroundings");
    return Ratio(den + num, den);
}

// ---- bounds -----------------------------------------------------------------

namespace {

// Unique k >= 1 with k^2 <= m <= k^2 + 2k.
long long isqrt_window(long long m) {
    long long k = static_cast<long long>(std::sqrt(static_cast<double>(m)));
    while (k * k > m) --k;
    while ((k + 1) * (k + 1) <= m) ++k;
    return k;
}

}  // namespace

BoundChoice leaf_leaf_bound(long long n) {
    if (n < 8) throw InvalidOrder("leaf_leaf_bound needs n >= 8, got " + std::to_string(n));
    long long k = isqrt_window(4 * n);
    long long s = 4 * n - k * k;
    long long r = (s <= k - 6) ? k - 2 : k - 1;
    long long x = (r - 1) * (-r * r + (n - 3) * r + 2 * n) + 2 * r - 4 * n + 6;
    long long y = (r + 4) * r * (r - 1) + 6 * (3 * n - 2 * r - 3);
    return BoundChoice{r, Ratio(y + 3 * x, y)};
}

BoundChoice leaf_hc_bound(long long n) {
    if (n < 2) throw InvalidOrder("leaf_hc_bound needs n >= 2, got " + std::to_string(n));
    long long k = isqrt_window(2 * n);
    long long s = 2 * n - k * k;
    long long r = (s <= k - 4) ? k - 1 : k;
    long long num = -2 * r * r * r + 3 * n * r * r - 3 * r * r + 3 * n * r - r;
    long long den = r * r * r - 7 * r + 6 * n;
    return BoundChoice{r, Ratio(num, den)};
}

// ---- search -----------------------------------------------------------------

namespace {

struct Fold {
    bool any = false;
    Ratio value;
    std::vector<CanonicalCode> codes;
    CanonicalCode best_code;
    RatioRecord best_rec;

    void add(Objective o, const RatioRecord& rec, CanonicalCode code) {
        if (!any || improves(o, rec.value, value)) {
            any = true;
            value = rec.value;
            codes.clear();
            codes.push_back(code);
            best_code = std::move(code);
            best_rec = rec;
            best_rec.tree_code = best_code;
        } else if (Ratio::cmp(rec.value, value) == 0) {
            codes.push_back(code);
            if (code < best_code) {
                best_code = std::move(code);
                best_rec = rec;
                best_rec.tree_code = best_code;
            }
        }
    }

    void merge(Objective o, Fold&& other) {
        if (!other.any) return;
        if (!any || improves(o, other.value, value)) {
            *this = std::move(other);
        } else if (Ratio::cmp(other.value, value) == 0) {
            codes.insert(codes.end(), std::make_move_iterator(other.codes.begin()),
                         std::make_move_iterator(other.codes.end()));
            if (other.best_code < best_code) {
                best_code = std::move(other.best_code);
                best_rec = std::move(other.best_rec);
            }
        }
    }
};

}  // namespace

SearchResult search(int n, Objective objective, int threads) {
    if (n < 2) throw InvalidOrder("search needs n >= 2, got " + std::to_string(n));
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (n < 12) threads = 1;  // sharding overhead dominates tiny orders

    std::vector<Fold> folds(threads);
    auto worker = [n, objective](int shard, int stride, Fold* out) {
        FreeTreeStream stream(n, shard, stride);
        while (auto t = stream.next()) out->add(objective, evaluate(*t, objective), canonical_code(*t));
    };
    if (threads == 1) {
        worker(0, 1, &folds[0]);
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < threads; ++k) pool.emplace_back(worker, k, threads, &folds[k]);
        for (auto& th : pool) th.join();
    }

    Fold total;
    for (Fold& f : folds) total.merge(objective, std::move(f));
    if (!total.any) throw InvariantViolation("enumeration produced no trees");

    SearchResult res;
    res.objective = objective;
    res.n = n;
    res.value = total.value;
    std::sort(total.codes.begin(), total.codes.end());
    res.witnesses = std::move(total.codes);
    res.best = std::move(total.best_rec);
    return res;
}

// ---- question verification --------------------------------------------------

namespace {

bool contains_code(const std::vector<CanonicalCode>& set, const CanonicalCode& code) {
    return std::binary_search(set.begin(), set.end(), code);
}

}  // namespace

QuestionReport verify_question(Question q, int n_lo, int n_hi, int threads) {
    int min_lo = 2;
    if (q == Question::Q42) min_lo = 8;
    if (q == Question::Q46) min_lo = 7;
    if (n_lo < min_lo)
        throw InvalidOrder(question_name(q) + " needs from >= " + std::to_string(min_lo) + ", got " + std::to_string(n_lo));
    if (n_hi < n_lo) throw InvalidOrder("empty order range");
    if (n_hi > enumeration_cap())
        throw CapExceeded("range end " + std::to_string(n_hi) + " above enumeration cap " + std::to_string(enumeration_cap()));

    QuestionReport report;
    report.question = q;
    report.from = n_lo;
    report.to = n_hi;
    report.all_hold = true;

    for (int n = n_lo; n <= n_hi; ++n) {
        QuestionRow row;
        row.n = n;
        row.bound = Ratio(0, 1);
        row.bound_r = -1;
        switch (q) {
            case Question::Q42:
            case Question::Q44: {
                Objective obj = (q == Question::Q42) ? Objective::LEAF_LEAF_MAX : Objective::LEAF_HC_MAX;
                SearchResult res = search(n, obj, threads);
                BoundChoice bc = (q == Question::Q42) ? leaf_leaf_bound(n) : leaf_hc_bound(n);
                row.extremal = res.value;
                row.bound = bc.bound;
                row.bound_r = bc.r;
                row.witnesses = res.witnesses;
                int c = Ratio::cmp(res.value, bc.bound);
                if (c > 0) {
                    row.verdict = "violated";
                } else if (c < 0) {
                    row.verdict = "below_bound";
                } else {
                    CanonicalCode comet_code = canonical_code(comet(n, static_cast<int>(bc.r)));
                    row.verdict = contains_code(res.witnesses, comet_code) ? "equality_at_comet" : "equality_off_comet";
                }
                if (row.verdict != "equality_at_comet") report.all_hold = false;
                break;
            }
            case Question::Q46: {
                SearchResult res = search(n, Objective::LEAF_HC_MIN, threads);
                row.extremal = res.value;
                row.witnesses = res.witnesses;
                CanonicalCode mp = canonical_code(path_with_mid_pendant(n));
                row.verdict = contains_code(res.witnesses, mp) ? "midpendant_attains" : "midpendant_not_extremal";
                if (row.verdict != "midpendant_attains") report.all_hold = false;
                break;
            }
            case Question::T32: {
                SearchResult res = search(n, Objective::CENTROID_DIST_MAX, threads);
                long long bound = distance_bound(n);
                int rc = (n % 2 == 1) ? (n + 1) / 2 : n / 2;
                row.extremal = res.value;
                row.bound = Ratio(bound, 1);
                row.bound_r = rc;
                row.witnesses = res.witnesses;
                int c = Ratio::cmp(res.value, row.bound);
                if (c > 0) {
                    row.verdict = "violated";
                } else if (c < 0) {
                    row.verdict = "bound_not_tight";
                } else {
                    row.verdict = (centroid_distance(comet(n, rc)) == bound) ? "tight_at_comet" : "tight_off_comet";
                }
                if (row.verdict != "tight_at_comet") report.all_hold = false;
                break;
            }
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

// ---- serialization ----------------------------------------------------------

namespace {

nlohmann::json ratio_json(const Ratio& r) {
    return nlohmann::json{{"num", r.num}, {"den", r.den}};
}

nlohmann::json witnesses_json(const std::vector<CanonicalCode>& codes) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CanonicalCode& c : codes) arr.push_back(c.str());
    return arr;
}

}  // namespace

std::string question_report_json(const QuestionReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const QuestionRow& row : r.rows) {
        rows.push_back(nlohmann::json{
            {"n", row.n},
            {"extremal", ratio_json(row.extremal)},
            {"bound", ratio_json(row.bound)},
            {"bound_r", row.bound_r},
            {"witnesses", witnesses_json(row.witnesses)},
            {"verdict", row.verdict},
        });
    }
    nlohmann::json doc{
        {"question", question_name(r.question)},
        {"range", {{"from", r.from}, {"to", r.to}}},
        {"rows", rows},
        {"all_hold", r.all_hold},
    };
    return doc.dump(2) + "\n";
}

std::string search_result_json(const SearchResult& r) {
    nlohmann::json doc{
        {"n", r.n},
        {"objective", objective_name(r.objective)},
        {"value", ratio_json(r.value)},
        {"value_reduced", ratio_json(r.value.reduced())},
        {"witnesses", witnesses_json(r.witnesses)},
        {"best", {{"tree", r.best.tree_code.str()}, {"w", r.best.witness_w}, {"other", r.best.witness_other}}},
    };
    return doc.dump(2) + "\n";
}

std::string search_result_csv(const SearchResult& r) {
    std::string out;
    for (const CanonicalCode& c : r.witnesses) {
        out += std::to_string(r.n) + "," + std::to_string(r.value.num) + "," +
               std::to_string(r.value.den) + "," + c.str() + "\n";
    }
    return out;
}

}  // namespace hw
