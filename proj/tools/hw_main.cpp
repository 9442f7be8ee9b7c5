// hw: command-line front end for the local hyper-Wiener toolkit.
//
// Exit codes: 0 ok, 1 invariant violation or verification failure,
// 2 usage / input errors.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hw/centroid.hpp"
#include "hw/extremal.hpp"
#include "hw/profiles.hpp"
#include "hw/tree.hpp"
#include "hw/treegen.hpp"

namespace {

void print_indices(const hw::Tree& t) {
    hw::VertexProfile p = hw::profiles_fast(t);
    hw::IndexSummary s = hw::summary(p);
    std::cout << "n = " << t.order() << "\n";
    std::cout << "vertex dist_sum sq_dist_sum local_ww\n";
    for (hw::Vertex v = 0; v < t.order(); ++v)
        std::cout << v << " " << p.dist_sum[v] << " " << p.sq_dist_sum[v] << " " << p.local_ww[v] << "\n";
    std::cout << "W = " << s.wiener << "\n";
    std::cout << "WW = " << s.hyper_wiener << "\n";
}

void print_centroid(const hw::Tree& t) {
    hw::CentroidReport r = hw::centroid_report(t);
    std::cout << "n = " << t.order() << "\n";
    std::cout << "centroid:";
    for (hw::Vertex v : r.centroid) std::cout << " " << v;
    std::cout << "\nhyper-centroid:";
    for (hw::Vertex v : r.hyper_centroid) std::cout << " " << v;
    std::cout << "\nmin distance: " << r.min_distance << "\n";
    std::cout << "branch weights:";
    for (int b : r.branch_weight) std::cout << " " << b;
    std::cout << "\n";
}

void emit_tree(const hw::Tree& t, const std::string& out_path) {
    if (out_path.empty()) {
        hw::write_tree(std::cout, t);
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw hw::TreeFormatError("cannot open file for writing: " + out_path);
    hw::write_tree(out, t);
}

void print_search_text(const hw::SearchResult& res) {
    std::cout << "n=" << res.n << " objective=" << hw::objective_name(res.objective)
              << " value=" << res.value.str() << " witnesses=" << res.witnesses.size() << "\n";
    for (const hw::CanonicalCode& c : res.witnesses) std::cout << "  " << c.str() << "\n";
    std::cout << "best: tree=" << res.best.tree_code.str() << " w=" << res.best.witness_w
              << " other=" << res.best.witness_other << "\n";
}

void print_report_text(const hw::QuestionReport& rep) {
    std::cout << hw::question_name(rep.question) << " range " << rep.from << ".." << rep.to << "\n";
    for (const hw::QuestionRow& row : rep.rows) {
        std::cout << "n=" << row.n << " extremal=" << row.extremal.str();
        if (row.bound_r >= 0)
            std::cout << " bound=" << row.bound.str() << " r=" << row.bound_r;
        std::cout << " verdict=" << row.verdict << " witnesses=" << row.witnesses.size();
        size_t show = std::min<size_t>(row.witnesses.size(), 4);
        for (size_t i = 0; i < show; ++i) std::cout << (i ? "," : " ") << row.witnesses[i].str();
        if (row.witnesses.size() > show) std::cout << ",...";
        std::cout << "\n";
    }
    std::cout << (rep.all_hold ? "RESULT: confirmed on the whole range" : "RESULT: pattern NOT confirmed; see verdict column") << "\n";
}

int table_number(hw::Objective o) {
    switch (o) {
        case hw::Objective::LEAF_LEAF_MAX: return 1;
        case hw::Objective::LEAF_HC_MAX: return 2;
        case hw::Objective::LEAF_HC_MIN: return 3;
        default: return 0;
    }
}

void print_table(hw::Objective o, int n_hi, int threads) {
    std::cout << "table " << table_number(o) << " (" << hw::objective_name(o) << "), n = 2.." << n_hi << "\n";
    for (int n = 2; n <= n_hi; ++n) {
        hw::SearchResult res = hw::search(n, o, threads);
        std::cout << "n=" << n << " value=" << res.value.str() << " trees:";
        for (const hw::CanonicalCode& c : res.witnesses) std::cout << " " << c.str();
        std::cout << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"local hyper-Wiener toolkit for trees"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --threads appear after the subcommand too
    int threads = 0;
    app.add_option("--threads", threads, "worker threads for searches (default: machine parallelism)");

    // indices
    std::string indices_file;
    CLI::App* cmd_indices = app.add_subcommand("indices", "per-vertex distance profile and the two indices");
    cmd_indices->add_option("tree-file", indices_file)->required();

    // centroid
    std::string centroid_file;
    CLI::App* cmd_centroid = app.add_subcommand("centroid", "centroid, hyper-centroid and their separation");
    cmd_centroid->add_option("tree-file", centroid_file)->required();

    // gen
    CLI::App* cmd_gen = app.add_subcommand("gen", "generate a named tree family member");
    cmd_gen->require_subcommand(1);
    std::string gen_out;
    int gen_n = 0, gen_r = 0;
    std::uint64_t gen_seed = 0;
    CLI::App* gen_comet = cmd_gen->add_subcommand("comet", "r-comet of order n");
    gen_comet->add_option("n", gen_n)->required();
    gen_comet->add_option("r", gen_r)->required();
    gen_comet->add_option("--out", gen_out);
    CLI::App* gen_path = cmd_gen->add_subcommand("path", "path on n vertices");
    gen_path->add_option("n", gen_n)->required();
    gen_path->add_option("--out", gen_out);
    CLI::App* gen_star = cmd_gen->add_subcommand("star", "star on n vertices");
    gen_star->add_option("n", gen_n)->required();
    gen_star->add_option("--out", gen_out);
    CLI::App* gen_mid = cmd_gen->add_subcommand("midpendant", "path with a pendant edge in the middle");
    gen_mid->add_option("n", gen_n)->required();
    gen_mid->add_option("--out", gen_out);
    CLI::App* gen_rand = cmd_gen->add_subcommand("random", "seeded uniform random labeled tree");
    gen_rand->add_option("n", gen_n)->required();
    gen_rand->add_option("--seed", gen_seed, "generator seed")->required();
    gen_rand->add_option("--out", gen_out);

    // enumerate
    int enum_n = 0;
    bool enum_count_only = false;
    CLI::App* cmd_enum = app.add_subcommand("enumerate", "stream every tree of order n, one per isomorphism class");
    cmd_enum->add_option("n", enum_n)->required();
    cmd_enum->add_flag("--count-only", enum_count_only);

    // search
    int search_n = 0;
    std::string search_obj;
    bool search_json = false;
    CLI::App* cmd_search = app.add_subcommand("search", "exhaustive extremal search over all trees of order n");
    cmd_search->add_option("n", search_n)->required();
    cmd_search->add_option("objective", search_obj, "leaf-leaf-max | leaf-hc-max | leaf-hc-min | centroid-dist-max")->required();
    cmd_search->add_flag("--json", search_json);

    // verify
    std::string verify_q, verify_json_path;
    int verify_from = 0, verify_to = 0;
    CLI::App* cmd_verify = app.add_subcommand("verify", "check a conjectured pattern over an order range");
    cmd_verify->add_option("question", verify_q, "Q42 | Q44 | Q46 | T32")->required();
    cmd_verify->add_option("--from", verify_from)->required();
    cmd_verify->add_option("--to", verify_to)->required();
    cmd_verify->add_option("--json", verify_json_path, "write the JSON report here");

    // tables
    int tables_which = 0, tables_to = 10;
    CLI::App* cmd_tables = app.add_subcommand("tables", "reproduce the three extremal-ratio tables");
    cmd_tables->add_option("--which", tables_which, "1, 2 or 3 (default: all)");
    cmd_tables->add_option("--to", tables_to, "last order (default 10)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the usage error
        return code == 0 ? 0 : 2;
    }

    if (*cmd_indices) {
        print_indices(hw::read_tree_file(indices_file));
    } else if (*cmd_centroid) {
        print_centroid(hw::read_tree_file(centroid_file));
    } else if (*cmd_gen) {
        if (*gen_comet) emit_tree(hw::comet(gen_n, gen_r), gen_out);
        else if (*gen_path) emit_tree(hw::path(gen_n), gen_out);
        else if (*gen_star) emit_tree(hw::star(gen_n), gen_out);
        else if (*gen_mid) emit_tree(hw::path_with_mid_pendant(gen_n), gen_out);
        else if (*gen_rand) emit_tree(hw::random_tree(gen_n, gen_seed), gen_out);
    } else if (*cmd_enum) {
        if (enum_count_only) {
            std::cout << hw::count_free_trees(enum_n) << "\n";
        } else {
            hw::FreeTreeStream stream(enum_n);
            while (auto t = stream.next()) {
                hw::write_tree(std::cout, *t);
                std::cout << "\n";
            }
        }
    } else if (*cmd_search) {
        auto obj = hw::parse_objective(search_obj);
        if (!obj) throw hw::InvalidSpec("unknown objective: " + search_obj);
        hw::SearchResult res = hw::search(search_n, *obj, threads);
        if (search_json) std::cout << hw::search_result_json(res);
        else print_search_text(res);
    } else if (*cmd_verify) {
        auto q = hw::parse_question(verify_q);
        if (!q) throw hw::InvalidSpec("unknown question id: " + verify_q);
        hw::QuestionReport rep = hw::verify_question(*q, verify_from, verify_to, threads);
        if (!verify_json_path.empty()) {
            std::ofstream out(verify_json_path);
            if (!out) throw hw::TreeFormatError("cannot open file for writing: " + verify_json_path);
            out << hw::question_report_json(rep);
        }
        print_report_text(rep);
        if (!rep.all_hold) return 1;
    } else if (*cmd_tables) {
        if (tables_which != 0 && (tables_which < 1 || tables_which > 3))
            throw hw::InvalidSpec("--which must be 1, 2 or 3");
        const hw::Objective objs[] = {hw::Objective::LEAF_LEAF_MAX, hw::Objective::LEAF_HC_MAX, hw::Objective::LEAF_HC_MIN};
        for (int which = 1; which <= 3; ++which)
            if (tables_which == 0 || tables_which == which) print_table(objs[which - 1], tables_to, threads);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hw::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const hw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
