// Integration tests for the hw binary; argv[1] = path to it.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace {

int g_failures = 0;
std::string g_bin;
std::filesystem::path g_tmp;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = g_bin + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::cerr << "popen failed for: " << cmd << "\n";
        std::exit(1);
    }
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

void expect(bool ok, const std::string& what) {
    if (ok) {
        std::cout << "ok: " << what << "\n";
    } else {
        std::cout << "FAIL: " << what << "\n";
        ++g_failures;
    }
}

void expect_contains(const RunResult& r, const std::string& needle, const std::string& what) {
    bool ok = r.output.find(needle) != std::string::npos;
    expect(ok, what);
    if (!ok) std::cout << "  output was:\n" << r.output << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-hw-binary>\n";
        return 1;
    }
    g_bin = argv[1];
    g_tmp = std::filesystem::temp_directory_path() / ("hw-cli-" + std::to_string(getpid()));
    std::filesystem::create_directories(g_tmp);

    // indices on P_3
    std::string p3 = (g_tmp / "p3.tree").string();
    RunResult r = run("gen path 3 --out " + p3);
    expect(r.exit_code == 0, "gen path 3 exits 0");
    r = run("indices " + p3);
    expect(r.exit_code == 0, "indices exits 0");
    expect_contains(r, "W = 4", "indices prints W = 4");
    expect_contains(r, "WW = 5", "indices prints WW = 5");

    // round trip: gen comet 9 5, indices works, centroid reports separation 1
    std::string f = (g_tmp / "comet95.tree").string();
    r = run("gen comet 9 5 --out " + f);
    expect(r.exit_code == 0, "gen comet 9 5 exits 0");
    r = run("indices " + f);
    expect(r.exit_code == 0, "indices on the comet exits 0");
    r = run("centroid " + f);
    expect(r.exit_code == 0, "centroid exits 0");
    expect_contains(r, "min distance: 1", "comet(9,5) separation is 1");

    // enumerate
    r = run("enumerate 7 --count-only");
    expect(r.exit_code == 0 && r.output == "11\n", "enumerate 7 --count-only prints 11");
    r = run("enumerate 4");
    expect(r.exit_code == 0, "enumerate 4 exits 0");
    expect(r.output.find("4\n") == 0, "enumerate records start with the order line");

    // search
    r = run("search 5 leaf-leaf-max");
    expect(r.exit_code == 0, "search 5 leaf-leaf-max exits 0");
    expect_contains(r, "16/13", "search 5 finds 16/13");
    r = run("search 5 leaf-leaf-max --json");
    expect_contains(r, "\"num\": 16", "search --json carries the value");

    // verify with JSON report
    std::string rep = (g_tmp / "q44.json").string();
    r = run("verify Q44 --from 2 --to 10 --json " + rep);
    expect(r.exit_code == 0, "verify Q44 2..10 exits 0");
    expect_contains(r, "35/8", "verify Q44 shows the n=10 value");
    {
        std::ifstream in(rep);
        std::string json((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        expect(json.find("\"question\": \"Q44\"") != std::string::npos, "JSON report written");
    }

    // tables: byte-identical across runs, known column values
    RunResult t1 = run("tables --which 3 --to 10");
    RunResult t2 = run("tables --which 3 --to 10");
    expect(t1.exit_code == 0, "tables exits 0");
    expect(t1.output == t2.output, "tables output is byte-identical across runs");
    for (const char* token : {"value=1 ", "value=2 ", "value=13/6", "value=23/11", "value=29/15",
                              "value=39/21 (=13/7)", "value=54/31", "value=69/41"})
        expect_contains(t1, token, std::string("table 3 column contains ") + token);

    // exit codes
    r = run("verify Q42 --from 2 --to 9");
    expect(r.exit_code == 2, "verify Q42 below its valid range is a usage error");
    r = run("bogus-subcommand");
    expect(r.exit_code == 2, "unknown subcommand exits 2");
    r = run("indices " + (g_tmp / "missing.tree").string());
    expect(r.exit_code == 2, "missing file exits 2 and names the path");
    expect_contains(r, "missing.tree", "missing file message names the path");
    r = run("verify Q44 --from 2 --to 99");
    expect(r.exit_code == 2, "range above the enumeration cap exits 2");

    {
        std::ofstream bad((g_tmp / "bad.tree").string());
        bad << "4\n0 1\n1 2\n0 2\n";
    }
    r = run("indices " + (g_tmp / "bad.tree").string());
    expect(r.exit_code == 2, "cyclic tree file is rejected");
    expect_contains(r, "cycle", "cycle error mentions the cycle");

    // gen random requires a seed and is reproducible
    r = run("gen random 12");
    expect(r.exit_code == 2, "gen random without --seed is a usage error");
    RunResult ra = run("gen random 12 --seed 9");
    RunResult rb = run("gen random 12 --seed 9");
    expect(ra.exit_code == 0 && ra.output == rb.output, "gen random is seed-deterministic");

    std::filesystem::remove_all(g_tmp);

    if (g_failures == 0) {
        std::cout << "all cli tests passed\n";
        return 0;
    }
    std::cout << g_failures << " cli test(s) failed\n";
    return 1;
}
