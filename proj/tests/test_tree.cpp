#include <random>
#include <sstream>

#include "doctest.h"
#include "hw/tree.hpp"
#include "hw/treegen.hpp"

using namespace hw;

TEST_CASE("from_edge_list builds the small trees") {
    Tree p2 = Tree::from_edge_list(2, {{0, 1}});
    CHECK(p2.order() == 2);
    CHECK(p2.degree(0) == 1);

    Tree p3 = Tree::from_edge_list(3, {{0, 1}, {1, 2}});
    CHECK(p3.degree(1) == 2);
    CHECK(p3.has_edge(1, 0));
    CHECK_FALSE(p3.has_edge(0, 2));

    Tree k1 = Tree::from_edge_list(1, {});
    CHECK(k1.order() == 1);
}

TEST_CASE("from_edge_list rejects bad input, naming the offender") {
    // triangle plus isolated vertex: the cycle is reported, not disconnection
    CHECK_THROWS_AS(Tree::from_edge_list(4, {{0, 1}, {1, 2}, {0, 2}}), CycleDetected);
    CHECK_THROWS_AS(Tree::from_edge_list(3, {{0, 1}, {1, 3}}), IndexOutOfRange);
    CHECK_THROWS_AS(Tree::from_edge_list(3, {{0, 1}, {1, 1}}), SelfLoop);
    CHECK_THROWS_AS(Tree::from_edge_list(3, {{0, 1}, {1, 0}}), DuplicateEdge);
    CHECK_THROWS_AS(Tree::from_edge_list(4, {{0, 1}, {2, 3}}), Disconnected);
    CHECK_THROWS_AS(Tree::from_edge_list(0, {}), InvalidSpec);

    try {
        Tree::from_edge_list(4, {{0, 1}, {1, 2}, {0, 2}});
    } catch (const CycleDetected& e) {
        CHECK(std::string(e.what()).find("(0,2)") != std::string::npos);
    }
}

TEST_CASE("bfs_distances on the named examples") {
    CHECK(bfs_distances(path(3), 0) == std::vector<int>{0, 1, 2});
    CHECK(bfs_distances(star(4), 1) == std::vector<int>{1, 0, 2, 2});

    // comet(5,3): far path end sees {1,2,3,3}
    Tree t = comet(5, 3);
    std::vector<int> d = bfs_distances(t, 4);
    CHECK(d[3] == 1);
    CHECK(d[0] == 2);
    CHECK(d[1] == 3);
    CHECK(d[2] == 3);
}

TEST_CASE("path_between endpoints, identity, length") {
    Tree p4 = path(4);
    CHECK(path_between(p4, 0, 3) == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(path_between(p4, 2, 2) == std::vector<Vertex>{2});

    Tree t = comet(5, 3);
    std::vector<Vertex> pth = path_between(t, 1, 4);  // star leaf to far path end
    CHECK(pth.size() == 4);                           // 3 edges: leaf, center, two path vertices
    CHECK(pth.front() == 1);
    CHECK(pth.back() == 4);
}

TEST_CASE("cut_edge splits into the right sizes") {
    EdgeCut c = cut_edge(path(4), 1, 2);
    CHECK(c.u_side == 2);
    CHECK(c.v_side == 2);

    c = cut_edge(star(5), 0, 1);
    CHECK(c.u_side == 4);
    CHECK(c.v_side == 1);

    // comet(8,4): star center to first path vertex
    c = cut_edge(comet(8, 4), 0, 5);
    CHECK(c.u_side == 5);
    CHECK(c.v_side == 3);

    CHECK_THROWS_AS(cut_edge(path(4), 0, 2), NotAnEdge);
}

TEST_CASE("leaves, including degenerate orders") {
    CHECK(leaves(path(3)) == std::vector<Vertex>{0, 2});
    CHECK(leaves(star(5)).size() == 4);
    CHECK(leaves(comet(10, 5)).size() == 6);  // 5 star leaves + far path end
    CHECK(leaves(Tree::from_edge_list(1, {})) == std::vector<Vertex>{0});
    CHECK(leaves(path(2)) == std::vector<Vertex>{0, 1});
}

TEST_CASE("tree metric properties on random trees") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 60);
        Tree t = random_tree(n, trial);

        long long degree_total = 0;
        for (Vertex v = 0; v < n; ++v) degree_total += t.degree(v);
        CHECK(degree_total == 2LL * (n - 1));

        Vertex a = static_cast<Vertex>(rng() % n);
        Vertex b = static_cast<Vertex>(rng() % n);
        std::vector<int> da = bfs_distances(t, a);
        std::vector<int> db = bfs_distances(t, b);
        CHECK(da[b] == db[a]);

        // additivity along the a..b path
        std::vector<Vertex> pth = path_between(t, a, b);
        CHECK(static_cast<int>(pth.size()) == da[b] + 1);
        for (Vertex x : pth) CHECK(da[x] + db[x] == da[b]);

        for (const auto& [u, v] : t.edge_list()) {
            EdgeCut c = cut_edge(t, u, v);
            CHECK(c.u_side + c.v_side == n);
        }
    }
}

TEST_CASE("text format round trip with comments") {
    Tree t = comet(9, 5);
    std::ostringstream out;
    write_tree(out, t);
    std::istringstream in("# a comment\n" + out.str());
    Tree back = read_tree(in);
    CHECK(back.order() == t.order());
    CHECK(back.edge_list() == t.edge_list());
}

TEST_CASE("text format errors") {
    std::istringstream empty("");
    CHECK_THROWS_AS(read_tree(empty), TreeFormatError);
    std::istringstream garbage("abc\n");
    CHECK_THROWS_AS(read_tree(garbage), TreeFormatError);
    std::istringstream truncated("3\n0 1\n");
    CHECK_THROWS_AS(read_tree(truncated), TreeFormatError);
    std::istringstream junk("2\n0 1 9\n");
    CHECK_THROWS_AS(read_tree(junk), TreeFormatError);
}

TEST_CASE("multi-record streams") {
    std::ostringstream out;
    write_tree(out, path(2));
    out << "\n";
    write_tree(out, star(4));
    out << "\n";
    std::istringstream in(out.str());
    auto first = read_tree_record(in);
    auto second = read_tree_record(in);
    auto third = read_tree_record(in);
    REQUIRE(first.has_value());
    REQUIRE(second.has_value());
    CHECK_FALSE(third.has_value());
    CHECK(first->order() == 2);
    CHECK(second->order() == 4);
}
