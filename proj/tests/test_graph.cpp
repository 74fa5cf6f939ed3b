#include "doctest.h"

#include <sstream>

#include "qzeta/graph.hpp"
#include "qzeta/random.hpp"
#include "test_support.hpp"

using namespace qzeta;
using namespace qzeta::testing;

namespace {

Graph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

Graph triangle() { return graph_from_text("n 3\ne 0 1\ne 1 2\ne 0 2\n"); }
Graph single_edge() { return graph_from_text("n 2\ne 0 1\n"); }
Graph path4() { return graph_from_text("n 4\ne 0 1\ne 1 2\ne 2 3\n"); }

} // namespace

TEST_CASE("parse and validate") {
    const Graph tri = triangle();
    CHECK(tri.vertex_count() == 3);
    CHECK(tri.edge_count() == 3);
    CHECK(tri.betti_number() == 1);
    CHECK(tri.arc_count() == 6);

    const Graph edge = single_edge();
    CHECK(edge.arc_count() == 2);
    CHECK(edge.arc_table().arcs[0] == std::pair<int, int>{0, 1});
    CHECK(edge.arc_table().arcs[1] == std::pair<int, int>{1, 0});
    CHECK(edge.is_tree());

    CHECK_THROWS_AS(graph_from_text("n 3\ne 0 1\n"), ValidationError); // disconnected
    CHECK_THROWS_AS(graph_from_text("n 2\ne 0 0\n"), ValidationError); // loop
    CHECK_THROWS_AS(graph_from_text("n 2\ne 0 1\ne 1 0\n"), ValidationError);
    CHECK_THROWS_AS(graph_from_text("n 2\ne 0 5\n"), ValidationError);

    CHECK_THROWS_AS(graph_from_text("e 0 1\n"), ParseError); // e before n
    CHECK_THROWS_AS(graph_from_text("n 2\nn 2\ne 0 1\n"), ParseError);
    CHECK_THROWS_AS(graph_from_text("n 2\nedge 0 1\n"), ParseError);
    CHECK_THROWS_AS(graph_from_text("n two\n"), ParseError);
    CHECK_THROWS_AS(graph_from_text(""), ParseError);

    // the failing line number is reported
    try {
        graph_from_text("n 3\ne 0 1\nbogus\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    // comments and blank lines are ignored
    const Graph g = graph_from_text("# a triangle\n\nn 3\ne 0 1  # first\ne 1 2\ne 0 2\n");
    CHECK(g.edge_count() == 3);
}

TEST_CASE("canonical arc order") {
    const Graph tri = triangle();
    const ArcTable& arcs = tri.arc_table();
    // edges sorted (0,1) (0,2) (1,2); each edge contributes (u,v) then (v,u)
    CHECK(arcs.arcs == std::vector<std::pair<int, int>>{
                           {0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
    for (int e = 0; e < arcs.size(); ++e) {
        CHECK(arcs.inverse(arcs.inverse(e)) == e);
        CHECK(arcs.inverse(e) != e);
        CHECK(arcs.origin(arcs.inverse(e)) == arcs.terminal(e));
        // index -> endpoints -> index round trip
        CHECK(arcs.index_of(arcs.origin(e), arcs.terminal(e)) == e);
    }
    CHECK(arcs.index_of(0, 0) == -1);
}

TEST_CASE("classic matrices") {
    SUBCASE("single edge: transition equals inversion") {
        const ClassicMatrices cm = matrices_classic(single_edge());
        CHECK(cm.transition == cm.inversion);
        CHECK(max_abs(cm.transition - cm.inversion) == 0.0);
    }
    SUBCASE("triangle") {
        const Graph tri = triangle();
        const ClassicMatrices cm = matrices_classic(tri);
        for (std::size_t e = 0; e < 6; ++e) {
            cplx sum = 0.0;
            for (std::size_t f = 0; f < 6; ++f) sum += cm.transition(e, f);
            CHECK(sum == cplx(2.0)); // deg(t(e)) = 2 everywhere
        }
        CHECK(cm.inversion * cm.inversion == CMatrix::identity(6));
    }
    SUBCASE("adjacency row sums equal degrees") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 10; ++trial) {
            const Graph g = random_connected_graph(rng, 2, 7);
            const ClassicMatrices cm = matrices_classic(g);
            for (int v = 0; v < g.vertex_count(); ++v) {
                cplx sum = 0.0;
                for (std::size_t u = 0; u < static_cast<std::size_t>(g.vertex_count()); ++u)
                    sum += cm.adjacency(static_cast<std::size_t>(v), u);
                CHECK(sum == cm.degree(static_cast<std::size_t>(v),
                                       static_cast<std::size_t>(v)));
            }
        }
    }
}

TEST_CASE("weighted matrices") {
    SUBCASE("unit weights collapse to the classic matrices") {
        const Graph tri = triangle();
        const WeightAssignment w = WeightAssignment::ones(tri);
        const WeightedMatrices wm = matrices_weighted(tri, w);
        const ClassicMatrices cm = matrices_classic(tri);
        CHECK(wm.weighted_transition == QMatrix::from_complex(cm.transition));
        CHECK(wm.vertex_weight == QMatrix::from_complex(cm.adjacency));
        CHECK(wm.out_weight == QMatrix::from_complex(cm.degree));
    }
    SUBCASE("single edge with weights i and j") {
        const Graph edge = single_edge();
        const WeightAssignment w(
            edge, {Quaternion::unit_i(), Quaternion::unit_j()});
        const WeightedMatrices wm = matrices_weighted(edge, w);
        CHECK(wm.weighted_transition ==
              QMatrix{{Quaternion(), Quaternion::unit_j()},
                      {Quaternion::unit_i(), Quaternion()}});
        CHECK(wm.out_weight ==
              QMatrix{{Quaternion::unit_i(), Quaternion()},
                      {Quaternion(), Quaternion::unit_j()}});
    }
    SUBCASE("factorization L K^T = B_w holds exactly") {
        std::mt19937_64 rng(29);
        for (int trial = 0; trial < 10; ++trial) {
            const Graph g = random_connected_graph(rng, 2, 6);
            const WeightAssignment w = random_weights(rng, g, 1.0);
            const WeightedMatrices wm = matrices_weighted(g, w);
            CHECK(wm.terminal_incidence * wm.origin_weight.transpose() ==
                  wm.weighted_transition);
            // one nonzero per row in both factors
            for (int e = 0; e < g.arc_count(); ++e) {
                int k_nonzero = 0, l_nonzero = 0;
                for (int v = 0; v < g.vertex_count(); ++v) {
                    if (!wm.origin_weight(static_cast<std::size_t>(e),
                                          static_cast<std::size_t>(v)).is_zero())
                        ++k_nonzero;
                    if (!wm.terminal_incidence(static_cast<std::size_t>(e),
                                               static_cast<std::size_t>(v)).is_zero())
                        ++l_nonzero;
                }
                CHECK(k_nonzero == 1);
                CHECK(l_nonzero == 1);
            }
        }
    }
}

TEST_CASE("edge weights") {
    SUBCASE("unit weights kill inversion entries") {
        const Graph tri = triangle();
        const WeightAssignment w = WeightAssignment::ones(tri);
        const ArcTable& arcs = tri.arc_table();
        for (int e = 0; e < arcs.size(); ++e) {
            CHECK(edge_weight(tri, w, e, arcs.inverse(e)) == Quaternion());
        }
        // consecutive non-inverse transitions carry weight 1
        CHECK(edge_weight(tri, w, 0, 4) == Quaternion(1.0)); // (0,1) -> (1,2)
    }
    SUBCASE("edge matrix equals weighted transition minus inversion") {
        std::mt19937_64 rng(59);
        for (int trial = 0; trial < 10; ++trial) {
            const Graph g = random_connected_graph(rng, 2, 6);
            const WeightAssignment w = random_weights(rng, g, 1.0);
            const WeightedMatrices wm = matrices_weighted(g, w);
            const ClassicMatrices cm = matrices_classic(g);
            CHECK(edge_matrix(g, w) ==
                  wm.weighted_transition - QMatrix::from_complex(cm.inversion));
        }
    }
    SUBCASE("transition pattern matches the unweighted one") {
        std::mt19937_64 rng(61);
        const Graph g = random_connected_graph(rng, 3, 6);
        const WeightAssignment w = random_weights(rng, g, 1.0);
        const WeightedMatrices wm = matrices_weighted(g, w);
        const ClassicMatrices cm = matrices_classic(g);
        const ArcTable& arcs = g.arc_table();
        int nonzero_rows_checked = 0;
        for (int e = 0; e < arcs.size(); ++e) {
            int count = 0;
            for (int f = 0; f < arcs.size(); ++f) {
                const bool classic =
                    cm.transition(static_cast<std::size_t>(e),
                                  static_cast<std::size_t>(f)) != cplx{};
                // random ball weights are nonzero almost surely
                CHECK(classic == !wm.weighted_transition(
                                      static_cast<std::size_t>(e),
                                      static_cast<std::size_t>(f)).is_zero());
                count += classic ? 1 : 0;
            }
            CHECK(count == g.degree(arcs.terminal(e)));
            ++nonzero_rows_checked;
        }
        CHECK(nonzero_rows_checked == g.arc_count());
    }
    SUBCASE("index errors") {
        const Graph tri = triangle();
        const WeightAssignment w = WeightAssignment::ones(tri);
        CHECK_THROWS_AS(edge_weight(tri, w, -1, 0), IndexError);
        CHECK_THROWS_AS(edge_weight(tri, w, 0, 6), IndexError);
    }
}

TEST_CASE("betti number and trees") {
    CHECK(path4().betti_number() == 0);
    CHECK(path4().is_tree());
    CHECK(triangle().betti_number() == 1);
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_connected_graph(rng, 2, 8);
        CHECK(g.betti_number() == g.edge_count() - g.vertex_count() + 1);
        CHECK(g.betti_number() >= 0);
    }
}

TEST_CASE("weight file parsing") {
    const Graph edge = single_edge();
    SUBCASE("defaults and explicit entries") {
        std::istringstream in("w 1 0 0 0 1 0\n");
        const WeightAssignment w = WeightAssignment::parse(edge, in);
        CHECK(w[0] == Quaternion(1.0));        // defaulted
        CHECK(w[1] == Quaternion::unit_j());   // listed
    }
    SUBCASE("non-arc is rejected") {
        std::istringstream in("w 0 0 1 0 0 0\n");
        CHECK_THROWS_AS(WeightAssignment::parse(edge, in), ValidationError);
    }
    SUBCASE("duplicate listing is rejected") {
        std::istringstream in("w 0 1 1 0 0 0\nw 0 1 2 0 0 0\n");
        CHECK_THROWS_AS(WeightAssignment::parse(edge, in), ValidationError);
    }
    SUBCASE("malformed lines carry the line number") {
        std::istringstream in("w 0 1 1 0 0\n");
        CHECK_THROWS_AS(WeightAssignment::parse(edge, in), ParseError);
    }
    SUBCASE("wrong arc coverage is a missing-weight error") {
        CHECK_THROWS_AS(WeightAssignment(edge, {Quaternion(1.0)}),
                        MissingWeightError);
    }
}
