#include <doctest.h>

#include <cmath>

#include "homcup/graph.hpp"

using namespace homcup;

TEST_CASE("cayley constructions") {
    // C_3 with {g, g^-1} is the triangle.
    BaseGraph k3 = graph_K3();
    CHECK(k3.num_vertices == 3);
    CHECK(k3.num_edges() == 3);
    CHECK(k3.degree == 2);

    // Z_2 x Z_2 with all three non-identity elements is K_4.
    BaseGraph k4 = graph_K4();
    CHECK(k4.num_vertices == 4);
    CHECK(k4.num_edges() == 6);
    CHECK(k4.degree == 3);

    // S_3 with {s, r, r^-1}: 6 vertices, 9 edges.
    BaseGraph s3 = graph_S3_cayley();
    CHECK(s3.num_vertices == 6);
    CHECK(s3.num_edges() == 9);
    CHECK(s3.degree == 3);

    // S_3 with all five non-identity elements is K_6.
    BaseGraph k6 = graph_S3_cayley_full();
    CHECK(k6.num_vertices == 6);
    CHECK(k6.num_edges() == 15);
    CHECK(k6.degree == 5);

    k3.validate();
    k4.validate();
    s3.validate();
    k6.validate();

    // Non-generating set: a single transposition in S_3 only reaches C_2.
    auto g = PermGroup::symmetric3();
    int s = -1;
    for (int i = 1; i < g.size(); ++i)
        if (g.mul(i, i) == 0) {
            s = i;
            break;
        }
    CHECK_THROWS_WITH_AS(cayley_graph(g, {s}), doctest::Contains("disconnected"), error);
}

TEST_CASE("double cover") {
    // K_3 (x) K_2 is the 6-cycle.
    BaseGraph c6 = double_cover(graph_K3());
    CHECK(c6.num_vertices == 6);
    CHECK(c6.num_edges() == 6);
    CHECK(c6.degree == 2);
    CHECK(connected_components(c6) == 1);
    auto rep = spectral_report(c6);
    // cycle spectrum 2cos(2 pi k / 6): largest nontrivial absolute value is 1
    CHECK(rep.second_largest_abs == doctest::Approx(1.0).epsilon(1e-9));

    // Double cover of an already-bipartite graph splits into two components.
    BaseGraph c6c6 = double_cover(c6);
    CHECK(connected_components(c6c6) == 2);
    CHECK(c6c6.num_vertices == 12);
    CHECK(c6c6.degree == 2);
}

TEST_CASE("double cover spectrum is the symmetrized base spectrum") {
    for (const char* name : {"K4", "S3"}) {
        BaseGraph g = named_graph(name);
        auto rg = spectral_report(g);
        auto rd = spectral_report(double_cover(g));
        std::vector<double> expect;
        for (double e : rg.eigenvalues) {
            expect.push_back(e);
            expect.push_back(-e);
        }
        std::sort(expect.begin(), expect.end(), std::greater<double>());
        REQUIRE(expect.size() == rd.eigenvalues.size());
        for (std::size_t i = 0; i < expect.size(); ++i)
            CHECK(rd.eigenvalues[i] == doctest::Approx(expect[i]).epsilon(1e-6));
    }
}

TEST_CASE("spectral report: K4 is Ramanujan with spectrum {3,-1,-1,-1}") {
    auto rep = spectral_report(graph_K4());
    CHECK(rep.ramanujan);
    REQUIRE(rep.eigenvalues.size() == 4);
    CHECK(rep.eigenvalues[0] == doctest::Approx(3));
    for (int i = 1; i < 4; ++i) CHECK(rep.eigenvalues[i] == doctest::Approx(-1));
}

TEST_CASE("shift lift basics") {
    BaseGraph k4 = graph_K4();
    LiftedGraph triv = shift_lift(k4, 1, 123u);
    CHECK(triv.derived.num_vertices == 4);
    CHECK(triv.derived.num_edges() == 6);

    // All-ones voltage on K_4, l = 3: 12 vertices, 3-regular, connected.
    Voltage v = Voltage::trivial(k4, 3);
    for (auto& x : v.per_edge) x = 1;
    LiftedGraph lift = shift_lift(k4, 3, v);
    CHECK(lift.derived.num_vertices == 12);
    CHECK(lift.derived.degree == 3);
    CHECK(connected_components(lift.derived) == 1);
    lift.derived.validate();

    // Fiber matching: over each base edge the lifted edges form a perfect
    // matching between the fibers.
    LiftedGraph rl = shift_lift(k4, 5, 999u);
    for (int e = 0; e < k4.num_edges(); ++e) {
        std::vector<int> seen_u(5, 0), seen_v(5, 0);
        int count = 0;
        for (const auto& ed : rl.derived.edges) {
            int bu = rl.project_vertex(ed.u), bv = rl.project_vertex(ed.v);
            if (bu == k4.edges[e].u && bv == k4.edges[e].v && ed.label_u == k4.edges[e].label_u) {
                ++count;
                ++seen_u[rl.fiber_of(ed.u)];
                ++seen_v[rl.fiber_of(ed.v)];
            }
        }
        CHECK(count == 5);
        for (int h = 0; h < 5; ++h) {
            CHECK(seen_u[h] == 1);
            CHECK(seen_v[h] == 1);
        }
    }
}

TEST_CASE("covering spectra: lift spectrum contains the base spectrum") {
    BaseGraph k4 = graph_K4();
    LiftedGraph lift = shift_lift(k4, 3, 2024u);
    auto rb = spectral_report(k4);
    auto rl = spectral_report(lift.derived);
    std::vector<double> pool = rl.eigenvalues;
    for (double e : rb.eigenvalues) {
        bool found = false;
        for (auto it = pool.begin(); it != pool.end(); ++it)
            if (std::abs(*it - e) < 1e-6) {
                pool.erase(it);
                found = true;
                break;
            }
        CHECK(found);
    }
}

TEST_CASE("graph coboundary") {
    Field f2(1);
    BaseGraph c6 = double_cover(graph_K3());
    Matrix cob = graph_coboundary(c6, f2);
    CHECK(cob.rows == 6);
    CHECK(cob.cols == 6);
    CHECK(rank(cob) == 5); // V - 1 for a connected graph
    auto cycles = kernel_basis(cob.transpose(), Side::Right);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].weight() == 6);
    auto ker = kernel_basis(cob, Side::Right);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0].weight() == 6); // all-ones vector

    // single edge -> 1x2 matrix (1 1)
    BaseGraph one;
    one.degree = 1;
    one.num_vertices = 2;
    one.edges.push_back({0, 1, 0, 0});
    one.build_tables();
    Matrix m = graph_coboundary(one, f2);
    CHECK(m.rows == 1);
    CHECK(m.cols == 2);
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(0, 1) == 1);
}

TEST_CASE("graph JSON round trip") {
    BaseGraph g = graph_S3_cayley();
    BaseGraph h = BaseGraph::from_json(g.to_json());
    CHECK(h.num_vertices == g.num_vertices);
    CHECK(h.num_edges() == g.num_edges());
}
