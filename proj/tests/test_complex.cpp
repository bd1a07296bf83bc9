#include <doctest.h>

#include "homcup/cochain.hpp"

using namespace homcup;

TEST_CASE("cell counts match the closed formula") {
    // K_3, t=1, l=1: the double cover C_6 (6 vertices, 6 edges).
    auto X1 = CubicalComplex::build(graph_K3(), 1, 1);
    CHECK(X1.cell_count(0) == 6);
    CHECK(X1.cell_count(1) == 6);
    CHECK((int)X1.cells(0).size() == 6);
    CHECK((int)X1.cells(1).size() == 6);

    // K_4, t=3, l=1: |X(1)| = 3 * 4 * 3 * 64 = 2304.
    auto X3 = CubicalComplex::build(graph_K4(), 3, 1);
    CHECK(X3.cell_count(1) == 2304);
    CHECK((long long)X3.cells(1).size() == 2304);

    // K_4, t=2, l=3: |X(2)| = 9 * (3 * 16) = 432.
    auto X2 = CubicalComplex::build(graph_K4(), 2, 3, 11u);
    CHECK(X2.cell_count(2) == 432);
    CHECK((long long)X2.cells(2).size() == 432);

    // K_3, t=3, l=1 (3D toric): 648 1-cubes.
    auto XT = CubicalComplex::build(graph_K3(), 3, 1);
    CHECK(XT.cell_count(1) == 648);
}

TEST_CASE("even lift order rejected") {
    CHECK_THROWS_WITH_AS(CubicalComplex::build(graph_K4(), 2, 2, 3u), doctest::Contains("odd"),
                         error);
}

TEST_CASE("faces and cofaces") {
    auto X = CubicalComplex::build(graph_K4(), 3, 3, 5u);

    // A 3-cube has 6 faces (2-cubes); a 0-cube has none.
    Cube top;
    top.action_mask = 0b111;
    top.s = {0, 1, 2, 0};
    top.v = {0, 1, 2, 0};
    top.h = 1;
    REQUIRE(X.contains(top));
    auto fs = X.faces(top);
    CHECK(fs.size() == 6);
    for (const auto& f : fs) CHECK(f.dim() == 2);

    Cube vertex;
    vertex.s = {0, 1, 0, 0};
    vertex.v = {3, 2, 1, 0};
    CHECK(X.faces(vertex).empty());

    // Adjointness: tau is a coface of sigma iff sigma is a face of tau.
    Rng rng(99);
    for (int p = 0; p <= 2; ++p) {
        const auto& cs = X.cells(p);
        for (int trial = 0; trial < 20; ++trial) {
            const Cube& sigma = cs[rng.below(cs.size())];
            for (const Cube& tau : X.cofaces(sigma)) {
                auto back = X.faces(tau);
                CHECK(std::count(back.begin(), back.end(), sigma) == 1);
            }
        }
        const auto& hi = X.cells(p + 1);
        for (int trial = 0; trial < 20; ++trial) {
            const Cube& tau = hi[rng.below(hi.size())];
            for (const Cube& sigma : X.faces(tau)) {
                auto up = X.cofaces(sigma);
                CHECK(std::count(up.begin(), up.end(), tau) == 1);
            }
        }
    }
}

TEST_CASE("graded incidence: even count of middle cells") {
    auto X = CubicalComplex::build(graph_S3_cayley(), 3, 1);
    Rng rng(7);
    const auto& cs = X.cells(1);
    for (int trial = 0; trial < 25; ++trial) {
        const Cube& sigma = cs[rng.below(cs.size())];
        std::unordered_map<Cube::Key, int, CubeKeyHash> pi_count;
        for (const Cube& tau : X.cofaces(sigma))
            for (const Cube& pi : X.cofaces(tau)) pi_count[pi.key()]++;
        for (auto& [k, c] : pi_count) CHECK(c % 2 == 0);
    }
}

TEST_CASE("delta delta = 0 over sampled complexes (sparse route)") {
    Field f2(1);
    for (int t : {2, 3}) {
        for (int l : {1, 3}) {
            auto X = CubicalComplex::build(graph_K3(), t, l, 17u);
            auto F = Sheaf::trivial_ptr(f2, t, X.base().degree);
            for (int p = 0; p + 1 < t; ++p) {
                auto d0 = coboundary_sparse(X, *F, p);
                auto d1 = coboundary_sparse(X, *F, p + 1);
                CHECK(mul(d1, d0).is_zero());
            }
        }
    }
}

TEST_CASE("t=1 trivial sheaf reduces to the graph coboundary of the doubled lift") {
    Field f2(1);
    auto X = CubicalComplex::build(graph_K3(), 1, 1);
    auto F = Sheaf::trivial_ptr(f2, 1, 2);
    Matrix d0 = coboundary_matrix(X, *F, 0);
    CHECK(d0.rows == 6);
    CHECK(d0.cols == 6);
    for (int r = 0; r < 6; ++r) {
        int w = 0;
        for (int c = 0; c < 6; ++c) w += d0.at(r, c);
        CHECK(w == 2); // incidence matrix rows
    }
    CHECK(rank(d0) == 5);
    auto ker = kernel_basis(d0, Side::Right);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0].weight() == 6); // connected: all-ones only
}

TEST_CASE("t=3 l=1 trivial sheaf matches the 3D HGP Kronecker blocks") {
    Field f2(1);
    const BaseGraph g = graph_K3();
    auto X = CubicalComplex::build(g, 3, 1);
    auto F = Sheaf::trivial_ptr(f2, 3, g.degree);
    const BaseGraph dc = double_cover(g);
    const Matrix H = graph_coboundary(dc, f2); // E x V of the double cover
    const int E = H.rows, V = H.cols;

    auto edge_ix = [&](int v, int a) {
        int e = g.edge_of(v, a);
        return 2 * e + (g.edges[e].u == v ? 0 : 1);
    };
    auto vert_ix = [&](int v, int b) { return b * g.num_vertices + v; };

    // Rows of type {1,2} 2-cubes against columns of type {1} 1-cubes equal
    // I_E (x) H (x) I_V after the index translation.
    Matrix d1 = coboundary_matrix(X, *F, 1);
    auto off1 = level_offsets(X, *F, 1);
    auto off2 = level_offsets(X, *F, 2);
    const auto& ones = X.cells(1);
    const auto& twos = X.cells(2);
    Matrix block(f2, E * E * V, E * V * V);
    for (std::size_t i = 0; i < ones.size(); ++i) {
        if (ones[i].action_mask != 0b001) continue;
        int col = edge_ix(ones[i].v[0], ones[i].s[0]) * V * V +
                  vert_ix(ones[i].v[1], ones[i].s[1]) * V + vert_ix(ones[i].v[2], ones[i].s[2]);
        for (std::size_t j = 0; j < twos.size(); ++j) {
            if (twos[j].action_mask != 0b011) continue;
            if (!d1.at((int)off2[j], (int)off1[i])) continue;
            int row = edge_ix(twos[j].v[0], twos[j].s[0]) * E * V +
                      edge_ix(twos[j].v[1], twos[j].s[1]) * V + vert_ix(twos[j].v[2], twos[j].s[2]);
            block.set(row, col, 1);
        }
    }
    Matrix expect = kron(kron(Matrix::identity(f2, E), H), Matrix::identity(f2, V));
    CHECK(block == expect);
}

TEST_CASE("complex JSON description") {
    auto X = CubicalComplex::build(graph_K4(), 2, 3, 5u);
    auto j = X.to_json();
    CHECK(j.at("t").get<int>() == 2);
    CHECK(j.at("l").get<int>() == 3);
    CHECK(j.at("cell_counts").size() == 3);
}
