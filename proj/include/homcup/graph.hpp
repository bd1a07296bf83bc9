#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homcup/json_fwd.hpp"
#include "homcup/matrix.hpp"

namespace homcup {

/// A small permutation group given by generators; elements are enumerated by
/// closure. Degree-d permutations stored as images vectors.
struct PermGroup {
    int degree = 0;
    std::vector<std::vector<int>> elements; // element 0 is the identity

    static PermGroup from_generators(int degree, const std::vector<std::vector<int>>& gens);
    static PermGroup cyclic(int n);
    static PermGroup symmetric3();
    static PermGroup elementary_abelian2(int k); // (Z_2)^k acting on 2^k points

    int size() const { return (int)elements.size(); }
    int mul(int a, int b) const; // index of elements[a] o elements[b]
    int inverse(int a) const;
    int find(const std::vector<int>& perm) const;
};

/// n-regular simple connected graph with a local edge ordering: each vertex
/// sees its n incident edges through distinct labels mu in [n], and for every
/// (vertex w, label mu) at most one edge arrives at w carrying label mu at the
/// far end (the Schreier condition; holds by construction on Cayley graphs).
struct BaseGraph {
    int degree = 0;         // n
    int num_vertices = 0;   // n'
    struct Edge {
        int u, v;           // orientation u -> v
        int label_u, label_v;
    };
    std::vector<Edge> edges;

    // neighbor[v][mu] = (edge id, endpoint reached from v, label at that endpoint)
    struct Arc {
        int edge = -1, to = -1, label_to = -1;
    };
    std::vector<std::vector<Arc>> neighbor;

    void build_tables();
    void validate() const; // regularity, simplicity, connectivity, label rules

    int num_edges() const { return (int)edges.size(); }
    /// Move v along its mu-labeled edge.
    int step(int v, int mu) const { return neighbor[v][mu].to; }
    /// Label of the same edge at the far endpoint.
    int step_label(int v, int mu) const { return neighbor[v][mu].label_to; }
    int edge_of(int v, int mu) const { return neighbor[v][mu].edge; }

    nlohmann::json to_json() const;
    static BaseGraph from_json(const nlohmann::json& j);
};

/// Voltage assignment gamma: oriented edge -> element of C_l (an integer mod
/// l); the reversed orientation carries the inverse (negation mod l).
struct Voltage {
    int l = 1;
    std::vector<int> per_edge; // aligned with BaseGraph::edges, for u -> v
    std::optional<std::uint64_t> seed;

    static Voltage trivial(const BaseGraph& g, int l);
    static Voltage random(const BaseGraph& g, int l, std::uint64_t seed);
};

struct LiftedGraph {
    BaseGraph base;
    Voltage voltage;
    BaseGraph derived; // vertex (h, v) at index h * n' + v; labels inherited

    int fiber_vertex(int h, int v) const { return h * base.num_vertices + v; }
    int project_vertex(int w) const { return w % base.num_vertices; }
    int fiber_of(int w) const { return w / base.num_vertices; }
};

/// Cayley graph on the given group with an inverse-closed generating set
/// (indices into group.elements, identity excluded). Local labels are the
/// generator indices; the Schreier condition holds by construction.
BaseGraph cayley_graph(const PermGroup& group, const std::vector<int>& generators);

/// Named constructors used across the tests and the CLI.
BaseGraph complete_graph(int n_vertices); // K_n as Cayley graph of Z_n-ish labeling
BaseGraph graph_K3();
BaseGraph graph_K4();
BaseGraph graph_S3_cayley();      // S_3 with {s, r, r^-1}: 6 vertices, 9 edges
BaseGraph graph_S3_cayley_full(); // S_3 with all 5 non-identity elements = K_6
BaseGraph named_graph(const std::string& name);

/// G (x) K_2; labels inherited. Vertices (v, bit) at index bit * n' + v.
BaseGraph double_cover(const BaseGraph& g);

LiftedGraph shift_lift(const BaseGraph& g, int l, const Voltage& voltage);
LiftedGraph shift_lift(const BaseGraph& g, int l, std::uint64_t seed);

struct SpectralReport {
    std::vector<double> eigenvalues; // sorted descending
    double second_largest_abs = 0;   // max |lambda| over nontrivial eigenvalues
    bool ramanujan = false;
    int connected_components = 1;
    double ramanujan_bound = 0; // 2 sqrt(n-1)

    nlohmann::json to_json() const;
};

/// Dense symmetric eigensolve (cyclic Jacobi); vertex count capped at 5000.
SpectralReport spectral_report(const BaseGraph& g);

/// E x V incidence matrix over the given field: entry 1 at (e, v) iff v is an
/// endpoint of e. The transpose is the boundary operator.
Matrix graph_coboundary(const BaseGraph& g, const Field& field);

int connected_components(const BaseGraph& g);

} // namespace homcup
