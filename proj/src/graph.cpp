#include "homcup/graph.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <map>
#include <queue>
#include <set>

namespace homcup {

PermGroup PermGroup::from_generators(int degree, const std::vector<std::vector<int>>& gens) {
    PermGroup g;
    g.degree = degree;
    std::vector<int> id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;
    std::map<std::vector<int>, int> index;
    g.elements.push_back(id);
    index[id] = 0;
    std::queue<int> work;
    work.push(0);
    while (!work.empty()) {
        int cur = work.front();
        work.pop();
        for (const auto& gen : gens) {
            require((int)gen.size() == degree, "generator degree mismatch");
            std::vector<int> prod(degree);
            for (int i = 0; i < degree; ++i) prod[i] = gen[g.elements[cur][i]];
            if (!index.count(prod)) {
                index[prod] = (int)g.elements.size();
                g.elements.push_back(prod);
                work.push((int)g.elements.size() - 1);
                require(g.elements.size() <= 100000, "group closure too large");
            }
        }
    }
    return g;
}

int PermGroup::mul(int a, int b) const {
    std::vector<int> prod(degree);
    for (int i = 0; i < degree; ++i) prod[i] = elements[a][elements[b][i]];
    return find(prod);
}

int PermGroup::inverse(int a) const {
    std::vector<int> inv(degree);
    for (int i = 0; i < degree; ++i) inv[elements[a][i]] = i;
    return find(inv);
}

int PermGroup::find(const std::vector<int>& perm) const {
    for (int i = 0; i < size(); ++i)
        if (elements[i] == perm) return i;
    throw error("permutation not in group");
}

PermGroup PermGroup::cyclic(int n) {
    std::vector<int> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
    return from_generators(n, {rot});
}

PermGroup PermGroup::symmetric3() { return from_generators(3, {{1, 0, 2}, {1, 2, 0}}); }

PermGroup PermGroup::elementary_abelian2(int k) {
    int n = 1 << k;
    std::vector<std::vector<int>> gens;
    for (int b = 0; b < k; ++b) {
        std::vector<int> g(n);
        for (int i = 0; i < n; ++i) g[i] = i ^ (1 << b);
        gens.push_back(g);
    }
    return from_generators(n, gens);
}

void BaseGraph::build_tables() {
    neighbor.assign(num_vertices, std::vector<Arc>(degree));
    for (int e = 0; e < (int)edges.size(); ++e) {
        const Edge& ed = edges[e];
        require(0 <= ed.label_u && ed.label_u < degree && 0 <= ed.label_v && ed.label_v < degree,
                "edge label out of range");
        require(neighbor[ed.u][ed.label_u].edge < 0, "duplicate label at vertex");
        require(neighbor[ed.v][ed.label_v].edge < 0, "duplicate label at vertex");
        neighbor[ed.u][ed.label_u] = Arc{e, ed.v, ed.label_v};
        neighbor[ed.v][ed.label_v] = Arc{e, ed.u, ed.label_u};
    }
}

void BaseGraph::validate() const {
    require(num_vertices >= 1 && degree >= 1, "empty graph");
    require((int)edges.size() * 2 == num_vertices * degree, "graph is not n-regular");
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges) {
        require(e.u != e.v, "self-loop rejected (simple graphs only)");
        auto [lo, hi] = std::minmax(e.u, e.v);
        require(!seen.count({lo, hi}), "multi-edge rejected (simple graphs only)");
        seen.insert({lo, hi});
    }
    for (int v = 0; v < num_vertices; ++v)
        for (int mu = 0; mu < degree; ++mu)
            require(neighbor[v][mu].edge >= 0, "missing label at vertex");
    // Schreier condition: the step map v -> step(v, mu) must be injective for
    // every mu, i.e. no two edges arrive at a common vertex carrying the same
    // label at their far endpoints.
    for (int mu = 0; mu < degree; ++mu) {
        std::vector<int> hit(num_vertices, 0);
        for (int v = 0; v < num_vertices; ++v) {
            int w = step(v, mu);
            require(++hit[w] == 1, "Schreier condition violated: label collides at a vertex");
        }
    }
    require(connected_components(*this) == 1, "graph must be connected");
}

nlohmann::json BaseGraph::to_json() const {
    nlohmann::json es = nlohmann::json::array();
    nlohmann::json orient = nlohmann::json::array();
    for (const auto& e : edges) {
        es.push_back({e.u, e.v, e.label_u, e.label_v});
        orient.push_back({e.u, e.v});
    }
    return {{"vertices", num_vertices}, {"degree", degree}, {"edges", es}, {"orientation", orient}};
}

BaseGraph BaseGraph::from_json(const nlohmann::json& j) {
    BaseGraph g;
    g.num_vertices = j.at("vertices").get<int>();
    g.degree = j.at("degree").get<int>();
    for (const auto& e : j.at("edges"))
        g.edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<int>()});
    g.build_tables();
    g.validate();
    return g;
}

int connected_components(const BaseGraph& g) {
    std::vector<int> comp(g.num_vertices, -1);
    int n = 0;
    for (int s = 0; s < g.num_vertices; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = n;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int mu = 0; mu < g.degree; ++mu) {
                int w = g.step(v, mu);
                if (comp[w] < 0) {
                    comp[w] = n;
                    q.push(w);
                }
            }
        }
        ++n;
    }
    return n;
}

BaseGraph cayley_graph(const PermGroup& group, const std::vector<int>& generators) {
    require(!generators.empty(), "empty generating set");
    std::set<int> gset(generators.begin(), generators.end());
    require((int)gset.size() == (int)generators.size(), "duplicate generators");
    for (int g : generators) {
        require(g != 0, "identity not allowed in the generating set");
        require(gset.count(group.inverse(g)), "generating set must be closed under inverses");
    }

    BaseGraph g;
    g.num_vertices = group.size();
    g.degree = (int)generators.size();
    // Right multiplication: the mu-th edge at v goes to v * gen[mu]. Each
    // undirected edge {v, w} is emitted once, labeled by the generator index
    // on each side (the inverse generator's index at w; for involutions both
    // sides share the index).
    std::set<std::pair<int, int>> emitted;
    for (int v = 0; v < group.size(); ++v) {
        for (int gi = 0; gi < (int)generators.size(); ++gi) {
            int w = group.mul(v, generators[gi]);
            require(w != v, "generator fixes a vertex");
            auto [lo, hi] = std::minmax(v, w);
            if (emitted.count({lo, hi})) continue;
            emitted.insert({lo, hi});
            int inv = group.inverse(generators[gi]);
            int gj = -1;
            for (int k = 0; k < (int)generators.size(); ++k)
                if (generators[k] == inv) gj = k;
            require(gj >= 0, "inverse generator missing");
            g.edges.push_back({v, w, gi, gj});
        }
    }
    g.build_tables();
    if (connected_components(g) != 1)
        throw error("generating set does not generate: Cayley graph is disconnected");
    g.validate();
    return g;
}

BaseGraph graph_K3() { return cayley_graph(PermGroup::cyclic(3), {1, 2}); }

BaseGraph graph_K4() { return cayley_graph(PermGroup::elementary_abelian2(2), {1, 2, 3}); }

BaseGraph graph_S3_cayley() {
    auto s3 = PermGroup::symmetric3();
    int s = -1, r = -1;
    for (int i = 1; i < s3.size(); ++i) {
        if (s3.mul(i, i) == 0 && s < 0) s = i;
        if (s3.mul(i, i) != 0 && r < 0) r = i;
    }
    return cayley_graph(s3, {s, r, s3.inverse(r)});
}

BaseGraph graph_S3_cayley_full() {
    auto s3 = PermGroup::symmetric3();
    std::vector<int> gens;
    for (int i = 1; i < s3.size(); ++i) gens.push_back(i);
    return cayley_graph(s3, gens);
}

BaseGraph complete_graph(int n) {
    require(n >= 3, "complete graph needs at least 3 vertices");
    if (n == 3) return graph_K3();
    if (n == 4) return graph_K4();
    if (n == 6) return graph_S3_cayley_full();
    if (n % 2 == 1) {
        std::vector<int> gens;
        for (int d = 1; d < n; ++d) gens.push_back(d);
        return cayley_graph(PermGroup::cyclic(n), gens);
    }
    throw error("complete_graph: unsupported even order (use K_4 or K_6)");
}

BaseGraph named_graph(const std::string& name) {
    if (name == "K3") return graph_K3();
    if (name == "K4") return graph_K4();
    if (name == "K5") return complete_graph(5);
    if (name == "S3" || name == "S3-cayley") return graph_S3_cayley();
    if (name == "K6" || name == "S3-full") return graph_S3_cayley_full();
    throw error("unknown named graph: " + name);
}

BaseGraph double_cover(const BaseGraph& g) {
    BaseGraph d;
    d.degree = g.degree;
    d.num_vertices = 2 * g.num_vertices;
    auto vx = [&](int v, int bit) { return bit * g.num_vertices + v; };
    for (const auto& e : g.edges) {
        d.edges.push_back({vx(e.u, 0), vx(e.v, 1), e.label_u, e.label_v});
        d.edges.push_back({vx(e.u, 1), vx(e.v, 0), e.label_u, e.label_v});
    }
    d.build_tables();
    return d;
}

Voltage Voltage::trivial(const BaseGraph& g, int l) {
    Voltage v;
    v.l = l;
    v.per_edge.assign(g.edges.size(), 0);
    return v;
}

Voltage Voltage::random(const BaseGraph& g, int l, std::uint64_t seed) {
    Voltage v;
    v.l = l;
    v.seed = seed;
    Rng rng(seed);
    v.per_edge.resize(g.edges.size());
    for (auto& x : v.per_edge) x = (int)rng.below(l);
    return v;
}

LiftedGraph shift_lift(const BaseGraph& g, int l, const Voltage& voltage) {
    require(l >= 1, "lift size must be positive");
    require(voltage.l == l && (int)voltage.per_edge.size() == (int)g.edges.size(),
            "voltage does not match graph");
    LiftedGraph lift;
    lift.base = g;
    lift.voltage = voltage;
    BaseGraph& d = lift.derived;
    d.degree = g.degree;
    d.num_vertices = l * g.num_vertices;
    auto vx = [&](int h, int v) { return h * g.num_vertices + v; };
    // Traversing the oriented edge u -> v multiplies the fiber coordinate by
    // the voltage: (h, u) -- (gamma + h, v).
    for (int e = 0; e < (int)g.edges.size(); ++e) {
        const auto& ed = g.edges[e];
        int gam = ((voltage.per_edge[e] % l) + l) % l;
        for (int h = 0; h < l; ++h)
            d.edges.push_back({vx(h, ed.u), vx((gam + h) % l, ed.v), ed.label_u, ed.label_v});
    }
    d.build_tables();
    return lift;
}

LiftedGraph shift_lift(const BaseGraph& g, int l, std::uint64_t seed) {
    return shift_lift(g, l, l == 1 ? Voltage::trivial(g, 1) : Voltage::random(g, l, seed));
}

namespace {

std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    const int n = (int)a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-22) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-15) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                // Apply the rotation on both sides.
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = a[i][i];
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    return ev;
}

} // namespace

SpectralReport spectral_report(const BaseGraph& g) {
    require(g.num_vertices <= 5000, "graph too large for the dense eigensolver");
    std::vector<std::vector<double>> a(g.num_vertices, std::vector<double>(g.num_vertices, 0));
    for (const auto& e : g.edges) {
        a[e.u][e.v] += 1;
        a[e.v][e.u] += 1;
    }
    SpectralReport rep;
    rep.eigenvalues = jacobi_eigenvalues(std::move(a));
    rep.connected_components = connected_components(g);
    rep.ramanujan_bound = 2 * std::sqrt(std::max(g.degree - 1, 0));
    const double tol = 1e-9;
    double lam = 0;
    for (double e : rep.eigenvalues) {
        if (std::abs(std::abs(e) - g.degree) < 1e-6) continue; // trivial eigenvalues +-n
        lam = std::max(lam, std::abs(e));
    }
    rep.second_largest_abs = lam;
    rep.ramanujan = lam <= rep.ramanujan_bound + tol;
    return rep;
}

nlohmann::json SpectralReport::to_json() const {
    return {{"eigenvalues", eigenvalues},
            {"second_largest_abs", second_largest_abs},
            {"ramanujan", ramanujan},
            {"ramanujan_bound", ramanujan_bound},
            {"connected_components", connected_components}};
}

Matrix graph_coboundary(const BaseGraph& g, const Field& field) {
    Matrix m(field, (int)g.edges.size(), g.num_vertices);
    for (int e = 0; e < (int)g.edges.size(); ++e) {
        m.set(e, g.edges[e].u, 1);
        m.set(e, g.edges[e].v, 1);
    }
    return m;
}

} // namespace homcup
