#include "homcup/logicals.hpp"

#include <algorithm>
#include <json.hpp>

namespace homcup {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Decode row r of the direction check matrix (a double-cover edge of the
/// lifted factor graph) into (fiber h, base vertex v, label a at the tail).
struct DirEdge {
    int h, v, label;
};

DirEdge decode_dc_edge(const BaseGraph& lifted, int base_vertices, int row) {
    int e = row / 2, copy = row % 2;
    const auto& ed = lifted.edges[e];
    int tail = copy == 0 ? ed.u : ed.v; // bit-0 endpoint of the 1-cube
    int label = copy == 0 ? ed.label_u : ed.label_v;
    return {tail / base_vertices, tail % base_vertices, label};
}

int encode_dc_edge(const CubicalComplex& X, const BaseGraph& lifted, int h, int v, int label) {
    int tail = h * X.base().num_vertices + v;
    int e = lifted.edge_of(tail, label);
    int copy = (lifted.edges[e].u == tail) ? 0 : 1;
    return 2 * e + copy;
}

/// Tensor of the per-direction vectors z_j over the bit directions of the
/// given mask (ascending j), flattened row-major (smallest j most significant).
std::vector<felem> tensor_bits(const Field& f, const Sheaf& S, std::uint8_t mask,
                               const std::vector<Vec>& z) {
    std::vector<felem> out{1};
    for (int j = 0; j < S.t(); ++j) {
        if ((mask >> j) & 1) continue;
        std::vector<felem> next(out.size() * z[j].len());
        for (std::size_t i = 0; i < out.size(); ++i)
            for (int c = 0; c < z[j].len(); ++c)
                next[i * z[j].len() + c] = f.mul(out[i], z[j][c]);
        out = std::move(next);
    }
    return out;
}

/// A vector w with <z, w> = 1 (one-hot at the first nonzero coordinate).
Vec dual_choice(const Field& f, const Vec& z) {
    for (int c = 0; c < z.len(); ++c)
        if (z[c]) {
            Vec w(f, z.len());
            w[c] = f.inv(z[c]);
            return w;
        }
    throw error("cannot dualize the zero vector");
}

/// Direction-supported cycle witness: a Tanner codeword of (lifted graph,
/// local code of the direction) spread over direction-d 1-cubes at one fixed
/// slice of the other directions. Always a cycle: the boundary conditions are
/// exactly the Tanner conditions on the slice.
Chain direction_witness(const CubicalComplex& X, std::shared_ptr<const CoefficientSystem> F,
                        const Sheaf& S, int d, const BaseGraph& lifted, const Vec& tanner_word,
                        const std::array<int, kMaxT>& slice_v, const std::array<int, kMaxT>& slice_b,
                        const std::vector<Vec>& w) {
    Chain eta(X, F, 1);
    const Field& f = F->field();
    std::vector<felem> wtensor = tensor_bits(f, S, (std::uint8_t)(1 << d), w);
    for (int row = 0; row < tanner_word.len(); ++row) {
        if (!tanner_word[row]) continue;
        DirEdge de = decode_dc_edge(lifted, X.base().num_vertices, row);
        Cube c;
        c.action_mask = (std::uint8_t)(1 << d);
        c.h = de.h;
        c.v[d] = (std::uint8_t)de.v;
        c.s[d] = (std::uint8_t)de.label;
        for (int j = 0; j < X.t(); ++j) {
            if (j == d) continue;
            c.v[j] = (std::uint8_t)slice_v[j];
            c.s[j] = (std::uint8_t)slice_b[j];
        }
        std::vector<felem> val(wtensor.size());
        for (std::size_t i = 0; i < wtensor.size(); ++i) val[i] = f.mul(tanner_word[row], wtensor[i]);
        eta.add(c, val);
    }
    return eta;
}

} // namespace

nlohmann::json Probe::to_json(int t) const {
    std::vector<int> vv(v.begin(), v.begin() + t), ll(labels.begin(), labels.begin() + t);
    return {{"v", vv}, {"direction", direction}, {"label", label}, {"eval_labels", ll}};
}

nlohmann::json LogicalBasis::provenance() const {
    static const char* names[] = {"canonical_hgp", "all_ones_lift", "polarized", "standardized"};
    nlohmann::json j{{"kind", names[(int)kind]}, {"direction", direction},
                     {"count", reps.size()}};
    if (!prov_extra.is_null()) j["detail"] = prov_extra;
    return j;
}

void LogicalBasis::verify() const {
    if (reps.empty()) return;
    const Field& f = reps[0].x.F->field();
    Matrix P(f, (int)reps.size(), (int)reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        require(apply_delta(reps[i].x).is_zero(), "representative is not a cocycle");
        require(apply_boundary(reps[i].witness).is_zero(), "witness is not a cycle");
        for (std::size_t j = 0; j < reps.size(); ++j)
            P.set((int)i, (int)j, pairing(reps[i].x, reps[j].witness));
    }
    // Full-rank pairing: every nontrivial combination of representatives pairs
    // nontrivially against some cycle, so all classes are independent (and in
    // particular pairwise inequivalent and individually non-coboundary).
    require(rank(P) == (int)reps.size(), "witness pairing matrix is singular");
}

Matrix direction_check_matrix(const CubicalComplex& X, const Sheaf& F, int direction) {
    LiftedGraph lift = shift_lift(X.base(), X.l(), X.voltage());
    return tanner_check_matrix(lift.derived, F.local(direction)).transpose();
}

Vec solve_z_normalization(const Sheaf& S, int j, int target_label) {
    const Field& f = S.field();
    const Matrix& h = S.local(j);
    for (int c = 0; c < h.rows; ++c) {
        if (h.at(c, target_label)) {
            Vec z(f, h.rows);
            z[c] = f.inv(h.at(c, target_label));
            return z;
        }
    }
    std::string admissible;
    for (int a = 0; a < h.cols; ++a) {
        bool ok = false;
        for (int c = 0; c < h.rows; ++c) ok |= (h.at(c, a) != 0);
        if (ok) admissible += (admissible.empty() ? "" : ", ") + std::to_string(a);
    }
    throw error("no z solves the normalization at label " + std::to_string(target_label) +
                "; admissible labels: {" + admissible + "}");
}

LogicalBasis hgp_canonical_logicals(const CubicalComplex& X,
                                    std::shared_ptr<const CoefficientSystem> F, int direction,
                                    const std::vector<Vec>& z_choices) {
    require(X.l() == 1, "canonical logicals require the pure product (l = 1); use "
                        "polarized_logicals on lifted complexes");
    const Sheaf* S = dynamic_cast<const Sheaf*>(F.get());
    require(S != nullptr, "canonical logicals need a plain sheaf coefficient system");
    const Field& f = F->field();
    const int t = X.t(), d = direction;
    require(0 <= d && d < t, "invalid direction");

    std::vector<Vec> z(t);
    for (int j = 0; j < t; ++j) {
        if ((int)z_choices.size() > j && z_choices[j].len() > 0) {
            require(z_choices[j].len() == S->m(j), "z choice has the wrong local dimension");
            z[j] = z_choices[j];
        } else {
            // default: all-ones local vector (the scalar 1 for trivial locals)
            z[j] = Vec(f, S->m(j));
            for (int c = 0; c < S->m(j); ++c) z[j][c] = 1;
        }
        require(!z[j].is_zero(), "z choice must be nonzero");
    }

    Matrix Hd = direction_check_matrix(X, *S, d);
    auto fv = free_variables(Hd);
    auto etas = eta_basis(Hd);
    LiftedGraph lift = shift_lift(X.base(), 1, Voltage::trivial(X.base(), 1));

    LogicalBasis basis;
    basis.kind = LogicalBasis::Kind::CanonicalHgp;
    basis.direction = d;
    std::vector<Vec> w(t, Vec(f, 0));
    for (int j = 0; j < t; ++j)
        if (j != d) w[j] = dual_choice(f, z[j]);

    const int nv = X.base().num_vertices;
    std::vector<felem> ztensor = tensor_bits(f, *S, (std::uint8_t)(1 << d), z);
    for (std::size_t k = 0; k < fv.free_rows.size(); ++k) {
        DirEdge de = decode_dc_edge(lift.derived, nv, fv.free_rows[k]);
        LogicalRep rep;
        rep.x = Cochain(X, F, 1);
        // free edge (x) zeta (x) ... : support over every (v_j, b_j) combo
        std::vector<int> combo(t, 0);
        for (;;) {
            Cube c;
            c.action_mask = (std::uint8_t)(1 << d);
            c.v[d] = (std::uint8_t)de.v;
            c.s[d] = (std::uint8_t)de.label;
            for (int j = 0; j < t; ++j) {
                if (j == d) continue;
                c.v[j] = (std::uint8_t)(combo[j] / 2);
                c.s[j] = (std::uint8_t)(combo[j] % 2);
            }
            rep.x.add(c, ztensor);
            int j = t - 1;
            while (j >= 0) {
                if (j == d) {
                    --j;
                    continue;
                }
                if (++combo[j] < 2 * nv) break;
                combo[j] = 0;
                --j;
            }
            if (j < 0) break;
        }
        // witness: eta_k spread over the direction at a fixed slice
        std::array<int, kMaxT> sv{}, sb{};
        Vec eta(f, Hd.rows);
        eta = etas[k];
        rep.witness = direction_witness(X, F, *S, d, lift.derived, eta, sv, sb, w);
        rep.pairing_value = pairing(rep.x, rep.witness);
        require(rep.pairing_value != 0, "canonical representative failed its own witness");
        basis.reps.push_back(std::move(rep));
    }
    basis.prov_extra = {{"free_rows", fv.free_rows}};
    return basis;
}

PolarizedResult polarized_logicals(const CubicalComplex& X, std::shared_ptr<const Sheaf> F,
                                   const Probe& anchor) {
    const int l = X.l(), t = X.t(), d = anchor.direction, n = X.base().degree;
    require(l >= 3 && is_prime(l),
            "polarized representatives need a prime lift order l >= 3 (l = 1 is the canonical "
            "HGP case)");
    const Field& f = F->field();
    // Rank regime m_d = nu' n < n/2 < m_j; distances >= 2 where the local
    // kernel is nontrivial (the polarization direction always, the others
    // only when m_j < n).
    require(2 * F->m(d) < n, "polarized regime needs m_d < n/2 at the polarization direction");
    for (int j = 0; j < t; ++j) {
        if (j == d) continue;
        require(2 * F->m(j) > n, "polarized regime needs m_j > n/2 away from the polarization");
    }
    {
        auto st = local_code_stats(F->local(d));
        require(st.distance >= 2 && st.dual_distance >= 2,
                "polarization-direction local code needs distance and dual distance >= 2");
        for (int j = 0; j < t; ++j)
            if (j != d && F->m(j) < n)
                require(local_code_stats(F->local(j)).dual_distance >= 2,
                        "local dual distance >= 2 required");
    }

    LiftedGraph lift = shift_lift(X.base(), l, X.voltage());
    const int base_v = anchor.v[d], base_a = anchor.label;

    // Columns of the anchor block: cells [h; a at d; (v_j, b_j)] x coefficient.
    struct Col {
        Cube cell;
        int coord;
    };
    std::vector<Col> columns;
    std::vector<Cube> anchor_cells;
    const int nv = X.base().num_vertices;
    {
        std::vector<int> combo(t, 0);
        for (int h = 0; h < l; ++h) {
            std::fill(combo.begin(), combo.end(), 0);
            for (;;) {
                Cube c;
                c.action_mask = (std::uint8_t)(1 << d);
                c.h = h;
                c.v[d] = (std::uint8_t)base_v;
                c.s[d] = (std::uint8_t)base_a;
                for (int j = 0; j < t; ++j) {
                    if (j == d) continue;
                    c.v[j] = (std::uint8_t)(combo[j] / 2);
                    c.s[j] = (std::uint8_t)(combo[j] % 2);
                }
                anchor_cells.push_back(c);
                for (int q = 0; q < F->dim(c.action_mask); ++q) columns.push_back({c, q});
                int j = t - 1;
                while (j >= 0) {
                    if (j == d) {
                        --j;
                        continue;
                    }
                    if (++combo[j] < 2 * nv) break;
                    combo[j] = 0;
                    --j;
                }
                if (j < 0) break;
            }
        }
    }
    std::unordered_map<Cube::Key, int, CubeKeyHash> colcell_of;
    std::vector<long long> coloff(anchor_cells.size() + 1, 0);
    for (std::size_t i = 0; i < anchor_cells.size(); ++i) {
        colcell_of[anchor_cells[i].key()] = (int)i;
        coloff[i + 1] = coloff[i] + F->dim(anchor_cells[i].action_mask);
    }

    // Rows: coefficients of the 2-cube cofaces (types {d, j}).
    std::unordered_map<Cube::Key, int, CubeKeyHash> rowcell_of;
    std::vector<Cube> row_cells;
    std::vector<long long> rowoff{0};
    std::vector<std::tuple<int, int, felem>> entries;
    for (std::size_t i = 0; i < anchor_cells.size(); ++i) {
        const Cube& sigma = anchor_cells[i];
        for (const Cube& tau : X.cofaces(sigma)) {
            auto it = rowcell_of.find(tau.key());
            int ri;
            if (it == rowcell_of.end()) {
                ri = (int)row_cells.size();
                rowcell_of[tau.key()] = ri;
                row_cells.push_back(tau);
                rowoff.push_back(rowoff.back() + F->dim(tau.action_mask));
            } else {
                ri = it->second;
            }
            const Matrix& M = F->morphism(sigma.action_mask, tau);
            for (auto& [r, c, v] : M.entries())
                entries.emplace_back((int)rowoff[ri] + r, (int)coloff[i] + c, v);
        }
    }
    Matrix B(f, (int)rowoff.back(), (int)coloff.back());
    for (auto& [r, c, v] : entries) B.addto(r, c, v);

    auto kernel = kernel_basis(B, Side::Right);

    PolarizedResult result;
    result.kernel_dim = (long long)kernel.size();
    {
        // Lemma rank-count lower bound on dim ker of the full restricted
        // operator, divided by the edge count to match the per-anchor block.
        double nu_p = (double)F->m(d) / n;
        double nu = 1.0 - (double)(t >= 2 ? F->m(d == 0 ? 1 : 0) : 0) / n;
        double V = 2.0 * X.base().num_vertices;
        double nt = std::pow((double)n, t) * l * std::pow(V, t) / 2.0;
        double pos = std::pow(1 - nu, t - 1) + (t - 2) / std::pow(2.0, t - 1) +
                     (t - 2) * (t - 1) / std::pow(2.0, t - 3) * nu_p * nu;
        double neg = (t - 1) * nu_p * std::pow(1 - nu, t - 2) +
                     (nu_p + (t - 1) * nu) / std::pow(2.0, t - 2) +
                     (t - 1) * (t - 2) / std::pow(2.0, t - 3) * nu_p * nu * nu;
        double full = (pos / (t - 1) - (t - 2) / (double)(t - 1) * neg) * nt;
        double E = n * X.base().num_vertices;
        result.lemma_lower_bound = full / E;
    }

    // Cross-check the module picture: group-algebra tensor products of the
    // per-direction kernels embed into (and here should span) the kernel.
    {
        std::vector<std::vector<Vec>> dir_kernels;
        std::vector<int> dirs;
        for (int j = 0; j < t; ++j)
            if (j != d) dirs.push_back(j);
        for (int j : dirs) {
            // vertex-side kernel of the direction map (edges x (vertex, check))
            Matrix Hj = tanner_check_matrix(lift.derived, F->local(j)).transpose();
            dir_kernels.push_back(kernel_basis(Hj, Side::Right));
        }
        // psi coordinates: (dc vertex w, check c) with w = b * (l nv) + (h nv + v).
        auto psi_at = [&](const Vec& psi, int mj, int h, int v, int b, int c) {
            int w = b * (l * nv) + h * nv + v;
            return psi[w * mj + c];
        };
        bool ok = true;
        if (t == 3 && !dir_kernels[0].empty() && !dir_kernels[1].empty()) {
            std::vector<Vec> tensors;
            int j2 = dirs[0], j3 = dirs[1];
            int m2 = F->m(j2), m3 = F->m(j3);
            for (const auto& psi : dir_kernels[0])
                for (const auto& phi : dir_kernels[1]) {
                    Vec vec(f, (int)coloff.back());
                    for (std::size_t ci = 0; ci < anchor_cells.size(); ++ci) {
                        const Cube& c = anchor_cells[ci];
                        for (int c2 = 0; c2 < m2; ++c2)
                            for (int c3 = 0; c3 < m3; ++c3) {
                                felem s = 0;
                                for (int h2 = 0; h2 < l; ++h2) {
                                    int h3 = ((c.h - h2) % l + l) % l;
                                    s ^= f.mul(psi_at(psi, m2, h2, c.v[j2], c.s[j2], c2),
                                               psi_at(phi, m3, h3, c.v[j3], c.s[j3], c3));
                                }
                                vec[(int)coloff[ci] + c2 * m3 + c3] ^= s;
                            }
                    }
                    tensors.push_back(std::move(vec));
                }
            // each tensor is in the kernel; together they should span it
            Matrix T(f, (int)tensors.size(), (int)coloff.back());
            for (std::size_t i = 0; i < tensors.size(); ++i) {
                require(mul(B, tensors[i]).is_zero(),
                        "module tensor product failed to land in the kernel");
                for (int c = 0; c < T.cols; ++c) T.set((int)i, c, tensors[i][c]);
            }
            ok = rank(T) == (int)kernel.size();
        }
        result.tensor_span_confirmed = ok;
    }

    if (kernel.empty())
        throw error("restricted coboundary kernel is empty at this anchor; the sheaf rank "
                    "regime (m_d < n/2 < m_j) is likely violated");

    // Witness family: direction-d Tanner codewords at probe slices, extended
    // until the pairing matrix has full rank.
    Matrix Kd = tanner_check_matrix(lift.derived, F->local(d));
    auto tanner = kernel_basis(Kd, Side::Right);

    LogicalBasis basis;
    basis.kind = LogicalBasis::Kind::Polarized;
    basis.direction = d;
    basis.prov_extra = {{"anchor", anchor.to_json(t)}, {"kernel_dim", (long long)kernel.size()}};
    for (const auto& kv : kernel) {
        LogicalRep rep;
        rep.x = Cochain(X, std::static_pointer_cast<const CoefficientSystem>(F), 1);
        for (std::size_t ci = 0; ci < anchor_cells.size(); ++ci) {
            std::vector<felem> local(kv.a.begin() + coloff[ci], kv.a.begin() + coloff[ci + 1]);
            rep.x.add(anchor_cells[ci], local);
        }
        basis.reps.push_back(std::move(rep));
    }

    // Assign witnesses: search slices and coefficient choices for a pairing
    // family that certifies the whole basis.
    const int reps_n = (int)basis.reps.size();
    std::vector<Chain> witnesses;
    Matrix P(f, reps_n, 0);
    std::vector<Vec> wvec(t, Vec(f, 0));
    auto try_witness = [&](const Chain& eta) {
        Vec col(f, reps_n);
        bool nonzero = false;
        for (int i = 0; i < reps_n; ++i) {
            col[i] = pairing(basis.reps[i].x, eta);
            nonzero |= (col[i] != 0);
        }
        if (!nonzero) return;
        Matrix Pn(f, reps_n, P.cols + 1);
        for (int r = 0; r < reps_n; ++r) {
            for (int c = 0; c < P.cols; ++c) Pn.set(r, c, P.at(r, c));
            Pn.set(r, P.cols, col[r]);
        }
        if (rank(Pn) > rank(P)) {
            P = std::move(Pn);
            witnesses.push_back(eta);
        }
    };
    for (int v2combo = 0; v2combo < (int)std::pow(2 * nv, t - 1) && rank(P) < reps_n; ++v2combo) {
        std::array<int, kMaxT> sv{}, sb{};
        int rest = v2combo;
        for (int j = 0; j < t; ++j) {
            if (j == d) continue;
            sv[j] = (rest % (2 * nv)) / 2;
            sb[j] = rest % 2;
            rest /= 2 * nv;
        }
        std::vector<int> widx(t, 0);
        for (;;) {
            for (int j = 0; j < t; ++j) {
                if (j == d) continue;
                wvec[j] = Vec(f, F->m(j));
                wvec[j][widx[j]] = 1;
            }
            for (const auto& c : tanner) {
                if (rank(P) >= reps_n) break;
                try_witness(direction_witness(X, std::static_pointer_cast<const CoefficientSystem>(F),
                                              *F, d, lift.derived, c, sv, sb, wvec));
            }
            int j = t - 1;
            while (j >= 0) {
                if (j == d) {
                    --j;
                    continue;
                }
                if (++widx[j] < F->m(j)) break;
                widx[j] = 0;
                --j;
            }
            if (j < 0 || rank(P) >= reps_n) break;
        }
    }
    require(rank(P) == reps_n,
            "could not assemble a full-rank cycle witness family for the polarized basis");
    // Distribute: rep i gets a witness with nonzero pairing (solve by column).
    for (int i = 0; i < reps_n; ++i) {
        for (std::size_t wj = 0; wj < witnesses.size(); ++wj) {
            felem pv = pairing(basis.reps[i].x, witnesses[wj]);
            if (pv != 0) {
                basis.reps[i].witness = witnesses[wj];
                basis.reps[i].pairing_value = pv;
                break;
            }
        }
        require(basis.reps[i].pairing_value != 0, "representative missing a witness");
    }
    result.basis = std::move(basis);
    return result;
}

std::vector<GroupAlgebraElement> induced_vectors(const LogicalBasis& basis, const Probe& probe) {
    std::vector<GroupAlgebraElement> out;
    if (basis.reps.empty()) return out;
    const Cochain& x0 = basis.reps[0].x;
    const CubicalComplex& X = *x0.X;
    const Sheaf* S = dynamic_cast<const Sheaf*>(x0.F.get());
    require(S != nullptr, "induced vectors need a plain sheaf coefficient system");
    const Field& f = S->field();
    const int l = X.l(), t = X.t(), d = probe.direction;

    for (const auto& rep : basis.reps) {
        GroupAlgebraElement v(f, l);
        for (int h = 0; h < l; ++h) {
            Cube c;
            c.action_mask = (std::uint8_t)(1 << d);
            c.h = h;
            c.v[d] = (std::uint8_t)probe.v[d];
            c.s[d] = (std::uint8_t)probe.label;
            for (int j = 0; j < t; ++j) {
                if (j == d) continue;
                c.v[j] = (std::uint8_t)probe.v[j];
                c.s[j] = 0; // bit-0 convention
            }
            const std::vector<felem>* val = rep.x.at(c);
            if (!val) continue;
            // contract with the tensor of evaluation rows h_j^T(a_j, -)
            felem acc = 0;
            int dim = S->dim(c.action_mask);
            for (int idx = 0; idx < dim; ++idx) {
                felem coef = (*val)[idx];
                if (!coef) continue;
                int rest = idx;
                // decode multi-index over bit directions descending strides
                felem prod = 1;
                for (int j = t - 1; j >= 0; --j) {
                    if (j == d) continue;
                    int cj = rest % S->m(j);
                    rest /= S->m(j);
                    prod = f.mul(prod, S->local(j).at(cj, probe.labels[j]));
                }
                acc ^= f.mul(coef, prod);
            }
            v.coeffs[h] = acc;
        }
        out.push_back(std::move(v));
    }
    return out;
}

LogicalBasis standardize_logicals(const LogicalBasis& basis, const Probe& probe) {
    require(!basis.reps.empty(), "empty basis");
    const Cochain& x0 = basis.reps[0].x;
    const CubicalComplex& X = *x0.X;
    const int l = X.l(), t = X.t(), d = probe.direction;
    const Field& f = x0.F->field();
    const Sheaf* S = dynamic_cast<const Sheaf*>(x0.F.get());
    require(S != nullptr, "standardization needs a plain sheaf coefficient system");

    auto induced = induced_vectors(basis, probe);
    auto analysis = ideal_analyze(induced, f, l);
    if (!analysis.is_whole_algebra) {
        std::string ideal = analysis.containing_maximal_ideals.empty()
                                ? "<1>"
                                : analysis.containing_maximal_ideals.front().to_string();
        throw error("induced vectors span a proper ideal contained in <" + ideal +
                    ">; try a different probe (a constant fraction of probes succeeds)");
    }

    LogicalBasis out;
    out.kind = LogicalBasis::Kind::Standardized;
    out.direction = d;
    LiftedGraph lift = shift_lift(X.base(), l, X.voltage());

    // Witnesses: Tanner codewords of the polarization-direction local code
    // whose anchor-fiber restrictions form a dual basis, paired at the probe
    // slice with the evaluation rows as chain coefficients.
    Matrix Kd = tanner_check_matrix(lift.derived, S->local(d));
    auto tanner = kernel_basis(Kd, Side::Right);
    Matrix R(f, (int)tanner.size(), l); // restriction to the anchor fiber
    for (std::size_t i = 0; i < tanner.size(); ++i)
        for (int h = 0; h < l; ++h)
            R.set((int)i, h,
                  tanner[i][encode_dc_edge(X, lift.derived, h, probe.v[d], probe.label)]);
    std::vector<Vec> wvec(t, Vec(f, 0));
    for (int j = 0; j < t; ++j) {
        if (j == d) continue;
        wvec[j] = Vec(f, S->m(j));
        for (int c = 0; c < S->m(j); ++c) wvec[j][c] = S->local(j).at(c, probe.labels[j]);
    }
    std::array<int, kMaxT> sv{}, sb{};
    for (int j = 0; j < t; ++j) {
        sv[j] = probe.v[j];
        sb[j] = 0;
    }

    for (int j = 0; j < l; ++j) {
        auto sol = standard_basis_solve(induced, j);
        LogicalRep rep;
        rep.x = Cochain(X, x0.F, 1);
        for (std::size_t i = 0; i < basis.reps.size(); ++i)
            rep.x = rep.x + ga_act(sol.coefficients[i], basis.reps[i].x);
        out.reps.push_back(std::move(rep));
    }

    // Verify the standardized induced vectors are exactly x^j.
    auto post = induced_vectors(out, probe);
    for (int j = 0; j < l; ++j)
        require(post[j] == GroupAlgebraElement::monomial(f, l, j),
                "standardized representative does not induce x^j");

    // Dual-basis witnesses: find tanner combinations restricting to e_h.
    for (int j = 0; j < l; ++j) {
        Vec e(f, l);
        e[j] = 1;
        auto m = image_membership(R.transpose(), e, Side::Right);
        require(m.member, "anchor-fiber restriction of the Tanner kernel is not surjective; "
                          "pick a different anchor");
        Vec combo(f, Kd.cols);
        for (int i = 0; i < (int)tanner.size(); ++i) {
            if (!m.coefficients[i]) continue;
            for (int c = 0; c < Kd.cols; ++c)
                combo[c] ^= f.mul(m.coefficients[i], tanner[i][c]);
        }
        out.reps[j].witness = direction_witness(X, x0.F, *S, d, lift.derived, combo, sv, sb, wvec);
        out.reps[j].pairing_value = pairing(out.reps[j].x, out.reps[j].witness);
        require(out.reps[j].pairing_value != 0, "standardized witness pairing vanished");
    }
    out.prov_extra = {{"probe", probe.to_json(t)},
                      {"ideal_dimension", analysis.dimension},
                      {"generators", (int)basis.reps.size()}};
    return out;
}

ProbeSearchResult standardize_with_probe_search(const LogicalBasis& basis) {
    ProbeSearchResult res;
    require(!basis.reps.empty(), "empty basis");
    const CubicalComplex& X = *basis.reps[0].x.X;
    const Sheaf* S = dynamic_cast<const Sheaf*>(basis.reps[0].x.F.get());
    require(S != nullptr, "probe search needs a plain sheaf");
    const int t = X.t(), d = basis.direction, nv = X.base().num_vertices, n = X.base().degree;

    // Anchors are fixed by the basis (support already polarized); enumerate
    // evaluation vertices and labels in canonical order.
    Probe probe;
    probe.direction = d;
    // anchor data from any support cell
    const Cochain& x0 = basis.reps[0].x;
    require(!x0.vals.empty(), "empty representative");
    Cube c0 = x0.cubes.begin()->second;
    probe.v[d] = c0.v[d];
    probe.label = c0.s[d];

    std::vector<int> combo(t, 0), labels(t, 0);
    for (;;) {
        for (int j = 0; j < t; ++j)
            if (j != d) probe.v[j] = combo[j];
        std::fill(labels.begin(), labels.end(), 0);
        for (;;) {
            for (int j = 0; j < t; ++j)
                if (j != d) probe.labels[j] = labels[j];
            try {
                res.basis = standardize_logicals(basis, probe);
                res.success = true;
                res.probe = probe;
                res.tried.push_back({{"probe", probe.to_json(t)}, {"ok", true}});
                return res;
            } catch (const error& e) {
                res.tried.push_back(
                    {{"probe", probe.to_json(t)}, {"ok", false}, {"reason", e.what()}});
                res.obstruction = e.what();
            }
            int j = t - 1;
            while (j >= 0) {
                if (j == d) {
                    --j;
                    continue;
                }
                if (++labels[j] < n) break;
                labels[j] = 0;
                --j;
            }
            if (j < 0) break;
        }
        int j = t - 1;
        while (j >= 0) {
            if (j == d) {
                --j;
                continue;
            }
            if (++combo[j] < nv) break;
            combo[j] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return res;
}

} // namespace homcup
