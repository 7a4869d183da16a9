#include "cyfeyn/feynman.hpp"

#include <map>
#include <utility>

#include "cyfeyn/errors.hpp"

namespace cyfeyn {

BivectorB edge_bivector_B(const Gauge& g, const TargetSpec& spec) {
    PropagatorSet E = propagators(g, spec);
    return BivectorB{E.E_phiphi, E.E_phipsi, E.E_phipsi, E.E_psipsi};
}

BivectorA edge_bivector_A(const Gauge& g, const TargetSpec& spec) {
    PropagatorSet E = propagators(g, spec);
    BivectorA a;
    a.base = edge_bivector_B(g, spec);
    a.phi0_phi2 = E.E_psi;
    a.phi0_phi1psi = E.E_1phipsi;
    a.phi0_psi2 = E.E_1psi2;
    return a;
}

namespace {

RMatrixA rmat_identity() {
    RMatrixA r;
    for (int i = 0; i < 4; ++i) r.entry[i][i] = GenPoly::constant(1);
    return r;
}

} // namespace

RMatrixA r_matrix_A_inv(const Gauge& g, const TargetSpec& spec) {
    PropagatorSet E = propagators(g, spec);
    RMatrixA r = rmat_identity();
    r.entry[0][1] = -E.E_psi;
    r.entry[0][2] = -E.E_phipsi;
    r.entry[0][3] = -E.E_1psi2;
    r.entry[1][2] = -E.E_phiphi;
    r.entry[1][3] = -E.E_1phipsi;
    r.entry[2][3] = -E.E_psi;
    return r;
}

RMatrixA gauge_matrix_inv(const Gauge& g) {
    g.validate();
    RMatrixA r = rmat_identity();
    r.entry[0][1] = -g.c11;
    r.entry[0][2] = -g.c2;
    r.entry[0][3] = g.c11 * g.c2 + g.c3;
    r.entry[1][2] = -g.c12;
    r.entry[1][3] = g.c11 * g.c12 + g.c2;
    r.entry[2][3] = -g.c11;
    return r;
}

RMatrixA rmat_mul(const RMatrixA& a, const RMatrixA& b) {
    RMatrixA c;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                c.entry[i][j] = c.entry[i][j] + a.entry[i][k] * b.entry[k][j];
    return c;
}

bool rmat_equal(const RMatrixA& a, const RMatrixA& b) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (a.entry[i][j] != b.entry[i][j]) return false;
    return true;
}

GenPoly graph_contribution_B(const StableGraph& G, const std::vector<LegKind>& legKinds,
                             const CorrelatorTable& table, const Gauge& gauge,
                             const TargetSpec& spec) {
    std::string why;
    if (!graph_valid(G, &why)) throw ConfigError("invalid stable graph: " + why);
    if (static_cast<int>(legKinds.size()) != G.num_legs())
        throw ConfigError("leg kind list does not match the number of legs");

    PropagatorSet E = propagators(gauge, spec);
    // Slot s of an edge fixes the insertion at (first, second):
    // 0 -> (phi1, phi1), 1 -> (phi1, psi), 2 -> (psi, phi1), 3 -> (psi, psi).
    const GenPoly slotCoef[4] = {E.E_phiphi, E.E_phipsi, E.E_phipsi, E.E_psipsi};
    const GenPoly minusEpsi = -E.E_psi;

    const int v = G.num_vertices();
    const int e = G.num_edges();
    const int L = G.num_legs();

    // The correlator product only depends on how many phi1-ends each vertex
    // collects (the psi count is the rest of its valence), so sweep the edges
    // and legs once and merge the slot coefficients of every assignment that
    // produces the same phi-count profile.
    std::vector<int> ends(v, 0);
    for (const auto& [a, b] : G.edges) {
        ends[a] += 1;
        ends[b] += 1;
    }
    for (int w : G.legs) ends[w] += 1;

    // phiCap[t][w]: phi-ends vertex w can still gain from item t onward, with
    // edges numbered 0..e-1 and legs e..e+L-1. A genus-0 vertex that cannot
    // reach three phi-ends any more only produces vanishing correlators, so
    // such profiles are dropped as soon as they appear.
    const int items = e + L;
    std::vector<std::vector<int>> phiCap(items + 1, std::vector<int>(v, 0));
    for (int t = items - 1; t >= 0; --t) {
        phiCap[t] = phiCap[t + 1];
        if (t < e) {
            phiCap[t][G.edges[t].first] += 1;
            phiCap[t][G.edges[t].second] += 1;
        } else if (legKinds[t - e] == LegKind::X) {
            phiCap[t][G.legs[t - e]] += 1;
        }
    }

    std::map<std::vector<int>, GenPoly> profiles;
    profiles[std::vector<int>(v, 0)] = GenPoly::constant(1);
    for (int t = 0; t < items; ++t) {
        std::map<std::vector<int>, GenPoly> next;
        auto put = [&](std::vector<int> key, GenPoly val) {
            if (val.is_zero()) return;
            for (int w = 0; w < v; ++w)
                if (G.genus[w] == 0 && key[w] + phiCap[t + 1][w] < 3) return;
            auto [it, fresh] = next.try_emplace(std::move(key), std::move(val));
            if (!fresh) it->second = it->second + val;
        };
        for (const auto& [key, coeff] : profiles) {
            if (t < e) {
                const auto [a, b] = G.edges[t];
                std::vector<int> lift = key;
                lift[a] += 1;
                lift[b] += 1;
                put(std::move(lift), coeff * slotCoef[0]);
                lift = key;
                lift[a] += 1;
                put(std::move(lift), coeff * slotCoef[1]);
                lift = key;
                lift[b] += 1;
                put(std::move(lift), coeff * slotCoef[2]);
                put(key, coeff * slotCoef[3]);
            } else if (legKinds[t - e] == LegKind::X) {
                std::vector<int> lift = key;
                lift[G.legs[t - e]] += 1;
                put(std::move(lift), coeff);
                put(key, coeff * minusEpsi);
            } else {
                put(key, coeff);
            }
        }
        profiles = std::move(next);
    }

    GenPoly total;
    for (const auto& [key, coeff] : profiles) {
        GenPoly term = coeff;
        for (int w = 0; w < v && !term.is_zero(); ++w)
            term = term * vertex_correlator(G.genus[w], key[w], ends[w] - key[w], table, spec);
        total = total + term;
    }
    return scalar_mul(Rat(1) / aut_order(G), total);
}

GenPoly feynman_sum_B(int g, int m, int n, const CorrelatorTable& table,
                      const Gauge& gauge, const TargetSpec& spec) {
    if (m < 0 || n < 0) throw ConfigError("leg counts must be non-negative");
    std::vector<LegKind> kinds(m + n, LegKind::Y);
    for (int j = 0; j < m; ++j) kinds[j] = LegKind::X;
    GenPoly total;
    for (const StableGraph& G : enumerate(g, m + n))
        total = total + graph_contribution_B(G, kinds, table, gauge, spec);
    return total;
}

GenPoly leading_decomposition(int g, const Gauge& gauge, const TargetSpec& spec,
                              const CorrelatorTable& table) {
    if (g < 2) throw ConfigError("leading decomposition requires genus >= 2");
    GenPoly total;
    for (const StableGraph& G : enumerate(g, 0)) {
        if (G.num_vertices() == 1 && G.num_edges() == 0) continue;
        total = total + graph_contribution_B(G, {}, table, gauge, spec);
    }
    return total;
}

} // namespace cyfeyn
