#pragma once

#include <array>
#include <vector>

#include "cyfeyn/correlator.hpp"
#include "cyfeyn/genring.hpp"
#include "cyfeyn/stable_graph.hpp"
#include "cyfeyn/target.hpp"

namespace cyfeyn {

// Which insertion a leg carries: an x-leg expands as phi1 - E_psi * phi0 psi,
// a y-leg is phi0 psi.
enum class LegKind { X, Y };

// Edge bivector on the (phi1, phi0 psi) slot pair; symmetric, so
// phipsi == psiphi always.
struct BivectorB {
    GenPoly phiphi;  // phi1 (x) phi1
    GenPoly phipsi;  // phi1 (x) phi0 psi
    GenPoly psiphi;  // phi0 psi (x) phi1
    GenPoly psipsi;  // phi0 psi (x) phi0 psi
};

// Ancestor-side bivector. Restricting to the (phi1, phi0 psi) slots recovers
// BivectorB exactly; the extra coefficients pair phi0 against higher
// psi-weight slots (each appears symmetrically on both tensor orders).
struct BivectorA {
    BivectorB base;
    GenPoly phi0_phi2;     // phi0 (x) phi2 + phi2 (x) phi0
    GenPoly phi0_phi1psi;  // phi0 (x) phi1 psi' + phi1 psi (x) phi0
    GenPoly phi0_psi2;     // phi0 (x) phi0 (psi')^2 + phi0 psi^2 (x) phi0
};

// Upper-triangular 4x4 matrix of ring elements; entry (i, j) is the
// coefficient of z^{j-i}, and the diagonal is 1.
struct RMatrixA {
    std::array<std::array<GenPoly, 4>, 4> entry;
};

BivectorB edge_bivector_B(const Gauge& g, const TargetSpec& spec);
BivectorA edge_bivector_A(const Gauge& g, const TargetSpec& spec);

// Inverse R-matrix at a gauge. It factors through the gauge action:
// r_matrix_A_inv(g) == rmat_mul(r_matrix_A_inv(zero), gauge_matrix_inv(g)).
RMatrixA r_matrix_A_inv(const Gauge& g, const TargetSpec& spec);
RMatrixA gauge_matrix_inv(const Gauge& g);
RMatrixA rmat_mul(const RMatrixA& a, const RMatrixA& b);
bool rmat_equal(const RMatrixA& a, const RMatrixA& b);

// Contribution of one stable graph: expand every x-leg into its two branches,
// every edge over the four bivector slots, take the product of vertex
// correlators (vertex v sees m_v phi1-ends and n_v phi0 psi-ends) with the
// slot coefficients, sum over all assignments, and divide by aut_order(G).
GenPoly graph_contribution_B(const StableGraph& G, const std::vector<LegKind>& legKinds,
                             const CorrelatorTable& table, const Gauge& gauge,
                             const TargetSpec& spec);

// f^B_{g,m,n}: graph_contribution_B summed over all stable graphs of type
// (g, m+n), the first m legs carrying x and the remaining n carrying y.
// The table must hold P_{g,m'} for m' <= m (leading-vertex branches).
GenPoly feynman_sum_B(int g, int m, int n, const CorrelatorTable& table,
                      const Gauge& gauge, const TargetSpec& spec);

// Sum over every (g, 0) graph except the leading one-vertex, edge-free graph,
// so that P_g = f^B_g - leading_decomposition(g, ...). Consults correlators
// of genus < g only; requires g >= 2.
GenPoly leading_decomposition(int g, const Gauge& gauge, const TargetSpec& spec,
                              const CorrelatorTable& table);

} // namespace cyfeyn
