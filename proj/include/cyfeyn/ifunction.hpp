#pragma once

#include <memory>

#include "cyfeyn/qseries.hpp"
#include "cyfeyn/target.hpp"

namespace cyfeyn {

// The four hypergeometric components I_j of a target, each a q-series of the
// common truncation order.
struct IComponents {
    QSeries I0, I1, I2, I3;
};

// Everything downstream consumers need about the periods of one target at one
// truncation order: the raw components, the normalized periods, and the
// mirror map in both directions. The mirror map Q(q) = q * u(q) is stored as
// its unit factor u (constant term 1), and likewise q(Q) = Q * v(Q) is stored
// as v, so that both fit in an order-T series with no vanishing lead.
struct ISeriesBundle {
    TargetSpec spec;
    QSeries I0, I1, I2, I3;
    QSeries I11, I22, I33;
    QSeries mirrorQ;       // u(q) with Q = q * u(q)
    QSeries inverseMirror; // v(Q) with q = Q * v(Q)
};

// Coefficients of the I-function through q^T. For each degree d the factor
// ratio prod_{m=1}^{kd}(m + kH) / prod_i prod_{m=1}^{w_i d}(m + w_i H) is
// expanded in the nilpotent class H (H^4 = 0); the H^j part goes to I_j.
IComponents i_series(const TargetSpec& spec, int T);

// Builds the full bundle: I11 = 1 + D(I1/I0), the second normalization, and
// the mirror map u = exp(I1/I0) together with its compositional inverse.
ISeriesBundle normalized_periods(const TargetSpec& spec, int T);

// Yukawa coupling p_k * Y / (I0^2 * I11^3) as a q-series; its constant term
// is p_k.
QSeries yukawa(const TargetSpec& spec, int T);

// Y = 1/(1 - r q) and X = 1 - Y at order T.
QSeries y_series(const TargetSpec& spec, int T);
QSeries x_series(const TargetSpec& spec, int T);

// Memoized access to normalized_periods keyed by (k, T). Thread-safe; the
// bundle is immutable once published.
std::shared_ptr<const ISeriesBundle> period_bundle(const TargetSpec& spec, int T);

} // namespace cyfeyn
