#pragma once

#include <map>
#include <memory>

#include "cyfeyn/genpoly.hpp"
#include "cyfeyn/ifunction.hpp"
#include "cyfeyn/qseries.hpp"
#include "cyfeyn/target.hpp"

namespace cyfeyn {

// A gauge choice: four polynomials in X alone with the degree bounds
// deg c11 <= 1, deg c12 <= 1, deg c2 <= 2, deg c3 <= 3 and no ambiguity
// unknowns. validate() throws GaugeDegreeViolation when any bound fails.
struct Gauge {
    GenPoly c11, c12, c2, c3;

    static Gauge zero() { return Gauge{}; }
    void validate() const;
    bool is_zero() const {
        return c11.is_zero() && c12.is_zero() && c2.is_zero() && c3.is_zero();
    }
};

struct PropagatorSet {
    GenPoly E_psi, E_phiphi, E_phipsi, E_psipsi, E_1phipsi, E_1psi2;
};

struct ModifiedSet {
    GenPoly E1, E2, E3;
};

// The q-series images of the eight ring variables at a given target and
// order. E1, E2, E3 evaluate at the zero gauge (their images under a gauge g
// are obtained by rewriting through from_modified first).
struct GenSeries {
    QSeries A, B, B2, B3, X, E1, E2, E3;
};

std::shared_ptr<const GenSeries> generator_series(const TargetSpec& spec, int T);

// Ring homomorphism into q-series: substitutes the generator series.
// Throws UnboundAmbiguity if p still carries unknowns (first form) or if an
// unknown is missing from the assignment (second form).
QSeries eval_hom(const GenPoly& p, const TargetSpec& spec, int T);
QSeries eval_hom(const GenPoly& p, const TargetSpec& spec, int T,
                 const std::map<int, Rat>& lambdaValues);

// The derivation D = q d/dq lifted to the ring: DA and DB3 close through the
// target's quadratic relations (hence the spec argument), DB = B2 - B^2,
// DB2 = B3 - B*B2, DX = X - X^2, and the modified generators close through
// their zero-gauge system. Ambiguity unknowns are constants under D.
GenPoly derive(const GenPoly& p, const TargetSpec& spec);

// Propagators at a gauge, per the defining shifts; the two composite entries
// are E_1phipsi = -E_psi*E_phiphi - E_phipsi and
// E_1psi2 = -E_psi*E_phipsi - E_psipsi.
PropagatorSet propagators(const Gauge& g, const TargetSpec& spec);

// Modified generators at a gauge: E1 = E_phiphi, E2 = E_phipsi +
// E_psi*E_phiphi, E3 = E_psipsi + 2*E_psi*E_phipsi + E_psi^2*E_phiphi.
ModifiedSet modified(const Gauge& g, const TargetSpec& spec);

// Result of rewriting into the modified basis: a polynomial in
// (E1, E2, E3, B, X), with member true exactly when B dropped out — i.e. the
// input lay in Q[E1, E2, E3, X].
struct ModifiedForm {
    GenPoly poly;
    bool member = false;
};

// Triangular change of variables (A, B2, B3) -> (E1, E2, E3) at a gauge,
// with B and X untouched.
ModifiedForm to_modified_basis(const GenPoly& p, const Gauge& g, const TargetSpec& spec);

// Inverse rewrite: replaces E1, E2, E3 by their defining polynomials at the
// gauge, landing back in Q[A, B, B2, B3, X].
GenPoly from_modified(const GenPoly& p, const Gauge& g, const TargetSpec& spec);

} // namespace cyfeyn
