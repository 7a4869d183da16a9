#pragma once

#include <string>
#include <vector>

#include "cyfeyn/correlator.hpp"
#include "cyfeyn/genring.hpp"
#include "cyfeyn/target.hpp"

namespace cyfeyn {

// Exact Bernoulli number B_n (B_1 = -1/2 convention) by the defining
// recurrence sum_{j<=m} C(m+1, j) B_j = 0. Memoized; only small even indices
// are ever needed downstream.
Rat bernoulli(int n);

// Degree-zero invariant N_{g,0} = (-1)^g chi |B_{2g}| |B_{2g-2}| /
// (4g (2g-2) (2g-2)!), defined for g >= 2 (ConfigError otherwise).
Rat degree0_constant(int g, const TargetSpec& spec);

// Constant term of f_g^B: p_k^{g-1} * N_{g,0}. Never a user input.
Rat fg_constant_term(int g, const TargetSpec& spec);

// The holomorphic ambiguity of one genus: the 3g-3 coefficients of
// X, X^2, ..., X^{3g-3} in f_g^B, either as explicit rationals or left as
// the unknowns l1..l_{3g-3}. The constant term is wired to the degree-zero
// invariant and is deliberately absent here.
struct AmbiguitySpec {
    int g = 2;
    bool symbolic = false;
    std::vector<Rat> values; // numeric mode: exactly 3g-3 entries

    static AmbiguitySpec numeric(int g, std::vector<Rat> v);
    static AmbiguitySpec unknowns(int g);
    // ConfigError when g < 2 or the numeric length is not 3g-3.
    void validate() const;
};

bool operator==(const AmbiguitySpec& a, const AmbiguitySpec& b);
inline bool operator!=(const AmbiguitySpec& a, const AmbiguitySpec& b) {
    return !(a == b);
}

// f_g^B = fg_constant_term(g) + sum_i amb_i X^i as a ring element.
GenPoly ambiguity_poly(const AmbiguitySpec& amb, const TargetSpec& spec);

// P_g = f_g^B - (sum of the non-leading (g, 0) graph contributions).
// Seeds P_{1,1} if absent, extends the lower-genus rows of the table as far
// as the graphs demand (MissingCorrelator if a genus >= 2 base row below g
// was never solved), stores the result at (g, 0) and returns it. The
// per-graph sums run on up to `jobs` threads with a fixed reduction order.
GenPoly solve_genus(int g, const AmbiguitySpec& amb, const Gauge& gauge,
                    const TargetSpec& spec, CorrelatorTable& table, int jobs = 1);

// The derivation d/dB at fixed (E1, E2, E3, X), expressed on the base
// generators through the chain rule:
//   -2 dA + dB + (A+2B) dB2 + ((B-X)(A+2B) - B2 - r0 X) dB3.
// It annihilates every element of Q[E1, E2, E3, X].
GenPoly b_derivation(const GenPoly& p, const TargetSpec& spec);

// Anomaly-equation check at genus g. Two identities on the stored P_g:
//   splitting:  -dP_g/dA = (1/2) (P_{g-1,2} + sum_{g1+g2=g, gi>=1} P_{g1,1} P_{g2,1})
//   reduction:  b_derivation(P_g) = 0
// plus the equivalent gauge-side form of the first one,
//   d/dA (non-leading graph sum at `gauge`) = -dP_g/dA,
// which re-derives the splitting data from fresh graph sums. Ambiguity
// unknowns pass through the partials as constants. `detail` carries the
// first failing monomial when a check fails.
struct HaeReport {
    bool splitting = false;
    bool reduction = false;
    std::string detail;
    bool pass() const { return splitting && reduction; }
};

HaeReport hae_check(int g, const TargetSpec& spec, const Gauge& gauge,
                    CorrelatorTable& table);

// Gromov-Witten invariants of one genus through degree Dmax, plus the BPS
// transform at genus 0. N[0] holds the closed-form degree-zero invariant for
// g >= 2 and 0 otherwise (the genus-1 integration constant is fixed to 0).
struct InvariantReport {
    int genus = 0;
    std::vector<Rat> N;   // N[d] for d = 0..Dmax
    std::vector<Rat> bps; // genus 0 only: n_{0,d} for d = 0..Dmax (slot 0 = 0)
};

bool operator==(const InvariantReport& a, const InvariantReport& b);
inline bool operator!=(const InvariantReport& a, const InvariantReport& b) {
    return !(a == b);
}

// Extraction at truncation order T (ConfigError unless T >= Dmax >= 1):
//   g = 0: pull p_k Y / (I0^2 I11^3) back through the mirror map, drop the
//          constant p_k, divide the degree-d coefficient by d^3; then the
//          multiple-cover transform n_{0,d} = N_{0,d} - sum_{e|d, e<d}
//          n_{0,e} / (d/e)^3.
//   g = 1: pull eval(P_{1,1}) / I11 back, drop the constant a1, divide by d.
//   g >= 2: pull eval(P_g) * I0^{2g-2} * (p_k Y)^{1-g} back; the degree-d
//          coefficient is N_{g,d} directly, and N_{g,0} comes from the
//          closed formula. UnresolvedAmbiguity if P_g still has unknowns.
InvariantReport extract_invariants(int g, const TargetSpec& spec,
                                   const CorrelatorTable& table, int Dmax, int T);

} // namespace cyfeyn
