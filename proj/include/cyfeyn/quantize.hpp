#pragma once

#include <array>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyfeyn/correlator.hpp"
#include "cyfeyn/genring.hpp"
#include "cyfeyn/target.hpp"

namespace cyfeyn {

// Index order of the potential variables.
enum class PotVar : int { x = 0, y = 1, a = 2, b = 3, c = 4 };
inline constexpr int kNumPotVars = 5;

// One monomial slot of a potential: the power of hbar and the exponents of
// (x, y, a, b, c). The combined weight s = 2h + total degree is what the
// quantization operators preserve.
struct PotKey {
    int h = 0;
    std::array<int, kNumPotVars> e{};

    int degree() const;
    int weight() const { return 2 * h + degree(); }
};
bool operator<(const PotKey& p, const PotKey& q);
bool operator==(const PotKey& p, const PotKey& q);

std::string pot_key_str(const PotKey& k);

// Truncated potential: a finite map from PotKey to ring coefficients. The
// orders (G, M) fix the reporting box (hbar powers up to G-1, variable degree
// up to M); internally every monomial with weight 2h + deg <= 2(G-1) + M is
// kept, since that is the region the operator calculus can still influence.
// Master potentials start at hbar^{-1} (genus 0); intermediate exponentials
// may dip lower. Coefficient products use square-zero semantics for the
// ambiguity unknowns throughout.
class Potential {
public:
    Potential(int G, int M);

    int genus_order() const { return G_; }
    int degree_order() const { return M_; }
    int weight_max() const { return 2 * (G_ - 1) + M_; }

    const std::map<PotKey, GenPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds c at k, silently pruning monomials beyond the weight bound.
    void add_term(const PotKey& k, const GenPoly& c);
    GenPoly coefficient(const PotKey& k) const;
    // Coefficient of hbar^{g-1} x^m y^n times m!n! — the graph-sum
    // normalization of an (x, y) potential.
    GenPoly sum_coefficient(int g, int m, int n) const;

private:
    int G_, M_;
    std::map<PotKey, GenPoly> terms_;
};

bool operator==(const Potential& a, const Potential& b);
inline bool operator!=(const Potential& a, const Potential& b) { return !(a == b); }

// Arithmetic. Binary operations require matching orders (TruncationOverflow).
Potential pot_add(const Potential& a, const Potential& b);
Potential pot_sub(const Potential& a, const Potential& b);
Potential pot_scale(const Rat& c, const Potential& a);
Potential pot_mul(const Potential& a, const Potential& b);
// exp includes the unit term; log expects unit coefficient 1 (BadConstantTerm).
Potential pot_exp(const Potential& f);
Potential pot_log(const Potential& f);

// Shrinks the reporting orders; growing them throws TruncationOverflow.
Potential with_orders(const Potential& f, int G, int M);
// Drops every monomial that involves one of the given variables.
Potential restrict_zero(const Potential& f, std::initializer_list<PotVar> vars);
// Keeps the reporting box only: -1 <= h <= G-1 and total degree <= M. The
// weight-bounded slots outside the box are working data, not results.
Potential reporting_box(const Potential& f);
// Formal partial derivative in one of the five variables.
Potential pot_partial(const Potential& f, PotVar v);
// Coefficient of v^power, re-keyed with the v-exponent cleared.
Potential coefficient_slice(const Potential& f, PotVar v, int power);
// Multiplies by the monomial described by shift (hbar power and exponents
// added) and by the ring element scale.
Potential pot_monomial_mul(const Potential& f, const PotKey& shift, const GenPoly& scale);
// First key (if any) where the two potentials disagree.
std::optional<PotKey> first_difference(const Potential& a, const Potential& b);

// Symmetric second-order operator sum(i<=j) Q_ij d_i d_j with an implicit
// factor of hbar per application; entries are stored on i <= j.
struct QuadOperator {
    std::array<std::array<GenPoly, kNumPotVars>, kNumPotVars> Q;

    void set(PotVar i, PotVar j, const GenPoly& v);
    const GenPoly& get(PotVar i, PotVar j) const;
    bool is_zero() const;
};

QuadOperator quad_add(const QuadOperator& a, const QuadOperator& b);
QuadOperator quad_negate(const QuadOperator& a);

// V^B = (1/2) E1 dx^2 + E2 dxdy + (1/2) E3 dy^2 at a gauge, and the extra
// A-side piece -E2 dadc - E3 dbdc.
QuadOperator quad_v_B(const Gauge& g, const TargetSpec& spec);
QuadOperator quad_v_extra(const Gauge& g, const TargetSpec& spec);

// e^{hbar V} applied to an exponential-side object (not a log-potential).
Potential apply_quad_operator_exp(const QuadOperator& V, const Potential& E);

enum class QuantizeRoute { OperatorExpansion, WickFlow };

// log(e^{hbar V(d,d)} e^F), truncated at F's orders. OperatorExpansion forms
// the exponential and applies the operator series directly; WickFlow
// integrates dW/dt = hbar (1/2) sum Q_ij (d_i d_j W + d_i W d_j W) from
// W(0) = F, which assembles the same connected Wick pairings one loop or
// bridge at a time. Each route is the oracle for the other.
Potential apply_quad_exp(const QuadOperator& V, const Potential& F,
                         QuantizeRoute route = QuantizeRoute::OperatorExpansion);

// The master B-model potential: coefficients P_{g,m,n}/(m!n!) at
// hbar^{g-1} x^m y^n for every slot inside the weight bound with g <= G.
// Higher-genus vertices only reach the reporting box through disconnected
// products, which the closing log cancels, so omitting them is exact there.
Potential master_potential_B(const CorrelatorTable& table, const TargetSpec& spec,
                             int G, int M);
// y -> y - E_psi x applied to an (x, y) potential (the tilde shift).
Potential tilde_shift(const Potential& F, const Gauge& g, const TargetSpec& spec);
// -log(1-y) as a potential at hbar^0: sum_n y^n / n.
Potential minus_log_one_minus_y(int G, int M);

// e^{(c/(1-y))(a dx + b dy)} e^F, returned as a log-potential in all five
// variables; F must not involve a, b, c. The 1/(1-y) factor is expanded as a
// geometric series inside the truncation.
Potential string_extension(const Potential& F);

// Checks e^{-hbar V^B} (1-y) e^{hbar V^B} = (1-y) + hbar (E2 dx + E3 dy) as
// operators on potentials truncated at (G, M), probing basis monomials and
// random polynomials inside the weight bound.
bool verify_conjugation(const Gauge& g, const TargetSpec& spec, int G, int M);

// The loop-cycle series for a ring element e: cycles of genus-0 vertices,
// each carrying one phi_1 insertion and a geometric tail of -e phi_0 psi
// insertions, summed with the 1/m cycle weight. Returns the coefficients of
// x^0..x^xOrder; the closed form is log(1 + e x).
std::vector<GenPoly> loop_cycle_series(const GenPoly& e, int xOrder);

// Sums the genus-0 loop-cycle series at e = E_psi and compares with
// log(1 + E_psi x) through x^xOrder.
bool loop_sum_check(const Gauge& g, const TargetSpec& spec, int xOrder);

// Builds f^A = log of e^{hbar(V^B + V^extra)} on the string-extended
// potential restricted to a = b = c = 0, builds f^B = log of e^{hbar V^B} on
// the tilde-shifted master potential, and asserts f^A = f^B - log(1-y) at
// orders (G, M). The table must cover every genus <= G deep enough for the
// weight bound (ambiguity unknowns may remain; they pass through linearly).
bool thm45_check(const Gauge& g, const TargetSpec& spec, int G, int M,
                 const CorrelatorTable& table);

} // namespace cyfeyn
