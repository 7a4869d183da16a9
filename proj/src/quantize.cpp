#include "cyfeyn/quantize.hpp"

#include <limits>
#include <set>
#include <sstream>
#include <utility>

#include "cyfeyn/errors.hpp"

namespace cyfeyn {

namespace {

// Every coefficient product in the quantization bookkeeping drops products of
// ambiguity unknowns: they only ever enter the final window linearly.
constexpr LambdaPolicy kPolicy = LambdaPolicy::SquareZero;

constexpr const char* kPotVarNames[kNumPotVars] = {"x", "y", "a", "b", "c"};

const PotKey kUnitKey{0, {0, 0, 0, 0, 0}};

void require_same_orders(const Potential& a, const Potential& b, const char* what) {
    if (a.genus_order() != b.genus_order() || a.degree_order() != b.degree_order()) {
        std::ostringstream os;
        os << what << ": potential orders differ, (" << a.genus_order() << ", "
           << a.degree_order() << ") vs (" << b.genus_order() << ", " << b.degree_order()
           << ")";
        throw TruncationOverflow(os.str());
    }
}

int min_weight(const Potential& f) {
    int w = std::numeric_limits<int>::max();
    for (const auto& [k, c] : f.terms()) w = std::min(w, k.weight());
    return w;
}

int min_h(const Potential& f) {
    int h = std::numeric_limits<int>::max();
    for (const auto& [k, c] : f.terms()) h = std::min(h, k.h);
    return h;
}

Potential pot_unit(int G, int M) {
    Potential u(G, M);
    u.add_term(kUnitKey, GenPoly::constant(1));
    return u;
}

// One application of hbar * (1/2) sum_{ij} Q_ij d_i d_j.
Potential apply_quad_once(const QuadOperator& V, const Potential& E) {
    Potential out(E.genus_order(), E.degree_order());
    for (const auto& [k, c] : E.terms()) {
        for (int i = 0; i < kNumPotVars; ++i) {
            for (int j = i; j < kNumPotVars; ++j) {
                const GenPoly& q = V.get(static_cast<PotVar>(i), static_cast<PotVar>(j));
                if (q.is_zero()) continue;
                long mult;
                PotKey nk = k;
                nk.h += 1;
                if (i == j) {
                    if (k.e[i] < 2) continue;
                    mult = static_cast<long>(k.e[i]) * (k.e[i] - 1) / 2;
                    nk.e[i] -= 2;
                } else {
                    if (k.e[i] < 1 || k.e[j] < 1) continue;
                    mult = static_cast<long>(k.e[i]) * k.e[j];
                    nk.e[i] -= 1;
                    nk.e[j] -= 1;
                }
                out.add_term(nk, scalar_mul(Rat(mult), mul(q, c, kPolicy)));
            }
        }
    }
    return out;
}

// hbar * (1/2) sum_{ordered i,j} Q_ij (d_i a)(d_j b), the bridge term of the
// Wick flow.
Potential flow_quadratic(const QuadOperator& V, const Potential& a, const Potential& b) {
    Potential out(a.genus_order(), a.degree_order());
    for (int i = 0; i < kNumPotVars; ++i) {
        for (int j = 0; j < kNumPotVars; ++j) {
            const GenPoly& q = V.get(static_cast<PotVar>(i), static_cast<PotVar>(j));
            if (q.is_zero()) continue;
            Potential prod = pot_mul(pot_partial(a, static_cast<PotVar>(i)),
                                     pot_partial(b, static_cast<PotVar>(j)));
            for (const auto& [k, c] : prod.terms()) {
                PotKey nk = k;
                nk.h += 1;
                out.add_term(nk, scalar_mul(Rat(1) / 2, mul(q, c, kPolicy)));
            }
        }
    }
    return out;
}

void require_potential_domain(const Potential& F, const char* what) {
    if (F.is_zero()) return;
    if (min_weight(F) < 1) {
        throw ConfigError(std::string(what) +
                          ": every potential monomial must carry positive weight 2h + deg");
    }
    if (min_h(F) < -1) {
        throw ConfigError(std::string(what) + ": potential hbar powers start at -1");
    }
}

// One application of (c/(1-y))(a d_x + b d_y), the geometric factor expanded
// inside the weight bound.
Potential string_step(const Potential& P) {
    Potential out(P.genus_order(), P.degree_order());
    const int S = P.weight_max();
    auto add_piece = [&](const Potential& dP, int legVar) {
        for (const auto& [k, c] : dP.terms()) {
            PotKey base = k;
            base.e[legVar] += 1;
            base.e[static_cast<int>(PotVar::c)] += 1;
            for (int j = 0;; ++j) {
                PotKey nk = base;
                nk.e[static_cast<int>(PotVar::y)] += j;
                if (nk.weight() > S) break;
                out.add_term(nk, c);
            }
        }
    };
    add_piece(pot_partial(P, PotVar::x), static_cast<int>(PotVar::a));
    add_piece(pot_partial(P, PotVar::y), static_cast<int>(PotVar::b));
    return out;
}

// T(e^F) for the string operator T = exp((c/(1-y))(a d_x + b d_y)).
Potential string_extended_exp(const Potential& F) {
    for (const auto& [k, c] : F.terms()) {
        if (k.e[2] != 0 || k.e[3] != 0 || k.e[4] != 0) {
            throw ConfigError("string_extension input must involve x and y only");
        }
    }
    Potential acc = pot_exp(F);
    Potential cur = acc;
    for (int k = 1;; ++k) {
        cur = pot_scale(Rat(1) / k, string_step(cur));
        if (cur.is_zero()) break;
        acc = pot_add(acc, cur);
    }
    return acc;
}

// x^k coefficients of a product of univariate series over the ring.
std::vector<GenPoly> series_conv(const std::vector<GenPoly>& a, const std::vector<GenPoly>& b) {
    std::vector<GenPoly> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < c.size(); ++j) {
            if (b[j].is_zero()) continue;
            c[i + j] = add(c[i + j], mul(a[i], b[j], kPolicy));
        }
    }
    return c;
}

} // namespace

int PotKey::degree() const {
    int d = 0;
    for (int v : e) d += v;
    return d;
}

bool operator<(const PotKey& p, const PotKey& q) {
    if (p.h != q.h) return p.h < q.h;
    return p.e < q.e;
}

bool operator==(const PotKey& p, const PotKey& q) { return p.h == q.h && p.e == q.e; }

std::string pot_key_str(const PotKey& k) {
    std::ostringstream os;
    os << "hbar^" << k.h;
    bool any = false;
    for (int i = 0; i < kNumPotVars; ++i) {
        if (k.e[i] == 0) continue;
        os << " " << kPotVarNames[i];
        if (k.e[i] > 1) os << "^" << k.e[i];
        any = true;
    }
    if (!any) os << " 1";
    return os.str();
}

Potential::Potential(int G, int M) : G_(G), M_(M) {
    if (G < 1 || M < 0) throw ConfigError("potential orders require G >= 1 and M >= 0");
}

void Potential::add_term(const PotKey& k, const GenPoly& c) {
    for (int v : k.e) {
        if (v < 0) throw ConfigError("negative exponent in potential monomial");
    }
    if (c.is_zero() || k.weight() > weight_max()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    GenPoly s = add(it->second, c);
    if (s.is_zero()) {
        terms_.erase(it);
    } else {
        it->second = std::move(s);
    }
}

GenPoly Potential::coefficient(const PotKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? GenPoly::zero() : it->second;
}

GenPoly Potential::sum_coefficient(int g, int m, int n) const {
    PotKey k{g - 1, {m, n, 0, 0, 0}};
    return scalar_mul(Rat(factorial(m)) * Rat(factorial(n)), coefficient(k));
}

bool operator==(const Potential& a, const Potential& b) {
    return a.genus_order() == b.genus_order() && a.degree_order() == b.degree_order() &&
           a.terms() == b.terms();
}

Potential pot_add(const Potential& a, const Potential& b) {
    require_same_orders(a, b, "pot_add");
    Potential out = a;
    for (const auto& [k, c] : b.terms()) out.add_term(k, c);
    return out;
}

Potential pot_sub(const Potential& a, const Potential& b) {
    require_same_orders(a, b, "pot_sub");
    Potential out = a;
    for (const auto& [k, c] : b.terms()) out.add_term(k, neg(c));
    return out;
}

Potential pot_scale(const Rat& c, const Potential& a) {
    Potential out(a.genus_order(), a.degree_order());
    if (sgn(c) == 0) return out;
    for (const auto& [k, v] : a.terms()) out.add_term(k, scalar_mul(c, v));
    return out;
}

Potential pot_mul(const Potential& a, const Potential& b) {
    require_same_orders(a, b, "pot_mul");
    Potential out(a.genus_order(), a.degree_order());
    const int S = out.weight_max();
    for (const auto& [ka, ca] : a.terms()) {
        const int wa = ka.weight();
        for (const auto& [kb, cb] : b.terms()) {
            if (wa + kb.weight() > S) continue;
            PotKey nk;
            nk.h = ka.h + kb.h;
            for (int i = 0; i < kNumPotVars; ++i) nk.e[i] = ka.e[i] + kb.e[i];
            out.add_term(nk, mul(ca, cb, kPolicy));
        }
    }
    return out;
}

Potential pot_exp(const Potential& f) {
    if (!f.is_zero() && min_weight(f) < 1) {
        throw ConfigError("pot_exp requires every monomial to carry positive weight");
    }
    Potential acc = pot_unit(f.genus_order(), f.degree_order());
    Potential term = acc;
    for (int k = 1;; ++k) {
        term = pot_scale(Rat(1) / k, pot_mul(term, f));
        if (term.is_zero()) break;
        acc = pot_add(acc, term);
    }
    return acc;
}

Potential pot_log(const Potential& f) {
    if (f.coefficient(kUnitKey) != GenPoly::constant(1)) {
        throw BadConstantTerm("pot_log requires unit constant term 1");
    }
    Potential W = f;
    W.add_term(kUnitKey, GenPoly::constant(-1));
    if (!W.is_zero() && min_weight(W) < 1) {
        throw BadConstantTerm("pot_log requires positive weight beyond the unit term");
    }
    Potential acc(f.genus_order(), f.degree_order());
    Potential pw = pot_unit(f.genus_order(), f.degree_order());
    for (int k = 1;; ++k) {
        pw = pot_mul(pw, W);
        if (pw.is_zero()) break;
        Rat sign = (k % 2 == 1) ? Rat(1) : Rat(-1);
        acc = pot_add(acc, pot_scale(sign / k, pw));
    }
    return acc;
}

Potential with_orders(const Potential& f, int G, int M) {
    if (G > f.genus_order() || M > f.degree_order()) {
        throw TruncationOverflow("with_orders cannot grow truncation orders");
    }
    Potential out(G, M);
    for (const auto& [k, c] : f.terms()) out.add_term(k, c);
    return out;
}

Potential restrict_zero(const Potential& f, std::initializer_list<PotVar> vars) {
    Potential out(f.genus_order(), f.degree_order());
    for (const auto& [k, c] : f.terms()) {
        bool keep = true;
        for (PotVar v : vars) {
            if (k.e[static_cast<int>(v)] > 0) {
                keep = false;
                break;
            }
        }
        if (keep) out.add_term(k, c);
    }
    return out;
}

Potential reporting_box(const Potential& f) {
    Potential out(f.genus_order(), f.degree_order());
    for (const auto& [k, c] : f.terms()) {
        if (k.h < -1 || k.h > f.genus_order() - 1) continue;
        if (k.degree() > f.degree_order()) continue;
        out.add_term(k, c);
    }
    return out;
}

Potential pot_partial(const Potential& f, PotVar v) {
    const int iv = static_cast<int>(v);
    Potential out(f.genus_order(), f.degree_order());
    for (const auto& [k, c] : f.terms()) {
        if (k.e[iv] < 1) continue;
        PotKey nk = k;
        nk.e[iv] -= 1;
        out.add_term(nk, scalar_mul(Rat(k.e[iv]), c));
    }
    return out;
}

Potential coefficient_slice(const Potential& f, PotVar v, int power) {
    const int iv = static_cast<int>(v);
    Potential out(f.genus_order(), f.degree_order());
    for (const auto& [k, c] : f.terms()) {
        if (k.e[iv] != power) continue;
        PotKey nk = k;
        nk.e[iv] = 0;
        out.add_term(nk, c);
    }
    return out;
}

Potential pot_monomial_mul(const Potential& f, const PotKey& shift, const GenPoly& scale) {
    Potential out(f.genus_order(), f.degree_order());
    if (scale.is_zero()) return out;
    for (const auto& [k, c] : f.terms()) {
        PotKey nk;
        nk.h = k.h + shift.h;
        for (int i = 0; i < kNumPotVars; ++i) nk.e[i] = k.e[i] + shift.e[i];
        out.add_term(nk, mul(scale, c, kPolicy));
    }
    return out;
}

std::optional<PotKey> first_difference(const Potential& a, const Potential& b) {
    require_same_orders(a, b, "first_difference");
    std::set<PotKey> keys;
    for (const auto& [k, c] : a.terms()) keys.insert(k);
    for (const auto& [k, c] : b.terms()) keys.insert(k);
    for (const PotKey& k : keys) {
        if (a.coefficient(k) != b.coefficient(k)) return k;
    }
    return std::nullopt;
}

void QuadOperator::set(PotVar i, PotVar j, const GenPoly& v) {
    int a = static_cast<int>(i), b = static_cast<int>(j);
    if (a > b) std::swap(a, b);
    Q[a][b] = v;
}

const GenPoly& QuadOperator::get(PotVar i, PotVar j) const {
    int a = static_cast<int>(i), b = static_cast<int>(j);
    if (a > b) std::swap(a, b);
    return Q[a][b];
}

bool QuadOperator::is_zero() const {
    for (const auto& row : Q) {
        for (const auto& v : row) {
            if (!v.is_zero()) return false;
        }
    }
    return true;
}

QuadOperator quad_add(const QuadOperator& a, const QuadOperator& b) {
    QuadOperator out;
    for (int i = 0; i < kNumPotVars; ++i) {
        for (int j = 0; j < kNumPotVars; ++j) out.Q[i][j] = add(a.Q[i][j], b.Q[i][j]);
    }
    return out;
}

QuadOperator quad_negate(const QuadOperator& a) {
    QuadOperator out;
    for (int i = 0; i < kNumPotVars; ++i) {
        for (int j = 0; j < kNumPotVars; ++j) out.Q[i][j] = neg(a.Q[i][j]);
    }
    return out;
}

QuadOperator quad_v_B(const Gauge& g, const TargetSpec& spec) {
    ModifiedSet ms = modified(g, spec);
    QuadOperator V;
    V.set(PotVar::x, PotVar::x, ms.E1);
    V.set(PotVar::x, PotVar::y, ms.E2);
    V.set(PotVar::y, PotVar::y, ms.E3);
    return V;
}

QuadOperator quad_v_extra(const Gauge& g, const TargetSpec& spec) {
    ModifiedSet ms = modified(g, spec);
    QuadOperator V;
    V.set(PotVar::a, PotVar::c, neg(ms.E2));
    V.set(PotVar::b, PotVar::c, neg(ms.E3));
    return V;
}

Potential apply_quad_operator_exp(const QuadOperator& V, const Potential& E) {
    Potential acc = E;
    Potential cur = E;
    for (int k = 1;; ++k) {
        cur = pot_scale(Rat(1) / k, apply_quad_once(V, cur));
        if (cur.is_zero()) break;
        acc = pot_add(acc, cur);
    }
    return acc;
}

Potential apply_quad_exp(const QuadOperator& V, const Potential& F, QuantizeRoute route) {
    require_potential_domain(F, "apply_quad_exp");
    if (route == QuantizeRoute::OperatorExpansion) {
        return pot_log(apply_quad_operator_exp(V, pot_exp(F)));
    }
    // Wick flow: W(0) = F, dW/dt = hbar (1/2) sum Q_ij (d_i d_j W + d_i W d_j W),
    // summed at t = 1. Monomials carry weight + h at least k at flow order k
    // and weight + h is bounded on the truncated domain, so the loop below is
    // exhaustive.
    const int S = F.weight_max();
    const int kMax = (3 * S) / 2 + 2;
    std::vector<Potential> U;
    U.push_back(F);
    Potential W = F;
    for (int k = 0; k <= kMax; ++k) {
        Potential rhs = apply_quad_once(V, U[static_cast<std::size_t>(k)]);
        for (int l = 0; l <= k; ++l) {
            rhs = pot_add(rhs, flow_quadratic(V, U[static_cast<std::size_t>(l)],
                                              U[static_cast<std::size_t>(k - l)]));
        }
        Potential next = pot_scale(Rat(1) / (k + 1), rhs);
        W = pot_add(W, next);
        U.push_back(std::move(next));
    }
    return W;
}

Potential master_potential_B(const CorrelatorTable& table, const TargetSpec& spec, int G,
                             int M) {
    Potential P(G, M);
    const int S = P.weight_max();
    for (int g = 0; g <= G; ++g) {
        const int room = S - 2 * (g - 1);
        for (int m = 0; m <= room; ++m) {
            for (int n = 0; m + n <= room; ++n) {
                if (2 * g - 2 + m + n <= 0) continue;
                GenPoly c = vertex_correlator(g, m, n, table, spec);
                if (c.is_zero()) continue;
                Rat norm = Rat(1) / (Rat(factorial(m)) * Rat(factorial(n)));
                P.add_term(PotKey{g - 1, {m, n, 0, 0, 0}}, scalar_mul(norm, c));
            }
        }
    }
    return P;
}

Potential tilde_shift(const Potential& F, const Gauge& g, const TargetSpec& spec) {
    const GenPoly epsi = propagators(g, spec).E_psi;
    int maxN = 0;
    for (const auto& [k, c] : F.terms()) {
        maxN = std::max(maxN, k.e[static_cast<int>(PotVar::y)]);
    }
    std::vector<GenPoly> negPow(static_cast<std::size_t>(maxN) + 1);
    negPow[0] = GenPoly::constant(1);
    for (int i = 1; i <= maxN; ++i) {
        negPow[static_cast<std::size_t>(i)] =
            mul(negPow[static_cast<std::size_t>(i - 1)], neg(epsi), kPolicy);
    }
    Potential out(F.genus_order(), F.degree_order());
    for (const auto& [k, c] : F.terms()) {
        const int n = k.e[static_cast<int>(PotVar::y)];
        for (int j = 0; j <= n; ++j) {
            PotKey nk = k;
            nk.e[static_cast<int>(PotVar::y)] = j;
            nk.e[static_cast<int>(PotVar::x)] += n - j;
            GenPoly piece = scalar_mul(Rat(binomial(n, j)),
                                       mul(negPow[static_cast<std::size_t>(n - j)], c, kPolicy));
            out.add_term(nk, piece);
        }
    }
    return out;
}

Potential minus_log_one_minus_y(int G, int M) {
    Potential out(G, M);
    const int S = out.weight_max();
    for (int n = 1; n <= S; ++n) {
        out.add_term(PotKey{0, {0, n, 0, 0, 0}}, GenPoly::constant(Rat(1) / n));
    }
    return out;
}

Potential string_extension(const Potential& F) { return pot_log(string_extended_exp(F)); }

bool verify_conjugation(const Gauge& g, const TargetSpec& spec, int G, int M) {
    const QuadOperator V = quad_v_B(g, spec);
    const QuadOperator Vneg = quad_negate(V);
    const ModifiedSet ms = modified(g, spec);
    const int S = Potential(G, M).weight_max();

    auto mul_one_minus_y = [](const Potential& p) {
        Potential out = p;
        for (const auto& [k, c] : p.terms()) {
            PotKey nk = k;
            nk.e[static_cast<int>(PotVar::y)] += 1;
            out.add_term(nk, neg(c));
        }
        return out;
    };
    auto lhs = [&](const Potential& p) {
        return apply_quad_operator_exp(Vneg, mul_one_minus_y(apply_quad_operator_exp(V, p)));
    };
    auto rhs = [&](const Potential& p) {
        Potential out = mul_one_minus_y(p);
        auto add_first_order = [&out](const GenPoly& q, const Potential& d) {
            for (const auto& [k, c] : d.terms()) {
                PotKey nk = k;
                nk.h += 1;
                out.add_term(nk, mul(q, c, kPolicy));
            }
        };
        add_first_order(ms.E2, pot_partial(p, PotVar::x));
        add_first_order(ms.E3, pot_partial(p, PotVar::y));
        return out;
    };
    auto check = [&](const Potential& p) { return lhs(p) == rhs(p); };

    // Basis monomials in x and y across the weight bound.
    for (int h = -1; h <= G - 1; ++h) {
        for (int ex = 0; 2 * h + ex <= S; ++ex) {
            for (int ey = 0; 2 * h + ex + ey <= S; ++ey) {
                Potential p(G, M);
                p.add_term(PotKey{h, {ex, ey, 0, 0, 0}}, GenPoly::constant(1));
                if (!check(p)) return false;
            }
        }
    }
    // Ring coefficients and spectator slots.
    Potential p(G, M);
    p.add_term(PotKey{0, {1, 1, 0, 0, 0}}, poly_parse("A - 2*X"));
    p.add_term(PotKey{-1, {3, 0, 0, 0, 0}}, poly_parse("B2 + 1/3"));
    p.add_term(PotKey{0, {0, 1, 1, 0, 0}}, GenPoly::variable(Var::X));
    p.add_term(PotKey{0, {2, 0, 0, 1, 1}}, GenPoly::constant(2));
    if (!check(p)) return false;
    return true;
}

std::vector<GenPoly> loop_cycle_series(const GenPoly& e, int xOrder) {
    if (xOrder < 0) throw ConfigError("loop_cycle_series needs xOrder >= 0");
    const std::size_t N = static_cast<std::size_t>(xOrder);
    std::vector<GenPoly> epow(N + 1);
    epow[0] = GenPoly::constant(1);
    for (std::size_t j = 1; j <= N; ++j) epow[j] = mul(epow[j - 1], e, kPolicy);
    // Per-vertex series: one phi_1 insertion then a geometric tail, so the
    // x^j coefficient is e * (-e)^{j-1}.
    std::vector<GenPoly> f(N + 1);
    for (std::size_t j = 1; j <= N; ++j) {
        f[j] = scalar_mul(Rat(j % 2 == 1 ? 1 : -1), epow[j]);
    }
    // Cycle sum: sum_m (1/m) f^m.
    std::vector<GenPoly> acc(N + 1);
    std::vector<GenPoly> pw(N + 1);
    pw[0] = GenPoly::constant(1);
    for (int m = 1; m <= xOrder; ++m) {
        pw = series_conv(pw, f);
        for (std::size_t j = 0; j <= N; ++j) {
            if (!pw[j].is_zero()) acc[j] = add(acc[j], scalar_mul(Rat(1) / m, pw[j]));
        }
    }
    return acc;
}

bool loop_sum_check(const Gauge& g, const TargetSpec& spec, int xOrder) {
    const GenPoly e = propagators(g, spec).E_psi;
    const std::vector<GenPoly> got = loop_cycle_series(e, xOrder);
    GenPoly epow = GenPoly::constant(1);
    for (int j = 0; j <= xOrder; ++j) {
        GenPoly expect;
        if (j > 0) {
            epow = mul(epow, e, kPolicy);
            expect = scalar_mul(Rat(j % 2 == 1 ? 1 : -1) / j, epow);
        }
        if (got[static_cast<std::size_t>(j)] != expect) return false;
    }
    return true;
}

bool thm45_check(const Gauge& g, const TargetSpec& spec, int G, int M,
                 const CorrelatorTable& table) {
    const Potential PB = master_potential_B(table, spec, G, M);
    const Potential PtB = tilde_shift(PB, g, spec);
    const QuadOperator VB = quad_v_B(g, spec);
    const Potential fB = apply_quad_exp(VB, PtB);

    const Potential mlog = minus_log_one_minus_y(G, M);
    const Potential PtA = pot_add(PtB, mlog);
    // V^extra clears one c against one a or b per application and nothing
    // else touches a, b, c, so only slots with e_c = e_a + e_b can ever reach
    // the a = b = c = 0 slice; dropping the rest up front is exact.
    const Potential extended = string_extended_exp(PtA);
    Potential Text(G, M);
    for (const auto& [k, c] : extended.terms()) {
        if (k.e[4] == k.e[2] + k.e[3]) Text.add_term(k, c);
    }
    const QuadOperator VA = quad_add(VB, quad_v_extra(g, spec));
    const Potential EA = apply_quad_operator_exp(VA, Text);
    const Potential fA =
        pot_log(restrict_zero(EA, {PotVar::a, PotVar::b, PotVar::c}));

    return !first_difference(reporting_box(fA), reporting_box(pot_add(fB, mlog)))
                .has_value();
}

} // namespace cyfeyn
