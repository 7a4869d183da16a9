#include "cyfeyn/genring.hpp"

#include <mutex>
#include <utility>
#include <vector>

#include "cyfeyn/errors.hpp"

namespace cyfeyn {

void Gauge::validate() const {
    const struct {
        const GenPoly* p;
        const char* name;
        int maxDeg;
    } entries[] = {
        {&c11, "c11", 1}, {&c12, "c12", 1}, {&c2, "c2", 2}, {&c3, "c3", 3}};
    for (const auto& e : entries) {
        if (!depends_only_on(*e.p, {Var::X}))
            throw GaugeDegreeViolation(std::string("gauge entry ") + e.name +
                                       " must be a polynomial in X only");
        if (e.p->has_lambda())
            throw GaugeDegreeViolation(std::string("gauge entry ") + e.name +
                                       " must not contain ambiguity unknowns");
        if (e.p->degree_in(Var::X) > e.maxDeg)
            throw GaugeDegreeViolation(std::string("gauge entry ") + e.name +
                                       " exceeds X-degree " + std::to_string(e.maxDeg));
    }
}

std::shared_ptr<const GenSeries> generator_series(const TargetSpec& spec, int T) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::shared_ptr<const GenSeries>> cache;
    const auto key = std::make_pair(spec.k, T);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const auto bundle = period_bundle(spec, T);
    GenSeries g;
    const QSeries inv11 = invert(bundle->I11);
    const QSeries inv0 = invert(bundle->I0);
    g.A = mul(derive_D(bundle->I11), inv11);
    g.B = mul(derive_D(bundle->I0), inv0);
    g.B2 = mul(derive_D(derive_D(bundle->I0)), inv0);
    g.B3 = mul(derive_D(derive_D(derive_D(bundle->I0))), inv0);
    g.X = x_series(spec, T);
    // Zero-gauge modified generators, assembled directly from the series.
    const QSeries Ephiphi = add(g.A, scalar_mul(2, g.B));
    const QSeries Ephipsi = scalar_mul(-1, g.B2);
    const QSeries Epsipsi = add(sub(mul(sub(g.B, g.X), g.B2), g.B3),
                                scalar_mul(-spec.r0, mul(g.B, g.X)));
    g.E1 = Ephiphi;
    g.E2 = add(Ephipsi, mul(g.B, Ephiphi));
    g.E3 = add(add(Epsipsi, scalar_mul(2, mul(g.B, Ephipsi))), mul(mul(g.B, g.B), Ephiphi));
    auto fresh = std::make_shared<const GenSeries>(std::move(g));
    std::lock_guard<std::mutex> lock(mtx);
    auto [it, inserted] = cache.emplace(key, std::move(fresh));
    (void)inserted;
    return it->second;
}

namespace {

QSeries eval_with(const GenPoly& p, const TargetSpec& spec, int T,
                  const std::map<int, Rat>* lambdaValues) {
    const auto gs = generator_series(spec, T);
    const QSeries* vars[kNumVars] = {&gs->A, &gs->B, &gs->B2, &gs->B3,
                                     &gs->X, &gs->E1, &gs->E2, &gs->E3};
    // Power tables, built lazily up to the largest exponent that occurs.
    std::vector<QSeries> powers[kNumVars];
    auto var_power = [&](int v, int e) -> const QSeries& {
        auto& tab = powers[v];
        if (tab.empty()) tab.push_back(QSeries::constant(1, T));
        while (static_cast<int>(tab.size()) <= e) tab.push_back(mul(tab.back(), *vars[v]));
        return tab[static_cast<size_t>(e)];
    };
    QSeries acc(T);
    for (const auto& [m, c] : p.terms()) {
        Rat coeff = c.c0;
        for (const auto& [i, v] : c.lam) {
            if (lambdaValues == nullptr)
                throw UnboundAmbiguity("eval_hom: polynomial contains unknown l" +
                                       std::to_string(i));
            auto it = lambdaValues->find(i);
            if (it == lambdaValues->end())
                throw UnboundAmbiguity("eval_hom: no value supplied for l" +
                                       std::to_string(i));
            coeff += v * it->second;
        }
        if (sgn(coeff) == 0) continue;
        QSeries term = QSeries::constant(coeff, T);
        for (int vi = 0; vi < kNumVars; ++vi)
            if (m[vi] > 0) term = mul(term, var_power(vi, m[vi]));
        acc = add(acc, term);
    }
    return acc;
}

} // namespace

QSeries eval_hom(const GenPoly& p, const TargetSpec& spec, int T) {
    return eval_with(p, spec, T, nullptr);
}

QSeries eval_hom(const GenPoly& p, const TargetSpec& spec, int T,
                 const std::map<int, Rat>& lambdaValues) {
    return eval_with(p, spec, T, &lambdaValues);
}

namespace {

GenPoly vpoly(Var v) { return GenPoly::variable(v); }

// D-images of the eight variables; the ring closes through the quadratic
// relations for A and B3 and the zero-gauge system for E1, E2, E3.
GenPoly derive_variable(Var v, const TargetSpec& spec) {
    const GenPoly A = vpoly(Var::A), B = vpoly(Var::B), B2 = vpoly(Var::B2),
                  B3 = vpoly(Var::B3), X = vpoly(Var::X), E1 = vpoly(Var::E1),
                  E2 = vpoly(Var::E2), E3 = vpoly(Var::E3);
    switch (v) {
    case Var::A:
        // A2 - A^2 with A2 = 2B^2 - 2AB - 4B2 - X(A + 2B + r0).
        return scalar_mul(2, B * B) - scalar_mul(2, A * B) - scalar_mul(4, B2) -
               X * (A + scalar_mul(2, B) + GenPoly::constant(spec.r0)) - A * A;
    case Var::B:
        return B2 - B * B;
    case Var::B2:
        return B3 - B * B2;
    case Var::B3:
        // B4 - B*B3 with B4 = -X(2B3 + (1+r0)B2 + r0 B + r1).
        return neg(X * (scalar_mul(2, B3) + scalar_mul(1 + spec.r0, B2) +
                        scalar_mul(spec.r0, B) + GenPoly::constant(spec.r1))) -
               B * B3;
    case Var::X:
        return X - X * X;
    case Var::E1:
        return neg(X * (E1 + GenPoly::constant(spec.r0))) - E1 * E1 + scalar_mul(2, E2);
    case Var::E2:
        return neg(X * E2) - E1 * E2 + E3;
    case Var::E3:
        return scalar_mul(spec.r1, X) - X * E3 - E2 * E2;
    }
    throw ConfigError("derive: unknown variable");
}

} // namespace

GenPoly derive(const GenPoly& p, const TargetSpec& spec) {
    GenPoly out;
    for (int vi = 0; vi < kNumVars; ++vi) {
        const Var v = static_cast<Var>(vi);
        const GenPoly dp = partial(p, v);
        if (dp.is_zero()) continue;
        out = add(out, mul(dp, derive_variable(v, spec)));
    }
    return out;
}

PropagatorSet propagators(const Gauge& g, const TargetSpec& spec) {
    g.validate();
    const GenPoly A = vpoly(Var::A), B = vpoly(Var::B), B2 = vpoly(Var::B2),
                  B3 = vpoly(Var::B3), X = vpoly(Var::X);
    PropagatorSet out;
    out.E_psi = B + g.c11;
    out.E_phiphi = A + scalar_mul(2, B) + g.c12;
    out.E_phipsi = neg(B2) - g.c12 * B + g.c2;
    out.E_psipsi = neg(B3) + (B - X) * B2 - scalar_mul(spec.r0, B * X) + g.c12 * B * B -
                   scalar_mul(2, g.c2 * B) + g.c3;
    out.E_1phipsi = neg(out.E_psi * out.E_phiphi) - out.E_phipsi;
    out.E_1psi2 = neg(out.E_psi * out.E_phipsi) - out.E_psipsi;
    return out;
}

ModifiedSet modified(const Gauge& g, const TargetSpec& spec) {
    const PropagatorSet ps = propagators(g, spec);
    ModifiedSet out;
    out.E1 = ps.E_phiphi;
    out.E2 = ps.E_phipsi + ps.E_psi * ps.E_phiphi;
    out.E3 = ps.E_psipsi + scalar_mul(2, ps.E_psi * ps.E_phipsi) +
             ps.E_psi * ps.E_psi * ps.E_phiphi;
    return out;
}

ModifiedForm to_modified_basis(const GenPoly& p, const Gauge& g, const TargetSpec& spec) {
    g.validate();
    const GenPoly B = vpoly(Var::B), X = vpoly(Var::X), E1 = vpoly(Var::E1),
                  E2 = vpoly(Var::E2), E3 = vpoly(Var::E3);
    const GenPoly Bpsi = B + g.c11; // E_psi at the gauge
    // Solve the defining triangle for A, B2, B3 in terms of E1, E2, E3.
    const GenPoly exprA = E1 - scalar_mul(2, B) - g.c12;
    const GenPoly exprB2 = Bpsi * E1 - g.c12 * B + g.c2 - E2;
    const GenPoly exprB3 = neg(E3) + scalar_mul(2, Bpsi * E2) - Bpsi * Bpsi * E1 +
                           (B - X) * exprB2 - scalar_mul(spec.r0, B * X) +
                           g.c12 * B * B - scalar_mul(2, g.c2 * B) + g.c3;
    GenPoly out = substitute(p, Var::A, exprA);
    out = substitute(out, Var::B2, exprB2);
    out = substitute(out, Var::B3, exprB3);
    return ModifiedForm{out, !out.depends_on(Var::B)};
}

GenPoly from_modified(const GenPoly& p, const Gauge& g, const TargetSpec& spec) {
    const ModifiedSet ms = modified(g, spec);
    GenPoly out = substitute(p, Var::E1, ms.E1);
    out = substitute(out, Var::E2, ms.E2);
    out = substitute(out, Var::E3, ms.E3);
    return out;
}

} // namespace cyfeyn
