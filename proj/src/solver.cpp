#include "cyfeyn/solver.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "cyfeyn/errors.hpp"
#include "cyfeyn/feynman.hpp"
#include "cyfeyn/ifunction.hpp"
#include "cyfeyn/parallel.hpp"
#include "cyfeyn/stable_graph.hpp"

namespace cyfeyn {

namespace {

GenPoly vp(Var v, int power = 1) { return GenPoly::variable(v, power); }

// First monomial of a nonzero polynomial, rendered for failure reports.
std::string first_term_str(const GenPoly& p) {
    GenPoly term;
    const auto it = p.terms().begin();
    term.add_term(it->first, it->second);
    return poly_str(term);
}

// Makes every row the (g, 0) graphs read available: genus 0 and 1 rows are
// closed-form and get created or extended on demand, genus >= 2 rows must
// already hold their base entry (extend_table reports the gap otherwise).
void extend_for_graphs(CorrelatorTable& table, int g, const TargetSpec& spec) {
    std::map<int, int> valence; // vertex genus -> largest valence seen
    for (const StableGraph& G : enumerate(g, 0)) {
        if (G.num_vertices() == 1 && G.num_edges() == 0) continue;
        for (int v = 0; v < G.num_vertices(); ++v) {
            int& m = valence[G.genus[v]];
            if (G.valence(v) > m) m = G.valence(v);
        }
    }
    if (!table.has(1, 1) && valence.count(1)) table.set(1, 1, genus1_seed(spec));
    for (const auto& [gv, m] : valence) extend_table(table, gv, m, spec);
}

} // namespace

Rat bernoulli(int n) {
    if (n < 0) throw ConfigError("Bernoulli index must be non-negative");
    static std::mutex mutex;
    static std::vector<Rat> cache{Rat(1)};
    std::lock_guard<std::mutex> lock(mutex);
    for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
        Rat sum(0);
        for (int j = 0; j < m; ++j)
            sum += Rat(binomial(m + 1, j)) * cache[static_cast<size_t>(j)];
        cache.push_back(-sum / Rat(m + 1));
    }
    return cache[static_cast<size_t>(n)];
}

Rat degree0_constant(int g, const TargetSpec& spec) {
    if (g < 2) throw ConfigError("degree-zero invariant is defined for genus >= 2");
    const Rat sign = (g % 2 == 0) ? Rat(1) : Rat(-1);
    const Rat num = sign * Rat(spec.chi) * abs(bernoulli(2 * g)) * abs(bernoulli(2 * g - 2));
    const Rat den = Rat(4 * g) * Rat(2 * g - 2) * Rat(factorial(2 * g - 2));
    return num / den;
}

Rat fg_constant_term(int g, const TargetSpec& spec) {
    return rat_pow(spec.p_k, g - 1) * degree0_constant(g, spec);
}

AmbiguitySpec AmbiguitySpec::numeric(int g, std::vector<Rat> v) {
    AmbiguitySpec a;
    a.g = g;
    a.values = std::move(v);
    a.validate();
    return a;
}

AmbiguitySpec AmbiguitySpec::unknowns(int g) {
    AmbiguitySpec a;
    a.g = g;
    a.symbolic = true;
    a.validate();
    return a;
}

void AmbiguitySpec::validate() const {
    if (g < 2) throw ConfigError("ambiguity starts at genus 2");
    if (symbolic) {
        if (!values.empty())
            throw ConfigError("symbolic ambiguity carries no numeric values");
    } else if (static_cast<int>(values.size()) != 3 * g - 3) {
        throw ConfigError("genus " + std::to_string(g) + " ambiguity needs " +
                          std::to_string(3 * g - 3) + " values, got " +
                          std::to_string(values.size()));
    }
}

bool operator==(const AmbiguitySpec& a, const AmbiguitySpec& b) {
    return a.g == b.g && a.symbolic == b.symbolic && a.values == b.values;
}

GenPoly ambiguity_poly(const AmbiguitySpec& amb, const TargetSpec& spec) {
    amb.validate();
    GenPoly f = GenPoly::constant(fg_constant_term(amb.g, spec));
    for (int i = 1; i <= 3 * amb.g - 3; ++i) {
        const GenPoly coeff = amb.symbolic
                                  ? GenPoly::lambda(i)
                                  : GenPoly::constant(amb.values[static_cast<size_t>(i - 1)]);
        f = f + coeff * vp(Var::X, i);
    }
    return f;
}

GenPoly solve_genus(int g, const AmbiguitySpec& amb, const Gauge& gauge,
                    const TargetSpec& spec, CorrelatorTable& table, int jobs) {
    amb.validate();
    if (amb.g != g)
        throw ConfigError("ambiguity genus does not match the genus being solved");
    if (g < 2) throw ConfigError("the solver starts at genus 2");
    extend_for_graphs(table, g, spec);

    const std::vector<StableGraph>& graphs = enumerate(g, 0);
    std::vector<GenPoly> contribution(graphs.size());
    parallel_for(static_cast<int>(graphs.size()), jobs, [&](int i) {
        const StableGraph& G = graphs[static_cast<size_t>(i)];
        if (G.num_vertices() == 1 && G.num_edges() == 0) return; // leading term
        contribution[static_cast<size_t>(i)] =
            graph_contribution_B(G, {}, table, gauge, spec);
    });
    GenPoly nonLeading;
    for (const GenPoly& c : contribution) nonLeading = nonLeading + c;

    GenPoly Pg = ambiguity_poly(amb, spec) - nonLeading;
    table.set(g, 0, Pg);
    return Pg;
}

GenPoly b_derivation(const GenPoly& p, const TargetSpec& spec) {
    const GenPoly A = vp(Var::A), B = vp(Var::B), B2 = vp(Var::B2), X = vp(Var::X);
    const GenPoly lever = A + Rat(2) * B;
    // d/dB at fixed modified generators: the chain rule sends B2 to A + 2B
    // and B3 to (B - X)(A + 2B) - B2 - r0 X.
    return Rat(-2) * partial(p, Var::A) + partial(p, Var::B) +
           lever * partial(p, Var::B2) +
           ((B - X) * lever - B2 - GenPoly::constant(spec.r0) * vp(Var::X)) *
               partial(p, Var::B3);
}

HaeReport hae_check(int g, const TargetSpec& spec, const Gauge& gauge,
                    CorrelatorTable& table) {
    if (g < 2) throw ConfigError("anomaly-equation checks start at genus 2");
    const GenPoly Pg = table.get(g, 0);
    if (!table.has(1, 1)) table.set(1, 1, genus1_seed(spec));
    extend_table(table, g - 1, 2, spec);
    for (int g1 = 1; g1 < g; ++g1) extend_table(table, g1, 1, spec);

    HaeReport report;
    const GenPoly lhs = neg(partial(Pg, Var::A));
    GenPoly conv = table.get(g - 1, 2);
    for (int g1 = 1; g1 < g; ++g1)
        conv = conv + table.get(g1, 1) * table.get(g - g1, 1);
    const GenPoly rhs = scalar_mul(Rat(1) / 2, conv);

    report.splitting = (lhs == rhs);
    if (!report.splitting) {
        report.detail = "splitting fails at " + first_term_str(lhs - rhs);
        return report;
    }
    // The same data from fresh graph sums: P_g differs from the non-leading
    // sum by f_g^B, which d/dA kills.
    extend_for_graphs(table, g, spec);
    const GenPoly graphSide = partial(leading_decomposition(g, gauge, spec, table), Var::A);
    report.splitting = (graphSide == rhs);
    if (!report.splitting) {
        report.detail = "splitting (graph side) fails at " + first_term_str(graphSide - rhs);
        return report;
    }

    const GenPoly reduced = b_derivation(Pg, spec);
    report.reduction = reduced.is_zero();
    if (!report.reduction)
        report.detail = "reduction fails at " + first_term_str(reduced);
    return report;
}

bool operator==(const InvariantReport& a, const InvariantReport& b) {
    return a.genus == b.genus && a.N == b.N && a.bps == b.bps;
}

InvariantReport extract_invariants(int g, const TargetSpec& spec,
                                   const CorrelatorTable& table, int Dmax, int T) {
    if (Dmax < 1) throw ConfigError("invariant extraction needs Dmax >= 1");
    if (T < Dmax) throw ConfigError("series order too small for the requested degree");
    if (g < 0) throw ConfigError("genus must be non-negative");

    const auto bundle = period_bundle(spec, T);
    const QSeries qOfQ = shift_q(bundle->inverseMirror, 1); // q as a series in Q

    InvariantReport report;
    report.genus = g;
    report.N.assign(static_cast<size_t>(Dmax) + 1, Rat(0));

    if (g == 0) {
        const QSeries cubic = compose(yukawa(spec, T), qOfQ);
        for (int d = 1; d <= Dmax; ++d)
            report.N[static_cast<size_t>(d)] = cubic[d] / rat_pow(Rat(d), 3);
        // Multiple-cover transform: degree-d maps factoring through degree e.
        report.bps.assign(static_cast<size_t>(Dmax) + 1, Rat(0));
        for (int d = 1; d <= Dmax; ++d) {
            Rat n = report.N[static_cast<size_t>(d)];
            for (int e = 1; e < d; ++e)
                if (d % e == 0) n -= report.bps[static_cast<size_t>(e)] / rat_pow(Rat(d / e), 3);
            report.bps[static_cast<size_t>(d)] = n;
        }
        return report;
    }

    if (g == 1) {
        const GenPoly P11 = table.has(1, 1) ? table.get(1, 1) : genus1_seed(spec);
        const QSeries level = mul(eval_hom(P11, spec, T), invert(bundle->I11));
        const QSeries pulled = compose(level, qOfQ); // (QdQ) F_1
        for (int d = 1; d <= Dmax; ++d)
            report.N[static_cast<size_t>(d)] = pulled[d] / Rat(d);
        return report;
    }

    const GenPoly& Pg = table.get(g, 0);
    if (Pg.has_lambda())
        throw UnresolvedAmbiguity("genus " + std::to_string(g) +
                                  " still carries ambiguity unknowns");
    const QSeries norm =
        mul(pow_series(bundle->I0, 2 * g - 2),
            invert(pow_series(scalar_mul(spec.p_k, y_series(spec, T)), g - 1)));
    const QSeries pulled = compose(mul(eval_hom(Pg, spec, T), norm), qOfQ);
    report.N[0] = degree0_constant(g, spec);
    for (int d = 1; d <= Dmax; ++d) report.N[static_cast<size_t>(d)] = pulled[d];
    return report;
}

} // namespace cyfeyn
