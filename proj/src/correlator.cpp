#include "cyfeyn/correlator.hpp"

#include "cyfeyn/errors.hpp"
#include "cyfeyn/genring.hpp"
#include "cyfeyn/rational.hpp"

namespace cyfeyn {

CorrelatorTable::CorrelatorTable() {
    table_.emplace(std::make_pair(0, 3), GenPoly::constant(1));
}

bool CorrelatorTable::has(int g, int m) const {
    return table_.count({g, m}) != 0;
}

const GenPoly& CorrelatorTable::get(int g, int m) const {
    auto it = table_.find({g, m});
    if (it == table_.end())
        throw MissingCorrelator("no correlator stored for (g,m) = (" +
                                std::to_string(g) + "," + std::to_string(m) + ")");
    return it->second;
}

void CorrelatorTable::set(int g, int m, GenPoly p) {
    table_[{g, m}] = std::move(p);
}

int CorrelatorTable::max_m(int g) const {
    int best = -1;
    for (const auto& [key, value] : table_) {
        (void)value;
        if (key.first == g && key.second > best) best = key.second;
    }
    return best;
}

GenPoly recursion_step(const GenPoly& P, int g, int m, const TargetSpec& spec) {
    GenPoly linear = scalar_mul(Rat(2 * (g - 1)), GenPoly::variable(Var::B));
    linear = linear + scalar_mul(Rat(g - 1), GenPoly::variable(Var::X));
    linear = linear - scalar_mul(Rat(m), GenPoly::variable(Var::A));
    return derive(P, spec) + linear * P;
}

GenPoly genus1_seed(const TargetSpec& spec) {
    GenPoly p = scalar_mul(Rat(-1) / 2, GenPoly::variable(Var::A));
    p = p + scalar_mul(Rat(spec.chi) / 24 - 2, GenPoly::variable(Var::B));
    p = p - scalar_mul(Rat(1) / 12, GenPoly::variable(Var::X));
    p = p + GenPoly::constant(spec.a1);
    return p;
}

namespace {

int base_m(int g) {
    if (g == 0) return 3;
    if (g == 1) return 1;
    return 0;
}

} // namespace

void extend_table(CorrelatorTable& table, int g, int mTarget, const TargetSpec& spec) {
    int m = table.max_m(g);
    if (m < base_m(g))
        throw MissingCorrelator("genus " + std::to_string(g) +
                                " has no base correlator to extend from");
    for (; m < mTarget; ++m)
        table.set(g, m + 1, recursion_step(table.get(g, m), g, m, spec));
}

GenPoly vertex_correlator(int g, int m, int n, const CorrelatorTable& table,
                          const TargetSpec& spec) {
    if (g < 0 || m < 0 || n < 0)
        throw ConfigError("vertex correlator indices must be non-negative");
    if (2 * g - 2 + m + n <= 0)
        throw UnstablePair("vertex (g,m,n) = (" + std::to_string(g) + "," +
                           std::to_string(m) + "," + std::to_string(n) +
                           ") is unstable");
    if (g == 0 && m < 3) return GenPoly::zero();
    if (g == 1 && m == 0)
        return GenPoly::constant(Rat(factorial(n - 1)) * (Rat(spec.chi) / 24 - 1));
    return scalar_mul(falling(2 * g + m + n - 3, n), table.get(g, m));
}

} // namespace cyfeyn
