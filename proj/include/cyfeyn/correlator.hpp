#pragma once

#include <map>
#include <utility>

#include "cyfeyn/genpoly.hpp"
#include "cyfeyn/target.hpp"

namespace cyfeyn {

// Storage for the P_{g,m} polynomials. Seeded with P_{0,3} = 1; genus-1
// entries start from the closed-form seed; higher genera are inserted by the
// solver (possibly with ambiguity unknowns still present).
class CorrelatorTable {
public:
    CorrelatorTable();

    bool has(int g, int m) const;
    // Throws MissingCorrelator when the entry was never stored.
    const GenPoly& get(int g, int m) const;
    void set(int g, int m, GenPoly p);

    // Largest m with an entry at genus g, or -1 when none.
    int max_m(int g) const;

private:
    std::map<std::pair<int, int>, GenPoly> table_;
};

// One step of the m-recursion: P_{g,m+1} = (D + (g-1)(2B+X) - mA) P_{g,m}.
GenPoly recursion_step(const GenPoly& P, int g, int m, const TargetSpec& spec);

// P_{1,1} = -A/2 + (chi/24 - 2) B - X/12 + a1.
GenPoly genus1_seed(const TargetSpec& spec);

// Ensures P_{g,m} exists for all stored-base m up to mTarget by repeated
// recursion_step. The base entry (m = 3 for genus 0, m = 1 for genus 1,
// m = 0 otherwise) must already be present.
void extend_table(CorrelatorTable& table, int g, int mTarget, const TargetSpec& spec);

// The n-ancestor vertex correlator P_{g,m,n}:
//   (2g+m+n-3)_n * P_{g,m}          when 2g-2+m > 0 (falling factorial),
//   (n-1)! * (chi/24 - 1)           when (g,m) = (1,0), n >= 1,
//   0                               when g = 0, m < 3.
// Throws UnstablePair when 2g-2+m+n <= 0 and MissingCorrelator when the
// needed P_{g,m} is absent.
GenPoly vertex_correlator(int g, int m, int n, const CorrelatorTable& table,
                          const TargetSpec& spec);

} // namespace cyfeyn
