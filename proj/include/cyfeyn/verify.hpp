#pragma once

#include <string>
#include <vector>

#include "cyfeyn/genring.hpp"
#include "cyfeyn/target.hpp"

namespace cyfeyn {

// Input to the identity suite. The spec is usually make_target(k); tests
// deliberately feed perturbed copies to prove the checks can fail.
struct VerifyOptions {
    TargetSpec spec;
    int order = 30;       // q-series order for the series-level identities
    Gauge gauge;          // extra gauge for the gauge-dependent identities
    int jobs = 1;
    unsigned seed = 4157; // seed for the randomized-gauge sweeps
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // empty on success, first failure otherwise
};

// Runs every registered identity check. The registry order is fixed and the
// checks are independent, so the report is identical for every jobs value.
std::vector<CheckResult> run_identity_suite(const VerifyOptions& opt);

} // namespace cyfeyn
