#pragma once

#include <map>
#include <string>
#include <utility>

#include "cyfeyn/genring.hpp"
#include "cyfeyn/solver.hpp"

namespace cyfeyn {

// Everything a solve run produces, in exact form: the configuration that
// generated it, the stored correlators as canonical polynomial text, and the
// per-genus invariant tables. Serializes to canonical JSON (sorted keys,
// "p/q" numbers) so that equal manifests have equal bytes.
struct Manifest {
    int target = 6;
    int order = 0;
    int maxGenus = 0;
    Gauge gauge;
    std::map<int, AmbiguitySpec> ambiguity;                  // per genus >= 2
    std::map<std::pair<int, int>, std::string> correlators;  // (g, m) -> poly text
    std::map<int, InvariantReport> invariants;               // absent while symbolic
};

bool operator==(const Manifest& a, const Manifest& b);
inline bool operator!=(const Manifest& a, const Manifest& b) { return !(a == b); }

std::string manifest_to_json(const Manifest& m);
// Inverse of manifest_to_json; ParseError on malformed input.
Manifest manifest_from_json(const std::string& text);

// One invariant table as CSV: header then one row per degree, all entries
// exact "p/q" strings. Genus 0 carries the BPS column.
std::string invariants_csv(const InvariantReport& r);

// The same table as a canonical JSON object.
std::string invariants_json(const InvariantReport& r);

} // namespace cyfeyn
