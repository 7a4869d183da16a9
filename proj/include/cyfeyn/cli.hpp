#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <string>

#include "cyfeyn/genring.hpp"
#include "cyfeyn/solver.hpp"
#include "cyfeyn/verify.hpp"

namespace cyfeyn {

// One batch run: which target, how deep, where the output goes. validate()
// throws ConfigError (or the more specific gauge/target errors) before any
// computation starts; the order floor leaves composition and reversion
// headroom above the reported degrees.
struct RunConfig {
    int target = 6;
    int order = 30;    // q-series truncation order T; T >= 3 * maxGenus + 10
    int maxGenus = 2;
    int jobs = 1;
    std::string format = "json"; // invariant tables: "json" or "csv"
    std::string outDir = "cyfeyn-out";
    Gauge gauge;
    std::map<int, AmbiguitySpec> ambiguity; // per genus 2..maxGenus

    void validate() const;
};

// Flat "key = JSON value" config files ('#' starts a comment). A gauge file
// lists X-coefficients low degree first, e.g. c11 = ["1/2", "3"]; missing
// keys stay zero. An ambiguity file keys entries by genus: an array of
// 3g-3 rationals, or the string "symbolic".
Gauge parse_gauge_config(std::istream& in);
std::map<int, AmbiguitySpec> parse_ambiguity_config(std::istream& in);

// The two --ambiguity literals: "zero" (all coefficients 0) and "symbolic",
// materialized for every genus 2..maxGenus.
std::map<int, AmbiguitySpec> ambiguity_shortcut(const std::string& word, int maxGenus);

// Runs the identity suite and writes <outDir>/verify_report.json. Returns 0
// when every check passes, 1 otherwise. Human-readable lines go to `out`.
// The VerifyOptions overload is the core; the RunConfig one validates the
// config and fills the options in.
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const VerifyOptions& opt, const std::string& outDir, std::ostream& out);

// Solves genus 2..maxGenus, then writes manifest.json, per-genus correlator
// text and invariant tables into outDir. Genera still carrying symbolic
// ambiguity keep their correlators in the manifest but skip the invariant
// table. Returns 0.
int cmd_solve(const RunConfig& cfg, std::ostream& out);

// Prints every stable graph of the given type, one per line with its
// automorphism order. Returns 0.
int cmd_graphs(int g, int legs, std::ostream& out);

// Runs fn, mapping the library's precondition errors to exit code 2 with a
// one-line message on err.
int run_guarded(const std::function<int()>& fn, std::ostream& err);

} // namespace cyfeyn
