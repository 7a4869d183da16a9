#pragma once

#include <stdexcept>
#include <string>

namespace cyfeyn {

// Exception taxonomy for the whole library. Each type names the violated
// precondition; messages carry the offending context so CLI output and test
// expectations stay stable.

struct BadRational : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// series preconditions
struct ZeroConstantTerm : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadConstantTerm : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonzeroInnerConstant : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotInvertibleSeries : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TruncationOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// target / generator ring
struct UnsupportedTarget : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnboundAmbiguity : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AmbiguityDegreeViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GaugeDegreeViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graphs / correlators / solver
struct UnstablePair : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MissingCorrelator : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnresolvedAmbiguity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// CLI
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cyfeyn
