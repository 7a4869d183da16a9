#pragma once

#include <gmpxx.h>

#include <string>

#include "cyfeyn/errors.hpp"

namespace cyfeyn {

// Exact rational arithmetic is delegated to GMP. mpq_class keeps values
// canonical (lowest terms, positive denominator) under arithmetic, which is
// exactly the invariant the rest of the library relies on.
using Rat = mpq_class;
using Int = mpz_class;

// Parse "p/q" or "p" (optional leading '-'). Throws BadRational on malformed
// input or zero denominator.
Rat rat_parse(const std::string& s);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rat& r);

// base^e for integer e (e < 0 requires base != 0).
Rat rat_pow(const Rat& base, long e);

Int factorial(long n);
Int binomial(long n, long k);

// Falling factorial a(a-1)...(a-n+1); (a)_0 = 1.
Rat falling(long a, long n);

} // namespace cyfeyn
