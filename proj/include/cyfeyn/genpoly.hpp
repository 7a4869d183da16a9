#pragma once

#include <array>
#include <initializer_list>
#include <map>
#include <string>

#include "cyfeyn/rational.hpp"

namespace cyfeyn {

// Variables of the generator ring. A, B, B2, B3, X are the base generators
// (Y is rewritten as 1 - X on input and never stored); E1, E2, E3 are the
// modified generators, first-class so that rewritten polynomials live in the
// same type.
enum class Var : int { A = 0, B = 1, B2 = 2, B3 = 3, X = 4, E1 = 5, E2 = 6, E3 = 7 };

inline constexpr int kNumVars = 8;

const char* var_name(Var v);

// Exponent vector, indexed by Var.
using Monom = std::array<int, kNumVars>;

inline constexpr Monom kUnitMonom{0, 0, 0, 0, 0, 0, 0, 0};

// Coefficient: a rational plus an affine-linear combination of ambiguity
// unknowns l1, l2, ... (1-based indices). Products of two unknowns are not
// representable; multiplication policies below decide what happens when one
// would arise.
struct Coef {
    Rat c0;
    std::map<int, Rat> lam;

    Coef() : c0(0) {}
    Coef(const Rat& c) : c0(c) {} // NOLINT(google-explicit-constructor)

    bool is_zero() const { return sgn(c0) == 0 && lam.empty(); }
    bool has_lambda() const { return !lam.empty(); }
};

bool operator==(const Coef& a, const Coef& b);
inline bool operator!=(const Coef& a, const Coef& b) { return !(a == b); }

// What to do with a product of two ambiguity unknowns: refuse (the ring-level
// contract) or drop it (square-zero semantics used by the quantization
// bookkeeping, where unknowns only ever enter linearly in the final window).
enum class LambdaPolicy { Strict, SquareZero };

class GenPoly {
public:
    GenPoly() = default;

    static GenPoly zero() { return GenPoly(); }
    static GenPoly constant(const Rat& c);
    static GenPoly variable(Var v, int power = 1);
    static GenPoly lambda(int index); // index >= 1

    const std::map<Monom, Coef>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool has_lambda() const;
    int max_lambda() const; // largest unknown index present, 0 if none

    int degree() const;           // total degree; -1 for the zero polynomial
    int degree_in(Var v) const;   // 0 if v absent (or zero polynomial)
    bool depends_on(Var v) const;

    Coef coefficient(const Monom& m) const; // zero Coef if absent
    Rat constant_part() const;              // rational part of the q^0... unit monomial

    // Adds c * m, erasing the entry if it cancels to zero.
    void add_term(const Monom& m, const Coef& c);

private:
    std::map<Monom, Coef> terms_;
};

GenPoly add(const GenPoly& a, const GenPoly& b);
GenPoly sub(const GenPoly& a, const GenPoly& b);
GenPoly neg(const GenPoly& a);
GenPoly scalar_mul(const Rat& c, const GenPoly& a);
// Throws AmbiguityDegreeViolation under Strict if two unknowns meet.
GenPoly mul(const GenPoly& a, const GenPoly& b, LambdaPolicy policy = LambdaPolicy::Strict);
GenPoly pow_poly(const GenPoly& a, int n, LambdaPolicy policy = LambdaPolicy::Strict);

inline GenPoly operator+(const GenPoly& a, const GenPoly& b) { return add(a, b); }
inline GenPoly operator-(const GenPoly& a, const GenPoly& b) { return sub(a, b); }
inline GenPoly operator-(const GenPoly& a) { return neg(a); }
inline GenPoly operator*(const GenPoly& a, const GenPoly& b) { return mul(a, b); }
inline GenPoly operator*(const Rat& c, const GenPoly& a) { return scalar_mul(c, a); }

bool operator==(const GenPoly& a, const GenPoly& b);
inline bool operator!=(const GenPoly& a, const GenPoly& b) { return !(a == b); }

// Formal partial derivative treating the eight variables as independent;
// ambiguity unknowns are scalars.
GenPoly partial(const GenPoly& p, Var v);

// Replaces every occurrence of v by repl, expanding products.
GenPoly substitute(const GenPoly& p, Var v, const GenPoly& repl,
                   LambdaPolicy policy = LambdaPolicy::Strict);

// Substitutes numeric values for the given unknowns; unknowns not in the map
// stay symbolic.
GenPoly assign_lambdas(const GenPoly& p, const std::map<int, Rat>& values);

// True when p involves no variables outside the given set.
bool depends_only_on(const GenPoly& p, std::initializer_list<Var> vars);

// Canonical text form: monomials sorted by total degree then exponent order,
// within a monomial the constant part first and unknown parts by index.
// Round-trips through poly_parse.
std::string poly_str(const GenPoly& p);

// Parses sums/products/powers of rationals, variables (Y is accepted and
// rewritten as 1 - X), unknowns l1, l2, ..., and parenthesized groups.
// Throws ParseError on malformed input; AmbiguityDegreeViolation if the
// input multiplies two unknowns.
GenPoly poly_parse(const std::string& s);

} // namespace cyfeyn
