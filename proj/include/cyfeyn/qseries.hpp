#pragma once

#include <vector>

#include "cyfeyn/rational.hpp"

namespace cyfeyn {

// Truncated formal power series in q with exact rational coefficients.
//
// A series carries its own truncation order T: coefficients of q^0..q^T are
// stored and meaningful. Arithmetic between series of different orders
// truncates to the minimum so that no coefficient is ever reported beyond
// what both operands actually determine.
class QSeries {
public:
    QSeries() : coeffs_(1) {}
    explicit QSeries(int order);
    QSeries(int order, std::vector<Rat> coeffs); // coeffs.size() must be order+1

    static QSeries constant(const Rat& c, int order);
    static QSeries identity(int order);                  // q
    static QSeries geometric(const Rat& a, int order);   // 1/(1 - a q)

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& operator[](int d) const { return coeffs_[static_cast<size_t>(d)]; }
    Rat& at(int d) { return coeffs_[static_cast<size_t>(d)]; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    // Restriction to a lower (or equal) order. Raising the order would
    // invent unknown coefficients, so it throws TruncationOverflow.
    QSeries truncated(int order) const;

private:
    std::vector<Rat> coeffs_; // index d = coefficient of q^d
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries scalar_mul(const Rat& c, const QSeries& a);

// D := q d/dq, the coefficient map c_d -> d * c_d. Order preserved.
QSeries derive_D(const QSeries& s);

// Multiplicative inverse; requires nonzero constant term (ZeroConstantTerm).
QSeries invert(const QSeries& s);

// exp requires c0 = 0, log requires c0 = 1 (BadConstantTerm otherwise).
QSeries exp_series(const QSeries& s);
QSeries log_series(const QSeries& s);

// f(g(q)); requires g's constant term to vanish (NonzeroInnerConstant).
QSeries compose(const QSeries& f, const QSeries& g);

// Functional inverse: compose(s, reversion(s)) = q. Requires c0 = 0 and
// c1 != 0 (NotInvertibleSeries). Implemented by Lagrange inversion; an
// independent coefficient-peeling method lives in the tests as the oracle.
QSeries reversion(const QSeries& s);

// s^n for n >= 0.
QSeries pow_series(const QSeries& s, long n);

// Exact multiplication by q^k (k >= 0): the result has order s.order() + k, so
// no information is lost. unshift_q divides by q^k and requires the low k
// coefficients to vanish (BadConstantTerm otherwise); the order drops by k.
QSeries shift_q(const QSeries& s, int k);
QSeries unshift_q(const QSeries& s, int k);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline QSeries operator*(const Rat& c, const QSeries& a) { return scalar_mul(c, a); }

// Exact structural equality (same order and coefficients).
bool operator==(const QSeries& a, const QSeries& b);
inline bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

// Coefficientwise agreement through min(order, a.order, b.order).
bool agree_to(const QSeries& a, const QSeries& b, int order);

// Serialization as a list of "p/q" strings (JSON-array ready).
std::vector<std::string> series_strings(const QSeries& s);
QSeries series_from_strings(const std::vector<std::string>& v);

} // namespace cyfeyn
