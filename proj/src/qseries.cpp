#include "cyfeyn/qseries.hpp"

#include <algorithm>

namespace cyfeyn {

// ---------------------------------------------------------------- rationals

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw BadRational("rat_parse: empty string");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int num(s);
            return Rat(num);
        }
        if (s.find('/', slash + 1) != std::string::npos)
            throw BadRational("rat_parse: multiple '/' in \"" + s + "\"");
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (sgn(den) == 0) throw BadRational("rat_parse: zero denominator in \"" + s + "\"");
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw BadRational("rat_parse: malformed rational \"" + s + "\"");
    }
}

std::string rat_str(const Rat& r) {
    return r.get_str(); // "p" or "p/q", canonical by mpq invariants
}

Rat rat_pow(const Rat& base, long e) {
    if (e < 0) {
        if (sgn(base) == 0) throw BadRational("rat_pow: negative power of zero");
        return rat_pow(Rat(1) / base, -e);
    }
    Rat acc(1), b(base);
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Int factorial(long n) {
    Int acc(1);
    for (long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return Int(0);
    Int acc(1);
    for (long i = 0; i < k; ++i) {
        acc *= (n - i);
        acc /= (i + 1); // exact at each step
    }
    return acc;
}

Rat falling(long a, long n) {
    Rat acc(1);
    for (long i = 0; i < n; ++i) acc *= Rat(a - i);
    return acc;
}

// ------------------------------------------------------------------- series

QSeries::QSeries(int order) : coeffs_(static_cast<size_t>(order) + 1) {
    if (order < 0) throw TruncationOverflow("QSeries: negative order");
}

QSeries::QSeries(int order, std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    if (order < 0 || coeffs_.size() != static_cast<size_t>(order) + 1)
        throw TruncationOverflow("QSeries: coefficient count does not match order");
}

QSeries QSeries::constant(const Rat& c, int order) {
    QSeries s(order);
    s.at(0) = c;
    return s;
}

QSeries QSeries::identity(int order) {
    QSeries s(order);
    if (order >= 1) s.at(1) = 1;
    return s;
}

QSeries QSeries::geometric(const Rat& a, int order) {
    QSeries s(order);
    Rat p(1);
    for (int d = 0; d <= order; ++d) {
        s.at(d) = p;
        p *= a;
    }
    return s;
}

bool QSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (sgn(c) != 0) return false;
    return true;
}

QSeries QSeries::truncated(int order) const {
    if (order > this->order())
        throw TruncationOverflow("truncated: cannot raise series order");
    QSeries s(order);
    for (int d = 0; d <= order; ++d) s.at(d) = coeffs_[static_cast<size_t>(d)];
    return s;
}

QSeries add(const QSeries& a, const QSeries& b) {
    const int T = std::min(a.order(), b.order());
    QSeries r(T);
    for (int d = 0; d <= T; ++d) r.at(d) = a[d] + b[d];
    return r;
}

QSeries sub(const QSeries& a, const QSeries& b) {
    const int T = std::min(a.order(), b.order());
    QSeries r(T);
    for (int d = 0; d <= T; ++d) r.at(d) = a[d] - b[d];
    return r;
}

QSeries mul(const QSeries& a, const QSeries& b) {
    const int T = std::min(a.order(), b.order());
    QSeries r(T);
    for (int i = 0; i <= T; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (int j = 0; j + i <= T; ++j) {
            if (sgn(b[j]) == 0) continue;
            r.at(i + j) += a[i] * b[j];
        }
    }
    return r;
}

QSeries scalar_mul(const Rat& c, const QSeries& a) {
    QSeries r(a.order());
    for (int d = 0; d <= a.order(); ++d) r.at(d) = c * a[d];
    return r;
}

QSeries derive_D(const QSeries& s) {
    QSeries r(s.order());
    for (int d = 1; d <= s.order(); ++d) r.at(d) = Rat(d) * s[d];
    return r;
}

QSeries invert(const QSeries& s) {
    if (sgn(s[0]) == 0) throw ZeroConstantTerm("invert: constant term is zero");
    const int T = s.order();
    QSeries r(T);
    const Rat c0inv = Rat(1) / s[0];
    r.at(0) = c0inv;
    for (int n = 1; n <= T; ++n) {
        Rat acc(0);
        for (int k = 1; k <= n; ++k) acc += s[k] * r[n - k];
        r.at(n) = -acc * c0inv;
    }
    return r;
}

QSeries exp_series(const QSeries& s) {
    if (sgn(s[0]) != 0) throw BadConstantTerm("exp: constant term must be 0");
    const int T = s.order();
    QSeries e(T);
    e.at(0) = 1;
    // e' = s' e termwise: n e_n = sum_{k=1..n} k s_k e_{n-k}
    for (int n = 1; n <= T; ++n) {
        Rat acc(0);
        for (int k = 1; k <= n; ++k) acc += Rat(k) * s[k] * e[n - k];
        e.at(n) = acc / n;
    }
    return e;
}

QSeries log_series(const QSeries& s) {
    if (s[0] != 1) throw BadConstantTerm("log: constant term must be 1");
    // D log(s) = D(s)/s, then divide coefficient n by n.
    const QSeries t = mul(derive_D(s), invert(s));
    QSeries r(s.order());
    for (int n = 1; n <= s.order(); ++n) r.at(n) = t[n] / n;
    return r;
}

QSeries compose(const QSeries& f, const QSeries& g) {
    if (sgn(g[0]) != 0)
        throw NonzeroInnerConstant("compose: inner series has nonzero constant term");
    const int T = std::min(f.order(), g.order());
    const QSeries gt = g.truncated(T);
    QSeries r = QSeries::constant(f[T], T);
    for (int i = T - 1; i >= 0; --i) { // Horner
        r = mul(r, gt);
        r.at(0) += f[i];
    }
    return r;
}

QSeries pow_series(const QSeries& s, long n) {
    QSeries acc = QSeries::constant(1, s.order());
    QSeries b = s;
    while (n > 0) {
        if (n & 1) acc = mul(acc, b);
        b = mul(b, b);
        n >>= 1;
    }
    return acc;
}

QSeries shift_q(const QSeries& s, int k) {
    if (k < 0) throw TruncationOverflow("shift_q: negative shift");
    QSeries out(s.order() + k);
    for (int d = 0; d <= s.order(); ++d) out.at(d + k) = s[d];
    return out;
}

QSeries unshift_q(const QSeries& s, int k) {
    if (k < 0) throw TruncationOverflow("unshift_q: negative shift");
    if (k > s.order())
        throw TruncationOverflow("unshift_q: shift exceeds series order");
    for (int d = 0; d < k; ++d)
        if (sgn(s[d]) != 0)
            throw BadConstantTerm("unshift_q: low-order coefficients do not vanish");
    QSeries out(s.order() - k);
    for (int d = 0; d <= out.order(); ++d) out.at(d) = s[d + k];
    return out;
}

QSeries reversion(const QSeries& s) {
    if (sgn(s[0]) != 0 || s.order() < 1 || sgn(s[1]) == 0)
        throw NotInvertibleSeries("reversion: need c0 = 0 and c1 != 0");
    const int T = s.order();
    // Lagrange inversion: h_n = (1/n) [q^{n-1}] (q/s)^n.  Writing s = q*sigma
    // with sigma(0) = s1 != 0, (q/s)^n = (1/sigma)^n.
    QSeries sigma(T - 1 >= 0 ? T - 1 : 0);
    for (int d = 0; d <= sigma.order(); ++d) sigma.at(d) = s[d + 1];
    const QSeries w = invert(sigma);
    QSeries h(T);
    QSeries wp = w; // w^n as n advances
    for (int n = 1; n <= T; ++n) {
        if (n - 1 <= wp.order()) h.at(n) = wp[n - 1] / n;
        if (n < T) wp = mul(wp, w);
    }
    return h;
}

bool operator==(const QSeries& a, const QSeries& b) {
    return a.coeffs() == b.coeffs();
}

bool agree_to(const QSeries& a, const QSeries& b, int order) {
    const int T = std::min({order, a.order(), b.order()});
    for (int d = 0; d <= T; ++d)
        if (a[d] != b[d]) return false;
    return true;
}

std::vector<std::string> series_strings(const QSeries& s) {
    std::vector<std::string> v;
    v.reserve(static_cast<size_t>(s.order()) + 1);
    for (int d = 0; d <= s.order(); ++d) v.push_back(rat_str(s[d]));
    return v;
}

QSeries series_from_strings(const std::vector<std::string>& v) {
    if (v.empty()) throw ParseError("series_from_strings: empty coefficient list");
    QSeries s(static_cast<int>(v.size()) - 1);
    for (size_t d = 0; d < v.size(); ++d) s.at(static_cast<int>(d)) = rat_parse(v[d]);
    return s;
}

} // namespace cyfeyn
