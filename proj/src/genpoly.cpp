#include "cyfeyn/genpoly.hpp"

#include <algorithm>
#include <cctype>
#include <utility>
#include <vector>

#include "cyfeyn/errors.hpp"

namespace cyfeyn {

const char* var_name(Var v) {
    static const char* names[kNumVars] = {"A", "B", "B2", "B3", "X", "E1", "E2", "E3"};
    return names[static_cast<int>(v)];
}

bool operator==(const Coef& a, const Coef& b) {
    return a.c0 == b.c0 && a.lam == b.lam;
}

namespace {

Coef coef_add(const Coef& a, const Coef& b) {
    Coef c = a;
    c.c0 += b.c0;
    for (const auto& [i, v] : b.lam) {
        Rat& slot = c.lam[i];
        slot += v;
        if (sgn(slot) == 0) c.lam.erase(i);
    }
    return c;
}

Coef coef_scale(const Rat& s, const Coef& a) {
    Coef c;
    if (sgn(s) == 0) return c;
    c.c0 = s * a.c0;
    for (const auto& [i, v] : a.lam) c.lam.emplace(i, s * v);
    return c;
}

Coef coef_mul(const Coef& a, const Coef& b, LambdaPolicy policy) {
    if (!a.lam.empty() && !b.lam.empty() && policy == LambdaPolicy::Strict)
        throw AmbiguityDegreeViolation(
            "coefficient product would be quadratic in ambiguity unknowns");
    Coef c = coef_scale(a.c0, b);
    c.c0 = a.c0 * b.c0;
    Coef other;
    other.lam = coef_scale(b.c0, a).lam;
    for (const auto& [i, v] : other.lam) {
        Rat& slot = c.lam[i];
        slot += v;
        if (sgn(slot) == 0) c.lam.erase(i);
    }
    return c;
}

Monom monom_mul(const Monom& a, const Monom& b) {
    Monom m;
    for (int i = 0; i < kNumVars; ++i) m[i] = a[i] + b[i];
    return m;
}

int monom_degree(const Monom& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

} // namespace

GenPoly GenPoly::constant(const Rat& c) {
    GenPoly p;
    p.add_term(kUnitMonom, Coef(c));
    return p;
}

GenPoly GenPoly::variable(Var v, int power) {
    if (power < 0) throw ConfigError("GenPoly::variable: negative power");
    GenPoly p;
    Monom m = kUnitMonom;
    m[static_cast<int>(v)] = power;
    p.add_term(m, Coef(Rat(1)));
    return p;
}

GenPoly GenPoly::lambda(int index) {
    if (index < 1) throw ConfigError("GenPoly::lambda: index must be >= 1");
    GenPoly p;
    Coef c;
    c.lam.emplace(index, Rat(1));
    p.add_term(kUnitMonom, c);
    return p;
}

bool GenPoly::has_lambda() const {
    for (const auto& [m, c] : terms_)
        if (c.has_lambda()) return true;
    return false;
}

int GenPoly::max_lambda() const {
    int best = 0;
    for (const auto& [m, c] : terms_)
        if (!c.lam.empty()) best = std::max(best, c.lam.rbegin()->first);
    return best;
}

int GenPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, monom_degree(m));
    return d;
}

int GenPoly::degree_in(Var v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<int>(v)]);
    return d;
}

bool GenPoly::depends_on(Var v) const {
    for (const auto& [m, c] : terms_)
        if (m[static_cast<int>(v)] > 0) return true;
    return false;
}

Coef GenPoly::coefficient(const Monom& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coef() : it->second;
}

Rat GenPoly::constant_part() const {
    auto it = terms_.find(kUnitMonom);
    return it == terms_.end() ? Rat(0) : it->second.c0;
}

void GenPoly::add_term(const Monom& m, const Coef& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = coef_add(it->second, c);
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GenPoly add(const GenPoly& a, const GenPoly& b) {
    GenPoly c = a;
    for (const auto& [m, v] : b.terms()) c.add_term(m, v);
    return c;
}

GenPoly sub(const GenPoly& a, const GenPoly& b) {
    return add(a, neg(b));
}

GenPoly neg(const GenPoly& a) {
    return scalar_mul(Rat(-1), a);
}

GenPoly scalar_mul(const Rat& c, const GenPoly& a) {
    GenPoly out;
    for (const auto& [m, v] : a.terms()) out.add_term(m, coef_scale(c, v));
    return out;
}

GenPoly mul(const GenPoly& a, const GenPoly& b, LambdaPolicy policy) {
    GenPoly out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out.add_term(monom_mul(ma, mb), coef_mul(ca, cb, policy));
    return out;
}

GenPoly pow_poly(const GenPoly& a, int n, LambdaPolicy policy) {
    if (n < 0) throw ConfigError("pow_poly: negative exponent");
    GenPoly acc = GenPoly::constant(1);
    for (int i = 0; i < n; ++i) acc = mul(acc, a, policy);
    return acc;
}

bool operator==(const GenPoly& a, const GenPoly& b) {
    return a.terms() == b.terms();
}

GenPoly partial(const GenPoly& p, Var v) {
    const int vi = static_cast<int>(v);
    GenPoly out;
    for (const auto& [m, c] : p.terms()) {
        const int e = m[vi];
        if (e == 0) continue;
        Monom lowered = m;
        lowered[vi] = e - 1;
        Coef scaled;
        scaled.c0 = Rat(e) * c.c0;
        for (const auto& [i, val] : c.lam) scaled.lam.emplace(i, Rat(e) * val);
        out.add_term(lowered, scaled);
    }
    return out;
}

GenPoly substitute(const GenPoly& p, Var v, const GenPoly& repl, LambdaPolicy policy) {
    const int vi = static_cast<int>(v);
    GenPoly out;
    for (const auto& [m, c] : p.terms()) {
        const int e = m[vi];
        if (e == 0) {
            out.add_term(m, c);
            continue;
        }
        Monom rest = m;
        rest[vi] = 0;
        GenPoly base;
        base.add_term(rest, c);
        out = add(out, mul(base, pow_poly(repl, e, policy), policy));
    }
    return out;
}

GenPoly assign_lambdas(const GenPoly& p, const std::map<int, Rat>& values) {
    GenPoly out;
    for (const auto& [m, c] : p.terms()) {
        Coef nc;
        nc.c0 = c.c0;
        for (const auto& [i, v] : c.lam) {
            auto it = values.find(i);
            if (it != values.end())
                nc.c0 += v * it->second;
            else
                nc.lam.emplace(i, v);
        }
        out.add_term(m, nc);
    }
    return out;
}

bool depends_only_on(const GenPoly& p, std::initializer_list<Var> vars) {
    bool allowed[kNumVars] = {};
    for (Var v : vars) allowed[static_cast<int>(v)] = true;
    for (const auto& [m, c] : p.terms())
        for (int i = 0; i < kNumVars; ++i)
            if (m[i] > 0 && !allowed[i]) return false;
    return true;
}

namespace {

std::string monom_str(const Monom& m) {
    std::string out;
    for (int i = 0; i < kNumVars; ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += var_name(static_cast<Var>(i));
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

// One printable unit: coefficient * [l<idx>] * monomial. idx == 0 means the
// rational part.
std::string unit_str(const Rat& mag, int idx, const Monom& m) {
    std::string out;
    const bool bare = (idx == 0 && monom_degree(m) == 0);
    if (mag != 1 || bare) out = rat_str(mag);
    if (idx > 0) {
        if (!out.empty()) out += "*";
        out += "l" + std::to_string(idx);
    }
    if (monom_degree(m) > 0) {
        if (!out.empty()) out += "*";
        out += monom_str(m);
    }
    return out;
}

} // namespace

std::string poly_str(const GenPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Monom, Coef>> items(p.terms().begin(), p.terms().end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        const int da = monom_degree(a.first), db = monom_degree(b.first);
        if (da != db) return da < db;
        return b.first < a.first; // within a degree, A before B before ...
    });
    std::string out;
    auto emit = [&out](const Rat& coeff, int idx, const Monom& m) {
        const bool negative = sgn(coeff) < 0;
        const Rat mag = negative ? Rat(-coeff) : coeff;
        if (out.empty())
            out += (negative ? "-" : "") + unit_str(mag, idx, m);
        else
            out += (negative ? " - " : " + ") + unit_str(mag, idx, m);
    };
    for (const auto& [m, c] : items) {
        if (sgn(c.c0) != 0) emit(c.c0, 0, m);
        for (const auto& [i, v] : c.lam) emit(v, i, m);
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("poly_parse: " + msg + " at position " + std::to_string(pos));
    }
    bool at_digit() {
        skip();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }
    bool at_alpha() {
        skip();
        return pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]));
    }

    std::string read_digits() {
        skip();
        const size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return s.substr(start, pos - start);
    }

    Rat parse_rational() {
        const std::string numStr = read_digits();
        Int num(numStr);
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            if (!(pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))))
                fail("expected denominator digits");
            Int den(read_digits());
            if (sgn(den) == 0) fail("zero denominator");
            Rat r(num, den);
            r.canonicalize();
            return r;
        }
        return Rat(num);
    }

    GenPoly parse_name() {
        const size_t start = pos;
        while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
        const std::string name = s.substr(start, pos - start);
        for (int i = 0; i < kNumVars; ++i)
            if (name == var_name(static_cast<Var>(i)))
                return GenPoly::variable(static_cast<Var>(i));
        if (name == "Y")
            return sub(GenPoly::constant(1), GenPoly::variable(Var::X));
        if (name.size() >= 2 && name[0] == 'l' &&
            std::all_of(name.begin() + 1, name.end(),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            const long idx = std::stol(name.substr(1));
            if (idx < 1) fail("ambiguity index must be >= 1");
            return GenPoly::lambda(static_cast<int>(idx));
        }
        fail("unknown symbol '" + name + "'");
    }

    GenPoly parse_primary() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        if (eat('(')) {
            GenPoly p = parse_poly();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (at_digit()) return GenPoly::constant(parse_rational());
        if (at_alpha()) return parse_name();
        fail(std::string("unexpected character '") + s[pos] + "'");
    }

    GenPoly parse_factor() {
        GenPoly base = parse_primary();
        if (eat('^')) {
            if (!at_digit()) fail("expected exponent");
            const std::string e = read_digits();
            if (e.size() > 4) fail("exponent out of range");
            base = pow_poly(base, static_cast<int>(std::stol(e)));
        }
        return base;
    }

    GenPoly parse_term() {
        GenPoly p = parse_factor();
        while (eat('*')) p = mul(p, parse_factor());
        return p;
    }

    GenPoly parse_poly() {
        bool negate = false;
        if (eat('-'))
            negate = true;
        else
            eat('+');
        GenPoly acc = parse_term();
        if (negate) acc = neg(acc);
        for (;;) {
            skip();
            if (eat('+'))
                acc = add(acc, parse_term());
            else if (eat('-'))
                acc = sub(acc, parse_term());
            else
                break;
        }
        return acc;
    }
};

} // namespace

GenPoly poly_parse(const std::string& s) {
    Parser p(s);
    p.skip();
    if (p.pos >= s.size()) throw ParseError("poly_parse: empty input");
    GenPoly out = p.parse_poly();
    p.skip();
    if (p.pos != s.size()) p.fail("trailing input");
    return out;
}

} // namespace cyfeyn
