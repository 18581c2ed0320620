#include "qlink/laurent.hpp"

#include "qlink/errors.hpp"

#include <cctype>
#include <sstream>

namespace qlink {

std::string var_name(Var v) {
    switch (v) {
    case Var::A: return "A";
    case Var::S: return "s";
    case Var::TQ: return "t";
    }
    return "?";
}

namespace {

void require_same_var(Var a, Var b) {
    if (a != b)
        throw ValidationError("laurent: mixed variables " + var_name(a) + " and " + var_name(b));
}

} // namespace

Laurent::Laurent(Var v, const mpz_class& constant) : var_(v) {
    set(0, constant);
}

Laurent Laurent::monomial(Var v, long exp, const mpz_class& coeff) {
    Laurent p(v);
    p.set(exp, coeff);
    return p;
}

void Laurent::set(long exp, const mpz_class& c) {
    if (c == 0)
        coeffs_.erase(exp);
    else
        coeffs_[exp] = c;
}

bool Laurent::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

long Laurent::min_exp() const {
    if (is_zero()) throw ValidationError("laurent: min_exp of zero");
    return coeffs_.begin()->first;
}

long Laurent::max_exp() const {
    if (is_zero()) throw ValidationError("laurent: max_exp of zero");
    return coeffs_.rbegin()->first;
}

mpz_class Laurent::coeff(long exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? mpz_class(0) : it->second;
}

Laurent Laurent::operator-() const {
    Laurent r(var_);
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
    require_same_var(var_, o.var_);
    Laurent r = *this;
    for (const auto& [e, c] : o.coeffs_) {
        mpz_class sum = r.coeff(e) + c;
        r.set(e, sum);
    }
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
    require_same_var(var_, o.var_);
    Laurent r(var_);
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) {
            mpz_class sum = r.coeff(e1 + e2) + c1 * c2;
            r.set(e1 + e2, sum);
        }
    return r;
}

Laurent Laurent::pow(long n) const {
    if (n < 0) {
        return unit_inverse().pow(-n);
    }
    Laurent acc = one(var_);
    Laurent base = *this;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

Laurent Laurent::shifted(long exp_delta) const {
    Laurent r(var_);
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + exp_delta] = c;
    return r;
}

Laurent Laurent::divide_exact(const Laurent& d) const {
    require_same_var(var_, d.var_);
    if (d.is_zero()) throw ValidationError("laurent: division by zero");
    if (is_zero()) return zero(var_);

    // Long division from the top exponent down.  Exactness demands that
    // the leading coefficient of d divides every intermediate leading
    // coefficient and that the remainder vanishes.
    Laurent rem = *this;
    Laurent quot(var_);
    const long dtop = d.max_exp();
    const mpz_class& dlead = d.coeffs().rbegin()->second;
    while (!rem.is_zero() && rem.max_exp() - rem.min_exp() >= dtop - d.min_exp()) {
        const long e = rem.max_exp() - dtop;
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.coeff(rem.max_exp()).get_mpz_t(),
                    dlead.get_mpz_t());
        if (r != 0)
            throw ValidationError("laurent: inexact division (coefficient)");
        quot.set(e, q);
        rem -= d.shifted(e) * monomial(var_, 0, q);
    }
    if (!rem.is_zero())
        throw ValidationError("laurent: inexact division (remainder)");
    return quot;
}

Laurent Laurent::unit_inverse() const {
    if (coeffs_.size() != 1)
        throw ValidationError("laurent: inverse of non-monomial");
    const auto& [e, c] = *coeffs_.begin();
    if (c != 1 && c != -1)
        throw ValidationError("laurent: inverse of non-unit coefficient");
    return monomial(var_, -e, c);
}

Laurent Laurent::retag(Var v, long scale) const {
    Laurent r(v);
    for (const auto& [e, c] : coeffs_) r.coeffs_[e * scale] = c;
    return r;
}

Laurent Laurent::bar() const { return retag(var_, -1); }

std::string Laurent::str() const { return canonical_string(*this); }

std::string canonical_string(const Laurent& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    const std::string name = var_name(p.var());
    bool first = true;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        const long e = it->first;
        mpz_class c = it->second;
        if (first) {
            if (c < 0) { out << "-"; c = -c; }
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (e == 0) {
            out << c.get_str();
        } else {
            if (c != 1) out << c.get_str() << "*";
            out << name;
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool done() { skip_ws(); return i >= s.size(); }
};

mpz_class parse_integer(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) ++c.i;
    size_t digits = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == digits)
        throw ParseError("expected integer", static_cast<long>(start));
    return mpz_class(c.s.substr(start, c.i - start));
}

} // namespace

Laurent parse_laurent(const std::string& text, Var v) {
    Cursor c{text};
    Laurent p(v);
    const std::string name = var_name(v);
    if (c.done()) throw ParseError("empty polynomial", 0);
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        c.skip_ws();
        if (c.s[c.i] == '+' || c.s[c.i] == '-') {
            sign = c.s[c.i] == '-' ? -1 : 1;
            ++c.i;
        } else if (!first) {
            throw ParseError("expected '+' or '-'", static_cast<long>(c.i));
        }
        first = false;
        c.skip_ws();
        mpz_class coeff = 1;
        bool have_coeff = false;
        if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
            coeff = parse_integer(c);
            have_coeff = true;
            c.skip_ws();
            if (c.i < c.s.size() && c.s[c.i] == '*') ++c.i;
            c.skip_ws();
        }
        long exp = 0;
        if (c.i < c.s.size() && text.compare(c.i, name.size(), name) == 0) {
            c.i += name.size();
            c.skip_ws();
            if (c.i < c.s.size() && c.s[c.i] == '^') {
                ++c.i;
                exp = static_cast<long>(parse_integer(c).get_si());
            } else {
                exp = 1;
            }
        } else if (!have_coeff) {
            throw ParseError("expected term", static_cast<long>(c.i));
        }
        p += Laurent::monomial(v, exp, sign * coeff);
    }
    return p;
}

Laurent quantum_integer(long n, Var v) {
    if (n == 0) return Laurent::zero(v);
    if (n < 0) return -quantum_integer(-n, v);
    Laurent r(v);
    for (long j = 0; j < n; ++j)
        r += Laurent::monomial(v, 2 * (n - 1 - 2 * j));
    return r;
}

Laurent quantum_factorial(long n, Var v) {
    Laurent r = Laurent::one(v);
    for (long j = 2; j <= n; ++j) r *= quantum_integer(j, v);
    return r;
}

} // namespace qlink
