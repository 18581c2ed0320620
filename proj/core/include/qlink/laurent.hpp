#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

namespace qlink {

/// Formal variable of a Laurent polynomial.  `TQ` denotes the quarter
/// power of t, so exponents of Jones-type values are integers in t^(1/4)
/// units (t itself sits at exponent 4).
enum class Var : std::uint8_t { A, S, TQ };

std::string var_name(Var v);

/// Sparse Laurent polynomial over the integers in a single formal
/// variable.  The exponent->coefficient map never stores zeros, so
/// structural equality is semantic equality.  Values are immutable in
/// spirit: every operation returns a fresh polynomial.
class Laurent {
public:
    using Coeffs = std::map<long, mpz_class>;

    Laurent() : var_(Var::A) {}
    explicit Laurent(Var v) : var_(v) {}
    Laurent(Var v, const mpz_class& constant);

    static Laurent zero(Var v) { return Laurent(v); }
    static Laurent one(Var v) { return monomial(v, 0, 1); }
    static Laurent monomial(Var v, long exp, const mpz_class& coeff = 1);

    Var var() const { return var_; }
    const Coeffs& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    /// Nonzero single-term polynomials are the units of the ring.
    bool is_monomial() const { return coeffs_.size() == 1; }

    long min_exp() const; // throws on zero
    long max_exp() const;
    mpz_class coeff(long exp) const;

    Laurent operator-() const;
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    bool operator==(const Laurent& o) const {
        return var_ == o.var_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    Laurent pow(long n) const; // n >= 0, or any n for monomials
    Laurent shifted(long exp_delta) const;

    /// Exact division; throws ValidationError if `d` does not divide
    /// this polynomial in Z[x, x^-1].
    Laurent divide_exact(const Laurent& d) const;

    /// Multiplicative inverse, defined for monomials with coefficient
    /// +-1 only.
    Laurent unit_inverse() const;

    /// Retags the variable, mapping exponent e -> scale*e.  Used for the
    /// substitution A -> t^(-1/4): retag(Var::TQ, -1).
    Laurent retag(Var v, long scale) const;

    /// Image under s -> s^-1 (palindrome flip of exponents).
    Laurent bar() const;

    std::string str() const;

private:
    void set(long exp, const mpz_class& c);
    Var var_;
    Coeffs coeffs_;
};

/// Canonical text form, e.g. "A^7 + A^3 + A^-1 - A^-9".  Terms appear
/// in strictly decreasing exponent order; parse_laurent round-trips it.
std::string canonical_string(const Laurent& p);
Laurent parse_laurent(const std::string& text, Var v);

/// Quantum integer [n] = (s^2n - s^-2n)/(s^2 - s^-2), computed through
/// the telescoping closed form s^(2(n-1)) + s^(2(n-3)) + ... so the
/// generic ring never needs division.  [-n] = -[n].
Laurent quantum_integer(long n, Var v = Var::S);

/// Product [1][2]...[n].
Laurent quantum_factorial(long n, Var v = Var::S);

} // namespace qlink
