#pragma once

#include "qlink/laurent.hpp"

#include <gmpxx.h>

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qlink {

class Cyclotomic;

/// Shared immutable description of the N-th cyclotomic field Q(zeta_N):
/// the cyclotomic polynomial Phi_N, reduction tables for the power
/// basis 1, zeta, ..., zeta^(phi(N)-1), and the table of reduced powers
/// zeta^k for 0 <= k < N.
class CyclotomicField {
public:
    static std::shared_ptr<const CyclotomicField> create(long N);

    long order() const { return n_; }
    long degree() const { return phi_; }
    const std::vector<mpz_class>& minimal_polynomial() const { return phi_poly_; }
    /// Coordinates of zeta^(k mod N) in the power basis.
    const std::vector<mpz_class>& zeta_power(long k) const;

private:
    explicit CyclotomicField(long N);
    long n_ = 0;
    long phi_ = 0;
    std::vector<mpz_class> phi_poly_;                    // monic, degree phi_
    std::vector<std::vector<mpz_class>> high_power_;     // x^(phi..2phi-2) reduced
    std::vector<std::vector<mpz_class>> zeta_pow_;       // zeta^0..zeta^(N-1)
    friend class Cyclotomic;
    friend Cyclotomic reduce_poly(std::shared_ptr<const CyclotomicField>,
                                  std::vector<mpq_class>);
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// Element of Q(zeta_N) in the reduced power basis with exact rational
/// coordinates.  Equality is structural; values are immutable.
class Cyclotomic {
public:
    Cyclotomic() = default;
    explicit Cyclotomic(FieldPtr f);                    // zero
    Cyclotomic(FieldPtr f, const mpq_class& rational);
    static Cyclotomic zeta(FieldPtr f, long power = 1); // zeta^power

    const FieldPtr& field() const { return field_; }
    const std::vector<mpq_class>& coords() const { return coords_; }
    bool is_zero() const;
    bool is_rational() const;
    mpq_class rational_part() const; // throws unless is_rational()

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    Cyclotomic inverse() const; // throws on zero
    Cyclotomic pow(long k) const;

    /// Numeric value under the embedding zeta -> exp(2*pi*i/N).
    std::complex<double> numeric() const;

    std::string str() const;

private:
    FieldPtr field_;
    std::vector<mpq_class> coords_;
    friend Cyclotomic reduce_poly(FieldPtr, std::vector<mpq_class>);
};

/// Ring homomorphism Z[s, s^-1] -> Q(zeta_N) with s -> zeta^e.
/// Requires gcd(e, N) = 1 so the image of s is a primitive root.
Cyclotomic laurent_eval(const Laurent& p, const FieldPtr& f, long e);

/// Evaluation at an arbitrary invertible element.
Cyclotomic laurent_eval(const Laurent& p, const Cyclotomic& x);

/// Attempts an exact square root in the field.  The construction covers
/// radicands of the form (rational) * (unit)^2 via quadratic Gauss sums;
/// any returned value y is verified to satisfy y*y == x.
std::optional<Cyclotomic> try_sqrt(const Cyclotomic& x);

} // namespace qlink
