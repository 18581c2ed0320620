#pragma once

#include "qlink/cyclotomic.hpp"

#include <complex>
#include <string>

namespace qlink {

/// Quadratic extension of a cyclotomic field by a formal square root D
/// with D*D = radicand.  Elements are pairs a + b*D.  When the radicand
/// happens to be a square in the base field the extension is still a
/// valid (split) ring, but callers normally keep b = 0 in that case.
class SqrtExt {
public:
    SqrtExt() = default;
    SqrtExt(Cyclotomic radicand, Cyclotomic a, Cyclotomic b)
        : radicand_(std::move(radicand)), a_(std::move(a)), b_(std::move(b)) {}

    static SqrtExt from_base(const Cyclotomic& radicand, const Cyclotomic& a);
    static SqrtExt root(const Cyclotomic& radicand); // the element D

    const Cyclotomic& radicand() const { return radicand_; }
    const Cyclotomic& base_part() const { return a_; }
    const Cyclotomic& root_part() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    SqrtExt operator-() const;
    SqrtExt operator+(const SqrtExt& o) const;
    SqrtExt operator-(const SqrtExt& o) const;
    SqrtExt operator*(const SqrtExt& o) const;
    SqrtExt& operator+=(const SqrtExt& o) { return *this = *this + o; }
    SqrtExt& operator*=(const SqrtExt& o) { return *this = *this * o; }
    bool operator==(const SqrtExt& o) const;
    bool operator!=(const SqrtExt& o) const { return !(*this == o); }

    SqrtExt inverse() const;
    SqrtExt pow(long k) const;

    /// Numeric rendering; D maps to the principal square root of the
    /// radicand's numeric value.
    std::complex<double> numeric() const;

    std::string str() const;

private:
    Cyclotomic radicand_;
    Cyclotomic a_;
    Cyclotomic b_;
};

} // namespace qlink
