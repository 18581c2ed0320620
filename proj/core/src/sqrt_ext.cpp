#include "qlink/sqrt_ext.hpp"

#include "qlink/errors.hpp"

#include <cmath>
#include <sstream>

namespace qlink {

SqrtExt SqrtExt::from_base(const Cyclotomic& radicand, const Cyclotomic& a) {
    return SqrtExt(radicand, a, Cyclotomic(radicand.field()));
}

SqrtExt SqrtExt::root(const Cyclotomic& radicand) {
    return SqrtExt(radicand, Cyclotomic(radicand.field()), Cyclotomic(radicand.field(), 1));
}

namespace {
void require_same_ext(const SqrtExt& x, const SqrtExt& y) {
    if (x.radicand() != y.radicand())
        throw ValidationError("sqrt-ext: mixed radicands");
}
} // namespace

SqrtExt SqrtExt::operator-() const { return SqrtExt(radicand_, -a_, -b_); }

SqrtExt SqrtExt::operator+(const SqrtExt& o) const {
    require_same_ext(*this, o);
    return SqrtExt(radicand_, a_ + o.a_, b_ + o.b_);
}

SqrtExt SqrtExt::operator-(const SqrtExt& o) const { return *this + (-o); }

SqrtExt SqrtExt::operator*(const SqrtExt& o) const {
    require_same_ext(*this, o);
    return SqrtExt(radicand_, a_ * o.a_ + b_ * o.b_ * radicand_, a_ * o.b_ + b_ * o.a_);
}

bool SqrtExt::operator==(const SqrtExt& o) const {
    return radicand_ == o.radicand_ && a_ == o.a_ && b_ == o.b_;
}

SqrtExt SqrtExt::inverse() const {
    // (a + bD)(a - bD) = a^2 - b^2 r lies in the base field; it is
    // nonzero whenever the element is, because r is not a square when a
    // genuine root is in play and the base field has no zero divisors.
    Cyclotomic norm = a_ * a_ - b_ * b_ * radicand_;
    if (norm.is_zero())
        throw ValidationError("sqrt-ext: inverse of zero divisor or zero");
    Cyclotomic ninv = norm.inverse();
    return SqrtExt(radicand_, a_ * ninv, -b_ * ninv);
}

SqrtExt SqrtExt::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    SqrtExt acc = from_base(radicand_, Cyclotomic(radicand_.field(), 1));
    SqrtExt base = *this;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::complex<double> SqrtExt::numeric() const {
    std::complex<double> r = radicand_.numeric();
    return a_.numeric() + b_.numeric() * std::sqrt(r);
}

std::string SqrtExt::str() const {
    std::ostringstream out;
    out << a_.str() << " + " << b_.str() << "*sqrt(" << radicand_.str() << ")";
    return out.str();
}

} // namespace qlink
