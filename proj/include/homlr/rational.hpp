#pragma once

#include <gmpxx.h>

#include <string>

#include "homlr/errors.hpp"

namespace homlr {

// Exact rational scalar over arbitrary-precision integers.
// Canonical form is maintained at all times: denominator > 0, gcd(|num|, den) = 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw SchemaError("zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q" with arbitrary-precision digits.
    static Rational parse(const std::string& s);

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw InternalError("division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; v_.canonicalize(); return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; v_.canonicalize(); return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; v_.canonicalize(); return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    std::string numerator() const { return v_.get_num().get_str(); }
    std::string denominator() const { return v_.get_den().get_str(); }

    // "p" when the denominator is 1, "p/q" otherwise.
    std::string str() const;

private:
    mpq_class v_;
};

inline Rational operator*(long n, const Rational& r) { return Rational(n) * r; }

} // namespace homlr
