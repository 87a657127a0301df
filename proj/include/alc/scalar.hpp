#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

namespace alc {

// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
public:
    using Int = boost::multiprecision::cpp_int;

    Rat() = default;
    Rat(long long n) : value_(n) {}
    Rat(const Int& num, const Int& den);

    Int num() const { return boost::multiprecision::numerator(value_); }
    Int den() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    int sign() const { return value_.sign(); }

    Rat operator+(const Rat& o) const { return Rat(value_ + o.value_); }
    Rat operator-(const Rat& o) const { return Rat(value_ - o.value_); }
    Rat operator*(const Rat& o) const { return Rat(value_ * o.value_); }
    Rat operator/(const Rat& o) const;
    Rat operator-() const { return Rat(-value_); }

    bool operator==(const Rat& o) const { return value_ == o.value_; }
    std::strong_ordering operator<=>(const Rat& o) const;

    // "3", "-3/4"
    std::string str() const;

private:
    using Value = boost::multiprecision::cpp_rational;
    explicit Rat(Value v) : value_(std::move(v)) {}
    Value value_;
};

// Element of Q(i, sqrt2): re + r2*sqrt2 + im*i + im2*i*sqrt2.
// Every scalar in the system is a Quad; the rational ring is the subring
// with the last three coordinates zero.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long n) : re_(n) {}
    Scalar(Rat re) : re_(std::move(re)) {}
    Scalar(Rat re, Rat r2, Rat im, Rat im2)
        : re_(std::move(re)), r2_(std::move(r2)), im_(std::move(im)), im2_(std::move(im2)) {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar i() { return Scalar(0, 0, 1, 0); }
    static Scalar sqrt2() { return Scalar(0, 1, 0, 0); }

    const Rat& re() const { return re_; }
    const Rat& r2() const { return r2_; }
    const Rat& im() const { return im_; }
    const Rat& im2() const { return im2_; }

    bool is_zero() const { return re_.is_zero() && r2_.is_zero() && im_.is_zero() && im2_.is_zero(); }
    bool is_one() const { return *this == one(); }
    bool is_rational() const { return r2_.is_zero() && im_.is_zero() && im2_.is_zero(); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar conj() const { return Scalar(re_, r2_, -im_, -im2_); }

    // Multiplicative inverse; throws std::domain_error on zero.
    Scalar inverse() const;
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    bool operator==(const Scalar& o) const = default;
    // Lexicographic on (re, r2, im, im2); only used for canonical ordering.
    std::strong_ordering operator<=>(const Scalar& o) const;

    // Scalar expression in concrete syntax without braces, e.g. "1/2*sqrt2 + i".
    std::string str() const;

private:
    Rat re_, r2_, im_, im2_;
};

inline Scalar conj(const Scalar& a) { return a.conj(); }

}  // namespace alc
