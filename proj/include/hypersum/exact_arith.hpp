#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace hypersum {

/// Backing arbitrary-precision integer. Public arithmetic goes through the
/// Natural / Integer / Rational value types below; the alias is exposed for
/// module internals and for tests that need raw big-integer math.
using BigInt = boost::multiprecision::cpp_int;

class Integer;

/// Arbitrary-precision nonnegative integer.
///
/// Closed under addition and multiplication. Subtraction is deliberately
/// absent: differences live in Integer, which converts back via to_natural()
/// once nonnegativity is established.
class Natural {
public:
    Natural() = default;
    Natural(std::uint64_t v) : mag_(v) {}
    explicit Natural(BigInt v) : mag_(std::move(v)) {
        if (mag_ < 0) {
            throw std::domain_error("Natural: negative value");
        }
    }
    explicit Natural(const std::string& decimal);

    const BigInt& value() const { return mag_; }
    bool is_zero() const { return mag_.is_zero(); }
    std::string str() const { return mag_.str(); }

    /// Checked narrowing for loop bounds and dense-table indices. Throws
    /// std::domain_error when the value does not fit; any evaluation that
    /// would need such an index is infeasible by construction.
    std::uint32_t to_index() const;

    Natural& operator+=(const Natural& o) {
        mag_ += o.mag_;
        return *this;
    }
    Natural& operator*=(const Natural& o) {
        mag_ *= o.mag_;
        return *this;
    }
    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator*(Natural a, const Natural& b) { return a *= b; }

    friend bool operator==(const Natural& a, const Natural& b) { return a.mag_ == b.mag_; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
        int c = a.mag_.compare(b.mag_);
        return c < 0    ? std::strong_ordering::less
               : c > 0  ? std::strong_ordering::greater
                        : std::strong_ordering::equal;
    }

private:
    BigInt mag_;  // >= 0
};

/// Arbitrary-precision signed integer.
class Integer {
public:
    Integer() = default;
    Integer(std::int64_t v) : val_(v) {}
    Integer(const Natural& n) : val_(n.value()) {}
    explicit Integer(BigInt v) : val_(std::move(v)) {}
    explicit Integer(const std::string& decimal);

    const BigInt& value() const { return val_; }
    bool is_zero() const { return val_.is_zero(); }
    bool is_negative() const { return val_ < 0; }
    std::string str() const { return val_.str(); }

    /// Throws std::domain_error when negative.
    Natural to_natural() const;
    Integer abs() const { return Integer(BigInt(boost::multiprecision::abs(val_))); }

    Integer& operator+=(const Integer& o) {
        val_ += o.val_;
        return *this;
    }
    Integer& operator-=(const Integer& o) {
        val_ -= o.val_;
        return *this;
    }
    Integer& operator*=(const Integer& o) {
        val_ *= o.val_;
        return *this;
    }
    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
    Integer operator-() const { return Integer(BigInt(-val_)); }

    friend bool operator==(const Integer& a, const Integer& b) { return a.val_ == b.val_; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        int c = a.val_.compare(b.val_);
        return c < 0    ? std::strong_ordering::less
               : c > 0  ? std::strong_ordering::greater
                        : std::strong_ordering::equal;
    }

private:
    BigInt val_;
};

/// Exact rational number, eagerly normalized on every construction and
/// arithmetic result: always in lowest terms, denominator strictly positive.
/// Equality is therefore structural.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(const Natural& n) : num_(n), den_(1) {}
    /// Throws std::domain_error on zero denominator.
    Rational(Integer numerator, Integer denominator);

    const Integer& numerator() const { return num_; }
    const Natural& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_ == Natural(1); }
    /// "a" when integral, "a/b" otherwise, both in lowest terms.
    std::string str() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& o);
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    void normalize();

    Integer num_;
    Natural den_;  // > 0
};

/// Binomial coefficient C(a, b). Returns 0 when b > a; exact at all sizes.
/// Computed by the multiplicative formula with running exact division, never
/// through factorial ratios.
Natural binom(const Natural& a, const Natural& b);

/// base^exp over naturals, with 0^0 = 1 (empty-product convention; the only
/// place the library relies on it is the k=1 difference extension at m=0).
Natural ipow(const Natural& base, const Natural& exp);

Natural factorial(const Natural& n);

Natural gcd(const Natural& a, const Natural& b);

}  // namespace hypersum
