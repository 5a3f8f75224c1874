#include "hypersum/exact_arith.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace hypersum {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Natural::Natural(const std::string& decimal) {
    if (!all_digits(decimal)) {
        throw std::invalid_argument("Natural: not a decimal natural: '" + decimal + "'");
    }
    mag_ = BigInt(decimal);
}

std::uint32_t Natural::to_index() const {
    if (mag_ > std::numeric_limits<std::uint32_t>::max()) {
        throw std::domain_error("value too large for a dense evaluation index: " + str());
    }
    return mag_.convert_to<std::uint32_t>();
}

Integer::Integer(const std::string& decimal) {
    std::string_view body = decimal;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (!all_digits(body)) {
        throw std::invalid_argument("Integer: not a decimal integer: '" + decimal + "'");
    }
    val_ = BigInt(std::string(body));
    if (negative) {
        val_ = -val_;
    }
}

Natural Integer::to_natural() const {
    if (is_negative()) {
        throw std::domain_error("Integer::to_natural: negative value " + str());
    }
    return Natural(val_);
}

Rational::Rational(Integer numerator, Integer denominator)
    : num_(std::move(numerator)), den_(1) {
    if (denominator.is_zero()) {
        throw std::domain_error("Rational: zero denominator");
    }
    if (denominator.is_negative()) {
        num_ = -num_;
        denominator = -denominator;
    }
    den_ = denominator.to_natural();
    normalize();
}

void Rational::normalize() {
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_.value()),
                                          den_.value());
    if (g > 1) {
        num_ = Integer(BigInt(num_.value() / g));
        den_ = Natural(BigInt(den_.value() / g));
    }
    if (num_.is_zero()) {
        den_ = Natural(1);
    }
}

std::string Rational::str() const {
    if (is_integral()) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = Integer(BigInt(num_.value() * o.den_.value() + o.num_.value() * den_.value()));
    den_ = Natural(BigInt(den_.value() * o.den_.value()));
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    num_ = Integer(BigInt(num_.value() * o.num_.value()));
    den_ = Natural(BigInt(den_.value() * o.den_.value()));
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    return *this *= Rational(Integer(o.den_), o.num_);
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Denominators are positive, so cross-multiplication preserves order.
    BigInt lhs = a.num_.value() * b.den_.value();
    BigInt rhs = b.num_.value() * a.den_.value();
    int c = lhs.compare(rhs);
    return c < 0    ? std::strong_ordering::less
           : c > 0  ? std::strong_ordering::greater
                    : std::strong_ordering::equal;
}

Natural binom(const Natural& a, const Natural& b) {
    if (b > a) {
        return Natural(0);
    }
    BigInt bb = b.value();
    if (a.value() - bb < bb) {
        bb = a.value() - bb;  // C(a,b) = C(a,a-b), take the shorter product
    }
    BigInt result = 1;
    // After step i the running value is C(a-bb+i, i), so every division is exact.
    for (BigInt i = 1; i <= bb; ++i) {
        result *= a.value() - bb + i;
        result /= i;
    }
    return Natural(std::move(result));
}

Natural ipow(const Natural& base, const Natural& exp) {
    BigInt result = 1;
    BigInt b = base.value();
    BigInt e = exp.value();
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) {
            result *= b;
        }
        e >>= 1;
        if (e > 0) {
            b *= b;
        }
    }
    return Natural(std::move(result));
}

Natural factorial(const Natural& n) {
    std::uint32_t top = n.to_index();
    BigInt result = 1;
    for (std::uint32_t i = 2; i <= top; ++i) {
        result *= i;
    }
    return Natural(std::move(result));
}

Natural gcd(const Natural& a, const Natural& b) {
    return Natural(BigInt(boost::multiprecision::gcd(a.value(), b.value())));
}

}  // namespace hypersum
