#ifndef SEMRANK_RATIONAL_HPP
#define SEMRANK_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace semrank {

class RationalOverflowError : public std::overflow_error {
public:
    RationalOverflowError() : std::overflow_error("rational arithmetic overflow") {}
};

// Exact rational number backed by signed 128-bit integers.
//
// All score arithmetic in the ranking engine runs on this type; magnitudes
// are bounded in practice by the forest-enumeration cap (24 candidate
// edges), which keeps denominators well inside 128 bits. Every operation
// is overflow-checked and throws RationalOverflowError instead of
// wrapping. Comparison walks the continued-fraction expansion of both
// operands, so it never multiplies and cannot overflow.
class Rational {
public:
    using Int = __int128;

    constexpr Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}

    Rational(Int numerator, Int denominator) : num_(numerator), den_(denominator) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        normalize();
    }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Rational& operator+=(const Rational& other) {
        // a/b + c/d = (a*(d/g) + c*(b/g)) / (b*(d/g)), g = gcd(b, d)
        Int g = gcd128(den_, other.den_);
        Int db = den_ / g;
        Int dd = other.den_ / g;
        Int left = checked_mul(num_, dd);
        Int right = checked_mul(other.num_, db);
        num_ = checked_add(left, right);
        den_ = checked_mul(den_, dd);
        normalize();
        return *this;
    }

    Rational& operator-=(const Rational& other) { return *this += -other; }

    Rational& operator*=(const Rational& other) {
        // cross-reduce before multiplying to keep magnitudes small
        Int g1 = gcd128(abs128(num_), other.den_);
        Int g2 = gcd128(abs128(other.num_), den_);
        num_ = checked_mul(num_ / g1, other.num_ / g2);
        den_ = checked_mul(den_ / g2, other.den_ / g1);
        normalize();
        return *this;
    }

    Rational& operator/=(const Rational& other) {
        if (other.num_ == 0) throw std::domain_error("rational division by zero");
        Rational inv;
        inv.num_ = other.den_;
        inv.den_ = other.num_;
        if (inv.den_ < 0) {
            inv.num_ = -inv.num_;
            inv.den_ = -inv.den_;
        }
        return *this *= inv;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    // Overflow-free three-way comparison via continued-fraction descent.
    int compare(const Rational& other) const {
        if (num_ == other.num_ && den_ == other.den_) return 0;
        bool neg_a = num_ < 0;
        bool neg_b = other.num_ < 0;
        if (neg_a != neg_b) return neg_a ? -1 : 1;
        if (neg_a) return compare_positive(-other.num_, other.den_, -num_, den_);
        return compare_positive(num_, den_, other.num_, other.den_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = a.compare(b);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    double to_double() const {
        return static_cast<double>(static_cast<long double>(num_) /
                                   static_cast<long double>(den_));
    }

    // Fixed-point decimal rendering, rounding half away from zero.
    std::string to_decimal(int digits) const;

    // Exact "n/d" form ("n" when the value is integral).
    std::string to_fraction_string() const;

    static Int gcd128(Int a, Int b) {
        a = abs128(a);
        b = abs128(b);
        while (b != 0) {
            Int t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

private:
    Int num_;
    Int den_;

    static Int abs128(Int v) { return v < 0 ? -v : v; }

    static Int checked_add(Int a, Int b) {
        Int r;
        if (__builtin_add_overflow(a, b, &r)) throw RationalOverflowError();
        return r;
    }
    static Int checked_mul(Int a, Int b) {
        Int r;
        if (__builtin_mul_overflow(a, b, &r)) throw RationalOverflowError();
        return r;
    }

    // Compares a/b vs c/d for a,c >= 0 and b,d > 0 without multiplying.
    static int compare_positive(Int a, Int b, Int c, Int d) {
        while (true) {
            Int qa = a / b, ra = a % b;
            Int qc = c / d, rc = c % d;
            if (qa != qc) return qa < qc ? -1 : 1;
            if (ra == 0 && rc == 0) return 0;
            if (ra == 0) return -1;
            if (rc == 0) return 1;
            // compare ra/b vs rc/d  <=>  compare d/rc vs b/ra (reversed)
            Int na = d, nb = rc, nc = b, nd = ra;
            a = na;
            b = nb;
            c = nc;
            d = nd;
        }
    }

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Int g = gcd128(num_, den_);
        num_ /= g;
        den_ /= g;
    }
};

// Decimal string for a signed 128-bit integer (helper shared with rendering).
std::string int128_to_string(__int128 value);

}  // namespace semrank

#endif
