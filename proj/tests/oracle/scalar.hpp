// Fixed-width exact Gaussian rationals for the reference engine. Every
// operation is checked: a result that does not fit in 64-bit numerator and
// denominator throws instead of wrapping.
#ifndef PARAFOCK_TESTS_SCALAR_HPP
#define PARAFOCK_TESTS_SCALAR_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dense {

class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.num_ == 0)
            throw std::domain_error("oracle: division by zero");
        return make(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }
    Rational operator-() const
    {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend bool operator==(const Rational&, const Rational&) = default;

private:
    static __int128 gcd(__int128 a, __int128 b)
    {
        if (a < 0)
            a = -a;
        if (b < 0)
            b = -b;
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational make(__int128 n, __int128 d)
    {
        if (d == 0)
            throw std::domain_error("oracle: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const __int128 g = n == 0 ? d : gcd(n, d);
        n /= g;
        d /= g;
        constexpr __int128 lim = INT64_MAX;
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error("oracle: rational exceeds 64 bits");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// re + im*i
class Scalar {
public:
    constexpr Scalar() = default;
    constexpr Scalar(std::int64_t n) : re_(n) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational re, Rational im = {}) : re_(re), im_(im) {}  // NOLINT(google-explicit-constructor)

    static Scalar i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
    friend Scalar operator*(const Scalar& a, const Scalar& b)
    {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b)
    {
        const Rational n = b.re_ * b.re_ + b.im_ * b.im_;
        const Scalar c{b.re_ / n, -b.im_ / n};
        return a * c;
    }
    Scalar operator-() const { return {-re_, -im_}; }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    friend bool operator==(const Scalar&, const Scalar&) = default;

private:
    Rational re_;
    Rational im_;
};

}  // namespace dense

#endif
