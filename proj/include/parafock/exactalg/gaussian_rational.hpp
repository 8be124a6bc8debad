#ifndef PARAFOCK_EXACTALG_GAUSSIAN_RATIONAL_HPP
#define PARAFOCK_EXACTALG_GAUSSIAN_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace parafock {

/// Parses "a/b" or "a" into a canonical rational. Throws std::invalid_argument
/// on malformed input or a zero denominator.
mpq_class parse_rational(std::string_view text);

std::string rational_to_string(const mpq_class& q);

/// Exact element re + im*i of Q(i). Both parts are kept canonical (coprime,
/// positive denominator), so structural equality is value equality.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
    static GaussianRational rational(long num, long den);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2 = re^2 + im^2
    mpq_class norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o);
    /// Throws std::domain_error when o == 0.
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Deterministic text form: "0", "3/2", "-i", "1/2*i", "1-1/2*i".
    std::string to_string() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

GaussianRational pow(const GaussianRational& base, unsigned exponent);

enum class ScalarOp { add, mul, div, conj };

/// Field operation dispatcher; conj ignores y.
GaussianRational scalar_arith(const GaussianRational& x, const GaussianRational& y, ScalarOp kind);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace parafock

#endif
