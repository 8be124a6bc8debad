#include "parafock/exactalg/gaussian_rational.hpp"

#include <ostream>
#include <stdexcept>

namespace parafock {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size())
        return false;
    for (std::size_t k = start; k < s.size(); ++k) {
        if (s[k] < '0' || s[k] > '9')
            return false;
    }
    return true;
}

}  // namespace

mpq_class parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational '" + std::string(text) + "', expected a/b");
    std::string n(num[0] == '+' ? num.substr(1) : num);
    mpz_class numerator(n, 10);
    mpz_class denominator(std::string(den), 10);
    if (denominator == 0)
        throw std::invalid_argument("rational '" + std::string(text) + "' has zero denominator");
    mpq_class q(numerator, denominator);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const mpq_class& q)
{
    return q.get_str();
}

GaussianRational GaussianRational::rational(long num, long den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    mpq_class q(num, 1);
    q /= den;
    return GaussianRational(q);
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_.swap(re);
    im_.swap(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o)
{
    if (o.is_zero())
        throw std::domain_error("division by zero in Q(i)");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    mpq_class d = o.norm2();
    *this *= o.conj();
    re_ /= d;
    im_ /= d;
    return *this;
}

std::string GaussianRational::to_string() const
{
    if (sgn(im_) == 0)
        return re_.get_str();
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = im_.get_str() + "*i";
    if (sgn(re_) == 0)
        return imag;
    std::string out = re_.get_str();
    if (imag[0] != '-')
        out += '+';
    return out + imag;
}

GaussianRational pow(const GaussianRational& base, unsigned exponent)
{
    GaussianRational result(1);
    GaussianRational b = base;
    while (exponent) {
        if (exponent & 1U)
            result *= b;
        exponent >>= 1U;
        if (exponent)
            b *= b;
    }
    return result;
}

GaussianRational scalar_arith(const GaussianRational& x, const GaussianRational& y, ScalarOp kind)
{
    switch (kind) {
    case ScalarOp::add:
        return x + y;
    case ScalarOp::mul:
        return x * y;
    case ScalarOp::div:
        return x / y;
    case ScalarOp::conj:
        return x.conj();
    }
    throw std::logic_error("unknown scalar op");
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z)
{
    return os << z.to_string();
}

}  // namespace parafock
