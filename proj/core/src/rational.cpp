#include "dmagic/rational.hpp"

#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace dmagic {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_ == 0) throw std::domain_error("zero denominator");
    normalize();
}

void Rational::normalize()
{
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)), BigInt(1));
        return Rational(BigInt(std::string(text.substr(0, slash))),
                        BigInt(std::string(text.substr(slash + 1))));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
}

std::string Rational::to_string() const
{
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

double Rational::to_double() const
{
    return num_.convert_to<double>() / den_.convert_to<double>();
}

Rational& Rational::operator+=(const Rational& o)
{
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.num_ == 0) throw std::domain_error("division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

}  // namespace dmagic
