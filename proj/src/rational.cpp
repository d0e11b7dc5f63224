#include "tsl/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace tsl {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_ == 0) throw std::invalid_argument("rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational Rational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("rational: empty literal");
    if (s.find('.') != std::string::npos)
        throw std::invalid_argument("rational: decimals not accepted, use exact fractions like 1/10000");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s), BigInt(1));
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (num.empty() || den.empty() || den[0] == '-' || den[0] == '+')
            throw std::invalid_argument("bad");
        return Rational(BigInt(num), BigInt(den));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    }
}

BigInt Rational::floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

BigInt Rational::ceil() const {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rational Rational::mod1() const {
    return *this - Rational(floor(), BigInt(1));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace tsl
