#include "dioph/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace dioph {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Integer parse_integer(std::string_view text) {
    std::size_t i = 0;
    std::string digits;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        if (text[i] == '-') digits.push_back('-');
        ++i;
    }
    if (i == text.size()) throw std::invalid_argument("expected integer, got '" + std::string(text) + "'");
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("expected integer, got '" + std::string(text) + "'");
        digits.push_back(text[i]);
    }
    return Integer(digits, 10);
}

Rational Rational::parse(std::string_view text) {
    // trim surrounding blanks
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw std::invalid_argument("sign not allowed in denominator: '" + std::string(text) + "'");
    const Integer den = parse_integer(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
    return Rational(r);
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

std::size_t Rational::hash() const {
    const std::size_t h1 = mpz_get_ui(value_.get_num_mpz_t()) ^ (static_cast<std::size_t>(sgn(value_)) << 1);
    const std::size_t h2 = mpz_get_ui(value_.get_den_mpz_t());
    return h1 * 0x9e3779b97f4a7c15ULL ^ (h2 + (h1 << 6) + (h1 >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace dioph
