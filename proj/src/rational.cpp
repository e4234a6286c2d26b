#include "pbf/rational.hpp"

#include <cctype>

namespace pbf {

namespace {

bool is_integer_token(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational Rational::from_string(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer_token(num))
        throw Error(Errc::parse_error, "malformed rational '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rational(BigInt(std::string(num), 10));

    std::string_view den = text.substr(slash + 1);
    if (!is_integer_token(den) || den.front() == '-')
        throw Error(Errc::parse_error, "malformed rational '" + std::string(text) + "'");
    BigInt d(std::string(den), 10);
    if (d == 0)
        throw Error(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    return Rational(BigInt(std::string(num), 10), std::move(d));
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational abs(const Rational& v) {
    return v.sign() < 0 ? -v : v;
}

Rational pow(const Rational& v, unsigned exponent) {
    if (exponent == 0) return Rational(1);
    return Rational(ipow(v.numerator(), exponent), ipow(v.denominator(), exponent));
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt ipow(const BigInt& base, unsigned exponent) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

} // namespace pbf
