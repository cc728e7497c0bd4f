#include "pert/rational.hpp"

#include "pert/error.hpp"

#include <cctype>

namespace pert {

namespace {

[[noreturn]] void bad_number(std::string_view text) {
    throw Error(ErrorKind::Input, "BadNumber", "not a rational number: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) bad_number(whole);
    mpz_class z(std::string(s), 10);
    return negative ? mpz_class(-z) : z;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
    mpz_class exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        exponent = parse_integer(s.substr(e + 1), whole);
        s = s.substr(0, e);
    }
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string digits;
    long frac_len = 0;
    auto dot = s.find('.');
    if (dot == std::string_view::npos) {
        digits = std::string(s);
    } else {
        auto int_part = s.substr(0, dot);
        auto frac_part = s.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) bad_number(whole);
        digits = std::string(int_part) + std::string(frac_part);
        frac_len = static_cast<long>(frac_part.size());
    }
    if (!all_digits(digits)) bad_number(whole);
    if (!exponent.fits_slong_p() || abs(exponent) > 4096) bad_number(whole);
    long shift = exponent.get_si() - frac_len;

    Rational r(mpz_class(digits, 10));
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0)
        r *= scale;
    else
        r /= scale;
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

} // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) bad_number(text);

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash), text);
        auto den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) bad_number(text);
        mpz_class den(std::string(den_text), 10);
        if (den == 0) throw Error(ErrorKind::Input, "BadNumber", "zero denominator in '" + std::string(text) + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    return parse_decimal(text, text);
}

std::string format_rational(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::vector<Rational> normalize_integral(std::vector<Rational> v) {
    mpz_class lcm_den = 1;
    for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_class g = 0;
    for (const auto& x : v) {
        mpz_class scaled = x.get_num() * (lcm_den / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    }
    if (g == 0) return v;
    Rational factor(lcm_den, g);
    factor.canonicalize();
    for (auto& x : v) x *= factor;
    return v;
}

} // namespace pert
