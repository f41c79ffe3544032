#include "lpsign/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "lpsign/errors.hpp"

namespace lpsign {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// "123", "1.5", "0.25" with optional exponent already stripped.
Rational decimal_to_rational(std::string_view body, std::string_view where) {
    auto dot = body.find('.');
    std::string digits;
    long frac_len = 0;
    if (dot == std::string_view::npos) {
        digits = std::string(body);
    } else {
        digits = std::string(body.substr(0, dot)) + std::string(body.substr(dot + 1));
        frac_len = static_cast<long>(body.size() - dot - 1);
        if (digits.empty()) throw ParseError("empty numeric literal: '" + std::string(where) + "'");
    }
    if (!all_digits(digits)) throw ParseError("malformed numeric literal: '" + std::string(where) + "'");
    Rational r(Integer(digits, 10));
    for (long i = 0; i < frac_len; ++i) r /= 10;
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty rational literal");

    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ParseError("malformed rational literal: '" + std::string(text) + "'");

    Rational value;
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed fraction literal: '" + std::string(text) + "'");
        Integer d(std::string(den), 10);
        if (sgn(d) == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
        value = Rational(Integer(std::string(num), 10), d);
        value.canonicalize();
    } else {
        auto epos = s.find_first_of("eE");
        long exp10 = 0;
        std::string_view body = s;
        if (epos != std::string_view::npos) {
            body = s.substr(0, epos);
            std::string etext(s.substr(epos + 1));
            if (etext.empty()) throw ParseError("malformed exponent: '" + std::string(text) + "'");
            char* end = nullptr;
            exp10 = std::strtol(etext.c_str(), &end, 10);
            if (end == nullptr || *end != '\0')
                throw ParseError("malformed exponent: '" + std::string(text) + "'");
        }
        value = decimal_to_rational(body, text);
        for (long i = 0; i < exp10; ++i) value *= 10;
        for (long i = 0; i > exp10; --i) value /= 10;
    }
    if (neg) value = -value;
    return value;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (sgn(q) == 0) {
        if (e < 0) throw PreconditionError("pow: zero base with negative exponent");
        return Rational(0);
    }
    Rational base = e < 0 ? Rational(q.get_den(), q.get_num()) : q;
    if (e < 0) base.canonicalize();
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), n);
    out.canonicalize();
    return out;
}

Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer ceil(const Rational& q) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

}  // namespace lpsign
