#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <json.hpp>

#include "errors.hpp"

namespace symcalc {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const Integer& r) { return r.is_zero(); }

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rational& r) { return denominator_of(r) == 1; }

inline Integer to_integer(const Rational& r) {
    if (!is_integral(r)) throw DomainError("expected an integer, got " + r.str());
    return numerator_of(r);
}

/// Rationals act as constants in the lambda-ring: p_k(c) = c.
inline Rational frobenius(const Rational& r, int) { return r; }

inline Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Integer binomial(const Integer& n, int k) {
    if (k < 0 || n < k) return 0;
    Integer r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

inline nlohmann::json rational_to_json(const Rational& r) {
    return {{"num", numerator_of(r).str()}, {"den", denominator_of(r).str()}};
}

inline Rational rational_from_json(const nlohmann::json& j) {
    Integer num(j.at("num").get<std::string>());
    Integer den(j.at("den").get<std::string>());
    if (den == 0) throw DomainError("zero denominator in rational");
    return Rational(num, den);
}

inline Rational parse_rational(const std::string& text) { return Rational(text); }

}  // namespace symcalc
