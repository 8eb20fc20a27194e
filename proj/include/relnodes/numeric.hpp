#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace relnodes {

// Plain value semantics (expression templates off) so the types compose with
// containers and std::tuple without surprises.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// binomial(n, k) for n >= 0; 0 when k < 0 or k > n.
inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline Int int_pow(Int base, long exp) {
    Int r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

// The rational constructor rejects negative denominators; normalize the sign.
inline Rat make_rat(Int num, Int den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

// "p" or "p/q", used by the polynomial JSON schema.
inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_from_string(const std::string& s);

}  // namespace relnodes
