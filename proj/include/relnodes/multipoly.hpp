#pragma once

#include "relnodes/numeric.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace relnodes {

// Formal variables, ordered D < S < a_1 < a_2 < ... < b_1 < b_2 < ... < k < x.
struct Var {
    enum Kind : uint8_t { D = 0, S = 1, A = 2, B = 3, K = 4, X = 5 };
    Kind kind = D;
    int index = 0;  // used for A/B families only

    auto operator<=>(const Var&) const = default;

    std::string name() const;             // "D", "S", "a3", "b2", "k", "x"
    static Var parse(const std::string&);  // inverse of name()
};

inline Var var_D() { return {Var::D, 0}; }
inline Var var_S() { return {Var::S, 0}; }
inline Var var_a(int i) { return {Var::A, i}; }
inline Var var_b(int i) { return {Var::B, i}; }
inline Var var_k() { return {Var::K, 0}; }
inline Var var_x() { return {Var::X, 0}; }

// Sparse exponent vector, sorted by variable; zero exponents never stored.
using Monomial = std::vector<std::pair<Var, int>>;

int monomial_degree(const Monomial& m);

// Canonical term order: higher total degree first, then lexicographically
// larger (with respect to the variable order above) first.  Iterating a
// polynomial therefore visits terms exactly in the printed canonical order.
struct GradedLexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Exact multivariate polynomial over the rationals in canonical form: no zero
// coefficients, unique term map, equality is structural equality.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(const Rat& c);
    explicit MultiPoly(long c);

    static MultiPoly variable(Var v, int exp = 1);
    static MultiPoly monomial(const Rat& c, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(Var v) const;
    bool mentions(Var v) const;
    size_t term_count() const { return terms_.size(); }

    Rat coefficient(const Monomial& m) const;
    // Coefficient of v^e as a polynomial in the remaining variables.
    MultiPoly coefficient_of(Var v, int e) const;
    std::vector<Var> support_vars() const;

    MultiPoly operator+(const MultiPoly&) const;
    MultiPoly operator-(const MultiPoly&) const;
    MultiPoly operator*(const MultiPoly&) const;
    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly&);
    MultiPoly& operator-=(const MultiPoly&);
    MultiPoly& operator*=(const MultiPoly&);
    MultiPoly scaled(const Rat& c) const;

    bool operator==(const MultiPoly&) const = default;

    MultiPoly substituted(Var v, const MultiPoly& replacement) const;
    Rat evaluated(const std::map<Var, Rat>& values) const;  // all vars must be covered

    // Terms of total degree >= bound.
    MultiPoly truncated_above(int bound) const;

    const std::map<Monomial, Rat, GradedLexDesc>& terms() const { return terms_; }

    // "3 D^2 S - 8 D S + ..." with the library variable names.
    std::string to_string() const;
    // Appendix-flavoured rendering: d, |beta|, alpha_i, beta_i.
    std::string to_pretty_string() const;

    // Term-list syntax accepted: signs, optional rational coefficient,
    // variable powers like "d^2", "s", "a1", "b2^3".  d ~ D, s ~ S.
    static MultiPoly parse(const std::string& text);

private:
    void prune();
    std::map<Monomial, Rat, GradedLexDesc> terms_;
};

// F(x) = sum_{k=c}^{x} p(k) as an exact polynomial identity; p may carry other
// variables in its coefficients.  deg_x F = deg_k p + 1 and F(c-1) = 0.
MultiPoly discrete_sum(const MultiPoly& p, Var k, long c, Var x);

// Unique polynomial of the stated degree in `v` through the first degree+1
// points; throws DegreeOverflowError unless it also passes through the rest.
MultiPoly interpolate(const std::vector<std::pair<long, Rat>>& points, int degree, Var v);

// Expanded product prod_{i=c}^{delta-1} (v - i); 1 when c == delta.
MultiPoly falling_product(Var v, int c, int delta);

// Signed Stirling number of the first kind s(n, m).
Int stirling_first(int n, int m);

}  // namespace relnodes
