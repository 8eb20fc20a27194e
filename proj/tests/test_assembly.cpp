#include "relnodes/appendix.hpp"
#include "relnodes/assembly.hpp"
#include "relnodes/errors.hpp"
#include "relnodes/floor_diagram.hpp"

#include <doctest.h>

using namespace relnodes;

namespace {

SupportMatrix mat(std::initializer_list<std::tuple<int, int, int>> cells) {
    SupportMatrix m;
    for (auto& [i, j, v] : cells) m.set(i, j, v);
    return m;
}

}  // namespace

TEST_CASE("first factors of single templates") {
    Template wt2(1, {{0, 1, 2}});
    CHECK(first_factor({wt2}, 0) == MultiPoly::parse("2 d^2 - 6 d + 4"));
    Template len2(2, {{0, 2, 1}});
    CHECK(first_factor({len2}, 0) == MultiPoly::parse("d^2 - 2 d"));
    CHECK(first_factor({}, 3) == MultiPoly(1));
}

TEST_CASE("R polynomials") {
    CHECK(R_poly(0) == MultiPoly(1));
    CHECK(R_poly(1) == MultiPoly::parse("3 d^2 - 8 d + 4"));
    MultiPoly r2 = R_poly(2);
    CHECK(r2.coefficient({{var_D(), 4}}) == Rat(9, 2));
    CHECK(r2.coefficient({{var_D(), 3}}) == Rat(-24));
}

TEST_CASE("R expansion coefficients up to delta 4") {
    for (int delta = 1; delta <= 4; ++delta) {
        MultiPoly r = R_poly(delta);
        for (int drop = 0; drop <= 3; ++drop) {
            int exp = 2 * delta - drop;
            if (exp < 0) {
                CHECK(r_expansion_coefficient(delta, drop) == 0);
                continue;
            }
            Monomial m;
            if (exp > 0) m.push_back({var_D(), exp});
            CHECK(r.coefficient(m) == r_expansion_coefficient(delta, drop));
        }
    }
}

TEST_CASE("second factors at delta 1") {
    CHECK(second_factor(ExtendedTemplate{}, 1) == MultiPoly::parse("s"));
    ExtendedTemplate a_row(1, {}, mat({{1, 1, 1}}), {});
    CHECK(second_factor(a_row, 1) == MultiPoly::parse("a1 s"));
    ExtendedTemplate b_row(1, {}, {}, mat({{1, 1, 1}}));
    CHECK(second_factor(b_row, 1) == MultiPoly::parse("b1 d + b1 s - b1"));
}

TEST_CASE("node polynomials match the published ones") {
    CHECK(node_polynomial(0).poly == appendix_node_polynomial(0));
    CHECK(node_polynomial(1).poly == appendix_node_polynomial(1));
    CHECK(node_polynomial(1).poly ==
          MultiPoly::parse("3 d^2 s - 8 d s + d b1 + s a1 + s b1 + 4 s - b1"));
    CHECK(node_polynomial(2).poly == appendix_node_polynomial(2));
    CHECK(node_polynomial(2).poly.term_count() == 47);
}

TEST_CASE("node polynomial invariants") {
    for (int delta = 1; delta <= 3; ++delta) {
        auto np = node_polynomial(delta);
        CHECK(np.poly.total_degree() == 3 * delta);
        Monomial lead = {{var_D(), 2 * delta}, {var_S(), delta}};
        CHECK(np.poly.coefficient(lead) == Rat(int_pow(3, delta), factorial(delta)));
        for (int i = delta + 1; i <= delta + 2; ++i) {
            CHECK(!np.poly.mentions(var_a(i)));
            CHECK(!np.poly.mentions(var_b(i)));
        }
    }
}

TEST_CASE("non-relative specialization") {
    // At a = 0, b = (d) the polynomial is divisible by d (d-1) ... (d-delta+1)
    // and the delta = 1 quotient is 3 (d-1)^2.
    MultiPoly n1 = node_polynomial(1).poly;
    MultiPoly specialized = n1.substituted(var_S(), MultiPoly::variable(var_D()))
                                .substituted(var_b(1), MultiPoly::variable(var_D()))
                                .substituted(var_a(1), MultiPoly(0));
    CHECK(specialized == MultiPoly::parse("3 d^3 - 6 d^2 + 3 d"));  // d * 3(d-1)^2
}

TEST_CASE("evaluation against the prefactor") {
    CHECK(evaluate_relative_severi(1, {}, TangencySequence({4})) == 27);
    CHECK(evaluate_relative_severi(1, TangencySequence({1}), TangencySequence({1})) == 3);
    CHECK(evaluate_relative_severi(0, TangencySequence({0, 1}), TangencySequence({1, 1})) == 4);
    CHECK_THROWS_AS(evaluate_relative_severi(2, {}, TangencySequence({1})), DomainError);
}

TEST_CASE("defects") {
    Template len2(2, {{0, 2, 1}});
    CHECK(defects({len2, len2}, ExtendedTemplate{}).templates == 0);
    CHECK(defects({}, ExtendedTemplate{}).ext == 0);
    ExtendedTemplate b12(1, {}, {}, mat({{1, 2, 1}}));
    CHECK(defects({}, b12).ext == 3);
    Template wt3(1, {{0, 1, 3}});
    CHECK(defects({wt3}, ExtendedTemplate{}).templates == 1);
}

TEST_CASE("leading terms") {
    CHECK(leading_terms(1, 0) == MultiPoly::parse("3 d^2 s"));
    CHECK(leading_terms(2, 1) ==
          MultiPoly::parse("9/2 d^4 s^2 - 9/2 d^4 s - 24 d^3 s^2 + 3 d^3 s b1"
                           " + 3 d^2 s^2 a1 + 3 d^2 s^2 b1"));
    for (int delta = 1; delta <= 3; ++delta) {
        for (int t = 0; t <= 3; ++t)
            CHECK(leading_terms(delta, t) ==
                  node_polynomial(delta).poly.truncated_above(3 * delta - t));
        CHECK(leading_terms(delta, 2) == leading_terms_closed_form(delta));
    }
}

TEST_CASE("cross-oracle spot checks at delta 3") {
    TangencySequence beta3({3});
    CHECK(evaluate_relative_severi(3, {}, beta3) == severi_degree_enum(3, {}, beta3));
    TangencySequence beta4({4});
    CHECK(evaluate_relative_severi(3, {}, beta4) == severi_degree_enum(3, {}, beta4));
    TangencySequence alpha({2}), beta({3});
    CHECK(evaluate_relative_severi(3, alpha, beta) == severi_degree_enum(3, alpha, beta));
    TangencySequence beta31({3, 1});
    CHECK(evaluate_relative_severi(3, {}, beta31) == severi_degree_enum(3, {}, beta31));
}

TEST_CASE("delta beyond the supported range is refused") {
    CHECK_THROWS_AS(node_polynomial(kMaxAssemblyDelta + 1), ResourceError);
}
