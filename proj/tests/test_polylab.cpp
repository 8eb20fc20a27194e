#include "relnodes/errors.hpp"
#include "relnodes/multipoly.hpp"

#include <doctest.h>

#include <random>

using namespace relnodes;

namespace {

MultiPoly D() { return MultiPoly::variable(var_D()); }
MultiPoly S() { return MultiPoly::variable(var_S()); }
MultiPoly K() { return MultiPoly::variable(var_k()); }
MultiPoly X() { return MultiPoly::variable(var_x()); }

MultiPoly random_poly(std::mt19937& rng, Var v, int max_deg) {
    MultiPoly p;
    int deg = static_cast<int>(rng() % (max_deg + 1));
    for (int e = 0; e <= deg; ++e) {
        long num = static_cast<long>(rng() % 11) - 5;
        long den = 1 + static_cast<long>(rng() % 3);
        p += MultiPoly::variable(v, e).scaled(Rat(num, den));
    }
    return p;
}

}  // namespace

TEST_CASE("arithmetic canonical forms") {
    CHECK((D() + MultiPoly(1)) * (D() - MultiPoly(1)) == D() * D() - MultiPoly(1));
    MultiPoly p = MultiPoly::parse("3 d^2 s - 8 d s + 4");
    CHECK(p + MultiPoly(0) == p);
    CHECK(D() * D() * S() * S() * S().scaled(3) == MultiPoly::parse("3 d^2 s^2") * S());
}

TEST_CASE("canonical order is graded lexicographic, top term first") {
    MultiPoly p = MultiPoly::parse("1 + d + s + d s + d^2");
    std::vector<std::string> order;
    for (auto& [m, c] : p.terms()) {
        MultiPoly term = MultiPoly::monomial(c, m);
        order.push_back(term.to_string());
    }
    CHECK(order == std::vector<std::string>{"D^2", "D S", "D", "S", "1"});
}

TEST_CASE("discrete sums") {
    CHECK(discrete_sum(K() - MultiPoly(1), var_k(), 2, var_x()) ==
          (X() * (X() - MultiPoly(1))).scaled(Rat(1, 2)));
    CHECK(discrete_sum(MultiPoly(1), var_k(), 1, var_x()) == X());
    CHECK(discrete_sum(K().scaled(2) + MultiPoly(1), var_k(), 1, var_x()) ==
          X() * X() + X().scaled(2));
}

TEST_CASE("discrete sum telescoping, 500 randomized cases") {
    std::mt19937 rng(23);
    int cases = 0;
    while (cases < 500) {
        MultiPoly p = random_poly(rng, var_k(), 5);
        long c = static_cast<long>(rng() % 9) - 4;
        MultiPoly f = discrete_sum(p, var_k(), c, var_x());
        CHECK(f.evaluated({{var_x(), Rat(c - 1)}}) == 0);
        for (int probe = 0; probe < 5; ++probe, ++cases) {
            long x = c + static_cast<long>(rng() % 30);
            // Direct summation is the independent oracle.
            Rat direct = 0;
            for (long k = c; k <= x; ++k) direct += p.evaluated({{var_k(), Rat(k)}});
            CHECK(f.evaluated({{var_x(), Rat(x)}}) == direct);
            CHECK(f.evaluated({{var_x(), Rat(x)}}) - f.evaluated({{var_x(), Rat(x - 1)}}) ==
                  p.evaluated({{var_k(), Rat(x)}}));
        }
    }
}

TEST_CASE("discrete sum carries polynomial coefficients") {
    MultiPoly p = S() * K();  // sum_{k=1}^{x} S k = S x(x+1)/2
    MultiPoly f = discrete_sum(p, var_k(), 1, var_x());
    CHECK(f == (S() * X() * (X() + MultiPoly(1))).scaled(Rat(1, 2)));
}

TEST_CASE("interpolation") {
    CHECK(interpolate({{2, 1}, {3, 2}}, 1, var_k()) == K() - MultiPoly(1));
    CHECK(interpolate({{1, 3}, {2, 5}, {3, 7}}, 1, var_k()) == K().scaled(2) + MultiPoly(1));
    CHECK(interpolate({{0, 0}, {1, 0}}, 0, var_k()) == MultiPoly(0));
    CHECK_THROWS_AS(interpolate({{1, 1}, {2, 2}, {3, 5}}, 1, var_k()), DegreeOverflowError);
}

TEST_CASE("interpolate after evaluate is the identity") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        MultiPoly p = random_poly(rng, var_k(), 4);
        int deg = std::max(p.degree_in(var_k()), 0);
        std::vector<std::pair<long, Rat>> points;
        for (long k = -1; k <= deg + 2; ++k) points.push_back({k, p.evaluated({{var_k(), Rat(k)}})});
        CHECK(interpolate(points, deg, var_k()) == p);
    }
}

TEST_CASE("falling products") {
    CHECK(falling_product(var_x(), 2, 2) == MultiPoly(1));
    CHECK(falling_product(var_x(), 0, 3) == MultiPoly::parse("x^3 - 3 x^2 + 2 x"));
    CHECK(falling_product(var_x(), 1, 2) == X() - MultiPoly(1));
}

TEST_CASE("Stirling numbers of the first kind") {
    CHECK(stirling_first(3, 3) == 1);
    CHECK(stirling_first(3, 2) == -3);
    CHECK(stirling_first(3, 1) == 2);
    CHECK(stirling_first(0, 0) == 1);
    for (int n = 0; n <= 10; ++n) {
        MultiPoly product = falling_product(var_x(), 0, n);
        for (int m = 0; m <= n; ++m) {
            Monomial mono;
            if (m > 0) mono.push_back({var_x(), m});
            CHECK(product.coefficient(mono) == Rat(stirling_first(n, m)));
        }
    }
}

TEST_CASE("p minus p is structurally zero") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        MultiPoly p = random_poly(rng, var_D(), 4) * random_poly(rng, var_S(), 3);
        CHECK((p - p).is_zero());
        CHECK((p - p) == MultiPoly(0));
    }
}

TEST_CASE("substitution and truncation") {
    MultiPoly p = MultiPoly::parse("d^2 s + d + 1");
    CHECK(p.substituted(var_D(), X() - MultiPoly(2)) ==
          MultiPoly::parse("x^2 s - 4 x s + 4 s + x - 1"));
    CHECK(p.truncated_above(2) == MultiPoly::parse("d^2 s"));
    CHECK(p.total_degree() == 3);
}

TEST_CASE("json round trip and parse") {
    MultiPoly p = MultiPoly::parse("3/2 d^2 s - b2 + a1 s");
    CHECK(p.coefficient({{var_D(), 2}, {var_S(), 1}}) == Rat(3, 2));
    CHECK(p.coefficient({{var_b(2), 1}}) == Rat(-1));
    CHECK(p.mentions(var_a(1)));
    CHECK(!p.mentions(var_a(2)));
}
