#include "relnodes/errors.hpp"
#include "relnodes/extended_template.hpp"
#include "relnodes/figures.hpp"

#include <doctest.h>

#include <algorithm>

using namespace relnodes;

namespace {

SupportMatrix mat(std::initializer_list<std::tuple<int, int, int>> cells) {
    SupportMatrix m;
    for (auto& [i, j, v] : cells) m.set(i, j, v);
    return m;
}

}  // namespace

TEST_CASE("extended template counts") {
    CHECK(enumerate_extended_templates(0).size() == 1);
    CHECK(enumerate_extended_templates(1).size() == 2);
    CHECK(enumerate_extended_templates(2).size() == 11);
}

TEST_CASE("reference table rows are reproduced") {
    std::vector<ExtendedTemplate> pool;
    for (int delta = 0; delta <= 2; ++delta)
        for (auto& t : enumerate_extended_templates(delta)) pool.push_back(t);
    CHECK(pool.size() == ext_template_table().size());
    for (const auto& row : ext_template_table()) {
        std::vector<Edge> sorted = row.lambda;
        std::sort(sorted.begin(), sorted.end());
        auto it = std::find_if(pool.begin(), pool.end(), [&](const ExtendedTemplate& t) {
            return t.length() == row.length && t.lambda() == sorted && t.A() == row.A &&
                   t.B() == row.B;
        });
        REQUIRE(it != pool.end());
        auto inv = it->invariants();
        CHECK(inv.cogenus == row.delta);
        CHECK(it->lambda_multiplicity() == row.mu);
        CHECK(inv.kappa == row.kappa);
        CHECK(inv.d_min == row.d_min);
        CHECK(inv.s == row.s);
        CHECK(it->q_poly() == MultiPoly::parse(row.q));
    }
}

TEST_CASE("invariants of sample extended templates") {
    ExtendedTemplate a_row(1, {{0, 1, 2}}, mat({{1, 1, 1}}), {});
    auto inv = a_row.invariants();
    CHECK(inv.d_min == 4);
    CHECK(inv.s == 1);

    ExtendedTemplate b_row(2, {{0, 2, 1}}, {}, mat({{1, 1, 1}}));
    inv = b_row.invariants();
    CHECK(inv.d_min == 3);
    CHECK(inv.s == 0);

    // The worked example: d_min = max(4, 11, 8) = 11 at i0 = 2 with two
    // parallel edges between vertices 1 and 2.
    ExtendedTemplate worked(3, {{0, 3, 1}, {1, 2, 2}, {1, 2, 3}, {2, 3, 2}},
                            mat({{1, 1, 1}, {2, 1, 1}}), mat({{2, 2, 1}}));
    inv = worked.invariants();
    CHECK(inv.d_min == 11);
    CHECK(inv.i0 == 2);
    CHECK(inv.s == 2);
}

TEST_CASE("validation") {
    // l(Lambda) must reach the longest matrix.
    CHECK_THROWS_AS(ExtendedTemplate(1, {}, mat({{2, 1, 1}}), {}), DomainError);
    // No short edges.
    CHECK_THROWS_AS(ExtendedTemplate(1, {{0, 1, 1}}, mat({{1, 1, 1}}), {}), DomainError);
    // Vertices far from the right end must be passed by an edge.
    CHECK_THROWS_AS(ExtendedTemplate(2, {{1, 2, 2}}, mat({{1, 1, 1}}), {}), DomainError);
}

TEST_CASE("marking poset structure") {
    // Trivial template, beta=(2), d=2: two interchangeable subdivided
    // beta-edges between the backbone and the extra vertex.
    ExtendedTemplate trivial;
    auto poset = trivial.marking_poset(TangencySequence({2}), 2);
    CHECK(poset.gap_count == 1);
    REQUIRE(poset.classes.size() == 1);
    CHECK(poset.classes[0].size == 2);
    CHECK(poset.count_extensions() == 1);

    // B = b11, l = 1, beta = (b1): d-2 short mid-elements in the first gap,
    // one B midpoint free over both gaps, b1 - 1 residual midpoints at the end.
    ExtendedTemplate b_row(1, {}, {}, mat({{1, 1, 1}}));
    int d = 5, b1 = 3;
    poset = b_row.marking_poset(TangencySequence({b1}), d);
    CHECK(poset.gap_count == 2);
    int shorts = 0, residuals = 0, wide = 0;
    for (auto& cls : poset.classes) {
        if (cls.lo == 1 && cls.hi == 1) shorts += cls.size;
        if (cls.lo == 2 && cls.hi == 2) residuals += cls.size;
        if (cls.lo == 1 && cls.hi == 2) wide += cls.size;
    }
    CHECK(shorts == d - 2);
    CHECK(residuals == b1 - 1);
    CHECK(wide == 1);

    CHECK_THROWS_AS(b_row.marking_poset(TangencySequence({1}), 1), DomainError);
    CHECK_THROWS_AS(b_row.marking_poset({}, 5), DomainError);
}

TEST_CASE("Q counts") {
    ExtendedTemplate b_row(1, {}, {}, mat({{1, 1, 1}}));
    CHECK(b_row.Q_count({}, TangencySequence({3})) == 5);

    ExtendedTemplate trivial;
    TangencySequence beta({1, 2});  // any shape with the full degree on beta
    CHECK(trivial.Q_count({}, beta) == factorial(beta.norm()) / beta.factorial_product());

    ExtendedTemplate a_row(1, {}, mat({{1, 1, 1}}), {});
    CHECK(a_row.Q_count(TangencySequence({1}), TangencySequence({1})) == 1);
}

TEST_CASE("q polynomials of sample extended templates") {
    CHECK(ExtendedTemplate{}.q_poly() == MultiPoly(1));
    ExtendedTemplate b_row(1, {}, {}, mat({{1, 1, 1}}));
    CHECK(b_row.q_poly() == MultiPoly::parse("b1 d + b1 s - b1"));
    ExtendedTemplate b_row2(1, {}, {}, mat({{1, 1, 2}}));
    MultiPoly expected = MultiPoly::parse("d^2 + 2 d s + s^2 - 5 d - 5 s + 6") *
                         MultiPoly::parse("b1^2 - b1").scaled(Rat(1, 2));
    CHECK(b_row2.q_poly() == expected);
}

TEST_CASE("q agrees with Q on a grid") {
    for (int delta = 0; delta <= 2; ++delta) {
        for (const auto& ext : enumerate_extended_templates(delta)) {
            MultiPoly q = ext.q_poly();
            int deltaB = ext.B().cogenus();
            auto cols = ext.B().column_sums();
            for (int d = ext.d_min(); d <= ext.d_min() + 3; ++d) {
                for (int wb = 0; wb <= d; ++wb) {
                    for (const auto& beta : sequences_with_weight(wb)) {
                        if (!beta.contains(ext.B().row_sum())) continue;
                        if (beta.norm() < deltaB) continue;
                        // alpha carries the A rows plus filler at index 1.
                        TangencySequence alpha = ext.A().row_sum();
                        int filler = d - wb - alpha.weighted();
                        if (filler < 0) continue;
                        alpha.add(1, filler);
                        std::map<Var, Rat> at;
                        at[var_D()] = d;
                        at[var_S()] = beta.norm();
                        for (auto& [j, v] : cols) at[var_b(j)] = beta.at(j);
                        for (auto v : q.support_vars())
                            if (!at.count(v)) at[v] = beta.at(v.index);
                        Rat expected = Rat(factorial(beta.norm() - deltaB),
                                           beta.factorial_product()) *
                                       q.evaluated(at);
                        CHECK(Rat(ext.Q_count(alpha, beta)) == expected);
                    }
                }
            }
        }
    }
}

TEST_CASE("q vanishes just below d_min") {
    for (int delta = 0; delta <= 3; ++delta) {
        for (const auto& ext : enumerate_extended_templates(delta)) {
            auto inv = ext.invariants();
            if (inv.s == 0) continue;
            MultiPoly q = ext.q_poly();
            for (int d = inv.d_min - inv.s; d <= inv.d_min - 1; ++d) {
                for (int wb = 0; wb <= d; ++wb) {
                    for (const auto& beta : sequences_with_weight(wb)) {
                        if (!beta.contains(ext.B().row_sum())) continue;
                        std::map<Var, Rat> at;
                        at[var_D()] = d;
                        at[var_S()] = beta.norm();
                        for (auto v : q.support_vars())
                            if (!at.count(v)) at[v] = beta.at(v.index);
                        CHECK(q.evaluated(at) == 0);
                    }
                }
            }
        }
    }
}

TEST_CASE("threshold inequality up to delta 4") {
    for (int delta = 0; delta <= 4; ++delta) {
        for (const auto& ext : enumerate_extended_templates(delta)) {
            auto inv = ext.invariants();
            CHECK(inv.d_min - inv.s <= delta + 1);
        }
    }
}

TEST_CASE("q degree and variable support") {
    for (int delta = 0; delta <= 3; ++delta) {
        for (const auto& ext : enumerate_extended_templates(delta)) {
            MultiPoly q = ext.q_poly();
            int expected = static_cast<int>(ext.lambda().size()) + ext.B().norm1() +
                           ext.B().cogenus();
            CHECK(q.total_degree() == (q.is_zero() ? -1 : expected));
            for (auto v : q.support_vars()) CHECK(v.kind != Var::A);
        }
    }
}
