// Acceptance suite: one line per criterion, nonzero exit on any failure.
// RELNODES_STRETCH=1 additionally runs the large node polynomials and reports
// their term counts (informational, never failing).

#include "relnodes/appendix.hpp"
#include "relnodes/assembly.hpp"
#include "relnodes/errors.hpp"
#include "relnodes/figures.hpp"
#include "relnodes/floor_diagram.hpp"
#include "relnodes/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

using namespace relnodes;

namespace {

int failures = 0;

void report(int criterion, const std::string& label, bool pass, const std::string& note,
            double seconds) {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << label;
    if (!note.empty()) os << " -- " << note;
    os << "  [" << seconds << "s]";
    std::cout << os.str() << std::endl;
    if (!pass) ++failures;
}

template <typename F>
void run(int criterion, const std::string& label, F&& body) {
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string note;
    try {
        note = body();
        pass = true;
    } catch (const std::exception& e) {
        note = e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(criterion, label, pass, note, seconds);
}

void expect(bool condition, const std::string& message) {
    if (!condition) throw VerificationError(message);
}

std::string flags_note(const CheckResult& r) {
    if (!r.pass) throw VerificationError(r.detail);
    std::string note;
    for (const auto& f : r.flags) note += (note.empty() ? "flagged: " : "; ") + f;
    return note;
}

}  // namespace

int main() {
    run(1, "template table reproduction (delta <= 2)", [] {
        auto start = std::chrono::steady_clock::now();
        auto r = check_template_table();
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        expect(s < 1.0, "runtime above 1s");
        return flags_note(r);
    });

    run(2, "extended template table reproduction (delta <= 2)", [] {
        auto start = std::chrono::steady_clock::now();
        auto r = check_ext_template_table();
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        expect(s < 1.0, "runtime above 1s");
        return flags_note(r);
    });

    run(3, "node polynomials match the published N_0..N_3", [] {
        for (int delta = 0; delta <= 3; ++delta) {
            auto r = check_appendix(delta);
            if (!r.pass) throw VerificationError(r.detail);
        }
        return "N_3 has " + std::to_string(node_polynomial(3).poly.term_count()) + " terms";
    });

    run(4, "dual-path Severi degrees (d <= 6, delta <= 2, |beta| >= delta)", [] {
        std::string note;
        for (int delta = 0; delta <= 2; ++delta) {
            auto r = check_dual_path(delta, 6);
            if (!r.pass) throw VerificationError(r.detail);
            note += (note.empty() ? "" : ", ") + r.name;
        }
        return note;
    });

    run(5, "classical specializations", [] {
        auto r = check_classical_specializations();
        if (!r.pass) throw VerificationError(r.detail);
        return std::string{};
    });

    run(6, "R expansion coefficients (delta <= 4)", [] {
        auto r = check_r_expansion(4);
        if (!r.pass) throw VerificationError(r.detail);
        return std::string{};
    });

    run(7, "leading terms at depth 2 (delta <= 4)", [] {
        auto r = check_leading_terms(4, 4);
        if (!r.pass) throw VerificationError(r.detail);
        return std::string{};
    });

    run(8, "property suites", [] {
        std::string note;

        // Discrete-sum telescoping, 500 randomized cases.
        std::mt19937 rng(2026);
        for (int kase = 0; kase < 500; ++kase) {
            MultiPoly p;
            int deg = static_cast<int>(rng() % 6);
            for (int e = 0; e <= deg; ++e)
                p += MultiPoly::variable(var_k(), e)
                         .scaled(Rat(static_cast<long>(rng() % 19) - 9,
                                     1 + static_cast<long>(rng() % 4)));
            long c = static_cast<long>(rng() % 7) - 3;
            MultiPoly f = discrete_sum(p, var_k(), c, var_x());
            expect(f.evaluated({{var_x(), Rat(c - 1)}}) == 0, "telescoping base case");
            long x = c + static_cast<long>(rng() % 40);
            expect(f.evaluated({{var_x(), Rat(x)}}) - f.evaluated({{var_x(), Rat(x - 1)}}) ==
                       p.evaluated({{var_k(), Rat(x)}}),
                   "telescoping step");
        }

        // Round trip, cogenus additivity and the marking factorization over
        // every diagram with d <= 5, delta <= 2 and every compatible pair.
        long pairs_checked = 0;
        for (int d = 1; d <= 5; ++d) {
            for (int delta = 0; delta <= 2; ++delta) {
                for (const auto& D : enumerate_floor_diagrams(d, delta)) {
                    for (int wa = 0; wa <= d; ++wa) {
                        for (const auto& alpha : sequences_with_weight(wa)) {
                            for (const auto& beta : sequences_with_weight(d - wa)) {
                                Int direct = 0, factored = 0;
                                for (const auto& pair :
                                     enumerate_compatible_pairs(D, alpha, beta)) {
                                    ++pairs_checked;
                                    auto dec = decompose(D, pair);
                                    int total = dec.ext.cogenus();
                                    for (auto& [t, k] : dec.templates) total += t.cogenus();
                                    expect(total == delta, "cogenus additivity");
                                    auto [D2, pair2] =
                                        recompose(dec.templates, dec.ext, alpha, beta);
                                    expect(D2 == D && pair2 == pair, "round trip");
                                    direct += count_markings_for_pair(D, pair);
                                    Int term = 1;
                                    for (auto& [t, k] : dec.templates)
                                        term *= t.extensions_at(k);
                                    term *= seq_multinomial(alpha, dec.ext.A().rows());
                                    term *= dec.ext.Q_count(alpha, beta);
                                    factored += term;
                                }
                                expect(direct == factored, "marking factorization");
                            }
                        }
                    }
                }
            }
        }
        note = std::to_string(pairs_checked) + " decompositions";

        // Vanishing just below d_min for every extended template, delta <= 3.
        for (int delta = 0; delta <= 3; ++delta) {
            for (const auto& ext : enumerate_extended_templates(delta)) {
                auto inv = ext.invariants();
                if (inv.s == 0) continue;
                MultiPoly q = ext.q_poly();
                for (int d = inv.d_min - inv.s; d <= inv.d_min - 1; ++d) {
                    for (int wb = 0; wb <= d; ++wb) {
                        for (const auto& beta : sequences_with_weight(wb)) {
                            if (!beta.contains(ext.B().row_sum())) continue;
                            std::map<Var, Rat> at{{var_D(), Rat(d)}, {var_S(), Rat(beta.norm())}};
                            for (auto v : q.support_vars())
                                if (!at.count(v)) at[v] = Rat(beta.at(v.index));
                            expect(q.evaluated(at) == 0, "vanishing below d_min");
                        }
                    }
                }
            }
        }

        // Threshold inequalities for all generated objects, delta <= 4.
        for (int delta = 0; delta <= 4; ++delta) {
            for (const auto& ext : enumerate_extended_templates(delta)) {
                auto inv = ext.invariants();
                expect(inv.d_min - inv.s <= delta + 1, "extended threshold inequality");
            }
            if (delta >= 1)
                for (const auto& t : enumerate_templates(delta)) {
                    auto inv = t.invariants();
                    expect(inv.k_min + inv.length - inv.s <= delta + 2,
                           "template threshold inequality");
                }
        }

        // Stability: no variable above the cogenus occurs, delta <= 3.
        for (int delta = 1; delta <= 3; ++delta) {
            const MultiPoly& poly = node_polynomial(delta).poly;
            for (int i = delta + 1; i <= delta + 2; ++i)
                expect(!poly.mentions(var_a(i)) && !poly.mentions(var_b(i)),
                       "stability in the tangency variables");
        }

        // The running example contributes 5.
        FloorDiagram D(4, {{1, 2, 1}, {2, 3, 2}, {3, 4, 1}, {3, 4, 1}});
        CompatiblePair pair;
        pair.alpha_per.resize(4);
        pair.beta_per.resize(4);
        pair.alpha_per[3] = TangencySequence({1});
        pair.beta_per[2] = TangencySequence({1});
        pair.beta_per[3] = TangencySequence({0, 1});
        expect(count_markings_for_pair(D, pair) == 5, "running example");

        return note;
    });

    if (!std::getenv("RELNODES_SKIP_STRETCH")) {
        run(9, "large-delta stretch (informational term counts)", [] {
            // Never gating: the counts are recorded, agreement is a bonus.
            std::string note;
            for (int delta = 4; delta <= 6; ++delta) {
                size_t terms = node_polynomial(delta).poly.term_count();
                int reported = reported_term_count(delta);
                note += "N_" + std::to_string(delta) + ": " + std::to_string(terms) + " terms (" +
                        (static_cast<int>(terms) == reported ? "matches the reported "
                                                             : "reported value is ") +
                        std::to_string(reported) + "); ";
            }
            return note;
        });
    } else {
        std::cout << "SKIP  criterion 9: large-delta stretch (RELNODES_SKIP_STRETCH set)"
                  << std::endl;
    }

    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
