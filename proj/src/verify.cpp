#include "relnodes/verify.hpp"

#include "relnodes/appendix.hpp"
#include "relnodes/assembly.hpp"
#include "relnodes/errors.hpp"
#include "relnodes/figures.hpp"
#include "relnodes/floor_diagram.hpp"

#include <algorithm>
#include <sstream>

namespace relnodes {

namespace {

std::string edges_label(const std::vector<Edge>& edges) {
    std::string out = "{";
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i) out += ",";
        out += "(" + std::to_string(edges[i].src) + "," + std::to_string(edges[i].dst) + "," +
               std::to_string(edges[i].w) + ")";
    }
    return out + "}";
}

void fail(CheckResult& r, const std::string& message) {
    if (r.pass) {
        r.pass = false;
        r.detail = message;
    }
}

}  // namespace

CheckResult check_template_table() {
    CheckResult r{"templates delta<=2 reproduce the reference table"};
    std::vector<Template> pool;
    for (int delta = 1; delta <= 2; ++delta)
        for (auto& t : enumerate_templates(delta)) pool.push_back(t);
    size_t expected[3] = {0, 2, 7};
    for (int delta = 1; delta <= 2; ++delta) {
        size_t got = std::count_if(pool.begin(), pool.end(),
                                   [&](const Template& t) { return t.cogenus() == delta; });
        if (got != expected[delta])
            fail(r, "template count at delta=" + std::to_string(delta) + ": got " +
                        std::to_string(got) + ", table has " + std::to_string(expected[delta]));
    }
    if (pool.size() != template_table().size())
        fail(r, "total template count mismatch against the table");
    for (const auto& row : template_table()) {
        std::vector<Edge> sorted = row.edges;
        std::sort(sorted.begin(), sorted.end());
        auto it = std::find_if(pool.begin(), pool.end(),
                               [&](const Template& t) { return t.edges() == sorted; });
        if (it == pool.end()) {
            fail(r, "table row " + edges_label(row.edges) + " was not enumerated");
            continue;
        }
        auto inv = it->invariants();
        if (inv.length != row.length || inv.mu != row.mu || inv.kappa != row.kappa ||
            inv.cogenus != row.delta || inv.k_min != row.k_min)
            fail(r, "invariants differ on row " + edges_label(row.edges));
        if (it->poly() != MultiPoly::parse(row.poly))
            fail(r, "P differs on row " + edges_label(row.edges));
        if (inv.s != row.s) fail(r, "s differs on row " + edges_label(row.edges));
        if (row.printed_s && *row.printed_s != inv.s)
            r.flags.push_back("row " + edges_label(row.edges) + ": table prints s=" +
                              std::to_string(*row.printed_s) + ", formula gives s=" +
                              std::to_string(inv.s));
    }
    return r;
}

CheckResult check_ext_template_table() {
    CheckResult r{"extended templates delta<=2 reproduce the reference table"};
    std::vector<ExtendedTemplate> pool;
    for (int delta = 0; delta <= 2; ++delta)
        for (auto& t : enumerate_extended_templates(delta)) pool.push_back(t);
    size_t expected[3] = {1, 2, 11};
    for (int delta = 0; delta <= 2; ++delta) {
        size_t got = std::count_if(pool.begin(), pool.end(), [&](const ExtendedTemplate& t) {
            return t.cogenus() == delta;
        });
        if (got != expected[delta])
            fail(r, "extended template count at delta=" + std::to_string(delta) + ": got " +
                        std::to_string(got) + ", table has " + std::to_string(expected[delta]));
    }
    if (pool.size() != ext_template_table().size())
        fail(r, "total extended template count mismatch against the table");
    for (const auto& row : ext_template_table()) {
        std::vector<Edge> sorted = row.lambda;
        std::sort(sorted.begin(), sorted.end());
        auto it = std::find_if(pool.begin(), pool.end(), [&](const ExtendedTemplate& t) {
            return t.length() == row.length && t.lambda() == sorted && t.A() == row.A &&
                   t.B() == row.B;
        });
        std::string label = "l=" + std::to_string(row.length) + " " + edges_label(row.lambda);
        if (it == pool.end()) {
            fail(r, "table row " + label + " was not enumerated");
            continue;
        }
        auto inv = it->invariants();
        if (inv.cogenus != row.delta || it->lambda_multiplicity() != row.mu ||
            inv.kappa != row.kappa)
            fail(r, "invariants differ on row " + label);
        if (inv.d_min != row.d_min) fail(r, "d_min differs on row " + label);
        if (inv.s != row.s) fail(r, "s differs on row " + label);
        if (it->q_poly() != MultiPoly::parse(row.q)) fail(r, "q differs on row " + label);
        if (row.printed_d_min && *row.printed_d_min != inv.d_min)
            r.flags.push_back("row " + label + ": table prints d_min=" +
                              std::to_string(*row.printed_d_min) + ", formula gives " +
                              std::to_string(inv.d_min));
        if (row.printed_length && *row.printed_length != row.length)
            r.flags.push_back("row " + label + ": table prints l=" +
                              std::to_string(*row.printed_length) +
                              ", the printed kappa vector forces l=" + std::to_string(row.length));
    }
    return r;
}

CheckResult check_appendix(int delta) {
    CheckResult r{"node polynomial delta=" + std::to_string(delta) + " matches the reference"};
    MultiPoly mine = node_polynomial(delta).poly;
    const MultiPoly& reference = appendix_node_polynomial(delta);
    if (mine != reference) {
        MultiPoly diff = mine - reference;
        std::ostringstream os;
        os << "difference has " << diff.term_count() << " terms, first: ";
        if (!diff.terms().empty()) {
            MultiPoly first = MultiPoly::monomial(diff.terms().begin()->second,
                                                  diff.terms().begin()->first);
            os << first.to_string();
        }
        fail(r, os.str());
    }
    return r;
}

CheckResult check_dual_path(int delta, int max_degree, int jobs) {
    CheckResult r{"enumeration and polynomial agree for delta=" + std::to_string(delta) +
                  ", d<=" + std::to_string(max_degree)};
    AssemblyOptions options;
    options.jobs = jobs;
    node_polynomial(delta, options);  // warm the cache with the requested parallelism
    int cases = 0;
    for (int d = 1; d <= max_degree; ++d) {
        for (int wa = 0; wa <= d; ++wa) {
            for (const auto& alpha : sequences_with_weight(wa)) {
                for (const auto& beta : sequences_with_weight(d - wa)) {
                    if (beta.norm() < delta) continue;
                    ++cases;
                    Int via_enum = severi_degree_enum(delta, alpha, beta);
                    Int via_poly = evaluate_relative_severi(delta, alpha, beta);
                    if (via_enum != via_poly)
                        fail(r, "mismatch at alpha=(" + alpha.to_string() + ") beta=(" +
                                    beta.to_string() + "): enum " + via_enum.str() + " vs poly " +
                                    via_poly.str());
                }
            }
        }
    }
    r.name += " (" + std::to_string(cases) + " cases)";
    if (cases == 0) fail(r, "no admissible cases in range");
    return r;
}

CheckResult check_classical_specializations() {
    CheckResult r{"classical specializations (one node; zero nodes)"};
    long expected1[7] = {0, 0, 3, 12, 27, 48, 75};  // 3(d-1)^2
    for (int d = 1; d <= 6; ++d) {
        TangencySequence beta;
        beta.set(1, d);
        Int via_enum = severi_degree_enum(1, {}, beta);
        Int via_poly = evaluate_relative_severi(1, {}, beta);
        if (via_enum != Int(expected1[d]) || via_poly != Int(expected1[d]))
            fail(r, "N^{d,1} at d=" + std::to_string(d) + ": enum " + via_enum.str() + " poly " +
                        via_poly.str() + " expected " + std::to_string(expected1[d]));
    }
    // Cogenus zero: the count is the pure prefactor.
    int shapes = 0;
    for (int w = 1; w <= 5 && shapes < 20; ++w) {
        for (const auto& beta : sequences_with_weight(w)) {
            if (beta.is_zero()) continue;
            if (++shapes > 20) break;
            Int expected = factorial(beta.norm()) / beta.factorial_product();
            for (auto& [i, v] : beta.entries()) expected *= int_pow(Int(i), v);
            Int got = severi_degree_enum(0, {}, beta);
            Int via_poly = evaluate_relative_severi(0, {}, beta);
            if (got != expected || via_poly != expected)
                fail(r, "cogenus-0 count at beta=(" + beta.to_string() + "): got " + got.str() +
                            " / " + via_poly.str() + " expected " + expected.str());
        }
    }
    return r;
}

CheckResult check_r_expansion(int max_delta) {
    CheckResult r{"R expansion coefficients (top four) for delta<=" + std::to_string(max_delta)};
    for (int delta = 1; delta <= max_delta; ++delta) {
        MultiPoly R = R_poly(delta);
        for (int drop = 0; drop <= 3; ++drop) {
            int exp = 2 * delta - drop;
            Rat expected = r_expansion_coefficient(delta, drop);
            if (exp < 0) {
                if (expected != 0)
                    fail(r, "closed form has a negative-exponent coefficient at delta=" +
                                std::to_string(delta));
                continue;
            }
            Rat got = exp == 0 ? R.coefficient({}) : R.coefficient({{var_D(), exp}});
            if (got != expected)
                fail(r, "R_" + std::to_string(delta) + " coeff of D^" + std::to_string(exp) +
                            ": got " + rat_to_string(got) + " expected " + rat_to_string(expected));
        }
    }
    return r;
}

CheckResult check_leading_terms(int max_delta, int node_poly_cap) {
    CheckResult r{"leading terms (depth 2) match the closed form for delta<=" +
                  std::to_string(max_delta)};
    for (int delta = 1; delta <= max_delta; ++delta) {
        MultiPoly lead = leading_terms(delta, 2);
        if (lead != leading_terms_closed_form(delta))
            fail(r, "closed-form mismatch at delta=" + std::to_string(delta));
        if (delta <= node_poly_cap) {
            MultiPoly truncated = node_polynomial(delta).poly.truncated_above(3 * delta - 2);
            if (lead != truncated)
                fail(r, "truncation mismatch at delta=" + std::to_string(delta));
        }
    }
    return r;
}

std::vector<CheckResult> run_verification(int delta, int max_degree, int jobs) {
    std::vector<CheckResult> out;
    out.push_back(check_template_table());
    out.push_back(check_ext_template_table());
    for (int d = 0; d <= std::min(delta, 3); ++d) out.push_back(check_appendix(d));
    for (int d = 0; d <= std::min(delta, 2); ++d) out.push_back(check_dual_path(d, max_degree, jobs));
    if (delta > 2 && delta <= 3) out.push_back(check_dual_path(delta, std::min(max_degree, 4), jobs));
    out.push_back(check_classical_specializations());
    out.push_back(check_r_expansion(std::min(delta, 4)));
    out.push_back(check_leading_terms(std::min(delta, 4), std::min(delta, 3)));
    return out;
}

}  // namespace relnodes
