#include "relnodes/assembly.hpp"

#include "relnodes/errors.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

namespace relnodes {

namespace {

// Template pools, their polynomials and extended-template data are reused
// heavily across the assembly; everything here is computed once per cogenus.
struct Caches {
    std::mutex mutex;
    std::map<int, std::vector<Template>> templates;
    std::map<int, std::vector<ExtendedTemplate>> exts;
    std::map<const void*, MultiPoly> template_polys;   // keyed by pool element
    std::map<const void*, MultiPoly> ext_q_polys;
    std::map<int, NodePolynomial> node_polys;

    const std::vector<Template>& template_pool(int delta) {
        std::lock_guard lock(mutex);
        auto it = templates.find(delta);
        if (it == templates.end()) it = templates.emplace(delta, enumerate_templates(delta)).first;
        return it->second;
    }
    const std::vector<ExtendedTemplate>& ext_pool(int delta) {
        std::lock_guard lock(mutex);
        auto it = exts.find(delta);
        if (it == exts.end())
            it = exts.emplace(delta, enumerate_extended_templates(delta)).first;
        return it->second;
    }
    const MultiPoly& poly_of(const Template& t) {
        std::lock_guard lock(mutex);
        auto it = template_polys.find(&t);
        if (it == template_polys.end()) it = template_polys.emplace(&t, t.poly()).first;
        return it->second;
    }
    const MultiPoly& q_of(const ExtendedTemplate& e) {
        std::lock_guard lock(mutex);
        auto it = ext_q_polys.find(&e);
        if (it == ext_q_polys.end()) it = ext_q_polys.emplace(&e, e.q_poly()).first;
        return it->second;
    }
};

Caches& caches() {
    static Caches c;
    return c;
}

MultiPoly first_factor_cached(const std::vector<const Template*>& templates, int l_ext) {
    // Nested sums inward-out: G_s(x) = sum_{k=L_s}^{x} P_s(k) G_{s-1}(k - l(G_{s-1})).
    // The lower bounds cascade, L_s = max(k_min(G_s), L_{s-1} + l(G_{s-1})):
    // positions below that violate the non-overlap inequalities and their true
    // contribution is an empty inner sum, not the Faulhaber continuation.
    MultiPoly g;
    bool have_g = false;
    int prev_length = 0, lower = 0;
    Int mu = 1;
    for (const Template* t : templates) {
        MultiPoly summand = caches().poly_of(*t);
        if (have_g)
            summand *= g.substituted(var_x(), MultiPoly::variable(var_k()) -
                                                  MultiPoly(Rat(prev_length)));
        lower = have_g ? std::max(t->invariants().k_min, lower + prev_length)
                       : t->invariants().k_min;
        g = discrete_sum(summand, var_k(), lower, var_x());
        have_g = true;
        prev_length = t->length();
        mu *= t->multiplicity();
    }
    if (!have_g) return MultiPoly(1);
    MultiPoly result = g.substituted(
        var_x(), MultiPoly::variable(var_D()) - MultiPoly(Rat(l_ext + prev_length)));
    return result.scaled(Rat(mu));
}

// Enumerate ordered template collections of total cogenus `budget`, with the
// collection defect sum(delta_i) - m capped when max_defect >= 0, and hand
// each to `emit`.
void for_each_collection(int budget, int max_defect,
                         const std::function<void(const std::vector<const Template*>&)>& emit) {
    std::vector<const Template*> chosen;
    auto rec = [&](auto&& self, int left, int defect_left) -> void {
        if (left == 0) {
            emit(chosen);
            return;
        }
        for (int part = 1; part <= left; ++part) {
            if (max_defect >= 0 && part - 1 > defect_left) continue;
            for (const Template& t : caches().template_pool(part)) {
                chosen.push_back(&t);
                self(self, left - part, defect_left - (part - 1));
                chosen.pop_back();
            }
        }
    };
    rec(rec, budget, max_defect);
}

// sum over ordered collections of cogenus `budget` of first_factor(c, l_ext);
// memoized per (budget, l_ext, max_defect).
const MultiPoly& collection_sum(int budget, int l_ext, int max_defect) {
    static std::map<std::tuple<int, int, int>, MultiPoly> memo;
    static std::mutex memo_mutex;
    std::lock_guard lock(memo_mutex);
    auto key = std::make_tuple(budget, l_ext, max_defect);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    MultiPoly total;
    for_each_collection(budget, max_defect, [&](const std::vector<const Template*>& c) {
        total += first_factor_cached(c, l_ext);
    });
    return memo.emplace(key, std::move(total)).first->second;
}

MultiPoly alpha_multinomial_poly(const SupportMatrix& A) {
    MultiPoly out(1);
    for (auto& [j, colsum] : A.column_sums()) {
        MultiPoly falling(1);
        for (int t = 0; t < colsum; ++t)
            falling *= MultiPoly::variable(var_a(j)) - MultiPoly(Rat(t));
        Int denom = 1;
        for (auto& [rc, v] : A.entries())
            if (rc.second == j) denom *= factorial(v);
        out *= falling.scaled(Rat(1, denom));
    }
    return out;
}

}  // namespace

MultiPoly first_factor(const std::vector<Template>& templates, int l_ext) {
    MultiPoly g;
    bool have_g = false;
    int prev_length = 0, lower = 0;
    Int mu = 1;
    for (const Template& t : templates) {
        MultiPoly summand = t.poly();
        if (have_g)
            summand *= g.substituted(var_x(), MultiPoly::variable(var_k()) -
                                                  MultiPoly(Rat(prev_length)));
        lower = have_g ? std::max(t.invariants().k_min, lower + prev_length)
                       : t.invariants().k_min;
        g = discrete_sum(summand, var_k(), lower, var_x());
        have_g = true;
        prev_length = t.length();
        mu *= t.multiplicity();
    }
    if (!have_g) return MultiPoly(1);
    MultiPoly result = g.substituted(
        var_x(), MultiPoly::variable(var_D()) - MultiPoly(Rat(l_ext + prev_length)));
    return result.scaled(Rat(mu));
}

MultiPoly R_poly(int delta) {
    if (delta < 0) throw DomainError("R polynomial needs delta >= 0");
    return collection_sum(delta, 0, -1);
}

MultiPoly second_factor(const ExtendedTemplate& ext, int delta) {
    if (ext.cogenus() > delta)
        throw DomainError("extended template cogenus exceeds the target delta");
    MultiPoly q = ext.q_poly();
    MultiPoly result = q.scaled(Rat(ext.lambda_multiplicity()));
    result *= alpha_multinomial_poly(ext.A());
    result *= falling_product(var_S(), ext.B().cogenus(), delta);
    return result;
}

namespace {

MultiPoly assemble(int delta, int jobs, int max_defect) {
    if (delta < 0) throw DomainError("node polynomial needs delta >= 0");
    if (delta > kMaxAssemblyDelta)
        throw ResourceError("delta > " + std::to_string(kMaxAssemblyDelta) +
                            " is outside the supported assembly range");
    // Bucket by extended template; each bucket is independent.
    struct Item {
        const ExtendedTemplate* ext;
        int budget;
    };
    std::vector<Item> items;
    for (int ext_delta = 0; ext_delta <= delta; ++ext_delta)
        for (const auto& ext : caches().ext_pool(ext_delta)) {
            if (max_defect >= 0) {
                Defects def = defects({}, ext);
                if (def.ext > max_defect) continue;
            }
            items.push_back({&ext, delta - ext_delta});
        }

    auto bucket_value = [&](const Item& item) {
        MultiPoly ext_part = caches().q_of(*item.ext).scaled(Rat(item.ext->lambda_multiplicity()));
        ext_part *= alpha_multinomial_poly(item.ext->A());
        ext_part *= falling_product(var_S(), item.ext->B().cogenus(), delta);
        return collection_sum(item.budget, item.ext->length(), max_defect) * ext_part;
    };

    MultiPoly total;
    if (jobs <= 1) {
        for (const auto& item : items) total += bucket_value(item);
        return total;
    }
    // Warm the shared collection sums serially so workers only read them.
    for (const auto& item : items) collection_sum(item.budget, item.ext->length(), max_defect);
    for (int part = 1; part <= delta; ++part)
        for (const auto& t : caches().template_pool(part)) caches().poly_of(t);
    // Deterministic parallel reduction: per-item results combined in order.
    std::atomic<size_t> next{0};
    std::vector<MultiPoly> results(items.size());
    std::vector<std::thread> workers;
    int n = std::max(1, jobs);
    for (int w = 0; w < n; ++w)
        workers.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1))
                results[i] = bucket_value(items[i]);
        });
    for (auto& w : workers) w.join();
    for (auto& r : results) total += r;
    return total;
}

}  // namespace

NodePolynomial node_polynomial(int delta, const AssemblyOptions& options) {
    {
        std::lock_guard lock(caches().mutex);
        auto it = caches().node_polys.find(delta);
        if (it != caches().node_polys.end()) return it->second;
    }
    NodePolynomial result{delta, assemble(delta, options.jobs, -1)};
    std::lock_guard lock(caches().mutex);
    caches().node_polys.emplace(delta, result);
    return result;
}

Int evaluate_relative_severi(int delta, const TangencySequence& alpha,
                             const TangencySequence& beta, const AssemblyOptions& options) {
    if (beta.norm() < delta)
        throw DomainError("|beta| < delta: the polynomial route does not apply here; "
                          "use the floor-diagram enumeration instead");
    NodePolynomial np = node_polynomial(delta, options);
    std::map<Var, Rat> values;
    values[var_D()] = Rat(alpha.weighted() + beta.weighted());
    values[var_S()] = Rat(beta.norm());
    for (int i = 1; i <= delta; ++i) {
        values[var_a(i)] = Rat(alpha.at(i));
        values[var_b(i)] = Rat(beta.at(i));
    }
    Rat value = np.poly.evaluated(values);
    Rat prefactor = Rat(factorial(beta.norm() - delta), beta.factorial_product());
    for (auto& [i, v] : beta.entries()) prefactor *= Rat(int_pow(Int(i), v));
    Rat total = prefactor * value;
    if (denominator(total) != 1)
        throw Error("relative Severi degree evaluated to a non-integer");
    return numerator(total);
}

Defects defects(const std::vector<Template>& templates, const ExtendedTemplate& ext) {
    Defects d;
    for (const auto& t : templates) d.templates += t.cogenus() - 1;
    d.ext = ext.lambda_cogenus() + 2 * ext.A().cogenus() + 2 * ext.B().cogenus() -
            ext.A().norm1() - ext.B().norm1();
    return d;
}

MultiPoly leading_terms(int delta, int t, const AssemblyOptions& options) {
    if (delta < 1 || t < 0) throw DomainError("leading terms need delta >= 1, t >= 0");
    return assemble(delta, options.jobs, t).truncated_above(3 * delta - t);
}

MultiPoly leading_terms_closed_form(int delta) {
    auto D = [] { return MultiPoly::variable(var_D()); };
    auto S = [] { return MultiPoly::variable(var_S()); };
    auto A1 = [] { return MultiPoly::variable(var_a(1)); };
    auto B1 = [] { return MultiPoly::variable(var_b(1)); };
    long dl = delta;

    // Each displayed monomial is (rational in delta) * D^e1 S^e2 * vars; the
    // trailing blocks are offset by D^(2 delta - 4) S^(delta - 2), which only
    // stays integral because every monomial that survives at small delta
    // carries enough D and S factors of its own.
    struct Piece {
        Rat coeff;
        int ed, es;
        MultiPoly vars;
    };
    std::vector<Piece> pieces;
    auto push = [&](Rat c, int ed, int es, MultiPoly vars) {
        if (c != 0) pieces.push_back({c, ed, es, std::move(vars)});
    };

    push(1, 2 * delta, delta, MultiPoly(1));

    Rat f1 = Rat(dl, 3);
    push(f1 * Rat(-3 * (dl - 1), 2), 2 * delta, delta - 1, MultiPoly(1));
    push(f1 * -8, 2 * delta - 1, delta, MultiPoly(1));
    push(f1, 2 * delta - 2, delta, A1());
    push(f1, 2 * delta - 1, delta - 1, B1());
    push(f1, 2 * delta - 2, delta, B1());

    Rat f2 = Rat(dl, 9);
    push(f2 * Rat(3 * (dl - 1) * (dl - 2) * (3 * dl - 1), 8), 2 * delta, delta - 2, MultiPoly(1));
    push(f2 * Rat(12 * dl * (dl - 1)), 2 * delta - 1, delta - 1, MultiPoly(1));
    push(f2 * Rat(11 * dl + 1), 2 * delta - 2, delta, MultiPoly(1));
    push(f2 * Rat(-3 * dl * (dl - 1), 2), 2 * delta - 1, delta - 2, B1());
    push(f2 * Rat(-3 * dl * (dl - 1), 2), 2 * delta - 2, delta - 1, A1());
    push(f2 * Rat(-(dl + 5) * (3 * dl - 2), 2), 2 * delta - 2, delta - 1, B1());
    push(f2 * Rat(-8 * (dl - 1)), 2 * delta - 3, delta, A1());
    push(f2 * Rat(-8 * (dl - 1)), 2 * delta - 3, delta, B1());
    push(f2 * Rat(dl - 1, 2), 2 * delta - 2, delta - 2, B1() * B1());
    push(f2 * Rat(dl - 1, 2), 2 * delta - 4, delta, A1() * A1());
    push(f2 * Rat(dl - 1, 2), 2 * delta - 4, delta, B1() * B1());
    push(f2 * Rat(dl - 1), 2 * delta - 3, delta - 1, A1() * B1());
    push(f2 * Rat(dl - 1), 2 * delta - 3, delta - 1, B1() * B1());
    push(f2 * Rat(dl - 1), 2 * delta - 4, delta, A1() * B1());

    MultiPoly total;
    Rat scale = Rat(int_pow(3, delta), factorial(delta));
    for (const auto& piece : pieces) {
        if (piece.ed < 0 || piece.es < 0)
            throw Error("closed-form expansion produced a negative exponent with a "
                        "non-vanishing coefficient");
        MultiPoly term = MultiPoly(piece.coeff * scale);
        if (piece.ed > 0) term *= MultiPoly::variable(var_D(), piece.ed);
        if (piece.es > 0) term *= MultiPoly::variable(var_S(), piece.es);
        total += term * piece.vars;
    }
    return total;
}

Rat r_expansion_coefficient(int delta, int drop) {
    Rat lead = Rat(int_pow(3, delta), factorial(delta));
    long dl = delta;
    switch (drop) {
        case 0: return lead;
        case 1: return lead * Rat(-8 * dl, 3);
        case 2: return lead * Rat(dl * (11 * dl + 1), 9);
        case 3: return lead * Rat(dl * (dl - 1) * (496 * dl - 245), 162);
        default: throw DomainError("r_expansion_coefficient supports drops 0..3");
    }
}

}  // namespace relnodes
