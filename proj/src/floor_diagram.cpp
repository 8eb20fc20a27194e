#include "relnodes/floor_diagram.hpp"

#include "relnodes/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace relnodes {

FloorDiagram::FloorDiagram(int degree, std::vector<Edge> edges)
    : degree_(degree), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    if (degree_ < 1) throw DomainError("floor diagram degree must be >= 1");
    for (const auto& e : edges_)
        if (!(1 <= e.src && e.src < e.dst && e.dst <= degree_ && e.w >= 1))
            throw DomainError("floor diagram edge out of range");
    for (int v = 1; v <= degree_; ++v)
        if (divergence(v) > 1)
            throw DomainError("divergence condition fails at vertex " + std::to_string(v));
}

int FloorDiagram::divergence(int v) const {
    int div = 0;
    for (const auto& e : edges_) {
        if (e.src == v) div += e.w;
        if (e.dst == v) div -= e.w;
    }
    return div;
}

Int FloorDiagram::multiplicity() const {
    Int m = 1;
    for (const auto& e : edges_) m *= Int(e.w) * e.w;
    return m;
}

FloorDiagram::Invariants FloorDiagram::invariants() const {
    // Union-find over vertices; isolated vertices are degree-1 components.
    std::vector<int> parent(degree_ + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& e : edges_) parent[find(e.src)] = find(e.dst);

    std::map<int, std::pair<int, int>> comp;  // root -> (vertices, edges)
    for (int v = 1; v <= degree_; ++v) comp[find(v)].first++;
    for (const auto& e : edges_) comp[find(e.src)].second++;

    Invariants inv;
    inv.degree = degree_;
    inv.connected = comp.size() == 1;
    inv.multiplicity = multiplicity();
    int cog = 0;
    std::vector<int> sizes;
    for (auto& [root, ve] : comp) {
        int genus = ve.second - ve.first + 1;
        inv.component_genus.push_back(genus);
        cog += (ve.first - 1) * (ve.first - 2) / 2 - genus;
        sizes.push_back(ve.first);
    }
    for (size_t a = 0; a < sizes.size(); ++a)
        for (size_t b = a + 1; b < sizes.size(); ++b) cog += sizes[a] * sizes[b];
    inv.cogenus = cog;
    return inv;
}

bool FloorDiagram::connected() const { return invariants().connected; }
int FloorDiagram::cogenus() const { return invariants().cogenus; }

std::vector<FloorDiagram> enumerate_floor_diagrams(int d, int delta) {
    if (d < 1 || delta < 0) throw DomainError("floor diagram enumeration needs d >= 1, delta >= 0");
    std::vector<FloorDiagram> out;

    // Pool of non-short edges; each contributes (dst-src)*w - 1 >= 1 to the
    // cogenus, the rest comes from gaps carrying fewer short edges than the
    // maximal diagram.
    std::vector<Edge> pool;
    for (int src = 1; src < d; ++src)
        for (int dst = src + 1; dst <= d; ++dst)
            for (int w = 1; (dst - src) * w - 1 <= delta; ++w)
                if ((dst - src) * w - 1 >= 1) pool.push_back({src, dst, w});

    std::vector<Edge> chosen;
    auto finish = [&](int excess) {
        // Crossing weight of the chosen edges per gap g = 1..d-1.
        std::vector<int> kappa(d, 0);
        for (const auto& e : chosen)
            for (int g = e.src; g < e.dst; ++g) kappa[g] += e.w;
        // Gap g may drop m_g short edges below the maximum g - kappa_g; the
        // divergence condition makes the deficits weakly increasing.
        std::vector<int> deficit(d, 0);
        auto rec = [&](auto&& self, int g, int left, int prev) -> void {
            if (g == d) {
                if (left != 0) return;
                std::vector<Edge> edges = chosen;
                for (int gg = 1; gg < d; ++gg) {
                    int shorts = gg - kappa[gg] - deficit[gg];
                    for (int t = 0; t < shorts; ++t) edges.push_back({gg, gg + 1, 1});
                }
                out.emplace_back(d, std::move(edges));
                return;
            }
            int cap = std::min(g - kappa[g], left);
            for (int m = prev; m <= cap; ++m) {
                deficit[g] = m;
                self(self, g + 1, left - m, m);
            }
            deficit[g] = 0;
        };
        if (d == 1) {
            if (excess == 0) out.emplace_back(1, std::vector<Edge>{});
            return;
        }
        rec(rec, 1, excess, 0);
    };

    auto pick = [&](auto&& self, size_t from, int budget) -> void {
        finish(budget);
        for (size_t i = from; i < pool.size(); ++i) {
            int contribution = (pool[i].dst - pool[i].src) * pool[i].w - 1;
            if (contribution > budget) continue;
            // Quick divergence screen: crossing weight of gap g can't exceed g.
            chosen.push_back(pool[i]);
            bool feasible = true;
            std::vector<int> kappa(d, 0);
            for (const auto& e : chosen)
                for (int g = e.src; g < e.dst; ++g) {
                    kappa[g] += e.w;
                    if (kappa[g] > g) feasible = false;
                }
            if (feasible) self(self, i, budget - contribution);
            chosen.pop_back();
        }
    };
    pick(pick, 0, delta);
    return out;
}

namespace {

// All sub-pairs (alpha_v, beta_v) with weighted degree `need`, bounded by the
// remaining tangency budget.
void vertex_splits(const TangencySequence& alpha_left, const TangencySequence& beta_left, int need,
                   std::vector<std::pair<TangencySequence, TangencySequence>>& out) {
    std::vector<std::pair<int, int>> alpha_caps, beta_caps;
    for (auto& [i, v] : alpha_left.entries()) alpha_caps.push_back({i, v});
    for (auto& [i, v] : beta_left.entries()) beta_caps.push_back({i, v});

    TangencySequence a, b;
    auto recb = [&](auto&& self, size_t idx, int left) -> void {
        if (idx == beta_caps.size()) {
            if (left == 0) out.push_back({a, b});
            return;
        }
        auto [i, cap] = beta_caps[idx];
        for (int v = 0; v <= cap && v * i <= left; ++v) {
            b.set(i, v);
            self(self, idx + 1, left - v * i);
        }
        b.set(i, 0);
    };
    auto reca = [&](auto&& self, size_t idx, int left) -> void {
        if (idx == alpha_caps.size()) {
            recb(recb, 0, left);
            return;
        }
        auto [i, cap] = alpha_caps[idx];
        for (int v = 0; v <= cap && v * i <= left; ++v) {
            a.set(i, v);
            self(self, idx + 1, left - v * i);
        }
        a.set(i, 0);
    };
    reca(reca, 0, need);
}

}  // namespace

std::vector<CompatiblePair> enumerate_compatible_pairs(const FloorDiagram& D,
                                                       const TangencySequence& alpha,
                                                       const TangencySequence& beta) {
    int d = D.degree();
    if (alpha.weighted() + beta.weighted() != d)
        throw DomainError("sum i (alpha_i + beta_i) must equal the diagram degree");

    std::vector<int> need(d + 1);
    for (int v = 1; v <= d; ++v) need[v] = 1 - D.divergence(v);

    std::vector<CompatiblePair> out;
    CompatiblePair cur;
    cur.alpha_per.resize(d);
    cur.beta_per.resize(d);
    TangencySequence alpha_left = alpha, beta_left = beta;

    auto rec = [&](auto&& self, int v) -> void {
        if (v > d) {
            if (alpha_left.is_zero() && beta_left.is_zero()) out.push_back(cur);
            return;
        }
        std::vector<std::pair<TangencySequence, TangencySequence>> splits;
        vertex_splits(alpha_left, beta_left, need[v], splits);
        for (auto& [a, b] : splits) {
            cur.alpha_per[v - 1] = a;
            cur.beta_per[v - 1] = b;
            alpha_left = alpha_left.minus(a);
            beta_left = beta_left.minus(b);
            self(self, v + 1);
            alpha_left = alpha_left.plus(a);
            beta_left = beta_left.plus(b);
        }
        cur.alpha_per[v - 1] = {};
        cur.beta_per[v - 1] = {};
    };
    rec(rec, 1);
    return out;
}

MarkingPoset marking_poset_of_pair(const FloorDiagram& D, const CompatiblePair& pair) {
    // Gaps: g = 1..d-1 between consecutive vertices, gap d after the last
    // vertex (the unconstrained tangency vertices may sit anywhere after
    // their source; the fixed ones are pinned beyond everything).
    int d = D.degree();
    MarkingPoset poset;
    poset.gap_count = d;
    std::map<Edge, int> grouped;
    for (const auto& e : D.edges()) ++grouped[e];
    for (const auto& [e, count] : grouped)
        poset.classes.push_back({e.src, e.dst - 1, count,
                                 "edge(" + std::to_string(e.src) + "," + std::to_string(e.dst) +
                                     "," + std::to_string(e.w) + ")"});
    for (int v = 1; v <= d; ++v)
        for (auto& [j, count] : pair.beta_per[v - 1].entries())
            poset.classes.push_back({v, d, count,
                                     "beta(" + std::to_string(v) + ",w" + std::to_string(j) + ")"});
    return poset;
}

Int count_markings_for_pair(const FloorDiagram& D, const CompatiblePair& pair) {
    int d = D.degree();
    if (static_cast<int>(pair.alpha_per.size()) != d ||
        static_cast<int>(pair.beta_per.size()) != d)
        throw DomainError("pair does not match the diagram degree");
    for (int v = 1; v <= d; ++v)
        if (pair.alpha_per[v - 1].weighted() + pair.beta_per[v - 1].weighted() !=
            1 - D.divergence(v))
            throw DomainError("pair is not compatible with the diagram at vertex " +
                              std::to_string(v));

    // Fixed tangency vertices are ordered after everything, sorted by weight;
    // same-weight ones of distinct sources order freely, so each weight class
    // contributes a multinomial over sources.
    Int alpha_orderings = 1;
    std::map<int, std::vector<int>> by_weight;  // weight -> per-vertex counts
    TangencySequence alpha_total;
    for (int v = 1; v <= d; ++v)
        for (auto& [j, count] : pair.alpha_per[v - 1].entries()) {
            by_weight[j].push_back(count);
            alpha_total.add(j, count);
        }
    for (auto& [j, counts] : by_weight) {
        Int numer = factorial(alpha_total.at(j));
        for (int c : counts) numer /= factorial(c);
        alpha_orderings *= numer;
    }

    return alpha_orderings * marking_poset_of_pair(D, pair).count_extensions();
}

Int count_markings(const FloorDiagram& D, const TangencySequence& alpha,
                   const TangencySequence& beta) {
    Int total = 0;
    for (const auto& pair : enumerate_compatible_pairs(D, alpha, beta))
        total += count_markings_for_pair(D, pair);
    return total;
}

Int severi_degree_enum(int delta, const TangencySequence& alpha, const TangencySequence& beta) {
    if (delta < 0) throw DomainError("cogenus must be >= 0");
    int d = alpha.weighted() + beta.weighted();
    if (d < 1) throw DomainError("sum i (alpha_i + beta_i) must be >= 1");
    Int total = 0;
    for (const auto& D : enumerate_floor_diagrams(d, delta))
        total += D.multiplicity() * count_markings(D, alpha, beta);
    Int beta_factor = 1;
    for (auto& [i, v] : beta.entries()) beta_factor *= int_pow(Int(i), v);
    return beta_factor * total;
}

Decomposition decompose(const FloorDiagram& D, const CompatiblePair& pair) {
    int d = D.degree();
    SupportMatrix A, B;
    for (int i = 1; i <= d - 1; ++i) {
        for (auto& [j, v] : pair.alpha_per[d - i - 1].entries()) A.set(i, j, v);
        for (auto& [j, v] : pair.beta_per[d - i - 1].entries()) B.set(i, j, v);
    }
    int anchor = std::max(A.length(), B.length());
    int cutoff = d - anchor;

    // Covering clusters of the non-short edges, left to right.
    std::vector<Edge> long_edges;
    for (const auto& e : D.edges())
        if (!(e.dst == e.src + 1 && e.w == 1)) long_edges.push_back(e);
    std::vector<std::pair<int, std::vector<Edge>>> clusters;  // (start, edges)
    int cluster_end = -1;
    for (const auto& e : long_edges) {
        if (clusters.empty() || e.src >= cluster_end) {
            clusters.push_back({e.src, {}});
            cluster_end = e.dst;
        }
        clusters.back().second.push_back(e);
        cluster_end = std::max(cluster_end, e.dst);
    }

    Decomposition result{{}, ExtendedTemplate{}};
    int lambda_lo = cutoff;
    std::vector<Edge> lambda_edges;
    for (auto& [start, edges] : clusters) {
        int end = 0;
        for (const auto& e : edges) end = std::max(end, e.dst);
        if (end <= cutoff) {
            std::vector<Edge> shifted;
            for (const auto& e : edges) shifted.push_back({e.src - start, e.dst - start, e.w});
            result.templates.push_back({Template(end - start, std::move(shifted)), start});
        } else {
            lambda_lo = std::min(lambda_lo, start);
            for (const auto& e : edges) lambda_edges.push_back(e);
        }
    }
    for (auto& e : lambda_edges) e = {e.src - lambda_lo, e.dst - lambda_lo, e.w};
    result.ext = ExtendedTemplate(d - lambda_lo, std::move(lambda_edges), std::move(A), std::move(B));
    return result;
}

std::pair<FloorDiagram, CompatiblePair> recompose(
    const std::vector<std::pair<Template, int>>& templates, const ExtendedTemplate& ext,
    const TangencySequence& alpha, const TangencySequence& beta) {
    int d = alpha.weighted() + beta.weighted();
    const SupportMatrix& A = ext.A();
    const SupportMatrix& B = ext.B();

    if (!alpha.contains(A.row_sum()))
        throw DomainError("recompose: row sums of A exceed alpha (tangency budget)");
    if (!beta.contains(B.row_sum()))
        throw DomainError("recompose: row sums of B exceed beta (tangency budget)");

    for (size_t s = 0; s < templates.size(); ++s) {
        const auto& [tpl, k] = templates[s];
        if (k < tpl.k_min())
            throw DomainError("recompose: template " + std::to_string(s + 1) +
                              " placed at k=" + std::to_string(k) + " below k_min=" +
                              std::to_string(tpl.k_min()));
        if (s + 1 < templates.size()) {
            int next_k = templates[s + 1].second;
            if (next_k < k + tpl.length())
                throw DomainError("recompose: templates " + std::to_string(s + 1) + " and " +
                                  std::to_string(s + 2) + " overlap");
        }
    }
    if (!templates.empty()) {
        const auto& [last, k] = templates.back();
        if (k + last.length() > d - ext.length())
            throw DomainError("recompose: last template overlaps the extended template region");
    }
    if (d < ext.d_min())
        throw DomainError("recompose: degree " + std::to_string(d) +
                          " is below d_min(Lambda,A,B) = " + std::to_string(ext.d_min()));

    std::vector<Edge> edges;
    for (const auto& [tpl, k] : templates)
        for (const auto& e : tpl.edges()) edges.push_back({e.src + k, e.dst + k, e.w});
    int lambda_lo = d - ext.length();
    for (const auto& e : ext.lambda())
        edges.push_back({e.src + lambda_lo, e.dst + lambda_lo, e.w});

    // Fill every gap up to its divergence-forced crossing weight.
    std::vector<int> kappa(d + 1, 0);
    for (const auto& e : edges)
        for (int g = e.src; g < e.dst; ++g) kappa[g] += e.w;
    for (int g = 1; g <= d - 1; ++g) {
        int wls_terms = 0;
        if (d - g <= std::max(A.length(), B.length())) wls_terms = A.wls(d - g) + B.wls(d - g);
        int shorts = g - kappa[g] - wls_terms;
        if (shorts < 0)
            throw DomainError("recompose: gap " + std::to_string(g) + " would need " +
                              std::to_string(shorts) +
                              " short edges (degree below the admissible minimum)");
        for (int t = 0; t < shorts; ++t) edges.push_back({g, g + 1, 1});
    }

    CompatiblePair pair;
    pair.alpha_per.resize(d);
    pair.beta_per.resize(d);
    for (int i = 1; i <= std::max(A.length(), B.length()); ++i) {
        pair.alpha_per[d - i - 1] = A.row(i);
        pair.beta_per[d - i - 1] = B.row(i);
    }
    pair.alpha_per[d - 1] = alpha.minus(A.row_sum());
    pair.beta_per[d - 1] = beta.minus(B.row_sum());
    return {FloorDiagram(d, std::move(edges)), pair};
}

}  // namespace relnodes
