#include "relnodes/extended_template.hpp"

#include "relnodes/errors.hpp"

#include <algorithm>
#include <map>

namespace relnodes {

ExtendedTemplate::ExtendedTemplate() : length_(0) {}

ExtendedTemplate::ExtendedTemplate(int length, std::vector<Edge> lambda, SupportMatrix A,
                                   SupportMatrix B)
    : length_(length), lambda_(std::move(lambda)), A_(std::move(A)), B_(std::move(B)) {
    std::sort(lambda_.begin(), lambda_.end());
    if (length_ < 0) throw DomainError("extended template length must be >= 0");
    int anchor = std::max(A_.length(), B_.length());
    if (length_ < anchor)
        throw DomainError("extended template needs l(Lambda) >= max(l(A), l(B))");
    for (const auto& e : lambda_) {
        if (!(0 <= e.src && e.src < e.dst && e.dst <= length_ && e.w >= 1))
            throw DomainError("extended template edge out of range");
        if (e.dst == e.src + 1 && e.w < 2)
            throw DomainError("extended template has a short edge");
    }
    for (int v = 1; v <= length_ - anchor; ++v) {
        bool covered = false;
        for (const auto& e : lambda_) covered |= (e.src < v && v < e.dst);
        if (!covered)
            throw DomainError("extended template vertex " + std::to_string(v) +
                              " is not passed by any edge");
    }
}

int ExtendedTemplate::lambda_cogenus() const {
    int d = 0;
    for (const auto& e : lambda_) d += (e.dst - e.src) * e.w - 1;
    return d;
}

int ExtendedTemplate::cogenus() const { return lambda_cogenus() + A_.cogenus() + B_.cogenus(); }

Int ExtendedTemplate::lambda_multiplicity() const {
    Int m = 1;
    for (const auto& e : lambda_) m *= Int(e.w) * e.w;
    return m;
}

std::vector<int> ExtendedTemplate::kappa() const {
    std::vector<int> k(length_ + 1, 0);
    for (const auto& e : lambda_)
        for (int j = e.src + 1; j <= e.dst; ++j) k[j] += e.w;
    k.erase(k.begin());
    return k;
}

ExtendedTemplate::Invariants ExtendedTemplate::invariants() const {
    Invariants inv;
    inv.length = length_;
    inv.cogenus = cogenus();
    inv.kappa = kappa();
    if (length_ == 0) {
        inv.d_min = 1;  // the max below runs over an empty set
        inv.i0 = 0;
        inv.s = 0;
        return inv;
    }
    inv.d_min = 0;
    inv.i0 = 1;
    for (int i = 1; i <= length_; ++i) {
        int value = length_ - i + 1 + inv.kappa[i - 1] + A_.wls(length_ + 1 - i) +
                    B_.wls(length_ + 1 - i);
        if (value > inv.d_min) {
            inv.d_min = value;
            inv.i0 = i;
        }
    }
    inv.s = 0;
    for (const auto& e : lambda_)
        if (e.src == inv.i0 - 1 && e.dst == inv.i0) ++inv.s;
    return inv;
}

int ExtendedTemplate::short_edge_count(int gap, int d) const {
    auto kap = kappa();
    return d - length_ + gap - 1 - kap[gap - 1] - A_.wls(length_ + 1 - gap) -
           B_.wls(length_ + 1 - gap);
}

MarkingPoset ExtendedTemplate::marking_poset(const TangencySequence& beta, int d) const {
    auto cols = B_.column_sums();
    for (auto& [j, sum] : cols)
        if (beta.at(j) < sum)
            throw DomainError("beta_" + std::to_string(j) +
                              " is smaller than the matching column sum of B");
    MarkingPoset poset;
    poset.gap_count = length_ + 1;
    for (int i = 1; i <= length_; ++i) {
        int shorts = short_edge_count(i, d);
        if (shorts < 0)
            throw DomainError("degree " + std::to_string(d) + " is below d_min (gap " +
                              std::to_string(i) + " would need " + std::to_string(shorts) +
                              " short edges)");
        if (shorts > 0)
            poset.classes.push_back({i, i, shorts, "short@" + std::to_string(i)});
    }
    std::map<Edge, int> grouped;
    for (const auto& e : lambda_) ++grouped[e];
    for (const auto& [e, count] : grouped)
        poset.classes.push_back({e.src + 1, e.dst, count,
                                 "edge(" + std::to_string(e.src) + "," + std::to_string(e.dst) +
                                     "," + std::to_string(e.w) + ")"});
    // b_ij edges of weight j run from vertex l-i to the extra vertex l+1.
    for (const auto& [rc, count] : B_.entries()) {
        int source = length_ - rc.first;
        poset.classes.push_back({source + 1, length_ + 1, count,
                                 "B(" + std::to_string(rc.first) + "," + std::to_string(rc.second) +
                                     ")"});
    }
    // Residual unconstrained tangencies sit between l and l+1.
    for (auto& [j, v] : beta.entries()) {
        int residual = v - (cols.count(j) ? cols.at(j) : 0);
        if (residual > 0)
            poset.classes.push_back({length_ + 1, length_ + 1, residual,
                                     "beta_" + std::to_string(j)});
    }
    return poset;
}

Int ExtendedTemplate::Q_count(const TangencySequence& alpha, const TangencySequence& beta) const {
    if (!alpha.contains(A_.row_sum()))
        throw DomainError("alpha is smaller than the row sums of A component-wise");
    if (!beta.contains(B_.row_sum()))
        throw DomainError("beta is smaller than the row sums of B component-wise");
    int d = alpha.weighted() + beta.weighted();
    return marking_poset(beta, d).count_extensions();
}

// q as a finite sum over coarse placements: each Lambda-edge midpoint and each
// B-edge midpoint picks a gap; gap i <= l contributes the insertion product
// (count_i + 1)...(count_i + r_i) against the short edges there, the final gap
// contributes the rising factors in S left over from the beta multinomial, and
// interchangeable midpoints divide by their arrangement count.
MultiPoly ExtendedTemplate::q_poly() const {
    struct MidClass {
        int lo, hi, size;
    };
    std::vector<MidClass> classes;
    std::map<Edge, int> grouped;
    for (const auto& e : lambda_) ++grouped[e];
    for (const auto& [e, count] : grouped) classes.push_back({e.src + 1, e.dst, count});
    for (const auto& [rc, count] : B_.entries())
        classes.push_back({length_ - rc.first + 1, length_ + 1, count});

    int deltaB = B_.cogenus();
    int normB = B_.norm1();
    auto kap = kappa();

    // Short-edge counts as polynomials in D.
    std::vector<MultiPoly> gap_count_poly;
    for (int i = 1; i <= length_; ++i) {
        MultiPoly c = MultiPoly::variable(var_D()) +
                      MultiPoly(Rat(-length_ + i - 1 - kap[i - 1] - A_.wls(length_ + 1 - i) -
                                    B_.wls(length_ + 1 - i)));
        gap_count_poly.push_back(c);
    }

    MultiPoly total;
    std::vector<int> fill(length_ + 2, 0);
    std::vector<Int> class_div(length_ + 2, 1);  // per-gap prod of n_{c,gap}!

    auto emit = [&]() {
        MultiPoly term(1);
        for (int i = 1; i <= length_; ++i) {
            for (int u = 1; u <= fill[i]; ++u)
                term *= gap_count_poly[i - 1] + MultiPoly(Rat(u));
        }
        int rising = deltaB - normB + fill[length_ + 1];
        for (int t = 1; t <= rising; ++t)
            term *= MultiPoly::variable(var_S()) + MultiPoly(Rat(t - deltaB));
        Rat divisor = 1;
        for (int g = 1; g <= length_ + 1; ++g) divisor *= Rat(class_div[g]);
        total += term.scaled(1 / divisor);
    };

    auto rec = [&](auto&& self, size_t ci) -> void {
        if (ci == classes.size()) {
            emit();
            return;
        }
        const auto& cls = classes[ci];
        auto split = [&](auto&& inner, int gap, int remaining) -> void {
            if (gap == cls.hi) {
                fill[gap] += remaining;
                class_div[gap] *= factorial(remaining);
                self(self, ci + 1);
                class_div[gap] /= factorial(remaining);
                fill[gap] -= remaining;
                return;
            }
            for (int n = 0; n <= remaining; ++n) {
                fill[gap] += n;
                class_div[gap] *= factorial(n);
                inner(inner, gap + 1, remaining - n);
                class_div[gap] /= factorial(n);
                fill[gap] -= n;
            }
        };
        split(split, cls.lo, cls.size);
    };
    rec(rec, 0);

    // The beta multinomial contributes falling(b_j, |column j of B|) globally.
    MultiPoly cols_factor(1);
    for (auto& [j, sum] : B_.column_sums()) {
        for (int t = 0; t < sum; ++t)
            cols_factor *= MultiPoly::variable(var_b(j)) - MultiPoly(Rat(t));
    }
    return total * cols_factor;
}

namespace {

// Sparse matrices with given cogenus sum i*j*a_ij, entries listed in
// lexicographic cell order.
std::vector<SupportMatrix> matrices_with_cogenus(int delta) {
    std::vector<SupportMatrix> out;
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= delta; ++i)
        for (int j = 1; i * j <= delta; ++j) cells.push_back({i, j});
    SupportMatrix cur;
    auto rec = [&](auto&& self, size_t from, int budget) -> void {
        if (budget == 0) {
            out.push_back(cur);
            return;
        }
        for (size_t t = from; t < cells.size(); ++t) {
            auto [i, j] = cells[t];
            if (i * j > budget) continue;
            cur.add(i, j, 1);
            self(self, t, budget - i * j);
            cur.add(i, j, -1);
        }
    };
    rec(rec, 0, delta);
    return out;
}

}  // namespace

std::vector<ExtendedTemplate> enumerate_extended_templates(int delta) {
    if (delta < 0) throw DomainError("extended template cogenus must be >= 0");
    std::vector<ExtendedTemplate> out;
    for (int deltaA = 0; deltaA <= delta; ++deltaA) {
        for (const auto& A : matrices_with_cogenus(deltaA)) {
            for (int deltaB = 0; deltaA + deltaB <= delta; ++deltaB) {
                for (const auto& B : matrices_with_cogenus(deltaB)) {
                    int deltaL = delta - deltaA - deltaB;
                    int anchor = std::max(A.length(), B.length());
                    // Edgeless Lambda forces l = anchor; every edge of length
                    // L >= 1 adds at least L-1 towards passing the vertices
                    // left of the anchored zone.
                    for (int l = anchor; l <= deltaL + anchor; ++l) {
                        if (l == 0 && deltaL == 0) {
                            out.emplace_back();
                            continue;
                        }
                        // Enumerate edge multisets on 0..l with cogenus deltaL.
                        std::vector<Edge> pool;
                        for (int src = 0; src < l; ++src)
                            for (int dst = src + 1; dst <= l; ++dst)
                                for (int w = 1; (dst - src) * w - 1 <= deltaL; ++w) {
                                    if (dst == src + 1 && w < 2) continue;
                                    if ((dst - src) * w - 1 < 1) continue;
                                    pool.push_back({src, dst, w});
                                }
                        std::vector<Edge> chosen;
                        auto rec = [&](auto&& self, size_t from, int budget) -> void {
                            if (budget == 0) {
                                bool ok = true;
                                for (int v = 1; v <= l - anchor && ok; ++v) {
                                    bool covered = false;
                                    for (const auto& e : chosen)
                                        covered |= (e.src < v && v < e.dst);
                                    ok = covered;
                                }
                                if (ok) out.emplace_back(l, chosen, A, B);
                                return;
                            }
                            for (size_t i = from; i < pool.size(); ++i) {
                                int contribution =
                                    (pool[i].dst - pool[i].src) * pool[i].w - 1;
                                if (contribution > budget) continue;
                                chosen.push_back(pool[i]);
                                self(self, i, budget - contribution);
                                chosen.pop_back();
                            }
                        };
                        if (deltaL == 0 && l == anchor && !(l == 0)) {
                            out.emplace_back(l, std::vector<Edge>{}, A, B);
                        } else if (deltaL > 0) {
                            rec(rec, 0, deltaL);
                        }
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace relnodes
