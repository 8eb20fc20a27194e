#include "relnodes/template_graph.hpp"

#include "relnodes/errors.hpp"
#include "relnodes/marking_poset.hpp"

#include <algorithm>
#include <map>

namespace relnodes {

Template::Template(int length, std::vector<Edge> edges) : length_(length), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    if (length_ < 1) throw DomainError("template length must be >= 1");
    if (edges_.empty()) throw DomainError("template must have at least one edge");
    for (const auto& e : edges_) {
        if (!(0 <= e.src && e.src < e.dst && e.dst <= length_ && e.w >= 1))
            throw DomainError("template edge out of range");
        if (e.dst == e.src + 1 && e.w < 2) throw DomainError("template has a short edge");
    }
    for (int v = 1; v <= length_ - 1; ++v) {
        bool covered = false;
        for (const auto& e : edges_) covered |= (e.src < v && v < e.dst);
        if (!covered)
            throw DomainError("template vertex " + std::to_string(v) + " is not covered");
    }
}

int Template::cogenus() const {
    int d = 0;
    for (const auto& e : edges_) d += (e.dst - e.src) * e.w - 1;
    return d;
}

Int Template::multiplicity() const {
    Int m = 1;
    for (const auto& e : edges_) m *= Int(e.w) * e.w;
    return m;
}

std::vector<int> Template::kappa() const {
    std::vector<int> k(length_ + 1, 0);  // k[j] for gaps j = 1..l
    for (const auto& e : edges_)
        for (int j = e.src + 1; j <= e.dst; ++j) k[j] += e.w;
    k.erase(k.begin());
    return k;
}

Template::Invariants Template::invariants() const {
    Invariants inv;
    inv.length = length_;
    inv.mu = multiplicity();
    inv.cogenus = cogenus();
    inv.kappa = kappa();
    inv.k_min = inv.kappa[0];
    inv.j0 = 1;
    for (int j = 1; j <= length_; ++j) {
        int value = inv.kappa[j - 1] - j + 1;
        if (value > inv.k_min) {
            inv.k_min = value;
            inv.j0 = j;
        }
    }
    inv.s = 0;
    for (const auto& e : edges_)
        if (e.src == inv.j0 - 1 && e.dst == inv.j0) ++inv.s;
    return inv;
}

Int Template::extensions_at(int k) const {
    auto kap = kappa();
    MarkingPoset poset;
    poset.gap_count = length_;
    for (int i = 1; i <= length_; ++i) {
        int shorts = k + i - 1 - kap[i - 1];
        if (shorts < 0)
            throw DomainError("template position k=" + std::to_string(k) +
                              " is below k_min (negative short-edge count in gap " +
                              std::to_string(i) + ")");
        if (shorts > 0)
            poset.classes.push_back({i, i, shorts, "short@" + std::to_string(i)});
    }
    // Midpoints of parallel edges are interchangeable.
    std::map<Edge, int> grouped;
    for (const auto& e : edges_) ++grouped[e];
    for (const auto& [e, count] : grouped)
        poset.classes.push_back({e.src + 1, e.dst, count,
                                 "edge(" + std::to_string(e.src) + "," + std::to_string(e.dst) +
                                     "," + std::to_string(e.w) + ")"});
    return poset.count_extensions();
}

MultiPoly Template::poly() const {
    int degree = static_cast<int>(edges_.size());
    int base = invariants().k_min;
    std::vector<std::pair<long, Rat>> points;
    for (int k = base; k <= base + degree + 1; ++k)
        points.push_back({k, Rat(extensions_at(k))});
    try {
        return interpolate(points, degree, var_k());
    } catch (const DegreeOverflowError& err) {
        throw VerificationError(std::string("template polynomial failed its verification point: ") +
                                err.what());
    }
}

namespace {

// Edge pool in lexicographic order: every edge that could belong to a
// template of cogenus <= delta, anchored so that vertex labels stay in
// 0..delta+1 (a template of cogenus delta has length at most delta+1).
std::vector<Edge> template_edge_pool(int delta) {
    std::vector<Edge> pool;
    for (int src = 0; src <= delta; ++src)
        for (int dst = src + 1; dst <= delta + 1; ++dst)
            for (int w = 1; (dst - src) * w - 1 <= delta; ++w) {
                if (dst == src + 1 && w < 2) continue;
                if ((dst - src) * w - 1 < 1) continue;
                pool.push_back({src, dst, w});
            }
    return pool;
}

}  // namespace

std::vector<Template> enumerate_templates(int delta) {
    if (delta < 1) throw DomainError("template cogenus must be >= 1");
    std::vector<Template> out;
    auto pool = template_edge_pool(delta);
    std::vector<Edge> chosen;

    auto rec = [&](auto&& self, size_t from, int budget) -> void {
        if (budget == 0) {
            int lo = chosen.front().src, hi = 0;
            for (const auto& e : chosen) {
                lo = std::min(lo, e.src);
                hi = std::max(hi, e.dst);
            }
            if (lo != 0) return;  // anchored copies only; shifts are positions, not new templates
            for (int v = 1; v <= hi - 1; ++v) {
                bool covered = false;
                for (const auto& e : chosen) covered |= (e.src < v && v < e.dst);
                if (!covered) return;
            }
            out.emplace_back(hi, chosen);
            return;
        }
        for (size_t i = from; i < pool.size(); ++i) {
            int contribution = (pool[i].dst - pool[i].src) * pool[i].w - 1;
            if (contribution > budget) continue;
            chosen.push_back(pool[i]);
            self(self, i, budget - contribution);  // multiset: allow repeats
            chosen.pop_back();
        }
    };
    rec(rec, 0, delta);
    return out;
}

}  // namespace relnodes
