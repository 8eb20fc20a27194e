#pragma once

#include "relnodes/edge.hpp"
#include "relnodes/multipoly.hpp"
#include "relnodes/numeric.hpp"

#include <compare>
#include <vector>

namespace relnodes {

// Short-edge-free building block of the decomposition: a weighted digraph on
// vertices 0..l with every interior vertex covered by some edge.
class Template {
public:
    Template(int length, std::vector<Edge> edges);

    int length() const { return length_; }
    const std::vector<Edge>& edges() const { return edges_; }  // sorted multiset

    int cogenus() const;       // sum (j - i) w(e) - 1
    Int multiplicity() const;  // prod w(e)^2
    std::vector<int> kappa() const;  // crossing weight of gaps 1..l

    struct Invariants {
        int length;
        Int mu;
        int cogenus;
        std::vector<int> kappa;
        int k_min;
        int j0;  // smallest gap attaining the k_min maximum
        int s;   // number of edges from j0-1 to j0
    };
    Invariants invariants() const;
    int k_min() const { return invariants().k_min; }

    // Linear extensions (up to equivalence) of the subdivided graph placed at
    // position k; throws DomainError below k_min (negative short-edge count).
    Int extensions_at(int k) const;

    // P_Gamma(k): degree-#E polynomial agreeing with extensions_at for all
    // k >= k_min, interpolated and then checked at one extra point.
    MultiPoly poly() const;

    auto operator<=>(const Template&) const = default;

private:
    int length_;
    std::vector<Edge> edges_;
};

// All templates of cogenus exactly delta, deduplicated, deterministic order.
std::vector<Template> enumerate_templates(int delta);

}  // namespace relnodes
