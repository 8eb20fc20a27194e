#pragma once

#include "relnodes/edge.hpp"
#include "relnodes/extended_template.hpp"
#include "relnodes/marking_poset.hpp"
#include "relnodes/numeric.hpp"
#include "relnodes/tangency.hpp"
#include "relnodes/template_graph.hpp"

#include <compare>
#include <vector>

namespace relnodes {

// Weighted directed multigraph on linearly ordered vertices 1..d where every
// vertex sheds at most one unit of net outgoing weight.
class FloorDiagram {
public:
    FloorDiagram(int degree, std::vector<Edge> edges);

    int degree() const { return degree_; }
    const std::vector<Edge>& edges() const { return edges_; }  // sorted multiset

    int divergence(int v) const;
    Int multiplicity() const;  // prod w(e)^2
    bool connected() const;
    int cogenus() const;

    struct Invariants {
        int degree;
        bool connected;
        std::vector<int> component_genus;
        int cogenus;
        Int multiplicity;
    };
    Invariants invariants() const;

    auto operator<=>(const FloorDiagram&) const = default;

private:
    int degree_;
    std::vector<Edge> edges_;
};

// Every floor diagram of degree d and cogenus exactly delta, each once, in a
// deterministic order.
std::vector<FloorDiagram> enumerate_floor_diagrams(int d, int delta);

// Per-vertex split of the tangency data: alpha_per[v-1], beta_per[v-1] belong
// to vertex v; sums match (alpha, beta) and each vertex carries weighted
// degree 1 - div(v).
struct CompatiblePair {
    std::vector<TangencySequence> alpha_per, beta_per;
    auto operator<=>(const CompatiblePair&) const = default;
};

std::vector<CompatiblePair> enumerate_compatible_pairs(const FloorDiagram& D,
                                                       const TangencySequence& alpha,
                                                       const TangencySequence& beta);

// The poset whose extensions (up to equivalence) are the markings of D for
// this pair: subdivided original edges plus the unconstrained tangency
// vertices; the fixed-tangency block is handled by a multinomial outside.
MarkingPoset marking_poset_of_pair(const FloorDiagram& D, const CompatiblePair& pair);

Int count_markings_for_pair(const FloorDiagram& D, const CompatiblePair& pair);
Int count_markings(const FloorDiagram& D, const TangencySequence& alpha,
                   const TangencySequence& beta);

// Exact relative Severi degree by exhaustive enumeration (the oracle path).
Int severi_degree_enum(int delta, const TangencySequence& alpha, const TangencySequence& beta);

struct Decomposition {
    std::vector<std::pair<Template, int>> templates;  // (piece, leftmost vertex in D)
    ExtendedTemplate ext;
};

Decomposition decompose(const FloorDiagram& D, const CompatiblePair& pair);

// Unique preimage of decompose; throws DomainError naming the violated
// inequality otherwise.
std::pair<FloorDiagram, CompatiblePair> recompose(const std::vector<std::pair<Template, int>>& templates,
                                                  const ExtendedTemplate& ext,
                                                  const TangencySequence& alpha,
                                                  const TangencySequence& beta);

}  // namespace relnodes
