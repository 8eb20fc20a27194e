#pragma once

#include "relnodes/edge.hpp"
#include "relnodes/marking_poset.hpp"
#include "relnodes/multipoly.hpp"
#include "relnodes/numeric.hpp"
#include "relnodes/tangency.hpp"

#include <compare>
#include <vector>

namespace relnodes {

// Right-end building block of the decomposition: a short-edge-free weighted
// digraph Lambda on vertices 0..l together with the tangency bookkeeping
// matrices A (fixed) and B (unconstrained).  Demands l >= max(l(A), l(B)) and
// an edge passing every vertex further than that from the right end.
class ExtendedTemplate {
public:
    ExtendedTemplate();  // the trivial extended template (l = 0, zero matrices)
    ExtendedTemplate(int length, std::vector<Edge> lambda, SupportMatrix A, SupportMatrix B);

    int length() const { return length_; }
    const std::vector<Edge>& lambda() const { return lambda_; }
    const SupportMatrix& A() const { return A_; }
    const SupportMatrix& B() const { return B_; }

    int lambda_cogenus() const;
    int cogenus() const;  // delta(Lambda) + delta(A) + delta(B)
    Int lambda_multiplicity() const;
    std::vector<int> kappa() const;

    struct Invariants {
        int length;
        int cogenus;
        std::vector<int> kappa;
        int d_min;  // 1 when l = 0
        int i0;     // smallest gap attaining the d_min maximum (0 when l = 0)
        int s;      // number of Lambda-edges from i0-1 to i0
    };
    Invariants invariants() const;
    int d_min() const { return invariants().d_min; }

    // Number of weight-1 edges the enclosing degree-d diagram needs in gap i.
    // Negative means d < d_min.
    int short_edge_count(int gap, int d) const;

    // The poset P(Lambda, A, B) for concrete beta and d: everything (Lambda
    // edges, B edges, residual beta edges, short edges) subdivided.
    // Throws DomainError when d < d_min or beta lacks the B column sums.
    MarkingPoset marking_poset(const TangencySequence& beta, int d) const;

    // Exact count of linear orderings of P extending Lambda's order, up to
    // equivalence, with d = sum i (alpha_i + beta_i).
    Int Q_count(const TangencySequence& alpha, const TangencySequence& beta) const;

    // q with Q = (|beta| - delta(B))!/beta! * q(d, |beta|, beta) for all
    // admissible inputs with d >= d_min; a polynomial in D, S and b-variables
    // of degree #E(Lambda) + ||B||_1 + delta(B).
    MultiPoly q_poly() const;

    auto operator<=>(const ExtendedTemplate&) const = default;

private:
    int length_;
    std::vector<Edge> lambda_;
    SupportMatrix A_, B_;
};

// All extended templates of cogenus exactly delta, each once, deterministic.
std::vector<ExtendedTemplate> enumerate_extended_templates(int delta);

}  // namespace relnodes
