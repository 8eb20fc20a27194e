#pragma once

#include "relnodes/extended_template.hpp"
#include "relnodes/multipoly.hpp"
#include "relnodes/tangency.hpp"
#include "relnodes/template_graph.hpp"

#include <utility>
#include <vector>

namespace relnodes {

// Highest cogenus the full assembly will attempt; beyond the published range
// the summand count explodes and we refuse instead of hanging.
inline constexpr int kMaxAssemblyDelta = 6;

// Iterated discrete sums of the template polynomials:
//   prod mu(G_s) * sum_{k_m} P_m(k_m) ... sum_{k_1} P_1(k_1)
// with lower bounds k_min(G_i), inner upper bounds k_{i+1} - l(G_i) and the
// outermost bound D - l_ext - l(G_m).  Polynomial identity for
// D >= sum delta(G_i) + l_ext + 1.
MultiPoly first_factor(const std::vector<Template>& templates, int l_ext);

// Sum of first_factor over every ordered template collection of total
// cogenus delta (l_ext = 0): the pure-diagram part of the leading terms.
MultiPoly R_poly(int delta);

// mu(Lambda) * multinomial in a-variables * falling(S, delta(B), delta) * q.
MultiPoly second_factor(const ExtendedTemplate& ext, int delta);

struct NodePolynomial {
    int delta = 0;
    MultiPoly poly;  // in D, S, a_1..a_delta, b_1..b_delta, total degree 3*delta
};

struct AssemblyOptions {
    int jobs = 1;
    // Widen the variable alphabet used for stability checks (no effect on the
    // computed polynomial; a-variables above delta never occur).
    int variable_limit = -1;
};

NodePolynomial node_polynomial(int delta, const AssemblyOptions& options = {});

// Prefactor 1^{b1} 2^{b2} ... (|beta|-delta)!/beta! times N_delta at
// d = sum i (alpha_i + beta_i); requires |beta| >= delta.
Int evaluate_relative_severi(int delta, const TangencySequence& alpha,
                             const TangencySequence& beta,
                             const AssemblyOptions& options = {});

struct Defects {
    int templates = 0;  // sum delta(G_i) - m
    int ext = 0;        // delta(L) + 2 delta(A) + 2 delta(B) - ||A||_1 - ||B||_1
};

Defects defects(const std::vector<Template>& templates, const ExtendedTemplate& ext);

// Terms of N_delta of total degree >= 3*delta - t, summing only summands with
// both defects <= t.
MultiPoly leading_terms(int delta, int t, const AssemblyOptions& options = {});

// The closed-form expansion of the degree >= 3*delta - 2 terms of N_delta
// (the published display), for cross-checking leading_terms.
MultiPoly leading_terms_closed_form(int delta);

// Coefficient of d^(2*delta - drop) in the closed-form expansion of R_delta,
// for drop = 0..3.  Exponents below zero carry coefficient 0.
Rat r_expansion_coefficient(int delta, int drop);

}  // namespace relnodes
