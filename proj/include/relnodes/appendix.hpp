#pragma once

#include "relnodes/multipoly.hpp"

namespace relnodes {

// Published reference polynomials N_0..N_3 (golden data for the verifier).
// Index by delta; throws DomainError outside 0..3.
const MultiPoly& appendix_node_polynomial(int delta);

// Term counts reported for the larger polynomials (informational).
int reported_term_count(int delta);  // delta in 4..6

}  // namespace relnodes
