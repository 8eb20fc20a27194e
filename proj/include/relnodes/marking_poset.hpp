#pragma once

#include "relnodes/numeric.hpp"

#include <string>
#include <vector>

namespace relnodes {

// The layered poset behind marking counts: a totally ordered backbone chain
// plus free elements, each confined to a contiguous range of backbone gaps.
// Elements of one interchangeability class have identical gap ranges, so any
// permutation of a class is an automorphism and orbits of linear extensions
// have full size.
struct MarkingPoset {
    // Gaps are indexed 1..gap_count, left to right.  Gap g sits between
    // backbone vertices g-1 and g (an unbounded trailing region is modelled
    // as one more gap).
    int gap_count = 0;

    struct ElementClass {
        int lo = 1, hi = 1;  // inclusive gap range
        int size = 1;        // number of interchangeable elements
        std::string label;
    };
    std::vector<ElementClass> classes;

    // Number of linear extensions up to interchangeability equivalence:
    // the sum over gap assignments of per-gap multiset arrangements.
    Int count_extensions() const;

    // One concrete extension (each class packed into its lowest gap), for
    // debugging output: per gap, the class labels in order.
    std::vector<std::vector<std::string>> representative() const;
};

}  // namespace relnodes
