#include "relnodes/appendix.hpp"

#include "relnodes/errors.hpp"

#include <array>
#include <map>

namespace relnodes {

namespace {

// d = sum i (alpha_i + beta_i) and s = |beta| are independent formal
// variables here, exactly as in the canonical form the assembly produces.
const char* kN0 = "1";

const char* kN1 = "3 d^2 s - 8 d s + d b1 + s a1 + s b1 + 4 s - b1";

const char* kN2 =
    "9/2 d^4 s^2 - 9/2 d^4 s - 24 d^3 s^2 + 3 d^3 s b1 + 3 d^2 s^2 a1 + 3 d^2 s^2 b1"
    " + 24 d^3 s - 3 d^3 b1 + 23 d^2 s^2 - 3 d^2 s a1 - 14 d^2 s b1 + 1/2 d^2 b1^2"
    " - 8 d s^2 a1 - 8 d s^2 b1 + d s a1 b1 + d s b1^2 + 1/2 s^2 a1^2 + s^2 a1 b1"
    // The d s^2 coefficient is 83/2: the pure d,s part of N_2 factors as
    // R_2(d) (s^2 - s), so it is minus the d s coefficient below; the
    // floor-diagram count at every degree <= 6 confirms it.
    " + 1/2 s^2 b1^2 - 23 d^2 s + 21/2 d^2 b1 + 83/2 d s^2 + 8 d s a1 + 11 d s b1"
    " + d s b2 - d a1 b1 - 5/2 d b1^2 - 1/2 s^2 a1 + s^2 a2 - 1/2 s^2 b1 + s^2 b2"
    " - 1/2 s a1^2 - 3 s a1 b1 - 5/2 s b1^2 - 83/2 d s - 3/2 d b1 - d b2 - 48 s^2"
    " + 1/2 s a1 - s a2 + 29/2 s b1 - 3 s b2 + 2 a1 b1 + 3 b1^2 + 48 s - 15 b1 + 2 b2";

const char* kN3 =
    "9/2 d^6 s^3 - 27/2 d^6 s^2 - 36 d^5 s^3 + 9/2 d^5 s^2 b1 + 9/2 d^4 s^3 a1"
    " + 9/2 d^4 s^3 b1 + 9 d^6 s + 108 d^5 s^2 - 27/2 d^5 s b1"
    " + 51 d^4 s^3 - 27/2 d^4 s^2 a1 - 42 d^4 s^2 b1 + 3/2 d^4 s b1^2 - 24 d^3 s^3 a1"
    " - 24 d^3 s^3 b1 + 3 d^3 s^2 a1 b1 + 3 d^3 s^2 b1^2"
    " + 3/2 d^2 s^3 a1^2 + 3 d^2 s^3 a1 b1 + 3/2 d^2 s^3 b1^2 - 72 d^5 s + 9 d^5 b1"
    " - 153 d^4 s^2 + 9 d^4 s a1 + 93 d^4 s b1 - 3 d^4 b1^2"
    " + 1243/6 d^3 s^3 + 72 d^3 s^2 a1 + 92 d^3 s^2 b1 + 3 d^3 s^2 b2 - 9 d^3 s a1 b1"
    " - 35/2 d^3 s b1^2 + 1/6 d^3 b1^3 + 19/2 d^2 s^3 a1"
    " + 3 d^2 s^3 a2 + 19/2 d^2 s^3 b1 + 3 d^2 s^3 b2 - 9/2 d^2 s^2 a1^2"
    " - 23 d^2 s^2 a1 b1 - 37/2 d^2 s^2 b1^2 + 1/2 d^2 s a1 b1^2"
    " + 1/2 d^2 s b1^3 - 4 d s^3 a1^2 - 8 d s^3 a1 b1 - 4 d s^3 b1^2 + 1/2 d s^2 a1^2 b1"
    " + d s^2 a1 b1^2 + 1/2 d s^2 b1^3 + 1/6 s^3 a1^3"
    " + 1/2 s^3 a1^2 b1 + 1/2 s^3 a1 b1^2 + 1/6 s^3 b1^3 + 102 d^4 s - 54 d^4 b1"
    " - 1243/2 d^3 s^2 - 48 d^3 s a1 - 199/2 d^3 s b1"
    " - 9 d^3 s b2 + 6 d^3 a1 b1 + 45/2 d^3 b1^2 - 458 d^2 s^3 - 57/2 d^2 s^2 a1"
    " - 9 d^2 s^2 a2 + 116 d^2 s^2 b1 - 23 d^2 s^2 b2"
    " + 3 d^2 s a1^2 + 95/2 d^2 s a1 b1 + 105/2 d^2 s b1^2 + d^2 s b1 b2 - d^2 a1 b1^2"
    " - 2 d^2 b1^3 + 155/2 d s^3 a1 - 8 d s^3 a2"
    " + 155/2 d s^3 b1 - 8 d s^3 b2 + 12 d s^2 a1^2 + 61/2 d s^2 a1 b1 + d s^2 a1 b2"
    " + d s^2 a2 b1 + 37/2 d s^2 b1^2 + 2 d s^2 b1 b2"
    " - 3/2 d s a1^2 b1 - 11/2 d s a1 b1^2 - 4 d s b1^3 - 5/2 s^3 a1^2 + s^3 a1 a2"
    " - 5 s^3 a1 b1 + s^3 a1 b2 + s^3 a2 b1 - 5/2 s^3 b1^2"
    " + s^3 b1 b2 - 1/2 s^2 a1^3 - 3 s^2 a1^2 b1 - 9/2 s^2 a1 b1^2 - 2 s^2 b1^3"
    " + 1243/3 d^3 s + 70/3 d^3 b1 + 6 d^3 b2 + 1374 d^2 s^2"
    " + 19 d^2 s a1 + 6 d^2 s a2 - 845/2 d^2 s b1 + 48 d^2 s b2 - 27 d^2 a1 b1"
    " - 40 d^2 b1^2 - 2 d^2 b1 b2 - 842/3 d s^3"
    " - 465/2 d s^2 a1 + 24 d s^2 a2 - 396 d s^2 b1 + 29 d s^2 b2 + d s^2 b3"
    " - 8 d s a1^2 - 33 d s a1 b1 - 3 d s a1 b2"
    " - 3 d s a2 b1 + 2 d s b1^2 - 11 d s b1 b2 + d a1^2 b1 + 7 d a1 b1^2 + 47/6 d b1^3"
    " - 92/3 s^3 a1 - 6 s^3 a2 + s^3 a3"
    " - 92/3 s^3 b1 - 6 s^3 b2 + s^3 b3 + 15/2 s^2 a1^2 - 3 s^2 a1 a2 + 87/2 s^2 a1 b1"
    " - 6 s^2 a1 b2 - 6 s^2 a2 b1 + 36 s^2 b1^2"
    " - 9 s^2 b1 b2 + 1/3 s a1^3 + 11/2 s a1^2 b1 + 13 s a1 b1^2 + 47/6 s b1^3"
    " - 916 d^2 s + 303 d^2 b1 - 28 d^2 b2 + 842 d s^2"
    " + 155 d s a1 - 16 d s a2 + 1237/2 d s b1 - 31 d s b2 - 3 d s b3 + 8 d a1 b1"
    " + 2 d a1 b2 + 2 d a2 b1 - 103/2 d b1^2"
    " + 14 d b1 b2 + 706 s^3 + 92 s^2 a1 + 18 s^2 a2 - 3 s^2 a3 - 46 s^2 b1 + 48 s^2 b2"
    " - 6 s^2 b3 - 5 s a1^2"
    " + 2 s a1 a2 - 197/2 s a1 b1 + 11 s a1 b2 + 11 s a2 b1 - 271/2 s b1^2 + 26 s b1 b2"
    " - 3 a1^2 b1 - 12 a1 b1^2 - 10 b1^3"
    " - 1684/3 d s - 808/3 d b1 + 10 d b2 + 2 d b3 - 2118 s^2 - 184/3 s a1 - 12 s a2"
    " + 2 s a3 + 1184/3 s b1 - 102 s b2"
    " + 11 s b3 + 63 a1 b1 - 6 a1 b2 - 6 a2 b1 + 150 b1^2 - 24 b1 b2 + 1412 s - 362 b1"
    " + 60 b2 - 6 b3";

}  // namespace

const MultiPoly& appendix_node_polynomial(int delta) {
    static std::map<int, MultiPoly> parsed;
    static const std::array<const char*, 4> sources = {kN0, kN1, kN2, kN3};
    if (delta < 0 || delta > 3)
        throw DomainError("reference polynomials are tabulated for delta 0..3 only");
    auto it = parsed.find(delta);
    if (it == parsed.end()) it = parsed.emplace(delta, MultiPoly::parse(sources[delta])).first;
    return it->second;
}

int reported_term_count(int delta) {
    switch (delta) {
        case 4: return 599;
        case 5: return 1625;
        case 6: return 3980;
        default: throw DomainError("reported term counts cover delta 4..6");
    }
}

}  // namespace relnodes
