#include "relnodes/marking_poset.hpp"

#include "relnodes/errors.hpp"

namespace relnodes {

namespace {

// Class by class, choose how many members land in each allowed gap and count
// the interleavings against what is already there: inserting n indistinct
// items into a gap holding r items gives binom(r + n, n) arrangements.  The
// per-gap products telescope to r_g! / prod_c n_{c,g}!.
Int count_from(const std::vector<MarkingPoset::ElementClass>& classes, size_t ci,
               std::vector<int>& filled) {
    if (ci == classes.size()) return 1;
    const auto& cls = classes[ci];

    Int sum = 0;
    auto split = [&](auto&& self, int gap, int remaining, Int weight) -> void {
        if (gap == cls.hi) {
            weight *= binomial(filled[gap] + remaining, remaining);
            filled[gap] += remaining;
            sum += weight * count_from(classes, ci + 1, filled);
            filled[gap] -= remaining;
            return;
        }
        for (int n = 0; n <= remaining; ++n) {
            filled[gap] += n;
            self(self, gap + 1, remaining - n, weight * binomial(filled[gap], n));
            filled[gap] -= n;
        }
    };
    split(split, cls.lo, cls.size, Int(1));
    return sum;
}

}  // namespace

Int MarkingPoset::count_extensions() const {
    for (const auto& cls : classes)
        if (cls.lo < 1 || cls.hi > gap_count || cls.lo > cls.hi || cls.size < 1)
            throw Error("marking poset: malformed element class '" + cls.label + "'");
    std::vector<int> filled(gap_count + 1, 0);
    return count_from(classes, 0, filled);
}

std::vector<std::vector<std::string>> MarkingPoset::representative() const {
    std::vector<std::vector<std::string>> gaps(gap_count + 1);
    for (const auto& cls : classes)
        for (int t = 0; t < cls.size; ++t) gaps[cls.lo].push_back(cls.label);
    gaps.erase(gaps.begin());
    return gaps;
}

}  // namespace relnodes
