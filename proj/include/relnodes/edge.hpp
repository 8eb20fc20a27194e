#pragma once

#include <compare>

namespace relnodes {

// Weighted edge src -> dst, src < dst.  Shared by diagrams, templates and
// extended templates (templates index vertices from 0, diagrams from 1).
struct Edge {
    int src = 0, dst = 0, w = 1;
    auto operator<=>(const Edge&) const = default;
};

}  // namespace relnodes
