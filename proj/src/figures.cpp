#include "relnodes/figures.hpp"

namespace relnodes {

namespace {

SupportMatrix matrix(std::initializer_list<std::tuple<int, int, int>> cells) {
    SupportMatrix m;
    for (auto& [i, j, v] : cells) m.set(i, j, v);
    return m;
}

}  // namespace

const std::vector<TemplateTableRow>& template_table() {
    static const std::vector<TemplateTableRow> rows = [] {
        std::vector<TemplateTableRow> t;
        t.push_back({{{0, 1, 2}}, 1, 1, 4, {2}, 2, "k - 1", 1, {}});
        // The table prints s = 1 here; the defining formula (edges from
        // j0-1 to j0 at the smallest maximizer) gives 0.
        t.push_back({{{0, 2, 1}}, 1, 2, 1, {1, 1}, 1, "2 k + 1", 0, 1});
        t.push_back({{{0, 1, 3}}, 2, 1, 9, {3}, 3, "k - 2", 1, {}});
        t.push_back({{{0, 1, 2}, {0, 1, 2}}, 2, 1, 16, {4}, 4, "1/2 k^2 - 5/2 k + 3", 2, {}});
        t.push_back({{{0, 2, 1}, {0, 2, 1}}, 2, 2, 1, {2, 2}, 2, "2 k^2 - k", 0, {}});
        t.push_back({{{0, 1, 2}, {0, 2, 1}}, 2, 2, 4, {3, 1}, 3, "2 k^2 - 4 k", 1, {}});
        t.push_back({{{0, 2, 1}, {1, 2, 2}}, 2, 2, 4, {1, 3}, 2, "2 k^2 - 2 k", 1, {}});
        t.push_back({{{0, 3, 1}}, 2, 3, 1, {1, 1, 1}, 1, "3 k + 3", 0, {}});
        t.push_back({{{0, 2, 1}, {1, 3, 1}}, 2, 3, 1, {1, 2, 1}, 1, "4 k^2 + 5 k", 0, {}});
        return t;
    }();
    return rows;
}

const std::vector<ExtTableRow>& ext_template_table() {
    static const std::vector<ExtTableRow> rows = [] {
        std::vector<ExtTableRow> t;
        t.push_back({0, {}, {}, {}, {}, 0, 1, {}, 1, {}, "1", 0});
        // The two delta = 1 rows print d_min = 1; the formula gives 2.
        t.push_back({1, {}, {}, matrix({{1, 1, 1}}), {}, 1, 1, {0}, 2, 1, "1", 0});
        t.push_back({1, {}, {}, {}, matrix({{1, 1, 1}}), 1, 1, {0}, 2, 1,
                     "b1 d + b1 s - b1", 0});
        t.push_back({1, {}, {{0, 1, 2}}, matrix({{1, 1, 1}}), {}, 2, 4, {2}, 4, {},
                     "d - 3", 1});
        t.push_back({1, {}, {{0, 1, 2}}, {}, matrix({{1, 1, 1}}), 2, 4, {2}, 4, {},
                     "b1 d^2 + b1 d s - 5 b1 d - 3 b1 s + 6 b1", 1});
        t.push_back({2, {}, {{0, 2, 1}}, matrix({{1, 1, 1}}), {}, 2, 1, {1, 1}, 3, {},
                     "2 d - 4", 0});
        t.push_back({2, {}, {{0, 2, 1}}, {}, matrix({{1, 1, 1}}), 2, 1, {1, 1}, 3, {},
                     "2 b1 d^2 + 2 b1 d s - 7 b1 d - 4 b1 s + 6 b1", 0});
        t.push_back({1, {}, {}, matrix({{1, 1, 2}}), {}, 2, 1, {0}, 3, {}, "1", 0});
        t.push_back({1, {}, {}, matrix({{1, 1, 1}}), matrix({{1, 1, 1}}), 2, 1, {0}, 3, {},
                     "b1 d + b1 s - 2 b1", 0});
        t.push_back({1, {}, {}, {}, matrix({{1, 1, 2}}), 2, 1, {0}, 3, {},
                     "1/2 b1^2 d^2 + b1^2 d s + 1/2 b1^2 s^2 - 5/2 b1^2 d - 5/2 b1^2 s"
                     " + 3 b1^2 - 1/2 b1 d^2 - b1 d s - 1/2 b1 s^2 + 5/2 b1 d + 5/2 b1 s"
                     " - 3 b1", 0});
        t.push_back({1, {}, {}, matrix({{1, 2, 1}}), {}, 2, 1, {0}, 3, {}, "1", 0});
        t.push_back({1, {}, {}, {}, matrix({{1, 2, 1}}), 2, 1, {0}, 3, {},
                     "b2 d s + b2 s^2 - b2 d - 3 b2 s + 2 b2", 0});
        // The table prints l = 3 for the two row-2 matrices; their printed
        // kappa vectors have two entries, so the structure forces l = 2.
        t.push_back({2, 3, {}, matrix({{2, 1, 1}}), {}, 2, 1, {0, 0}, 3, {}, "1", 0});
        t.push_back({2, 3, {}, {}, matrix({{2, 1, 1}}), 2, 1, {0, 0}, 3, {},
                     "2 b1 d s + b1 s^2 - 2 b1 d - 4 b1 s + 3 b1", 0});
        return t;
    }();
    return rows;
}

}  // namespace relnodes
