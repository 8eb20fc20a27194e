#pragma once

#include "relnodes/extended_template.hpp"
#include "relnodes/multipoly.hpp"
#include "relnodes/template_graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace relnodes {

// Published reference tables for the small templates and extended templates.
// Entries whose printed value disagrees with the defining formula carry the
// printed value separately so verification can flag instead of fail.

struct TemplateTableRow {
    std::vector<Edge> edges;
    int delta, length;
    Int mu;
    std::vector<int> kappa;
    int k_min;
    const char* poly;  // in k, parseable
    int s;                           // formula value
    std::optional<int> printed_s;    // set when the table prints something else
};

struct ExtTableRow {
    int length;  // structural value
    std::optional<int> printed_length;
    std::vector<Edge> lambda;
    SupportMatrix A, B;
    int delta;
    Int mu;
    std::vector<int> kappa;
    int d_min;  // formula value
    std::optional<int> printed_d_min;
    const char* q;  // in d, s, b-variables, parseable
    int s;
};

const std::vector<TemplateTableRow>& template_table();  // delta <= 2
const std::vector<ExtTableRow>& ext_template_table();   // delta <= 2

}  // namespace relnodes
