#pragma once

#include "relnodes/numeric.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace relnodes {

// Finite-support sequence of non-negative integers indexed from 1.
// Zero entries are never stored, so trailing zeros cannot affect equality.
class TangencySequence {
public:
    TangencySequence() = default;
    explicit TangencySequence(const std::vector<int>& dense);  // dense[0] is index 1

    // Comma-separated entries starting at index 1; empty string is the zero
    // sequence ("4,1" is (4,1,0,0,...)).
    static TangencySequence parse(const std::string& text);

    int at(int index) const;
    void set(int index, int value);
    void add(int index, int value);

    bool is_zero() const { return entries_.empty(); }
    int max_index() const { return entries_.empty() ? 0 : entries_.rbegin()->first; }

    int norm() const;      // |s|
    int weighted() const;  // sum i * s_i
    Int factorial_product() const;  // s!

    // Component-wise, treating missing entries as zero.
    bool contains(const TangencySequence& other) const;
    TangencySequence plus(const TangencySequence& other) const;
    // Throws DomainError if any component would go negative.
    TangencySequence minus(const TangencySequence& other) const;

    const std::map<int, int>& entries() const { return entries_; }
    std::string to_string() const;

    auto operator<=>(const TangencySequence&) const = default;

private:
    std::map<int, int> entries_;
};

struct SeqStats {
    int norm;
    Int factorial;
    int weighted;
};

SeqStats seq_stats(const TangencySequence& s);

// s! / (t_1! t_2! ... (s - sum t_i)!) with sequence factorials.
// Throws DomainError when sum of parts exceeds s in any component.
Int seq_multinomial(const TangencySequence& s, const std::vector<TangencySequence>& parts);

// All sequences s with sum i*s_i == weighted (used by test grids and the
// dual-path Severi sweep).
std::vector<TangencySequence> sequences_with_weight(int weighted);

// Infinite matrix of non-negative integers with finite support, rows and
// columns indexed from 1.
class SupportMatrix {
public:
    SupportMatrix() = default;

    int at(int row, int col) const;
    void set(int row, int col, int value);
    void add(int row, int col, int value);

    bool is_zero() const { return entries_.empty(); }

    int length() const;   // l(A): largest non-zero row index, 0 for the zero matrix
    int cogenus() const;  // delta(A) = sum i*j*a_ij
    int norm1() const;    // ||A||_1
    int wls(int row) const;  // weighted lower sum: sum_{i >= row, j} j*a_ij

    TangencySequence row(int i) const;
    TangencySequence row_sum() const;          // sum of all rows as a sequence
    std::map<int, int> column_sums() const;    // j -> |a^T_j|
    std::vector<TangencySequence> rows() const;  // rows 1..length()

    const std::map<std::pair<int, int>, int>& entries() const { return entries_; }

    auto operator<=>(const SupportMatrix&) const = default;

private:
    std::map<std::pair<int, int>, int> entries_;
};

}  // namespace relnodes
