#include "relnodes/tangency.hpp"

#include "relnodes/errors.hpp"

#include <sstream>

namespace relnodes {

TangencySequence::TangencySequence(const std::vector<int>& dense) {
    for (size_t i = 0; i < dense.size(); ++i) set(static_cast<int>(i) + 1, dense[i]);
}

TangencySequence TangencySequence::parse(const std::string& text) {
    TangencySequence s;
    if (text.empty()) return s;
    std::stringstream in(text);
    std::string field;
    int index = 1;
    while (std::getline(in, field, ',')) {
        size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(field, &pos);
        } catch (const std::exception&) {
            throw DomainError("tangency sequence: cannot parse entry '" + field + "'");
        }
        while (pos < field.size() && std::isspace(static_cast<unsigned char>(field[pos]))) ++pos;
        if (pos != field.size() || value < 0)
            throw DomainError("tangency sequence: entries must be non-negative integers, got '" + field + "'");
        s.set(index++, value);
    }
    return s;
}

int TangencySequence::at(int index) const {
    auto it = entries_.find(index);
    return it == entries_.end() ? 0 : it->second;
}

void TangencySequence::set(int index, int value) {
    if (index < 1) throw DomainError("tangency sequence index must be >= 1");
    if (value < 0) throw DomainError("tangency sequence entries must be non-negative");
    if (value == 0)
        entries_.erase(index);
    else
        entries_[index] = value;
}

void TangencySequence::add(int index, int value) { set(index, at(index) + value); }

int TangencySequence::norm() const {
    int n = 0;
    for (auto& [i, v] : entries_) n += v;
    return n;
}

int TangencySequence::weighted() const {
    int n = 0;
    for (auto& [i, v] : entries_) n += i * v;
    return n;
}

Int TangencySequence::factorial_product() const {
    Int r = 1;
    for (auto& [i, v] : entries_) r *= factorial(v);
    return r;
}

bool TangencySequence::contains(const TangencySequence& other) const {
    for (auto& [i, v] : other.entries_)
        if (at(i) < v) return false;
    return true;
}

TangencySequence TangencySequence::plus(const TangencySequence& other) const {
    TangencySequence r = *this;
    for (auto& [i, v] : other.entries_) r.add(i, v);
    return r;
}

TangencySequence TangencySequence::minus(const TangencySequence& other) const {
    TangencySequence r = *this;
    for (auto& [i, v] : other.entries_) {
        int next = r.at(i) - v;
        if (next < 0)
            throw DomainError("tangency sequence subtraction went negative at index " + std::to_string(i));
        r.set(i, next);
    }
    return r;
}

std::string TangencySequence::to_string() const {
    std::string out;
    int top = max_index();
    for (int i = 1; i <= top; ++i) {
        if (i > 1) out += ",";
        out += std::to_string(at(i));
    }
    return out;
}

SeqStats seq_stats(const TangencySequence& s) {
    return {s.norm(), s.factorial_product(), s.weighted()};
}

Int seq_multinomial(const TangencySequence& s, const std::vector<TangencySequence>& parts) {
    TangencySequence total;
    for (const auto& t : parts) total = total.plus(t);
    if (!s.contains(total))
        throw DomainError("sequence multinomial: sum of parts exceeds the base sequence component-wise");
    Int result = s.factorial_product();
    Int denom = s.minus(total).factorial_product();
    for (const auto& t : parts) denom *= t.factorial_product();
    return result / denom;
}

std::vector<TangencySequence> sequences_with_weight(int weighted) {
    std::vector<TangencySequence> out;
    TangencySequence cur;
    // Descending index recursion keeps the output deterministic.
    auto rec = [&](auto&& self, int index, int left) -> void {
        if (index == 0) {
            if (left == 0) out.push_back(cur);
            return;
        }
        if (index == 1) {
            if (left >= 0) {
                TangencySequence s = cur;
                s.set(1, left);
                out.push_back(s);
            }
            return;
        }
        for (int v = 0; v * index <= left; ++v) {
            cur.set(index, v);
            self(self, index - 1, left - v * index);
        }
        cur.set(index, 0);
    };
    rec(rec, weighted, weighted);
    return out;
}

int SupportMatrix::at(int row, int col) const {
    auto it = entries_.find({row, col});
    return it == entries_.end() ? 0 : it->second;
}

void SupportMatrix::set(int row, int col, int value) {
    if (row < 1 || col < 1) throw DomainError("support matrix indices must be >= 1");
    if (value < 0) throw DomainError("support matrix entries must be non-negative");
    if (value == 0)
        entries_.erase({row, col});
    else
        entries_[{row, col}] = value;
}

void SupportMatrix::add(int row, int col, int value) { set(row, col, at(row, col) + value); }

int SupportMatrix::length() const {
    int l = 0;
    for (auto& [rc, v] : entries_) l = std::max(l, rc.first);
    return l;
}

int SupportMatrix::cogenus() const {
    int d = 0;
    for (auto& [rc, v] : entries_) d += rc.first * rc.second * v;
    return d;
}

int SupportMatrix::norm1() const {
    int n = 0;
    for (auto& [rc, v] : entries_) n += v;
    return n;
}

int SupportMatrix::wls(int row) const {
    int n = 0;
    for (auto& [rc, v] : entries_)
        if (rc.first >= row) n += rc.second * v;
    return n;
}

TangencySequence SupportMatrix::row(int i) const {
    TangencySequence s;
    for (auto& [rc, v] : entries_)
        if (rc.first == i) s.set(rc.second, v);
    return s;
}

TangencySequence SupportMatrix::row_sum() const {
    TangencySequence s;
    for (auto& [rc, v] : entries_) s.add(rc.second, v);
    return s;
}

std::map<int, int> SupportMatrix::column_sums() const {
    std::map<int, int> cols;
    for (auto& [rc, v] : entries_) cols[rc.second] += v;
    return cols;
}

std::vector<TangencySequence> SupportMatrix::rows() const {
    std::vector<TangencySequence> out;
    for (int i = 1; i <= length(); ++i) out.push_back(row(i));
    return out;
}

}  // namespace relnodes
