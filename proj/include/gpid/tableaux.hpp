#pragma once

#include <functional>
#include <vector>

#include "gpid/partition.hpp"

namespace gpid {

// A (skew) semistandard filling, as a grid indexed by 1-based (row, col);
// only the cells inner_i < col <= outer_i are meaningful.
struct SkewTableau {
    Partition outer, inner;
    std::vector<std::vector<int>> value; // value[row-1][col-1], 0 where absent
};

// Enumerates all semistandard fillings of outer/inner with entries in
// 1..maxval: rows weakly increase, columns strictly increase. Cells are
// filled in row-major order. Stops early if fn returns false.
inline void for_each_skew_ssyt(const Partition& outer, const Partition& inner, int maxval,
                               const std::function<bool(const SkewTableau&)>& fn) {
    if (!outer.contains(inner)) throw std::invalid_argument("for_each_skew_ssyt: inner not contained in outer");
    SkewTableau t{outer, inner, {}};
    t.value.assign(outer.height(), {});
    for (int i = 1; i <= outer.height(); ++i) t.value[i - 1].assign(outer.part(i), 0);

    bool stop = false;
    std::function<void(int, int)> rec = [&](int row, int col) {
        if (stop) return;
        if (row > outer.height()) {
            if (!fn(t)) stop = true;
            return;
        }
        if (col > outer.part(row)) {
            rec(row + 1, inner.part(row + 1) + 1);
            return;
        }
        int lo = 1;
        if (col - 1 > inner.part(row)) lo = std::max(lo, t.value[row - 1][col - 2]);
        if (row > 1 && col > inner.part(row - 1) && col <= outer.part(row - 1))
            lo = std::max(lo, t.value[row - 2][col - 1] + 1);
        for (int v = lo; v <= maxval && !stop; ++v) {
            t.value[row - 1][col - 1] = v;
            rec(row, col + 1);
        }
        t.value[row - 1][col - 1] = 0;
    };
    rec(1, inner.part(1) + 1);
}

inline void for_each_ssyt(const Partition& shape, int maxval,
                          const std::function<bool(const SkewTableau&)>& fn) {
    for_each_skew_ssyt(shape, Partition(), maxval, fn);
}

// Content vector (#1s, #2s, ..., #maxval's) of a filling.
inline std::vector<int> tableau_content(const SkewTableau& t, int maxval) {
    std::vector<int> content(maxval, 0);
    for (int i = 1; i <= t.outer.height(); ++i)
        for (int j = t.inner.part(i) + 1; j <= t.outer.part(i); ++j)
            content[t.value[i - 1][j - 1] - 1]++;
    return content;
}

// Reverse reading word: right to left within each row, rows top to bottom.
inline std::vector<int> reverse_reading_word(const SkewTableau& t) {
    std::vector<int> word;
    for (int i = 1; i <= t.outer.height(); ++i)
        for (int j = t.outer.part(i); j > t.inner.part(i); --j)
            word.push_back(t.value[i - 1][j - 1]);
    return word;
}

// Every prefix contains at least as many i's as (i+1)'s.
inline bool is_lattice_word(const std::vector<int>& word) {
    std::vector<int> seen;
    for (int v : word) {
        if (static_cast<int>(seen.size()) < v) seen.resize(v, 0);
        seen[v - 1]++;
        if (v > 1 && seen[v - 1] > seen[v - 2]) return false;
    }
    return true;
}

inline Int count_skew_ssyt(const Partition& outer, const Partition& inner, int maxval) {
    Int count = 0;
    for_each_skew_ssyt(outer, inner, maxval, [&](const SkewTableau&) {
        ++count;
        return true;
    });
    return count;
}

} // namespace gpid
