#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "gpid/rational.hpp"

namespace gpid {

using RatVec = std::vector<Rat>;

// Incremental exact row reduction. Rows are fed one at a time and the
// structure maintains a fully reduced (RREF) basis of their span: each basis
// row has a 1 at its pivot column and 0 there in every other basis row.
// Because of that, the coordinate of any vector of the span with respect to
// basis row j is simply its entry at pivots()[j].
class RowReducer {
public:
    explicit RowReducer(int ncols) : ncols_(ncols) {}

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<RatVec>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Reduces v against the current basis in place; v becomes either zero or
    // a vector whose leading entry sits in a fresh pivot column.
    void reduce(RatVec& v) const {
        for (size_t j = 0; j < basis_.size(); ++j) {
            const Rat& c = v[pivots_[j]];
            if (c == 0) continue;
            Rat f = c; // v[pivot] becomes 0
            const RatVec& b = basis_[j];
            for (int i = 0; i < ncols_; ++i)
                if (b[i] != 0) v[i] -= f * b[i];
        }
    }

    // Adds a row to the span. Returns true if the rank grew.
    bool add_row(RatVec v) {
        if (static_cast<int>(v.size()) != ncols_) throw std::invalid_argument("RowReducer: column count mismatch");
        reduce(v);
        int p = -1;
        for (int i = 0; i < ncols_; ++i)
            if (v[i] != 0) { p = i; break; }
        if (p < 0) return false;
        Rat lead = v[p];
        for (int i = p; i < ncols_; ++i)
            if (v[i] != 0) v[i] /= lead;
        // Clear the new pivot column from the existing basis rows.
        for (size_t j = 0; j < basis_.size(); ++j) {
            Rat c = basis_[j][p];
            if (c == 0) continue;
            for (int i = 0; i < ncols_; ++i)
                if (v[i] != 0) basis_[j][i] -= c * v[i];
        }
        // Keep basis ordered by pivot column.
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        basis_.insert(basis_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

    bool contains(RatVec v) const {
        reduce(v);
        for (const Rat& c : v)
            if (c != 0) return false;
        return true;
    }

    // Coordinates of a vector of the span in the RREF basis.
    RatVec coordinates(const RatVec& v) const {
        RatVec coords(basis_.size());
        for (size_t j = 0; j < basis_.size(); ++j) coords[j] = v[pivots_[j]];
        return coords;
    }

private:
    int ncols_;
    std::vector<RatVec> basis_;
    std::vector<int> pivots_;
};

inline int exact_rank(const std::vector<RatVec>& rows, int ncols) {
    RowReducer red(ncols);
    for (const RatVec& r : rows) red.add_row(r);
    return red.rank();
}

// Solves M x = b exactly (M given as rows). Returns a solution or nullopt if
// the system is inconsistent; free variables are set to zero.
inline std::optional<RatVec> solve_linear(const std::vector<RatVec>& rows, const RatVec& rhs, int ncols) {
    if (rows.size() != rhs.size()) throw std::invalid_argument("solve_linear: size mismatch");
    RowReducer red(ncols + 1);
    for (size_t i = 0; i < rows.size(); ++i) {
        RatVec aug = rows[i];
        aug.push_back(rhs[i]);
        red.add_row(std::move(aug));
    }
    RatVec x(ncols, 0);
    for (int j = red.rank() - 1; j >= 0; --j) {
        int p = red.pivots()[j];
        if (p == ncols) return std::nullopt; // pivot in augmented column
        const RatVec& row = red.basis()[j];
        Rat v = row[ncols];
        for (int i = p + 1; i < ncols; ++i)
            if (row[i] != 0) v -= row[i] * x[i];
        x[p] = v;
    }
    return x;
}

} // namespace gpid
