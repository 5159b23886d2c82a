#pragma once

#include <cstddef>
#include <vector>

#include "glcq/errors.hpp"
#include "glcq/scalar.hpp"

namespace glcq {

/// Dense rectangular matrix of scalars over one field mode.
class ScalarMatrix {
public:
    ScalarMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols),
          a_(rows * cols, Scalar::zero(field_)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void set(std::size_t r, std::size_t c, Scalar v) {
        require_same_field(field_, v.field());
        a_[r * cols_ + c] = std::move(v);
    }

private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

namespace detail {

struct Rref {
    std::vector<std::vector<Scalar>> rows; // nonzero rows, pivots normalized to 1
    std::vector<std::size_t> pivot_cols;   // strictly increasing
};

/// Reduced row echelon form by exact Gaussian elimination. Pivot rows are
/// chosen among eligible rows to minimize fill (fewest nonzero entries).
inline Rref rref(const ScalarMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Scalar>> work;
    work.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<Scalar> row;
        row.reserve(cols);
        bool nonzero = false;
        for (std::size_t c = 0; c < cols; ++c) {
            row.push_back(m.at(r, c));
            nonzero = nonzero || !row.back().is_zero();
        }
        if (nonzero) work.push_back(std::move(row));
    }

    Rref result;
    std::size_t next = 0; // rows above `next` are finished pivot rows
    for (std::size_t col = 0; col < cols && next < work.size(); ++col) {
        std::size_t best = work.size();
        std::size_t best_fill = ~static_cast<std::size_t>(0);
        for (std::size_t r = next; r < work.size(); ++r) {
            if (work[r][col].is_zero()) continue;
            std::size_t fill = 0;
            for (std::size_t c = col; c < cols; ++c)
                if (!work[r][c].is_zero()) ++fill;
            if (fill < best_fill) {
                best_fill = fill;
                best = r;
            }
        }
        if (best == work.size()) continue;
        std::swap(work[next], work[best]);

        auto& pivot_row = work[next];
        const Scalar inv = pivot_row[col].inv();
        for (std::size_t c = col; c < cols; ++c)
            if (!pivot_row[c].is_zero()) pivot_row[c] *= inv;

        for (std::size_t r = 0; r < work.size(); ++r) {
            if (r == next || work[r][col].is_zero()) continue;
            const Scalar f = work[r][col];
            for (std::size_t c = col; c < cols; ++c) {
                if (pivot_row[c].is_zero()) continue;
                work[r][c] -= f * pivot_row[c];
            }
        }
        result.pivot_cols.push_back(col);
        ++next;
        // drop rows that became identically zero
        for (std::size_t r = work.size(); r-- > next;) {
            bool zero = true;
            for (std::size_t c = col + 1; c < cols && zero; ++c) zero = work[r][c].is_zero();
            if (zero) work.erase(work.begin() + static_cast<std::ptrdiff_t>(r));
        }
    }
    work.resize(next, std::vector<Scalar>());
    result.rows = std::move(work);
    return result;
}

} // namespace detail

inline std::size_t rank(const ScalarMatrix& m) { return detail::rref(m).pivot_cols.size(); }

/// Exact basis of {v : Mv = 0} in reduced echelon normal form: one vector per
/// free column f, with entry 1 at f and the negated RREF entries at the pivot
/// columns. dim = cols - rank.
inline std::vector<std::vector<Scalar>> nullspace(const ScalarMatrix& m) {
    const auto rr = detail::rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (const std::size_t c : rr.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(cols, Scalar::zero(m.field()));
        v[f] = Scalar::one(m.field());
        for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r)
            v[rr.pivot_cols[r]] = -rr.rows[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace glcq
