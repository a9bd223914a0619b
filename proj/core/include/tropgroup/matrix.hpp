#pragma once

#include <cstddef>
#include <vector>

#include "tropgroup/scalar.hpp"

namespace tropgroup {

/// Dense rectangular matrix over the max-plus semiring, row-major.
/// All indices are 0-based; external interfaces convert to 1-based.
class TropMatrix {
public:
    TropMatrix(std::size_t rows, std::size_t cols);
    TropMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    /// Build from nested initializer-style data; rows must be equal length.
    static TropMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    std::vector<Scalar> row(std::size_t i) const;

    bool operator==(const TropMatrix& o) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;
};

/// Tropical matrix product; throws DimensionMismatch unless a.cols == b.rows.
TropMatrix operator*(const TropMatrix& a, const TropMatrix& b);

/// The semigroup neutral: zeros on the diagonal, -infinity elsewhere.
TropMatrix neutral(std::size_t n);

/// Copy of a with row i deleted; remaining rows keep their order.
/// Throws IndexOutOfRange if i is out of range or a has a single row.
TropMatrix remove_row(const TropMatrix& a, std::size_t i);

/// Strict weak order (dims, then entries lexicographically); used for dedup.
bool matrix_less(const TropMatrix& a, const TropMatrix& b);

struct MatrixLess {
    bool operator()(const TropMatrix& a, const TropMatrix& b) const {
        return matrix_less(a, b);
    }
};

}  // namespace tropgroup
