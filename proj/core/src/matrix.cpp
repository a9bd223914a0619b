#include "tropgroup/matrix.hpp"

#include <string>

#include "tropgroup/errors.hpp"

namespace tropgroup {

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
}

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
    if (entries_.size() != rows * cols)
        throw DimensionMismatch("entry count does not match dimensions");
}

TropMatrix TropMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) throw DimensionMismatch("matrix needs at least one row");
    const std::size_t cols = rows.front().size();
    std::vector<Scalar> flat;
    flat.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw DimensionMismatch("ragged rows");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return TropMatrix(rows.size(), cols, std::move(flat));
}

std::vector<Scalar> TropMatrix::row(std::size_t i) const {
    if (i >= rows_) throw IndexOutOfRange("row index " + std::to_string(i));
    return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

TropMatrix operator*(const TropMatrix& a, const TropMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("product of " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
    TropMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Scalar acc = Scalar::neg_inf();
            for (std::size_t t = 0; t < a.cols(); ++t) {
                acc = add(acc, mul(a(i, t), b(t, j)));
            }
            c(i, j) = acc;
        }
    }
    return c;
}

TropMatrix neutral(std::size_t n) {
    TropMatrix e(n, n);
    for (std::size_t i = 0; i < n; ++i) e(i, i) = Scalar::zero();
    return e;
}

TropMatrix remove_row(const TropMatrix& a, std::size_t i) {
    if (i >= a.rows()) throw IndexOutOfRange("row index " + std::to_string(i));
    if (a.rows() < 2) throw IndexOutOfRange("removing the only row");
    TropMatrix out(a.rows() - 1, a.cols());
    for (std::size_t r = 0, o = 0; r < a.rows(); ++r) {
        if (r == i) continue;
        for (std::size_t c = 0; c < a.cols(); ++c) out(o, c) = a(r, c);
        ++o;
    }
    return out;
}

bool matrix_less(const TropMatrix& a, const TropMatrix& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows();
    if (a.cols() != b.cols()) return a.cols() < b.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == b(i, j)) continue;
            return a(i, j) < b(i, j);
        }
    }
    return false;
}

}  // namespace tropgroup
