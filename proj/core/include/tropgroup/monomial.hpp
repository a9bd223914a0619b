#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropgroup/matrix.hpp"
#include "tropgroup/scalar.hpp"

namespace tropgroup {

/// Permutation of {0,...,n-1} in one-line notation.
class Perm {
public:
    /// Validates that image is a bijection; throws std::invalid_argument.
    explicit Perm(std::vector<std::size_t> image);

    static Perm identity(std::size_t n);

    std::size_t size() const { return image_.size(); }
    std::size_t operator()(std::size_t j) const { return image_[j]; }

    /// Composition (*this) after inner: result(j) = (*this)(inner(j)).
    Perm after(const Perm& inner) const;
    Perm inverse() const;
    bool is_identity() const;

    const std::vector<std::size_t>& one_line() const { return image_; }

    bool operator==(const Perm& o) const = default;

private:
    std::vector<std::size_t> image_;
};

/// Square tropical matrix with exactly one finite entry in each row and
/// column: entry (i, j) is finite iff i = sigma(j), with value diag[j].
struct MonomialMatrix {
    Perm sigma;
    std::vector<Rational> diag;

    std::size_t dim() const { return diag.size(); }
    bool is_diagonal() const { return sigma.is_identity(); }

    static MonomialMatrix identity(std::size_t n);

    TropMatrix to_dense() const;

    bool operator==(const MonomialMatrix& o) const = default;
};

/// Product transported from the dense tropical product:
/// sigma = p.sigma ∘ q.sigma, diag[j] = p.diag[q.sigma(j)] + q.diag[j].
MonomialMatrix operator*(const MonomialMatrix& p, const MonomialMatrix& q);

MonomialMatrix inverse(const MonomialMatrix& m);

/// Recognize the monomial pattern; nullopt if some row or column does not
/// have exactly one finite entry. Throws DimensionMismatch on non-square a.
std::optional<MonomialMatrix> as_monomial(const TropMatrix& a);

}  // namespace tropgroup
