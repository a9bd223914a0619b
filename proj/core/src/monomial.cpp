#include "tropgroup/monomial.hpp"

#include <stdexcept>

#include "tropgroup/errors.hpp"

namespace tropgroup {

Perm::Perm(std::vector<std::size_t> image) : image_(std::move(image)) {
    if (image_.empty()) throw std::invalid_argument("empty permutation");
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t v : image_) {
        if (v >= image_.size() || seen[v]) throw std::invalid_argument("not a bijection");
        seen[v] = true;
    }
}

Perm Perm::identity(std::size_t n) {
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = i;
    return Perm(std::move(image));
}

Perm Perm::after(const Perm& inner) const {
    if (size() != inner.size()) throw DimensionMismatch("permutation sizes differ");
    std::vector<std::size_t> image(size());
    for (std::size_t j = 0; j < size(); ++j) image[j] = image_[inner.image_[j]];
    return Perm(std::move(image));
}

Perm Perm::inverse() const {
    std::vector<std::size_t> image(size());
    for (std::size_t j = 0; j < size(); ++j) image[image_[j]] = j;
    return Perm(std::move(image));
}

bool Perm::is_identity() const {
    for (std::size_t j = 0; j < size(); ++j)
        if (image_[j] != j) return false;
    return true;
}

MonomialMatrix MonomialMatrix::identity(std::size_t n) {
    return {Perm::identity(n), std::vector<Rational>(n)};
}

TropMatrix MonomialMatrix::to_dense() const {
    TropMatrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m(sigma(j), j) = Scalar(diag[j]);
    return m;
}

MonomialMatrix operator*(const MonomialMatrix& p, const MonomialMatrix& q) {
    if (p.dim() != q.dim()) throw DimensionMismatch("monomial dimensions differ");
    std::vector<Rational> diag(p.dim());
    for (std::size_t j = 0; j < p.dim(); ++j) diag[j] = p.diag[q.sigma(j)] + q.diag[j];
    return {p.sigma.after(q.sigma), std::move(diag)};
}

MonomialMatrix inverse(const MonomialMatrix& m) {
    const Perm inv = m.sigma.inverse();
    std::vector<Rational> diag(m.dim());
    for (std::size_t j = 0; j < m.dim(); ++j) diag[j] = -m.diag[inv(j)];
    return {inv, std::move(diag)};
}

std::optional<MonomialMatrix> as_monomial(const TropMatrix& a) {
    if (!a.is_square()) throw DimensionMismatch("monomial pattern needs a square matrix");
    const std::size_t n = a.rows();
    std::vector<std::size_t> image(n);
    std::vector<Rational> diag(n);
    std::vector<std::size_t> row_hits(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t hits = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (a(i, j).is_neg_inf()) continue;
            image[j] = i;
            diag[j] = a(i, j).value();
            ++hits;
            ++row_hits[i];
        }
        if (hits != 1) return std::nullopt;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (row_hits[i] != 1) return std::nullopt;
    return MonomialMatrix{Perm(std::move(image)), std::move(diag)};
}

}  // namespace tropgroup
