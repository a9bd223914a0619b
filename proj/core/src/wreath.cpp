#include "tropgroup/wreath.hpp"

#include <stdexcept>

#include "tropgroup/errors.hpp"

namespace tropgroup {

WreathElement WreathElement::identity(std::size_t n) {
    return {Perm::identity(n), std::vector<Rational>(n)};
}

WreathElement operator*(const WreathElement& x, const WreathElement& y) {
    if (x.dim() != y.dim()) throw DimensionMismatch("wreath element dimensions differ");
    std::vector<Rational> d(x.dim());
    for (std::size_t j = 0; j < x.dim(); ++j) d[j] = x.d[y.sigma(j)] + y.d[j];
    return {x.sigma.after(y.sigma), std::move(d)};
}

WreathElement inverse(const WreathElement& w) {
    const Perm inv = w.sigma.inverse();
    std::vector<Rational> d(w.dim());
    for (std::size_t j = 0; j < w.dim(); ++j) d[j] = -w.d[inv(j)];
    return {inv, std::move(d)};
}

WreathElement from_monomial(const MonomialMatrix& m) { return {m.sigma, m.diag}; }

MonomialMatrix to_monomial(const WreathElement& w) { return {w.sigma, w.d}; }

std::vector<TropMatrix> realize(const std::vector<WreathElement>& elements) {
    if (elements.empty()) return {};
    const std::size_t n = elements.front().dim();
    std::vector<TropMatrix> out;
    out.reserve(elements.size());
    for (const auto& w : elements) {
        if (w.dim() != n) throw DimensionMismatch("wreath element dimensions differ");
        out.push_back(to_monomial(w).to_dense());
    }
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = 0; j < elements.size(); ++j)
            if (out[i] * out[j] != to_monomial(elements[i] * elements[j]).to_dense())
                throw std::logic_error("realized products disagree with wreath products");
    return out;
}

}  // namespace tropgroup
