#pragma once

#include <cstddef>
#include <vector>

#include "tropgroup/matrix.hpp"
#include "tropgroup/monomial.hpp"

namespace tropgroup {

/// Element (sigma, d) of the wreath product of the reals by the symmetric
/// group; weights are finite rationals, never -infinity.
struct WreathElement {
    Perm sigma;
    std::vector<Rational> d;

    std::size_t dim() const { return d.size(); }

    static WreathElement identity(std::size_t n);

    bool operator==(const WreathElement& o) const = default;
};

/// Product transported from the monomial-matrix product:
/// sigma = x.sigma ∘ y.sigma (y applied first), d[j] = x.d[y.sigma(j)] + y.d[j].
WreathElement operator*(const WreathElement& x, const WreathElement& y);

/// (sigma, d)^-1 = (sigma^-1, e) with e[j] = -d[sigma^-1(j)].
WreathElement inverse(const WreathElement& w);

/// Mutually inverse bijections with monomial matrices; both preserve
/// multiplication.
WreathElement from_monomial(const MonomialMatrix& m);
MonomialMatrix to_monomial(const WreathElement& w);

/// Dense tropical matrices realizing the given wreath elements; product
/// compatibility is re-verified on all pairs.
std::vector<TropMatrix> realize(const std::vector<WreathElement>& elements);

}  // namespace tropgroup
