#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "tropgroup/matrix.hpp"
#include "tropgroup/monomial.hpp"
#include "tropgroup/scalar.hpp"

namespace tghelp {

using namespace tropgroup;

/// Build a matrix from entry literals, e.g. mat({{"0", "-inf"}, {"-5/2", "1"}}).
inline TropMatrix mat(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Scalar>> parsed;
    for (const auto& r : rows) {
        std::vector<Scalar> row;
        for (const auto& e : r) row.push_back(scalar_from_string(e));
        parsed.push_back(std::move(row));
    }
    return TropMatrix::from_rows(parsed);
}

inline std::vector<Scalar> row(const std::vector<std::string>& entries) {
    std::vector<Scalar> out;
    for (const auto& e : entries) out.push_back(scalar_from_string(e));
    return out;
}

inline Rational rational(int num, int den) { return Rational(num, den); }

/// Random rational with numerator in [-24, 24] and denominator in [1, 8].
inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-24, 24);
    std::uniform_int_distribution<int> den(1, 8);
    return Rational(num(rng), den(rng));
}

/// Random scalar, -infinity with probability inf_pct / 100.
inline Scalar random_scalar(std::mt19937& rng, int inf_pct = 20) {
    std::uniform_int_distribution<int> pct(0, 99);
    if (pct(rng) < inf_pct) return Scalar::neg_inf();
    return Scalar(random_rational(rng));
}

inline TropMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                int inf_pct = 20) {
    TropMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(rng, inf_pct);
    return m;
}

inline Perm random_perm(std::mt19937& rng, std::size_t n) {
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = i;
    std::shuffle(image.begin(), image.end(), rng);
    return Perm(std::move(image));
}

inline MonomialMatrix random_monomial(std::mt19937& rng, std::size_t n) {
    std::vector<Rational> diag(n);
    for (auto& d : diag) d = random_rational(rng);
    return {random_perm(rng, n), std::move(diag)};
}

/// Monomial of finite multiplicative order: weights are adjusted so that
/// they sum to zero around every cycle of sigma.
inline MonomialMatrix random_finite_order_monomial(std::mt19937& rng, std::size_t n) {
    const Perm sigma = random_perm(rng, n);
    std::vector<Rational> diag(n);
    std::vector<bool> seen(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> cycle;
        for (std::size_t j = start; !seen[j]; j = sigma(j)) {
            seen[j] = true;
            cycle.push_back(j);
        }
        Rational sum = 0;
        for (std::size_t k = 0; k + 1 < cycle.size(); ++k) {
            diag[cycle[k]] = random_rational(rng);
            sum += diag[cycle[k]];
        }
        diag[cycle.back()] = -sum;
    }
    return {sigma, std::move(diag)};
}

}  // namespace tghelp
