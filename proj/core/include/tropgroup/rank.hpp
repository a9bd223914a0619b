#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropgroup/matrix.hpp"
#include "tropgroup/scalar.hpp"

namespace tropgroup {

/// Certificate that row target_row equals the combination
/// ⊕_k lambdas[k] ⊗ (k-th remaining row).
struct CombinationWitness {
    std::size_t target_row;
    std::vector<Scalar> lambdas;

    bool operator==(const CombinationWitness& o) const = default;
};

/// Entrywise-maximal lambda with ⊕_k lambda[k] ⊗ rows[k] <= b.
/// lambda[k] = min over finite positions t of rows[k] of (b[t] - rows[k][t]);
/// -infinity when b is -infinity at a finite position of rows[k], or when
/// rows[k] has no finite entry. Throws DimensionMismatch on ragged input.
std::vector<Scalar> principal_solution(const std::vector<Scalar>& b,
                                       const std::vector<std::vector<Scalar>>& rows);

/// ⊕_k lambda[k] ⊗ rows[k], entrywise over width positions.
std::vector<Scalar> combination(const std::vector<Scalar>& lambda,
                                const std::vector<std::vector<Scalar>>& rows,
                                std::size_t width);

/// Lambdas expressing b as a combination of rows, or nullopt when no such
/// lambdas exist. Decided by evaluating the principal solution: by its
/// maximality, inequality there rules out every other candidate.
std::optional<std::vector<Scalar>> is_combination(const std::vector<Scalar>& b,
                                                  const std::vector<std::vector<Scalar>>& rows);

/// Smallest row of a expressible from the other rows, with its lambdas;
/// nullopt when a has full row rank. A single all -infinity row is
/// expressible as the empty combination.
std::optional<CombinationWitness> row_rank_deficiency(const TropMatrix& a);

inline bool full_row_rank(const TropMatrix& a) { return !row_rank_deficiency(a); }

}  // namespace tropgroup
