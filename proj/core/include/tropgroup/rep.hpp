#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tropgroup/group.hpp"
#include "tropgroup/matrix.hpp"
#include "tropgroup/monomial.hpp"
#include "tropgroup/rank.hpp"

namespace tropgroup {

/// One dimension-reduction step: every element G of the source group
/// satisfies G = projector ⊗ remove_row(G, removed_row) and is mapped to
/// remove_row(G, removed_row) ⊗ projector.
struct ReductionStep {
    std::size_t removed_row;       // 0-based
    std::vector<Scalar> lambdas;   // row removed_row of projector, in order
    TropMatrix projector;          // n x (n-1); other rows form neutral(n-1)
    std::size_t source_dim;
};

/// Faithful monomial representation of a matrix group: images aligned with
/// source elements, the reduction trace that shrank the dimension, and the
/// full-row-rank neutral used for the final monomial factor extraction.
struct Representation {
    MatrixGroup source;
    std::size_t target_dim;
    std::vector<MonomialMatrix> images;
    std::vector<ReductionStep> trace;
    TropMatrix base_neutral;
};

enum class FactorErrorKind { NoRowMatch, AmbiguousRowMatch, NotBijective, VerificationFailed };

struct FactorError {
    FactorErrorKind kind;
    std::size_t row = 0;  // offending row for the row-match kinds, 0-based
    std::string detail;
};

std::string to_string(FactorErrorKind kind);

using FactorResult = std::variant<MonomialMatrix, FactorError>;

/// The unique monomial p with p ⊗ e = g, found by matching each row of g
/// to a scalar multiple of a row of e (Lemma-style factor extraction).
/// Any failure signals that (g, e) is not a group element / neutral pair
/// with e of full row rank.
FactorResult extract_monomial_factor(const TropMatrix& g, const TropMatrix& e);

enum class ReduceErrorKind {
    AllFullRank,
    RowConsistencyFailed,
    NotInjectiveOnSample,
    NotHomomorphicOnSample,
};

struct ReduceError {
    ReduceErrorKind kind;
    std::size_t element = 0;  // offending element index where applicable
    std::string detail;
};

std::string to_string(ReduceErrorKind kind);

using ReduceResult = std::variant<std::pair<MatrixGroup, ReductionStep>, ReduceError>;

/// One step of dimension reduction: picks the first element with a row-rank
/// deficiency (smallest deficient row, principal lambdas), builds the
/// projector, maps every element, and re-checks reconstruction, injectivity
/// and the homomorphism property on the sample.
ReduceResult reduce_once(const MatrixGroup& g);

using RepResult = std::variant<Representation, ReduceError, FactorError>;

/// Full monomialization: reduce while some element is row-rank deficient,
/// then extract monomial factors against the image of the group neutral.
RepResult monomialize(const MatrixGroup& g);

/// How many powers are tried when probing a sampled diagonal element for
/// finite order; a heuristic bound, reported, never a proof.
inline constexpr unsigned kTorsionExponentCap = 64;

/// Coset structure of the diagonal subgroup inside the monomial image.
struct GroupAnalysis {
    std::vector<std::size_t> diagonal_indices;        // elements with identity sigma
    std::vector<std::vector<std::size_t>> cosets;     // grouped by sigma, first-seen order
    std::size_t index;                                // number of distinct sigmas
    std::uint64_t n_factorial_bound;                  // target_dim!
    bool bound_ok;
    bool diagonal_abelian_ok;
    bool diagonal_torsion_free_ok;
};

GroupAnalysis analyze(const Representation& r);

}  // namespace tropgroup
