#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tropgroup/matrix.hpp"

namespace tropgroup {

/// Finite list of square tropical matrices presented as a group.
///
/// Verified: closure, neutral and inverses machine-checked on the list.
/// Assumed: the list is a finite sample of a possibly infinite group; only
/// the neutral action is checked.
struct MatrixGroup {
    enum class Mode { Verified, Assumed };

    std::size_t n = 0;
    std::vector<TropMatrix> elements;
    std::size_t neutral_index = 0;
    Mode mode = Mode::Assumed;

    std::size_t order() const { return elements.size(); }
    const TropMatrix& neutral_element() const { return elements[neutral_index]; }
};

enum class GroupAxiom { NotClosed, NoNeutral, NoInverse };

struct GroupAxiomFailure {
    GroupAxiom axiom;
    // Offending element indices; meaning depends on the axiom.
    std::size_t lhs = 0;
    std::size_t rhs = 0;
    std::string detail;
};

std::string to_string(GroupAxiom axiom);

using GroupResult = std::variant<MatrixGroup, GroupAxiomFailure>;

/// Index of the unique two-sided identity on every element, if any.
std::optional<std::size_t> find_neutral(const std::vector<TropMatrix>& elements);

/// Check closure, neutral and two-sided inverses on the given list.
/// Throws std::invalid_argument on empty, ragged-dimension or duplicate input.
GroupResult verify_group(const std::vector<TropMatrix>& elements);

/// Wrap a finite sample of a possibly infinite group; only the neutral is
/// located and checked. Fails (NoNeutral) when no listed element is neutral.
GroupResult assume_group(const std::vector<TropMatrix>& elements);

/// Breadth-first closure under the tropical product, deduplicated by exact
/// equality, first-seen order. nullopt when the element count exceeds cap.
std::optional<std::vector<TropMatrix>> closure(const std::vector<TropMatrix>& generators,
                                               std::size_t cap);

inline constexpr std::size_t kDefaultClosureCap = 10000;

struct PeriodicBoundReport {
    std::size_t order;
    std::uint64_t n_factorial;
    bool ok;
};

/// n! saturated at the maximum of uint64.
std::uint64_t factorial_bound(std::size_t n);

/// Order of a verified (hence periodic) group against the n! bound.
/// ok is always true unless there is a bug upstream.
PeriodicBoundReport periodic_bound_check(const MatrixGroup& g);

}  // namespace tropgroup
