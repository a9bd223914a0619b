#include "tropgroup/group.hpp"

#include <limits>
#include <map>
#include <stdexcept>

namespace tropgroup {

std::string to_string(GroupAxiom axiom) {
    switch (axiom) {
        case GroupAxiom::NotClosed: return "NotClosed";
        case GroupAxiom::NoNeutral: return "NoNeutral";
        case GroupAxiom::NoInverse: return "NoInverse";
    }
    return "?";
}

namespace {

void check_element_list(const std::vector<TropMatrix>& elements) {
    if (elements.empty()) throw std::invalid_argument("empty element list");
    const std::size_t n = elements.front().rows();
    std::map<TropMatrix, std::size_t, MatrixLess> seen;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const auto& m = elements[i];
        if (!m.is_square() || m.rows() != n)
            throw std::invalid_argument("elements must be square and of one dimension");
        if (!seen.emplace(m, i).second) throw std::invalid_argument("duplicate elements");
    }
}

}  // namespace

std::optional<std::size_t> find_neutral(const std::vector<TropMatrix>& elements) {
    for (std::size_t e = 0; e < elements.size(); ++e) {
        bool ok = true;
        for (const auto& g : elements) {
            if (elements[e] * g != g || g * elements[e] != g) {
                ok = false;
                break;
            }
        }
        if (ok) return e;
    }
    return std::nullopt;
}

GroupResult verify_group(const std::vector<TropMatrix>& elements) {
    check_element_list(elements);
    std::map<TropMatrix, std::size_t, MatrixLess> index;
    for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);

    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = 0; j < elements.size(); ++j) {
            if (!index.contains(elements[i] * elements[j]))
                return GroupAxiomFailure{GroupAxiom::NotClosed, i, j,
                                         "product of elements " + std::to_string(i + 1) + " and " +
                                             std::to_string(j + 1) + " is not in the list"};
        }
    }

    const auto e = find_neutral(elements);
    if (!e) return GroupAxiomFailure{GroupAxiom::NoNeutral, 0, 0, "no two-sided identity"};

    for (std::size_t i = 0; i < elements.size(); ++i) {
        bool has_inverse = false;
        for (std::size_t j = 0; j < elements.size(); ++j) {
            if (elements[i] * elements[j] == elements[*e] &&
                elements[j] * elements[i] == elements[*e]) {
                has_inverse = true;
                break;
            }
        }
        if (!has_inverse)
            return GroupAxiomFailure{GroupAxiom::NoInverse, i, i,
                                     "element " + std::to_string(i + 1) +
                                         " has no two-sided inverse"};
    }

    return MatrixGroup{elements.front().rows(), elements, *e, MatrixGroup::Mode::Verified};
}

GroupResult assume_group(const std::vector<TropMatrix>& elements) {
    check_element_list(elements);
    const auto e = find_neutral(elements);
    if (!e)
        return GroupAxiomFailure{GroupAxiom::NoNeutral, 0, 0,
                                 "no listed element acts as a two-sided identity"};
    return MatrixGroup{elements.front().rows(), elements, *e, MatrixGroup::Mode::Assumed};
}

std::optional<std::vector<TropMatrix>> closure(const std::vector<TropMatrix>& generators,
                                               std::size_t cap) {
    check_element_list(generators);
    std::vector<TropMatrix> elems = generators;
    std::map<TropMatrix, std::size_t, MatrixLess> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
    if (elems.size() > cap) return std::nullopt;

    // Rounds over ordered pairs; products found in a round are appended in
    // first-seen order and only become factors in the next round, which
    // makes the output order a function of the generator order alone.
    std::size_t paired = 0;  // elements fully paired in earlier rounds
    while (true) {
        const std::size_t sz = elems.size();
        for (std::size_t i = 0; i < sz; ++i) {
            for (std::size_t j = 0; j < sz; ++j) {
                if (i < paired && j < paired) continue;
                TropMatrix p = elems[i] * elems[j];
                if (index.contains(p)) continue;
                index.emplace(p, elems.size());
                elems.push_back(std::move(p));
                if (elems.size() > cap) return std::nullopt;
            }
        }
        if (elems.size() == sz) return elems;
        paired = sz;
    }
}

std::uint64_t factorial_bound(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) {
        if (f > std::numeric_limits<std::uint64_t>::max() / k)
            return std::numeric_limits<std::uint64_t>::max();
        f *= k;
    }
    return f;
}

PeriodicBoundReport periodic_bound_check(const MatrixGroup& g) {
    const std::uint64_t bound = factorial_bound(g.n);
    return {g.order(), bound, g.order() <= bound};
}

}  // namespace tropgroup
