#include "tropgroup/rep.hpp"

#include <map>
#include <string>

namespace tropgroup {

std::string to_string(FactorErrorKind kind) {
    switch (kind) {
        case FactorErrorKind::NoRowMatch: return "NoRowMatch";
        case FactorErrorKind::AmbiguousRowMatch: return "AmbiguousRowMatch";
        case FactorErrorKind::NotBijective: return "NotBijective";
        case FactorErrorKind::VerificationFailed: return "VerificationFailed";
    }
    return "?";
}

std::string to_string(ReduceErrorKind kind) {
    switch (kind) {
        case ReduceErrorKind::AllFullRank: return "AllFullRank";
        case ReduceErrorKind::RowConsistencyFailed: return "RowConsistencyFailed";
        case ReduceErrorKind::NotInjectiveOnSample: return "NotInjectiveOnSample";
        case ReduceErrorKind::NotHomomorphicOnSample: return "NotHomomorphicOnSample";
    }
    return "?";
}

namespace {

// Is row g exactly row e shifted by one finite constant, with identical
// finite support? Returns the constant if so.
std::optional<Rational> scaled_row_match(const std::vector<Scalar>& g,
                                         const std::vector<Scalar>& e) {
    std::optional<Rational> c;
    for (std::size_t t = 0; t < g.size(); ++t) {
        if (g[t].is_neg_inf() != e[t].is_neg_inf()) return std::nullopt;
        if (g[t].is_neg_inf()) continue;
        const Rational diff = g[t].value() - e[t].value();
        if (!c)
            c = diff;
        else if (*c != diff)
            return std::nullopt;
    }
    return c;  // nullopt when both rows are entirely -infinity too
}

}  // namespace

FactorResult extract_monomial_factor(const TropMatrix& g, const TropMatrix& e) {
    if (!g.is_square() || !e.is_square() || g.rows() != e.rows())
        return FactorError{FactorErrorKind::VerificationFailed, 0,
                           "operands must be square of equal dimension"};
    if (!full_row_rank(e))
        return FactorError{FactorErrorKind::VerificationFailed, 0,
                           "factor base lacks full row rank"};
    const std::size_t n = g.rows();

    std::vector<std::size_t> kappa(n);  // kappa[i]: the row of e scaling to row i of g
    std::vector<Rational> shift(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t matches = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (auto c = scaled_row_match(g.row(i), e.row(k))) {
                kappa[i] = k;
                shift[i] = *c;
                ++matches;
            }
        }
        if (matches == 0)
            return FactorError{FactorErrorKind::NoRowMatch, i,
                               "row " + std::to_string(i + 1) +
                                   " is not a scaled row of the base"};
        if (matches > 1)
            return FactorError{FactorErrorKind::AmbiguousRowMatch, i,
                               "row " + std::to_string(i + 1) +
                                   " matches more than one base row"};
    }

    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (hit[kappa[i]])
            return FactorError{FactorErrorKind::NotBijective, i, "row assignment is not a bijection"};
        hit[kappa[i]] = true;
    }

    // Finite entry of the factor sits at (i, kappa[i]); in column terms
    // sigma(kappa[i]) = i with weight shift[i].
    std::vector<std::size_t> image(n);
    std::vector<Rational> diag(n);
    for (std::size_t i = 0; i < n; ++i) {
        image[kappa[i]] = i;
        diag[kappa[i]] = shift[i];
    }
    MonomialMatrix p{Perm(std::move(image)), std::move(diag)};

    if (p.to_dense() * e != g)
        return FactorError{FactorErrorKind::VerificationFailed, 0,
                           "factor times base does not reproduce the element"};
    return p;
}

namespace {

struct SampleCheck {
    std::optional<ReduceError> error;
};

// Injectivity and the homomorphism property of an element map, checked on
// every in-sample pair (products outside the sample are skipped).
std::optional<ReduceError> check_sample_map(const MatrixGroup& g,
                                            const std::vector<TropMatrix>& images) {
    std::map<TropMatrix, std::size_t, MatrixLess> image_index;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!image_index.emplace(images[i], i).second)
            return ReduceError{ReduceErrorKind::NotInjectiveOnSample, i,
                               "elements " + std::to_string(image_index[images[i]] + 1) + " and " +
                                   std::to_string(i + 1) + " share an image"};
    }
    std::map<TropMatrix, std::size_t, MatrixLess> source_index;
    for (std::size_t i = 0; i < g.order(); ++i) source_index.emplace(g.elements[i], i);
    for (std::size_t i = 0; i < g.order(); ++i) {
        for (std::size_t j = 0; j < g.order(); ++j) {
            const auto it = source_index.find(g.elements[i] * g.elements[j]);
            if (it == source_index.end()) continue;
            if (images[i] * images[j] != images[it->second])
                return ReduceError{ReduceErrorKind::NotHomomorphicOnSample, i,
                                   "images of elements " + std::to_string(i + 1) + " and " +
                                       std::to_string(j + 1) + " break the homomorphism"};
        }
    }
    return std::nullopt;
}

}  // namespace

ReduceResult reduce_once(const MatrixGroup& g) {
    if (g.n < 2)
        return ReduceError{ReduceErrorKind::AllFullRank, 0, "dimension 1 cannot be reduced"};

    std::optional<CombinationWitness> witness;
    std::size_t deficient_elem = 0;
    for (std::size_t i = 0; i < g.order(); ++i) {
        if ((witness = row_rank_deficiency(g.elements[i]))) {
            deficient_elem = i;
            break;
        }
    }
    if (!witness)
        return ReduceError{ReduceErrorKind::AllFullRank, 0, "every element has full row rank"};
    (void)deficient_elem;

    const std::size_t n = g.n;
    const std::size_t i = witness->target_row;

    // Projector: rows other than i form the lower-dimensional neutral, row i
    // carries the combination coefficients.
    TropMatrix p(n, n - 1);
    for (std::size_t r = 0, o = 0; r < n; ++r) {
        if (r == i) continue;
        p(r, o) = Scalar::zero();
        ++o;
    }
    for (std::size_t k = 0; k < n - 1; ++k) p(i, k) = witness->lambdas[k];

    std::vector<TropMatrix> images;
    images.reserve(g.order());
    for (std::size_t e = 0; e < g.order(); ++e) {
        const TropMatrix reduced = remove_row(g.elements[e], i);
        if (p * reduced != g.elements[e])
            return ReduceError{ReduceErrorKind::RowConsistencyFailed, e,
                               "element " + std::to_string(e + 1) +
                                   " is not reproduced by the projector; input is not a group"};
        images.push_back(reduced * p);
    }

    if (auto err = check_sample_map(g, images)) return *err;

    MatrixGroup out{n - 1, std::move(images), g.neutral_index, g.mode};
    return std::pair<MatrixGroup, ReductionStep>{
        std::move(out), ReductionStep{i, witness->lambdas, std::move(p), n}};
}

RepResult monomialize(const MatrixGroup& g) {
    MatrixGroup current = g;
    std::vector<ReductionStep> trace;

    while (true) {
        bool all_full = true;
        for (const auto& m : current.elements) {
            if (!full_row_rank(m)) {
                all_full = false;
                break;
            }
        }
        if (all_full) break;

        if (current.n == 1) {
            // Only the singleton group of the absorbing 1x1 matrix reaches
            // this point; it is the trivial group and maps to the identity.
            if (current.order() == 1) {
                Representation rep{g, 1, {MonomialMatrix::identity(1)}, std::move(trace),
                                   neutral(1)};
                return rep;
            }
            return ReduceError{ReduceErrorKind::RowConsistencyFailed, 0,
                               "rank-deficient elements at dimension 1; input is not a group"};
        }

        ReduceResult step = reduce_once(current);
        if (auto* err = std::get_if<ReduceError>(&step)) return *err;
        auto& [reduced, record] = std::get<std::pair<MatrixGroup, ReductionStep>>(step);
        trace.push_back(std::move(record));
        current = std::move(reduced);
    }

    const TropMatrix base = current.neutral_element();
    std::vector<MonomialMatrix> images;
    images.reserve(current.order());
    for (const auto& elem : current.elements) {
        FactorResult f = extract_monomial_factor(elem, base);
        if (auto* err = std::get_if<FactorError>(&f)) return *err;
        images.push_back(std::get<MonomialMatrix>(std::move(f)));
    }

    if (!images[current.neutral_index].sigma.is_identity() ||
        images[current.neutral_index] != MonomialMatrix::identity(current.n))
        return FactorError{FactorErrorKind::VerificationFailed, current.neutral_index,
                           "neutral element does not map to the identity monomial"};

    // Injectivity and homomorphism on the final monomial images.
    std::vector<TropMatrix> dense;
    dense.reserve(images.size());
    for (const auto& m : images) dense.push_back(m.to_dense());
    if (auto err = check_sample_map(current, dense)) return *err;

    return Representation{g, current.n, std::move(images), std::move(trace), base};
}

GroupAnalysis analyze(const Representation& r) {
    GroupAnalysis out;
    const std::size_t m = r.target_dim;

    std::vector<Perm> sigmas;
    for (std::size_t i = 0; i < r.images.size(); ++i) {
        const Perm& s = r.images[i].sigma;
        if (s.is_identity()) out.diagonal_indices.push_back(i);
        std::size_t c = 0;
        for (; c < sigmas.size(); ++c)
            if (sigmas[c] == s) break;
        if (c == sigmas.size()) {
            sigmas.push_back(s);
            out.cosets.emplace_back();
        }
        out.cosets[c].push_back(i);
    }
    out.index = sigmas.size();
    out.n_factorial_bound = factorial_bound(m);
    out.bound_ok = out.index <= out.n_factorial_bound;

    out.diagonal_abelian_ok = true;
    for (std::size_t a : out.diagonal_indices)
        for (std::size_t b : out.diagonal_indices)
            if (r.images[a] * r.images[b] != r.images[b] * r.images[a])
                out.diagonal_abelian_ok = false;

    const std::size_t e = r.source.neutral_index;
    if (r.source.mode == MatrixGroup::Mode::Verified) {
        // A finite group is periodic, so its torsion-free diagonal part
        // must be the neutral alone.
        out.diagonal_torsion_free_ok =
            out.diagonal_indices.size() == 1 && out.diagonal_indices.front() == e;
    } else {
        // A finite sample cannot prove torsion-freeness; probe powers of
        // each non-neutral diagonal image up to the exponent cap.
        out.diagonal_torsion_free_ok = true;
        const MonomialMatrix id = MonomialMatrix::identity(m);
        for (std::size_t a : out.diagonal_indices) {
            if (a == e) continue;
            MonomialMatrix power = r.images[a];
            for (unsigned k = 1; k <= kTorsionExponentCap; ++k) {
                if (power == id) {
                    out.diagonal_torsion_free_ok = false;
                    break;
                }
                power = power * r.images[a];
            }
        }
    }
    return out;
}

}  // namespace tropgroup
