#include "tropgroup/rank.hpp"

#include "tropgroup/errors.hpp"

namespace tropgroup {

std::vector<Scalar> principal_solution(const std::vector<Scalar>& b,
                                       const std::vector<std::vector<Scalar>>& rows) {
    if (b.empty()) throw DimensionMismatch("empty target row");
    for (const auto& r : rows)
        if (r.size() != b.size()) throw DimensionMismatch("row lengths differ");

    std::vector<Scalar> lambda;
    lambda.reserve(rows.size());
    for (const auto& r : rows) {
        Scalar lk = Scalar::neg_inf();
        bool seen_finite = false;
        bool forced_bottom = false;
        for (std::size_t t = 0; t < b.size() && !forced_bottom; ++t) {
            if (r[t].is_neg_inf()) continue;
            if (b[t].is_neg_inf()) {
                forced_bottom = true;
                continue;
            }
            const Scalar cand{b[t].value() - r[t].value()};
            if (!seen_finite || cand < lk) lk = cand;
            seen_finite = true;
        }
        lambda.push_back(forced_bottom || !seen_finite ? Scalar::neg_inf() : lk);
    }
    return lambda;
}

std::vector<Scalar> combination(const std::vector<Scalar>& lambda,
                                const std::vector<std::vector<Scalar>>& rows,
                                std::size_t width) {
    if (lambda.size() != rows.size()) throw DimensionMismatch("lambda count differs from rows");
    std::vector<Scalar> acc(width, Scalar::neg_inf());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k].size() != width) throw DimensionMismatch("row lengths differ");
        for (std::size_t t = 0; t < width; ++t) acc[t] = add(acc[t], mul(lambda[k], rows[k][t]));
    }
    return acc;
}

std::optional<std::vector<Scalar>> is_combination(const std::vector<Scalar>& b,
                                                  const std::vector<std::vector<Scalar>>& rows) {
    std::vector<Scalar> lambda = principal_solution(b, rows);
    if (combination(lambda, rows, b.size()) != b) return std::nullopt;
    return lambda;
}

std::optional<CombinationWitness> row_rank_deficiency(const TropMatrix& a) {
    if (a.rows() == 1) {
        for (std::size_t t = 0; t < a.cols(); ++t)
            if (a(0, t).is_finite()) return std::nullopt;
        // an all -infinity row is the empty combination
        return CombinationWitness{0, {}};
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<std::vector<Scalar>> others;
        others.reserve(a.rows() - 1);
        for (std::size_t k = 0; k < a.rows(); ++k)
            if (k != i) others.push_back(a.row(k));
        if (auto lambda = is_combination(a.row(i), others))
            return CombinationWitness{i, std::move(*lambda)};
    }
    return std::nullopt;
}

}  // namespace tropgroup
