#include <doctest.h>

#include <random>
#include <stdexcept>

#include "helpers.hpp"
#include "tropgroup/group.hpp"

using namespace tropgroup;
using tghelp::mat;

namespace {
const TropMatrix kSwap = mat({{"-inf", "1"}, {"-1", "-inf"}});  // order 2
}

TEST_CASE("find_neutral") {
    CHECK(find_neutral({neutral(2)}) == 0);
    CHECK(find_neutral({kSwap, neutral(2)}) == 1);
    // an idempotent is its own neutral
    CHECK(find_neutral({mat({{"0", "0"}, {"0", "0"}})}) == 0);
    CHECK_FALSE(find_neutral({kSwap}));
}

TEST_CASE("verify_group accepts the order-2 group") {
    const GroupResult res = verify_group({neutral(2), kSwap});
    REQUIRE(std::holds_alternative<MatrixGroup>(res));
    const auto& g = std::get<MatrixGroup>(res);
    CHECK(g.order() == 2);
    CHECK(g.neutral_index == 0);
    CHECK(g.mode == MatrixGroup::Mode::Verified);
}

TEST_CASE("verify_group reports the failing axiom") {
    const GroupResult res = verify_group({neutral(2), mat({{"1", "-inf"}, {"-inf", "1"}})});
    REQUIRE(std::holds_alternative<GroupAxiomFailure>(res));
    CHECK(std::get<GroupAxiomFailure>(res).axiom == GroupAxiom::NotClosed);

    const GroupResult no_inv = verify_group({mat({{"0", "0"}, {"0", "0"}}), neutral(2)});
    REQUIRE(std::holds_alternative<GroupAxiomFailure>(no_inv));
    CHECK(std::get<GroupAxiomFailure>(no_inv).axiom == GroupAxiom::NoInverse);
}

TEST_CASE("verify_group accepts the trivial idempotent group") {
    const GroupResult res = verify_group({mat({{"0", "0"}, {"0", "0"}})});
    REQUIRE(std::holds_alternative<MatrixGroup>(res));
    CHECK(std::get<MatrixGroup>(res).order() == 1);
}

TEST_CASE("verify_group rejects bad input lists") {
    CHECK_THROWS_AS(verify_group({}), std::invalid_argument);
    CHECK_THROWS_AS(verify_group({neutral(2), neutral(2)}), std::invalid_argument);
    CHECK_THROWS_AS(verify_group({neutral(2), neutral(3)}), std::invalid_argument);
}

TEST_CASE("closure, hand-checked") {
    const auto order2 = closure({kSwap}, 10);
    REQUIRE(order2);
    CHECK(*order2 == std::vector<TropMatrix>{kSwap, neutral(2)});

    CHECK(closure({neutral(3)}, 10) == std::vector<TropMatrix>{neutral(3)});

    // powers of diag(1, 1) never repeat
    CHECK_FALSE(closure({mat({{"1", "-inf"}, {"-inf", "1"}})}, 5));
}

TEST_CASE("closure of the 3x3 zero-weight transpositions is all of S3") {
    const TropMatrix t12 = mat({{"-inf", "0", "-inf"}, {"0", "-inf", "-inf"},
                                {"-inf", "-inf", "0"}});
    const TropMatrix t23 = mat({{"0", "-inf", "-inf"}, {"-inf", "-inf", "0"},
                                {"-inf", "0", "-inf"}});
    const auto s3 = closure({t12, t23}, 100);
    REQUIRE(s3);
    CHECK(s3->size() == 6);
    const GroupResult res = verify_group(*s3);
    REQUIRE(std::holds_alternative<MatrixGroup>(res));
    CHECK(periodic_bound_check(std::get<MatrixGroup>(res)).ok);
}

TEST_CASE("closure order depends only on the generator order") {
    std::mt19937 rng(31);
    for (int iter = 0; iter < 20; ++iter) {
        const TropMatrix a = tghelp::random_finite_order_monomial(rng, 3).to_dense();
        const TropMatrix b = tghelp::random_finite_order_monomial(rng, 3).to_dense();
        if (a == b) continue;
        const auto once = closure({a, b}, 300);
        const auto again = closure({a, b}, 300);
        REQUIRE(once.has_value() == again.has_value());
        if (once) CHECK(*once == *again);
    }
}

TEST_CASE("closures of finite-order monomials verify as groups within n!") {
    std::mt19937 rng(32);
    std::uniform_int_distribution<std::size_t> dims(1, 4);
    std::uniform_int_distribution<int> count(1, 2);

    // Weighted generators that provably close up: a common diagonal
    // conjugate of zero-weight permutation monomials.
    for (int iter = 0; iter < 40; ++iter) {
        const std::size_t n = dims(rng);
        const MonomialMatrix conj{Perm::identity(n), [&] {
                                      std::vector<Rational> d(n);
                                      for (auto& v : d) v = tghelp::random_rational(rng);
                                      return d;
                                  }()};
        std::vector<TropMatrix> gens;
        for (int k = count(rng); k > 0; --k) {
            const MonomialMatrix p{tghelp::random_perm(rng, n), std::vector<Rational>(n)};
            const TropMatrix g = (conj * p * inverse(conj)).to_dense();
            if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
        }
        const auto closed = closure(gens, 10000);
        REQUIRE(closed);
        const GroupResult res = verify_group(*closed);
        REQUIRE(std::holds_alternative<MatrixGroup>(res));
        const auto report = periodic_bound_check(std::get<MatrixGroup>(res));
        CHECK(report.ok);
        CHECK(report.n_factorial == factorial_bound(n));
    }

    // Independent cycle-balanced generators may generate an infinite group;
    // the group axioms are only claimed when the closure stabilizes.
    for (int iter = 0; iter < 40; ++iter) {
        const std::size_t n = dims(rng);
        std::vector<TropMatrix> gens{tghelp::random_finite_order_monomial(rng, n).to_dense()};
        const TropMatrix second = tghelp::random_finite_order_monomial(rng, n).to_dense();
        if (second != gens[0]) gens.push_back(second);
        const auto closed = closure(gens, 300);
        if (!closed) continue;
        const GroupResult res = verify_group(*closed);
        REQUIRE(std::holds_alternative<MatrixGroup>(res));
        CHECK(periodic_bound_check(std::get<MatrixGroup>(res)).ok);
    }
}

TEST_CASE("periodic bound report values") {
    const auto g2 = std::get<MatrixGroup>(verify_group({neutral(2), kSwap}));
    const auto r = periodic_bound_check(g2);
    CHECK(r.order == 2);
    CHECK(r.n_factorial == 2);
    CHECK(r.ok);

    const auto trivial = std::get<MatrixGroup>(verify_group({neutral(5)}));
    const auto rt = periodic_bound_check(trivial);
    CHECK(rt.order == 1);
    CHECK(rt.n_factorial == 120);
    CHECK(rt.ok);
}

TEST_CASE("factorial bound saturates instead of overflowing") {
    CHECK(factorial_bound(0) == 1);
    CHECK(factorial_bound(7) == 5040);
    CHECK(factorial_bound(20) == 2432902008176640000ULL);
    CHECK(factorial_bound(21) == UINT64_MAX);
    CHECK(factorial_bound(100) == UINT64_MAX);
}
