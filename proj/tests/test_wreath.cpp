#include <doctest.h>

#include <random>
#include <variant>

#include "helpers.hpp"
#include "tropgroup/group.hpp"
#include "tropgroup/wreath.hpp"

using namespace tropgroup;
using tghelp::mat;

TEST_CASE("wreath product, hand-checked") {
    const WreathElement x{Perm({1, 0}), {-1, 1}};
    CHECK(WreathElement::identity(2) * x == x);
    CHECK(x * WreathElement::identity(2) == x);
    CHECK(x * x == WreathElement::identity(2));

    const WreathElement a{Perm::identity(2), {Rational(1, 2), Rational(3)}};
    const WreathElement b{Perm::identity(2), {Rational(1, 2), Rational(-1)}};
    CHECK(a * b == WreathElement{Perm::identity(2), {Rational(1), Rational(2)}});
}

TEST_CASE("monomial round trips") {
    const auto m = *as_monomial(mat({{"-inf", "1"}, {"-1", "-inf"}}));
    CHECK(to_monomial(from_monomial(m)) == m);
    CHECK(from_monomial(MonomialMatrix::identity(3)) == WreathElement::identity(3));

    const WreathElement w{Perm({1, 2, 0}), {1, 2, 3}};
    const TropMatrix dense = to_monomial(w).to_dense();
    CHECK(dense == mat({{"-inf", "-inf", "3"}, {"1", "-inf", "-inf"}, {"-inf", "2", "-inf"}}));
}

TEST_CASE("the isomorphism transports multiplication, randomized") {
    std::mt19937 rng(606);
    std::uniform_int_distribution<std::size_t> dims(1, 6);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t n = dims(rng);
        const MonomialMatrix p = tghelp::random_monomial(rng, n);
        const MonomialMatrix q = tghelp::random_monomial(rng, n);
        CHECK(from_monomial(p * q) == from_monomial(p) * from_monomial(q));
        CHECK(to_monomial(from_monomial(p)) == p);

        const MonomialMatrix r = tghelp::random_monomial(rng, n);
        CHECK((from_monomial(p) * from_monomial(q)) * from_monomial(r) ==
              from_monomial(p) * (from_monomial(q) * from_monomial(r)));

        const WreathElement w = from_monomial(p);
        CHECK(w * inverse(w) == WreathElement::identity(n));
        CHECK(inverse(w) * w == WreathElement::identity(n));
    }
}

TEST_CASE("realize, hand-checked") {
    CHECK(realize({WreathElement::identity(3)}) == std::vector<TropMatrix>{neutral(3)});

    const auto pair = realize({WreathElement::identity(2), {Perm({1, 0}), {-1, 1}}});
    CHECK(pair == std::vector<TropMatrix>{neutral(2), mat({{"-inf", "1"}, {"-1", "-inf"}})});
}

TEST_CASE("realizing the zero-weight symmetric group of degree 3") {
    std::vector<WreathElement> elements;
    const std::vector<std::vector<std::size_t>> perms = {
        {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    for (const auto& p : perms) elements.push_back({Perm(p), std::vector<Rational>(3)});

    const auto matrices = realize(elements);
    const GroupResult res = verify_group(matrices);
    REQUIRE(std::holds_alternative<MatrixGroup>(res));
    CHECK(std::get<MatrixGroup>(res).order() == 6);
}
