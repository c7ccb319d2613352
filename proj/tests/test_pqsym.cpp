#include <doctest.h>

#include <pqsym/errors.hpp>
#include <pqsym/pqsym.hpp>
#include <pqsym/words.hpp>

using namespace pqsym;

TEST_CASE("product_F of F[1,2] and F[1,1]") {
    LinComb got = product_F(Word{1, 2}, Word{1, 1});
    LinComb want = LinComb::zero(Basis::F, 4);
    for (const Word& w : {Word{1, 2, 3, 3}, Word{1, 3, 2, 3}, Word{1, 3, 3, 2},
                          Word{3, 1, 2, 3}, Word{3, 1, 3, 2}, Word{3, 3, 1, 2}})
        want.add_term(w, 1);
    CHECK(got == want);

    CHECK(product_F(Word{}, Word{2, 1}) == LinComb::monomial(Basis::F, {2, 1}));
    CHECK_THROWS_AS(product_F(Word{2, 2}, Word{1}), InvalidIndexError);
    CHECK_THROWS_AS(product_F(LinComb::monomial(Basis::G, {1}),
                              LinComb::monomial(Basis::G, {1})),
                    Error);
}

TEST_CASE("coproduct_F of F[3,1,3,2]") {
    Tensor got = coproduct_F(Word{3, 1, 3, 2});
    Tensor want = Tensor::zero({Basis::F, Basis::F}, 4);
    want.add_term({{}, {3, 1, 3, 2}}, 1);
    want.add_term({{1}, {1, 3, 2}}, 1);
    want.add_term({{2, 1}, {2, 1}}, 1);
    want.add_term({{2, 1, 2}, {1}}, 1);
    want.add_term({{3, 1, 3, 2}, {}}, 1);
    CHECK(got == want);

    Tensor unit = coproduct_F(Word{});
    CHECK(unit.terms.size() == 1);
    CHECK(unit.coeff({{}, {}}) == 1);
}

TEST_CASE("product_G of G[1,2] and G[1,1]") {
    LinComb got = product_G(Word{1, 2}, Word{1, 1});
    LinComb want = LinComb::zero(Basis::G, 4);
    for (const Word& w :
         {Word{1, 2, 1, 1}, Word{1, 2, 2, 2}, Word{1, 2, 3, 3}, Word{1, 3, 1, 1},
          Word{1, 3, 2, 2}, Word{1, 4, 1, 1}, Word{1, 4, 2, 2}, Word{2, 3, 1, 1},
          Word{2, 4, 1, 1}, Word{3, 4, 1, 1}})
        want.add_term(w, 1);
    CHECK(got == want);
}

TEST_CASE("coproduct_G of G[4,1,2,5,2]") {
    Tensor got = coproduct_G(Word{4, 1, 2, 5, 2});
    Tensor want = Tensor::zero({Basis::G, Basis::G}, 5);
    want.add_term({{}, {4, 1, 2, 5, 2}}, 1);
    want.add_term({{1}, {3, 1, 4, 1}}, 1);
    want.add_term({{1, 2, 2}, {1, 2}}, 1);
    want.add_term({{4, 1, 2, 2}, {1}}, 1);
    want.add_term({{4, 1, 2, 5, 2}, {}}, 1);
    CHECK(got == want);
}

TEST_CASE("flatten_pairs caps cross-column gaps and keeps within-column gaps") {
    CHECK(flatten_pairs({{2, 2}, {1, 1}, {1, 1}}, 3) == Word{5, 1, 1});
    // within-column gap of 2 survives under cap 2, shrinks under cap 1
    CHECK(flatten_pairs({{1, 4}, {1, 1}}, 2) == Word{4, 1});
    CHECK(flatten_pairs({{1, 4}, {1, 1}}, 1) == Word{3, 1});
    // baseline below the first pair is finite only in column 1
    CHECK(flatten_pairs({{2, 1}}, 3) == Word{4});
    CHECK(flatten_pairs({{1, 1}}, 3) == Word{1});
    CHECK_THROWS_AS(flatten_pairs({{1, 1}}, 0), Error);
}

TEST_CASE("internal product on words") {
    CHECK(internal_product_F({2, 1, 1}, {2, 1, 1}) == Word{3, 1, 1});
    CHECK(internal_product_F({2, 1, 1}, {1, 1, 2}) == Word{3, 1, 2});
    CHECK(internal_product_F({2, 1, 1}, {1, 2, 1}) == Word{3, 2, 1});
    CHECK(internal_product_F({1, 1, 2}, {3, 1, 2}) == Word{2, 1, 3});
    CHECK(internal_product_F({3, 1, 1, 4, 3, 2, 3, 1}, {2, 3, 5, 7, 1, 7, 1, 3}) ==
          Word{6, 1, 3, 8, 5, 4, 5, 1});

    // left unit and the failure of the right unit law
    CHECK(internal_product_F({1, 1, 1}, {2, 1, 1}) == Word{2, 1, 1});
    CHECK(internal_product_F({1, 1, 2}, {1, 1, 1}) == Word{1, 1, 3});

    // permutation operands project onto the left one
    CHECK(internal_product_F({3, 1, 2}, {2, 3, 1}) == Word{3, 1, 2});

    CHECK(internal_product_F(Word{}, Word{}) == Word{});
    CHECK_THROWS_AS(internal_product_F({1}, {1, 1}), DegreeMismatchError);
}

TEST_CASE("internal product is insensitive to caps at or above the length") {
    const Word a{3, 1, 1, 4, 3, 2, 3, 1};
    const Word b{2, 3, 5, 7, 1, 7, 1, 3};
    const Word base = internal_product_F(a, b);
    for (std::int32_t cap : {8, 9, 16, 40})
        CHECK(internal_product_F_capped(a, b, cap) == base);
}

TEST_CASE("internal product extends bilinearly") {
    LinComb x = add(LinComb::monomial(Basis::F, {2, 1, 1}),
                    LinComb::monomial(Basis::F, {1, 1, 2}));
    LinComb y = LinComb::monomial(Basis::F, {1, 1, 1}, 2);
    LinComb got = internal_product_F(x, y);
    CHECK(got.degree == 3);
    CHECK(got.terms.size() == 2);
    CHECK(got.coeff({3, 1, 1}) == 2);
    CHECK(got.coeff({1, 1, 3}) == 2);
}

TEST_CASE("internal_coproduct_G enumerates the product fibers") {
    Tensor t = internal_coproduct_G(Word{1, 1});
    CHECK(t.degree == 4);
    CHECK(t.terms.size() == 1);
    CHECK(t.coeff({{1, 1}, {1, 1}}) == 1);

    Int total = 0;
    for (const Word& a : enumerate_parking(2))
        for (const auto& [idx, c] : internal_coproduct_G(a).terms) total += c;
    CHECK(total == 9); // |PF_2|^2
}
