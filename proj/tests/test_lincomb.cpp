#include <doctest.h>

#include <pqsym/errors.hpp>
#include <pqsym/lincomb.hpp>
#include <pqsym/words.hpp>

using namespace pqsym;

TEST_CASE("monomial validates indices per basis") {
    CHECK_NOTHROW(LinComb::monomial(Basis::F, {3, 1, 3, 2}));
    CHECK_THROWS_AS(LinComb::monomial(Basis::F, {2, 2, 2}), InvalidIndexError);
    CHECK_THROWS_AS(LinComb::monomial(Basis::G, {0, 1}), InvalidIndexError);

    CHECK_NOTHROW(LinComb::monomial(Basis::P, {1, 1, 2, 3}));
    // parking but not nondecreasing
    CHECK_THROWS_AS(LinComb::monomial(Basis::P, {2, 1}), InvalidIndexError);
    CHECK_THROWS_AS(LinComb::monomial(Basis::M, {1, 3, 2}), InvalidIndexError);
    CHECK_THROWS_AS(LinComb::monomial(Basis::R, {3, 1, 2}), InvalidIndexError);
}

TEST_CASE("arithmetic and cancellation") {
    LinComb a = LinComb::monomial(Basis::F, {1, 2});
    LinComb b = LinComb::monomial(Basis::F, {2, 1});

    LinComb s = add(scale(2, a), b);
    CHECK(s.coeff({1, 2}) == 2);
    CHECK(s.coeff({2, 1}) == 1);
    CHECK(s.terms.size() == 2);

    LinComb z = sub(s, s);
    CHECK(z.is_zero());

    LinComb t = sub(add(a, b), b);
    CHECK(t.terms.size() == 1);
    CHECK(t.coeff({1, 2}) == 1);

    CHECK(scale(0, a).is_zero());
}

TEST_CASE("shape mismatches are rejected") {
    LinComb a = LinComb::monomial(Basis::F, {1});
    LinComb b = LinComb::monomial(Basis::F, {1, 1});
    LinComb g = LinComb::monomial(Basis::G, {1});
    CHECK_THROWS_AS(add(a, b), DegreeMismatchError);
    CHECK_THROWS_AS(sub(a, b), DegreeMismatchError);
    CHECK_THROWS_AS(add(a, g), Error);
}

TEST_CASE("pairing is the Kronecker form on dual pairs") {
    LinComb f = add(LinComb::monomial(Basis::F, {1, 2}),
                    scale(3, LinComb::monomial(Basis::F, {2, 1})));
    LinComb g = LinComb::monomial(Basis::G, {2, 1});
    CHECK(pairing(f, g) == 3);
    CHECK(pairing(g, f) == 3);
    CHECK(pairing(f, LinComb::monomial(Basis::G, {1, 1})) == 0);

    LinComb p = LinComb::monomial(Basis::P, {1, 1});
    LinComb m = add(LinComb::monomial(Basis::M, {1, 1}),
                    LinComb::monomial(Basis::M, {1, 2}));
    CHECK(pairing(p, m) == 1);

    CHECK_THROWS_AS(pairing(f, f), Error);
    CHECK_THROWS_AS(pairing(p, g), Error);
    CHECK_THROWS_AS(pairing(g, LinComb::monomial(Basis::F, {1})), DegreeMismatchError);
}

TEST_CASE("P expands in F as the rearrangement class sum") {
    LinComb p = LinComb::monomial(Basis::P, {1, 2});
    LinComb f = change_basis(p, Basis::F);
    CHECK(f.basis == Basis::F);
    CHECK(f.coeff({1, 2}) == 1);
    CHECK(f.coeff({2, 1}) == 1);
    CHECK(f.terms.size() == 2);

    LinComb back = change_basis(f, Basis::P);
    CHECK(back.terms.size() == 1);
    CHECK(back.coeff({1, 2}) == 1);

    // a lone rearrangement is not an orbit sum
    CHECK_THROWS_AS(change_basis(LinComb::monomial(Basis::F, {1, 2}), Basis::P),
                    NotInCatalanSpanError);
    // and neither is an orbit with uneven coefficients
    LinComb uneven = add(f, LinComb::monomial(Basis::F, {2, 1}));
    CHECK_THROWS_AS(change_basis(uneven, Basis::P), NotInCatalanSpanError);
}

TEST_CASE("P to R is inclusion-exclusion over the covering order") {
    LinComb r = change_basis(LinComb::monomial(Basis::P, {1, 2}), Basis::R);
    CHECK(r.basis == Basis::R);
    CHECK(r.coeff({1, 1}) == 1);
    CHECK(r.coeff({1, 2}) == 1);
    CHECK(r.terms.size() == 2);

    LinComb back = change_basis(r, Basis::P);
    CHECK(back.terms.size() == 1);
    CHECK(back.coeff({1, 2}) == 1);

    // R through F and back
    LinComb f = change_basis(LinComb::monomial(Basis::R, {1, 2}), Basis::F);
    CHECK(change_basis(f, Basis::R).coeff({1, 2}) == 1);

    // no path in or out of the dual-side bases
    CHECK_THROWS_AS(change_basis(LinComb::monomial(Basis::G, {1}), Basis::F), Error);
    CHECK_THROWS_AS(change_basis(LinComb::monomial(Basis::P, {1}), Basis::M), Error);
}

TEST_CASE("tensors validate term shape") {
    Tensor t = Tensor::zero({Basis::F, Basis::F}, 3);
    t.add_term({{1}, {2, 1}}, 1);
    CHECK(t.coeff({{1}, {2, 1}}) == 1);
    CHECK_THROWS_AS(t.add_term({{1}, {1}}, 1), DegreeMismatchError);
    CHECK_THROWS_AS(t.add_term({{1, 1, 1}}, 1), Error);
    CHECK_THROWS_AS(Tensor::zero({}, 0), Error);
}

TEST_CASE("tensor_reverse swaps factors") {
    Tensor t = Tensor::zero({Basis::P, Basis::P}, 2);
    t.add_term({{1}, {1}}, 2);
    t.add_term({{1, 1}, {}}, 1);
    Tensor r = tensor_reverse(t);
    CHECK(r.coeff({{1}, {1}}) == 2);
    CHECK(r.coeff({{}, {1, 1}}) == 1);
    CHECK(r.coeff({{1, 1}, {}}) == 0);
}

TEST_CASE("tensor_multiply works factorwise") {
    Tensor x = Tensor::zero({Basis::F, Basis::F}, 1);
    x.add_term({{1}, {}}, 1);
    x.add_term({{}, {1}}, 1);
    auto concat_prod = [](const Word& u, const Word& v) {
        return LinComb::monomial(Basis::F, shifted_concat(u, v));
    };
    Tensor sq = tensor_multiply(x, x, concat_prod);
    CHECK(sq.degree == 2);
    CHECK(sq.coeff({{1, 2}, {}}) == 1);
    CHECK(sq.coeff({{}, {1, 2}}) == 1);
    CHECK(sq.coeff({{1}, {1}}) == 2);
}

TEST_CASE("linear and bilinear extension carry coefficients") {
    LinComb a = scale(2, LinComb::monomial(Basis::F, {1}));
    LinComb doubled = linear_extend(
        [](const Word& w) { return scale(3, LinComb::monomial(Basis::F, w)); }, a);
    CHECK(doubled.coeff({1}) == 6);

    LinComb x = LinComb::monomial(Basis::F, {1});
    LinComb out = bilinear_extend(
        [](const Word& u, const Word& v) {
            return LinComb::monomial(Basis::F, shifted_concat(u, v));
        },
        scale(2, x), scale(3, x));
    CHECK(out.coeff({1, 2}) == 6);
}
