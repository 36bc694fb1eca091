#include "lenstc/graded_ring.hpp"

#include <random>

#include "doctest.h"
#include "generators.hpp"

using namespace lenstc;
using lenstc_tests::random_element;
using lenstc_tests::random_homogeneous;
using lenstc_tests::random_monomial;

namespace {

TensorElement elem(const RingSpec& spec,
                   const std::vector<std::pair<Monomial, std::int64_t>>& terms) {
    return from_terms(spec, terms);
}

}  // namespace

TEST_CASE("ring_new sets the relation coefficient by parity of m") {
    CHECK(ring_new(1, 3, 2).a() == 0);
    CHECK(ring_new(1, 2, 2).a() == 1);
    CHECK(ring_new(2, 4, 3).a() == 2);
    CHECK(ring_new(3, 9, 1).a() == 0);
    CHECK_THROWS_AS(ring_new(0, 3, 2), domain_error);
    CHECK_THROWS_AS(ring_new(1, 1, 2), domain_error);
    CHECK_THROWS_AS(ring_new(1, 3, 0), domain_error);
}

TEST_CASE("pack and unpack are inverse on random monomials") {
    std::mt19937 rng(7);
    for (auto [n, k] : {std::pair<std::int64_t, std::int64_t>{1, 2},
                        {3, 3},
                        {6, 4},
                        {2, 1}}) {
        auto spec = ring_new(n, 5, k);
        for (int i = 0; i < 200; ++i) {
            auto mon = random_monomial(rng, spec);
            CHECK(unpack(spec, pack(spec, mon)) == mon);
        }
    }
}

TEST_CASE("pullback places the generator and carries its degree") {
    auto spec = ring_new(2, 5, 3);
    auto e = pullback(spec, 1, Generator::Y);
    CHECK(e == elem(spec, {{{{0, 1}, {0, 0}, {0, 0}}, 1}}));
    CHECK(e.degree() == 2);

    auto spec2 = ring_new(1, 3, 2);
    CHECK(pullback(spec2, 2, Generator::X) ==
          elem(spec2, {{{{0, 0}, {1, 0}}, 1}}));
    CHECK(pullback(spec2, 2, Generator::X).degree() == 1);
    CHECK_THROWS_AS(pullback(spec2, 0, Generator::X), domain_error);
    CHECK_THROWS_AS(pullback(spec2, 3, Generator::X), domain_error);
}

TEST_CASE("multiplication applies the Koszul sign") {
    auto spec = ring_new(1, 3, 2);
    auto x1 = pullback(spec, 1, Generator::X);
    auto x2 = pullback(spec, 2, Generator::X);
    Monomial xx = {{1, 0}, {1, 0}};

    // transposing two odd classes flips the sign
    CHECK(mul(x2, x1) == elem(spec, {{xx, 2}}));
    CHECK(mul(x1, x2) == elem(spec, {{xx, 1}}));
}

TEST_CASE("the relation x^2 = a y holds in each factor") {
    auto even = ring_new(1, 2, 1);
    auto x = pullback(even, 1, Generator::X);
    auto y = pullback(even, 1, Generator::Y);
    CHECK(mul(x, x) == y);  // a = 1 for m = 2

    auto odd = ring_new(1, 3, 1);
    CHECK(mul(pullback(odd, 1, Generator::X), pullback(odd, 1, Generator::X))
              .is_zero());

    auto m6 = ring_new(2, 6, 1);
    auto x6 = pullback(m6, 1, Generator::X);
    CHECK(mul(x6, x6) == scale(pullback(m6, 1, Generator::Y), 3));
}

TEST_CASE("power matches the pinned expansions") {
    auto spec3 = ring_new(1, 3, 2);
    auto ybar3 = sub(pullback(spec3, 2, Generator::Y), pullback(spec3, 1, Generator::Y));
    // (1 x y - y x 1)^2 = -2 (y x y) = 1 * (y x y) mod 3
    CHECK(power(ybar3, 2) == elem(spec3, {{{{0, 1}, {0, 1}}, 1}}));

    auto spec2 = ring_new(1, 2, 2);
    auto ybar2 = sub(pullback(spec2, 2, Generator::Y), pullback(spec2, 1, Generator::Y));
    CHECK(power(ybar2, 2).is_zero());  // coefficient -2 vanishes mod 2

    CHECK(power(ybar2, 0) == unit(spec2));
    CHECK(power(zero(spec2), 0) == unit(spec2));
    CHECK_THROWS_AS(power(ybar2, -1), domain_error);
}

TEST_CASE("diagonal pullback collapses tensors to in-ring products") {
    auto spec = ring_new(2, 5, 2);
    auto x1 = pullback(spec, 1, Generator::X);
    auto x2 = pullback(spec, 2, Generator::X);
    CHECK(diagonal_pullback(sub(x2, x1)).is_zero());

    auto yy = elem(spec, {{{{0, 1}, {0, 1}}, 1}});
    auto one_factor = ring_new(2, 5, 1);
    CHECK(diagonal_pullback(yy) == elem(one_factor, {{{{0, 2}}, 1}}));

    auto trunc_spec = ring_new(1, 5, 2);
    auto yy1 = elem(trunc_spec, {{{{0, 1}, {0, 1}}, 1}});
    CHECK(diagonal_pullback(yy1).is_zero());
}

TEST_CASE("is_zero and degree behave on normalized elements") {
    auto spec = ring_new(1, 4, 2);
    CHECK(zero(spec).is_zero());
    auto x1 = pullback(spec, 1, Generator::X);
    CHECK(scale(x1, 4).is_zero());
    CHECK(scale(x1, 8).is_zero());

    auto xy = elem(spec, {{{{1, 0}, {0, 1}}, 1}});
    CHECK(xy.degree() == 3);
    auto mixed = add(x1, xy);
    CHECK_FALSE(mixed.degree().has_value());
    CHECK_FALSE(zero(spec).degree().has_value());
}

TEST_CASE("mul rejects elements of different rings") {
    auto a = ring_new(1, 3, 2);
    auto b = ring_new(1, 5, 2);
    CHECK_THROWS_AS(mul(pullback(a, 1, Generator::X), pullback(b, 1, Generator::X)),
                    domain_error);
}

TEST_CASE("from_terms validates exponents") {
    auto spec = ring_new(1, 3, 2);
    CHECK_THROWS_AS(elem(spec, {{{{0, 2}, {0, 0}}, 1}}), domain_error);  // j > n
    CHECK_THROWS_AS(elem(spec, {{{{2, 0}, {0, 0}}, 1}}), domain_error);  // eps > 1
    CHECK_THROWS_AS(elem(spec, {{{{0, 0}}, 1}}), domain_error);          // arity
    CHECK(elem(spec, {{{{0, 0}, {0, 0}}, 3}}).is_zero());                // 3 = 0 mod 3
}

TEST_CASE("element construction refuses oversized rings") {
    // ring_new itself stays cheap; the guard fires when elements are built
    auto spec = ring_new(100, 3, 4, kDefaultMonomialLimit);  // (2*101)^4 > 10^7
    CHECK_THROWS_AS(pullback(spec, 1, Generator::X), sizing_error);
    CHECK_THROWS_AS(unit(spec), sizing_error);
    CHECK_THROWS_AS(zero(spec), sizing_error);
    // raising the limit unblocks the same parameters
    auto roomy = ring_new(100, 3, 4, 2'000'000'000);
    CHECK_FALSE(pullback(roomy, 1, Generator::X).is_zero());
}

TEST_CASE("rendering follows the documented grammar") {
    auto spec = ring_new(2, 5, 2);
    CHECK(render(zero(spec)) == "0");
    CHECK(render(unit(spec)) == "1·(1⊗1)");
    auto e = elem(spec, {{{{1, 2}, {0, 1}}, 4}, {{{0, 0}, {1, 0}}, 2}});
    CHECK(render(e) == "2·(1⊗x) + 4·(x·y^2⊗y)");

    auto spec3 = ring_new(1, 3, 2);
    auto ybar = sub(pullback(spec3, 2, Generator::Y), pullback(spec3, 1, Generator::Y));
    CHECK(render(ybar) == "1·(1⊗y) + 2·(y⊗1)");

    auto one_factor = ring_new(3, 7, 1);
    CHECK(render(elem(one_factor, {{{{1, 3}}, 6}})) == "6·(x·y^3)");
}

TEST_CASE("randomized ring axioms") {
    std::mt19937 rng(20240811);
    const std::int64_t moduli[] = {2, 3, 4, 5, 8};
    std::uniform_int_distribution<std::int64_t> n_dist(1, 3);
    std::uniform_int_distribution<std::int64_t> k_dist(1, 3);
    std::uniform_int_distribution<std::size_t> m_dist(0, 4);

    for (int round = 0; round < 300; ++round) {
        auto spec = ring_new(n_dist(rng), moduli[m_dist(rng)], k_dist(rng));
        CAPTURE(spec.n());
        CAPTURE(spec.m());
        CAPTURE(spec.k());

        auto e1 = random_element(rng, spec);
        auto e2 = random_element(rng, spec);
        auto e3 = random_element(rng, spec);

        CHECK(mul(mul(e1, e2), e3) == mul(e1, mul(e2, e3)));

        auto h1 = random_homogeneous(rng, spec);
        auto h2 = random_homogeneous(rng, spec);
        auto d1 = monomial_degree(unpack(spec, h1.terms().begin()->first));
        auto d2 = monomial_degree(unpack(spec, h2.terms().begin()->first));
        auto rhs = mul(h2, h1);
        if ((d1 * d2) % 2 != 0) rhs = neg(rhs);
        CHECK(mul(h1, h2) == rhs);

        std::uniform_int_distribution<std::int64_t> i_dist(1, spec.k());
        auto i = i_dist(rng);
        CHECK(power(pullback(spec, i, Generator::Y), spec.n() + 1).is_zero());
        CHECK(mul(pullback(spec, i, Generator::X), pullback(spec, i, Generator::X)) ==
              scale(pullback(spec, i, Generator::Y), spec.a()));

        // no monomial ever exceeds the top degree
        auto prod = mul(e1, e2);
        for (const auto& [key, c] : prod.terms()) {
            CHECK(c > 0);
            CHECK(c < spec.m());
            CHECK(monomial_degree(unpack(spec, key)) <= spec.k() * (2 * spec.n() + 1));
        }
    }
}

TEST_CASE("diagonal pullback is a ring map on random elements") {
    std::mt19937 rng(99);
    const std::int64_t moduli[] = {2, 3, 4, 5, 8};
    std::uniform_int_distribution<std::int64_t> n_dist(1, 3);
    std::uniform_int_distribution<std::int64_t> k_dist(1, 3);
    std::uniform_int_distribution<std::size_t> m_dist(0, 4);
    for (int round = 0; round < 200; ++round) {
        auto spec = ring_new(n_dist(rng), moduli[m_dist(rng)], k_dist(rng));
        auto e1 = random_element(rng, spec);
        auto e2 = random_element(rng, spec);
        CAPTURE(render(e1));
        CAPTURE(render(e2));
        CHECK(diagonal_pullback(mul(e1, e2)) ==
              mul(diagonal_pullback(e1), diagonal_pullback(e2)));
    }
}
