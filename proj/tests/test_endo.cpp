#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ringauto/endo.hpp"

using namespace ringauto;

namespace {

Endo endo(std::initializer_list<std::int64_t> image, std::uint64_t n) {
    return Endo(Poly(image, Modulus(n)));
}

} // namespace

TEST_CASE("classification") {
    const auto form = classify(endo({0, 1, 2}, 4));
    REQUIRE(form.has_value());
    CHECK(form->a.value() == 0);
    CHECK(form->u.value() == 1);
    CHECK(form->f == Poly({2}, Modulus(4)));
    CHECK(form->reassemble() == Poly({0, 1, 2}, Modulus(4)));

    CHECK(!classify(endo({0, 0, 1}, 4)).has_value());
    CHECK(!classify(endo({0, 1, 2}, 6)).has_value()); // 2 not nilpotent mod 6
    CHECK(!classify(endo({0, 2}, 4)).has_value());
    CHECK(classify(Endo::identity(Modulus(7))).has_value());
}

TEST_CASE("application") {
    const Modulus m(4);
    const Poly y({0, 1, -1}, m);
    CHECK(apply(endo({1, -1}, 4), y) == y);

    const Poly g({2, 3, 0, 1}, m);
    CHECK(apply(Endo::identity(m), g) == g);

    CHECK(apply(endo({2, 1}, 4), Poly({0, 0, 1}, m)) == Poly({0, 0, 1}, m));
}

TEST_CASE("composition convention and worked conjugations") {
    // alpha of order 2.
    const Endo a = endo({0, 1, 2}, 4);
    CHECK(compose(a, a) == Endo::identity(Modulus(4)));
    CHECK(compose(a, Endo::identity(Modulus(4))) == a);

    // sigma^{-1} alpha sigma with alpha: x -> x + 3x^2, sigma: x -> 1 + x.
    {
        const Endo alpha = endo({0, 1, 3}, 9);
        const Endo sigma = endo({1, 1}, 9);
        const Endo conj = compose(compose(invert(sigma), alpha), sigma);
        CHECK(conj.image() == Poly({3, 4, 3}, Modulus(9)));
    }
    // sigma^{-1} alpha sigma with alpha: x -> x + 1, sigma: x -> x + 3x^2.
    {
        const Endo alpha = endo({1, 1}, 9);
        const Endo sigma = endo({0, 1, 3}, 9);
        const Endo conj = compose(compose(invert(sigma), alpha), sigma);
        CHECK(conj.image() == Poly({4, 7}, Modulus(9)));
    }
    // sigma: x -> 2x does not fix y = x + 3x^2 but lands on 2y + 6y^2.
    {
        const Modulus m(9);
        const Poly y({0, 1, 3}, m);
        const Poly image = apply(endo({0, 2}, 9), y);
        CHECK(image == y.scaled(2) + (y * y).scaled(6));
    }
}

TEST_CASE("inversion") {
    CHECK(invert(endo({0, 1, 2}, 4)) == endo({0, 1, 2}, 4));
    CHECK(invert(endo({0, 1, 3}, 9)) == endo({0, 1, 6}, 9));
    CHECK(invert(Endo::identity(Modulus(12))) == Endo::identity(Modulus(12)));
    CHECK_THROWS_AS(invert(endo({0, 0, 1}, 4)), NotInvertible);

    // The degree of an inverse can exceed the degree of the image.
    const Endo s = endo({0, 1, 0, 2}, 8);
    CHECK(invert(s).image() == Poly({0, 1, 0, 6, 0, 4}, Modulus(8)));
}

TEST_CASE("inversion is two-sided on random decompositions") {
    std::mt19937_64 rng(23);
    for (const std::uint64_t n : {4u, 8u, 9u, 27u}) {
        const Modulus m(n);
        const std::uint64_t rad = radical(m);
        const auto us = units(m);
        for (int i = 0; i < 50; ++i) {
            std::vector<std::int64_t> c(6, 0);
            c[0] = static_cast<std::int64_t>(rng() % n);
            c[1] = static_cast<std::int64_t>(us[rng() % us.size()]);
            for (std::size_t k = 2; k < c.size(); ++k)
                c[k] = static_cast<std::int64_t>(rng() % n / rad * rad);
            const Endo s{Poly(c, m)};
            const Endo inv = invert(s);
            CHECK(compose(s, inv) == Endo::identity(m));
            CHECK(compose(inv, s) == Endo::identity(m));
        }
    }
}

TEST_CASE("order") {
    CHECK(order(endo({1, 1}, 4)) == 4);  // theta: x -> x + 1
    CHECK(order(endo({3, 3}, 4)) == 2);  // x -> -x - 1
    CHECK(order(Endo::identity(Modulus(9))) == 1);
    CHECK_THROWS_AS(order(endo({1, 1}, 4), 3), OrderExceedsCap);
    CHECK_THROWS_AS(order(endo({0, 2}, 4)), NotInvertible);

    // s^order = id and no earlier power is (re-verified by construction).
    const Endo s = endo({1, 2, 0, 3}, 9);
    const std::uint64_t ord = order(s);
    Endo acc = s;
    for (std::uint64_t k = 1; k < ord; ++k) {
        CHECK(acc != Endo::identity(Modulus(9)));
        acc = compose(acc, s);
    }
    CHECK(acc == Endo::identity(Modulus(9)));
}

TEST_CASE("exhaustive-search oracle") {
    CHECK(is_automorphism_bruteforce(endo({0, 1, 2}, 4), 3));
    CHECK(!is_automorphism_bruteforce(endo({0, 0, 1}, 4), 3));
    CHECK(!is_automorphism_bruteforce(endo({0, 2}, 4), 3));
    // The degree-5 inverse over Z_8 is inside the cap-4 search space.
    CHECK(is_automorphism_bruteforce(endo({0, 1, 0, 2}, 8), 4));
    CHECK_THROWS_AS(is_automorphism_bruteforce(endo({0, 1}, 97), 4),
                    SearchSpaceTooLarge);
}

TEST_CASE("criterion matches the search oracle (small moduli)") {
    for (const std::uint64_t n : {4u, 6u}) {
        const Modulus m(n);
        for (std::uint64_t code = 0; code < n * n * n * n; ++code) {
            std::uint64_t rest = code;
            std::vector<std::int64_t> c(4);
            for (auto& v : c) {
                v = static_cast<std::int64_t>(rest % n);
                rest /= n;
            }
            const Endo s{Poly(c, m)};
            CHECK(classify(s).has_value() == is_automorphism_bruteforce(s, 4));
        }
    }
}

TEST_CASE("non-normality witness") {
    {
        const auto w = nonnormality_witness(Modulus(4));
        CHECK(w.r == 2);
        CHECK(w.m == 3);
        CHECK(w.sigma.image() == Poly({0, 1, 2, 2}, Modulus(4)));
        CHECK(w.alpha.image() == Poly({1, 1}, Modulus(4)));
        REQUIRE(classify(w.conjugate).has_value());
        bool high = false;
        for (std::size_t i = 2; i < w.conjugate.image().coeffs().size(); ++i)
            if (w.conjugate.image().coeff(i)) high = true;
        CHECK(high);
        // It really is the conjugate.
        CHECK(compose(compose(invert(w.sigma), w.alpha), w.sigma) ==
              w.conjugate);
    }
    {
        // 3*(m(m-1)/2) vanishes mod 9 for m = 3, 4; the scan lands on 5.
        const auto w = nonnormality_witness(Modulus(9));
        CHECK(w.r == 3);
        CHECK(w.m == 5);
    }
    CHECK_THROWS_AS(nonnormality_witness(Modulus(6)), RingIsReduced);
    CHECK_THROWS_AS(nonnormality_witness(Modulus(30)), RingIsReduced);
}

TEST_CASE("equal-u basics conjugate in the pool are conjugate by a basic") {
    // Pool: images a + ux + x^2 f with f nilpotent of degree <= 1 over Z_4.
    const Modulus m(4);
    std::vector<Endo> pool;
    for (std::int64_t a = 0; a < 4; ++a)
        for (const std::int64_t u : {1, 3})
            for (const std::int64_t f0 : {0, 2})
                for (const std::int64_t f1 : {0, 2})
                    pool.push_back(Endo(Poly({a, u, f0, f1}, m)));
    std::vector<Endo> basics;
    for (std::int64_t a = 0; a < 4; ++a)
        for (const std::int64_t u : {1, 3}) basics.push_back(Endo(Poly({a, u}, m)));

    for (const Endo& s : basics) {
        for (const Endo& t : basics) {
            if (s.image().coeff(1) != t.image().coeff(1)) continue;
            bool pool_conj = false;
            for (const Endo& g : pool)
                if (compose(compose(invert(g), s), g) == t) pool_conj = true;
            bool basic_conj = false;
            for (const Endo& g : basics)
                if (compose(compose(invert(g), s), g) == t) basic_conj = true;
            if (pool_conj) CHECK(basic_conj);
        }
    }
}
