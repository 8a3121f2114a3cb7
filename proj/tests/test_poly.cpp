#include <doctest.h>

#include <random>
#include <stdexcept>

#include "chaincodes/poly.hpp"

using namespace chaincodes;

namespace {

Poly random_poly(const Field& F, int deg, std::mt19937_64& rng) {
    std::vector<FieldElem> c(static_cast<std::size_t>(deg + 1));
    for (auto& v : c) v = FieldElem{static_cast<std::uint32_t>(rng() % F.order())};
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("normalization and basic shape") {
    const Poly z({0, 0, 0});
    CHECK(z.is_zero());
    CHECK(z.degree() == Poly::kDegreeOfZero);
    const Poly p{1, 0, 1, 0};
    CHECK(p.degree() == 2);
    CHECK(p.lead() == kOne);
    CHECK(p.to_string() == "x^2 + 1");
    CHECK(Poly::x().degree() == 1);
    CHECK(Poly::one().is_one());
    CHECK_THROWS_AS(Poly::monomial(kOne, -1), std::invalid_argument);
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937_64 rng(11);
    for (int m : {1, 2, 4, 9}) {
        const Field F(m);
        for (int i = 0; i < 100; ++i) {
            const Poly a = random_poly(F, static_cast<int>(rng() % 12), rng);
            const Poly b = random_poly(F, static_cast<int>(rng() % 12), rng);
            const Poly c = random_poly(F, static_cast<int>(rng() % 12), rng);
            CHECK(p_mul(F, a, b) == p_mul(F, b, a));
            CHECK(p_mul(F, a, p_add(b, c)) == p_add(p_mul(F, a, b), p_mul(F, a, c)));
            CHECK(p_mul(F, p_mul(F, a, b), c) == p_mul(F, a, p_mul(F, b, c)));
            CHECK(p_add(a, a).is_zero());
        }
    }
}

TEST_CASE("division identity and evaluation") {
    std::mt19937_64 rng(12);
    const Field F(3);
    for (int i = 0; i < 200; ++i) {
        const Poly a = random_poly(F, static_cast<int>(rng() % 15), rng);
        Poly b = random_poly(F, static_cast<int>(rng() % 6), rng);
        if (b.is_zero()) b = Poly::one();
        const auto [q, r] = p_divmod(F, a, b);
        CHECK(p_add(p_mul(F, q, b), r) == a);
        CHECK(r.degree() < b.degree());
        const FieldElem at{static_cast<std::uint32_t>(rng() % 8)};
        CHECK(p_eval(F, p_mul(F, a, b), at) == F.mul(p_eval(F, a, at), p_eval(F, b, at)));
    }
    CHECK_THROWS_AS(p_divmod(F, Poly::one(), Poly{}), std::domain_error);
    CHECK_THROWS_AS(p_div_exact(F, Poly{1, 1, 1}, Poly{1, 1}), std::logic_error);
}

TEST_CASE("gcd and Bezout coefficients") {
    std::mt19937_64 rng(13);
    const Field F(2);
    for (int i = 0; i < 200; ++i) {
        const Poly common = p_monic(F, random_poly(F, static_cast<int>(rng() % 3) + 1, rng));
        const Poly a = p_mul(F, common, random_poly(F, static_cast<int>(rng() % 6), rng));
        const Poly b = p_mul(F, common, random_poly(F, static_cast<int>(rng() % 6), rng));
        if (a.is_zero() && b.is_zero()) continue;
        const XgcdResult x = p_xgcd(F, a, b);
        CHECK(x.g.lead() == kOne);
        CHECK(p_add(p_mul(F, x.s, a), p_mul(F, x.t, b)) == x.g);
        CHECK(x.g == p_gcd(F, a, b));
        if (!a.is_zero()) CHECK(p_mod(F, a, x.g).is_zero());
        if (!b.is_zero()) CHECK(p_mod(F, b, x.g).is_zero());
        if (!a.is_zero() && !b.is_zero()) CHECK(p_mod(F, x.g, common).is_zero());
    }
    CHECK_THROWS_AS(p_gcd(F, Poly{}, Poly{}), std::domain_error);
}

TEST_CASE("powmod against repeated multiplication") {
    std::mt19937_64 rng(14);
    const Field F(4);
    const Poly mod{3, 0, 1, 5, 1};
    for (int i = 0; i < 50; ++i) {
        const Poly a = random_poly(F, 6, rng);
        Poly acc = Poly::one();
        for (unsigned e = 0; e < 40; ++e) {
            CHECK(p_powmod(F, a, BigInt(e), mod) == p_mod(F, acc, mod));
            acc = p_mulmod(F, acc, a, mod);
        }
    }
    CHECK(p_pow(F, Poly{1, 1}, 4) == Poly{1, 0, 0, 0, 1});
    CHECK_THROWS_AS(p_powmod(F, Poly::x(), BigInt(3), Poly::one()), std::invalid_argument);
}

TEST_CASE("Frobenius is additive and matches powmod") {
    std::mt19937_64 rng(15);
    const Field F(3);
    const Poly mod{1, 1, 0, 1, 0, 0, 1};
    for (int i = 0; i < 30; ++i) {
        const Poly a = random_poly(F, 5, rng);
        const Poly b = random_poly(F, 5, rng);
        for (int t = 0; t < 6; ++t) {
            CHECK(p_frobenius(F, p_add(a, b), t, mod) ==
                  p_add(p_frobenius(F, a, t, mod), p_frobenius(F, b, t, mod)));
            CHECK(p_frobenius(F, a, t, mod) == p_powmod(F, a, pow2(static_cast<unsigned>(t)), mod));
        }
    }
}

TEST_CASE("shift and scale") {
    const Field F(2);
    CHECK(p_shift(Poly{1, 1}, 3) == Poly{0, 0, 0, 1, 1});
    CHECK(p_scale(F, Poly{1, 2}, FieldElem{2}) == Poly{2, 3});
    CHECK(p_scale(F, Poly{1, 2}, kZero).is_zero());
    CHECK(p_monic(F, Poly{1, 2}) == Poly{3, 1});
}
