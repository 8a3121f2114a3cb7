#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "chaincodes/factor.hpp"

using namespace chaincodes;

namespace {

// Monic polynomials of the given degree over F, in counter order.
std::vector<Poly> monic_polys(const Field& F, int degree) {
    std::vector<Poly> out;
    std::vector<std::uint32_t> c(static_cast<std::size_t>(degree), 0);
    for (;;) {
        std::vector<FieldElem> coeffs;
        for (auto v : c) coeffs.emplace_back(v);
        coeffs.push_back(kOne);
        out.emplace_back(std::move(coeffs));
        std::size_t i = 0;
        while (i < c.size() && ++c[i] == F.order()) c[i++] = 0;
        if (i == c.size()) break;
    }
    return out;
}

bool trial_irreducible(const Field& F, const Poly& f) {
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        for (const auto& g : monic_polys(F, d)) {
            if (p_mod(F, f, g).is_zero()) return false;
        }
    }
    return f.degree() >= 1;
}

// Sizes of the orbits of i -> q i on Z/n.
std::multiset<int> coset_sizes(int n, std::uint32_t q) {
    std::multiset<int> out;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int size = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = static_cast<int>((static_cast<std::uint64_t>(j) * q) % n)) {
            seen[static_cast<std::size_t>(j)] = true;
            ++size;
        }
        out.insert(size);
    }
    return out;
}

std::multiset<int> degrees(const std::vector<Factor>& fs) {
    std::multiset<int> out;
    for (const auto& f : fs) out.insert(f.degree);
    return out;
}

Poly product(const Field& F, const std::vector<Factor>& fs) {
    Poly p = Poly::one();
    for (const auto& f : fs) p = p_mul(F, p, f.f);
    return p;
}

}  // namespace

TEST_CASE("Rabin test agrees with trial division") {
    const Field F2(1);
    for (int d = 1; d <= 8; ++d) {
        for (const auto& f : monic_polys(F2, d)) CHECK(is_irreducible(F2, f) == trial_irreducible(F2, f));
    }
    const Field F4(2);
    for (int d = 1; d <= 4; ++d) {
        for (const auto& f : monic_polys(F4, d)) CHECK(is_irreducible(F4, f) == trial_irreducible(F4, f));
    }
}

TEST_CASE("x^3 + 1 over F_2 and F_4") {
    const Field F2(1);
    const auto f2 = factor_xn_delta(F2, 3, kOne);
    REQUIRE(f2.size() == 2);
    CHECK(f2[0].f == Poly{1, 1});
    CHECK(f2[1].f == Poly{1, 1, 1});

    const Field F4(2);
    const auto f4 = factor_xn_delta(F4, 3, kOne);
    REQUIRE(f4.size() == 3);
    for (const auto& f : f4) CHECK(f.degree == 1);
    CHECK(f4[0].f == Poly{1, 1});
    CHECK(f4[1].f == Poly{2, 1});
    CHECK(f4[2].f == Poly{3, 1});
}

TEST_CASE("x^7 + 1 over F_2") {
    const Field F(1);
    const auto fs = factor_xn_delta(F, 7, kOne);
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].f == Poly{1, 1});
    CHECK(fs[1].f == Poly{1, 0, 1, 1});
    CHECK(fs[2].f == Poly{1, 1, 0, 1});
}

TEST_CASE("factor degrees follow cyclotomic cosets and factors are irreducible") {
    for (int m : {1, 2, 3, 4}) {
        const Field F(m);
        for (int n : {1, 3, 5, 7, 9, 15, 21, 31, 45}) {
            const auto fs = factor_xn_delta(F, n, kOne);
            CHECK(degrees(fs) == coset_sizes(n, F.order()));
            CHECK(product(F, fs) == p_add(Poly::monomial(kOne, n), Poly::one()));
            for (const auto& f : fs) {
                CHECK(f.f.lead() == kOne);
                if (f.degree <= 4) CHECK(trial_irreducible(F, f.f));
            }
            CHECK(std::is_sorted(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) {
                return a.degree != b.degree ? a.degree < b.degree : a.f < b.f;
            }) == true);
        }
    }
}

TEST_CASE("non-unit shift constants") {
    const Field F(3);
    for (std::uint32_t d = 1; d < 8; ++d) {
        for (int n : {3, 5, 7, 9}) {
            const auto fs = factor_xn_delta(F, n, FieldElem{d});
            CHECK(product(F, fs) == p_add(Poly::monomial(kOne, n), Poly::constant(FieldElem{d})));
            std::set<Poly> distinct;
            for (const auto& f : fs) {
                CHECK(is_irreducible(F, f.f));
                distinct.insert(f.f);
            }
            CHECK(distinct.size() == fs.size());
        }
    }
}

TEST_CASE("result does not depend on the seed") {
    const Field F(2);
    const auto a = factor_xn_delta(F, 45, kOne, 1);
    const auto b = factor_xn_delta(F, 45, kOne, 987654321);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].f == b[i].f);
}

TEST_CASE("invalid inputs") {
    const Field F(1);
    CHECK_THROWS_AS(factor_xn_delta(F, 4, kOne), std::invalid_argument);
    CHECK_THROWS_AS(factor_xn_delta(F, 3, kZero), std::invalid_argument);
}

TEST_CASE("idempotent decomposition") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 3}, {2, 3}, {1, 7}, {3, 5}}) {
        ParamSpec spec;
        spec.m = m;
        spec.n = n;
        const Params p = make_params(spec);
        const Field& F = p.F();
        const FactorData fd = build_factor_data(p);
        CHECK(idempotent_identities_hold(F, fd));
        const int e = p.nilpotency();
        for (std::size_t j = 0; j < fd.size(); ++j) {
            const Poly fe = p_pow(F, fd.factors[j].f, static_cast<unsigned>(e));
            const Poly Fe = p_pow(F, fd.cofactors[j], static_cast<unsigned>(e));
            CHECK(p_add(p_mul(F, fd.bezout_g[j], Fe), p_mul(F, fd.bezout_h[j], fe)) == Poly::one());
            CHECK(p_mul(F, fd.cofactors[j], fd.factors[j].f) == fd.base);
            for (std::size_t l = 0; l < fd.size(); ++l) {
                const Poly fl = p_pow(F, fd.factors[l].f, static_cast<unsigned>(e));
                CHECK(p_mod(F, fd.idempotents[j], fl) == (l == j ? Poly::one() : Poly{}));
            }
        }
    }
}
