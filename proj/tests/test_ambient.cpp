#include <doctest.h>

#include <random>
#include <set>

#include "chaincodes/ambient.hpp"

using namespace chaincodes;

namespace {

Params params(int m, int n, int k, int lambda, std::uint32_t delta = 1, std::uint32_t alpha = 1) {
    ParamSpec s;
    s.m = m;
    s.n = n;
    s.k = k;
    s.lambda = lambda;
    s.delta = delta;
    s.alpha = alpha;
    return make_params(s);
}

Poly random_poly(const Field& F, int below, std::mt19937_64& rng) {
    std::vector<FieldElem> c(static_cast<std::size_t>(below));
    for (auto& v : c) v = FieldElem{static_cast<std::uint32_t>(rng() % F.order())};
    return Poly(std::move(c));
}

AmbientElem random_elem(const AmbientRing& ring, std::mt19937_64& rng) {
    const int deg = ring.a_modulus().degree();
    return {random_poly(ring.F(), deg, rng), random_poly(ring.F(), deg, rng)};
}

RPoly u_power(const AmbientRing& ring, int j, FieldElem c) { return ring.from_terms({{0, j, c}}); }

// (x^n + delta0)^i computed in R[x] directly.
RPoly base_power(const AmbientRing& ring, int i) {
    const Params& p = ring.params();
    const RPoly base = ring.from_terms({{p.n, 0, kOne}, {0, 0, p.delta0}});
    RPoly r = ring.one();
    for (int t = 0; t < i; ++t) r = ring.mul(r, base);
    return r;
}

CodeDescriptor single(Family f, int s, int t) { return {{IdealDescriptor{0, f, s, t, Poly{}}}}; }

}  // namespace

TEST_CASE("psi on basic elements") {
    for (std::uint32_t delta : {1u, 2u, 3u}) {
        for (std::uint32_t alpha : {1u, 2u, 3u}) {
            const Params p = params(2, 1, 2, 2, delta, alpha);
            const AmbientRing ring(p);
            CHECK(ring.psi_lift({Poly::one(), Poly{}}) == ring.one());
            const Poly y = Poly{p.delta0.bits, 1};
            const Poly y4 = p_pow(p.F(), y, 4);
            CHECK(ring.psi_lift({y4, Poly{}}) == u_power(ring, 2, p.alpha));
            CHECK(ring.psi_inverse(u_power(ring, 2, kOne)) ==
                  AmbientElem{p_scale(p.F(), y4, p.F().inv(p.alpha)), Poly{}});
            CHECK(ring.psi_inverse(ring.zero()) == AmbientElem{});
            CHECK(ring.psi_lift({Poly{}, Poly::one()}) == u_power(ring, 1, kOne));
        }
    }
}

TEST_CASE("psi of powers of x^n + delta0") {
    // Printed exponent i + l 2^k n at n = 1.
    for (std::uint32_t alpha : {1u, 3u}) {
        const Params p = params(2, 1, 2, 2, 2, alpha);
        const AmbientRing ring(p);
        const Field& F = p.F();
        const Poly y{p.delta0.bits, 1};
        for (int l = 0; l < p.lambda; ++l) {
            for (int i = 0; i < p.length(); ++i) {
                const RPoly lhs = ring.psi_lift({p_pow(F, y, static_cast<unsigned>(i + l * p.length())), Poly{}});
                const RPoly rhs = ring.mul(u_power(ring, 2 * l, F.pow(p.alpha, static_cast<unsigned>(l))), base_power(ring, i));
                CHECK(lhs == rhs);
            }
        }
    }
    // Exponent i + l 2^k for n > 1.
    for (int n : {3, 5}) {
        const Params p = params(1, n, 2, 2);
        const AmbientRing ring(p);
        const Field& F = p.F();
        const Poly base = p_add(Poly::monomial(kOne, n), Poly::one());
        for (int l = 0; l < p.lambda; ++l) {
            for (int i = 0; i < 4; ++i) {
                const RPoly lhs = ring.psi_lift({p_pow(F, base, static_cast<unsigned>(i + 4 * l)), Poly{}});
                const RPoly rhs = ring.mul(u_power(ring, 2 * l, kOne), base_power(ring, i));
                CHECK(lhs == rhs);
            }
        }
        // With exponent i + l 2^k n the left side is zero in A while the right is not.
        const RPoly lhs = ring.psi_lift({p_pow(F, base, static_cast<unsigned>(p.length())), Poly{}});
        CHECK(lhs == ring.zero());
        CHECK(ring.mul(u_power(ring, 2, kOne), base_power(ring, 0)) != ring.zero());
    }
}

TEST_CASE("psi is a ring isomorphism") {
    std::mt19937_64 rng(21);
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 3}, {2, 1}}) {
        const Params p = params(m, n, 2, 2, 1, m == 2 ? 2 : 1);
        const AmbientRing ring(p);
        for (int i = 0; i < 1000; ++i) {
            const AmbientElem a = ring.a_reduce(random_elem(ring, rng));
            const AmbientElem b = ring.a_reduce(random_elem(ring, rng));
            const RPoly pa = ring.psi_lift(a);
            const RPoly pb = ring.psi_lift(b);
            CHECK(ring.psi_lift(ring.a_add(a, b)) == ring.add(pa, pb));
            CHECK(ring.psi_lift(ring.a_mul(a, b)) == ring.mul(pa, pb));
            CHECK(ring.psi_inverse(pa) == a);
            CHECK(ring.psi_lift(ring.psi_inverse(pa)) == pa);
        }
    }
}

TEST_CASE("lift works beyond the F_2-linear range") {
    const Params p = params(2, 3, 3, 4);
    const AmbientRing ring(p);
    CHECK_FALSE(ring.linear_available());
    std::mt19937_64 rng(22);
    for (int i = 0; i < 20; ++i) {
        const AmbientElem a = ring.a_reduce(random_elem(ring, rng));
        const AmbientElem b = ring.a_reduce(random_elem(ring, rng));
        CHECK(ring.psi_inverse(ring.psi_lift(a)) == a);
        CHECK(ring.psi_lift(ring.a_mul(a, b)) == ring.mul(ring.psi_lift(a), ring.psi_lift(b)));
    }
    CHECK_THROWS_AS(ring.encode(ring.one()), CapExceeded);
}

TEST_CASE("encoding and operators") {
    const Params p = params(2, 1, 2, 2, 1, 2);
    const AmbientRing ring(p);
    CHECK(ring.f2_dim() == 32);
    REQUIRE(ring.ideal_operators().size() == 3);
    std::mt19937_64 rng(23);
    const RPoly x = ring.from_terms({{1, 0, kOne}});
    const RPoly u = u_power(ring, 1, kOne);
    for (int i = 0; i < 100; ++i) {
        const RPoly a = ring.psi_lift(random_elem(ring, rng));
        const Bits v = ring.encode(a);
        CHECK(ring.decode(v) == a);
        CHECK(ring.ideal_operators()[0].apply(v) == ring.encode(ring.mul(a, x)));
        CHECK(ring.ideal_operators()[1].apply(v) == ring.encode(ring.mul(a, u)));
        CHECK(ring.constacyclic_shift(a) == ring.mul(a, x));
    }
}

TEST_CASE("materialization") {
    const Params p = params(1, 1, 2, 2);
    const CodeSystem sys = build_code_system(p);
    const AmbientRing ring(p);
    const auto zero = materialize_code(single(Family::F3, 8, 0), sys, ring);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == ring.zero());
    CHECK(materialize_code(single(Family::F3, 0, 0), sys, ring).size() == 65536);
    CHECK(materialize_code(single(Family::F4, 0, 1), sys, ring).size() == 32768);
    CHECK_THROWS_AS(materialize_code(single(Family::F3, 0, 0), sys, ring, 1000), CapExceeded);

    const auto words = materialize_code(single(Family::F5, 1, 3), sys, ring);
    const std::set<RPoly> set(words.begin(), words.end());
    CHECK(set.size() == words.size());
    CHECK(BigInt(words.size()) == code_size(single(Family::F5, 1, 3), sys));
    for (const auto& w : words) CHECK(set.contains(ring.constacyclic_shift(w)));
}

TEST_CASE("oracle lattice at m = 1, n = 1, k = lambda = 2") {
    const Params p = params(1, 1, 2, 2);
    const CodeSystem sys = build_code_system(p);
    const AmbientRing ring(p);
    OracleStats stats;
    const auto oracle = brute_force_ideals(ring, kDefaultOracleDimCap, 1, &stats);
    CHECK(oracle.size() == 135);
    CHECK(stats.principal_ideals < oracle.size());
    const std::set<Subspace> set(oracle.begin(), oracle.end());
    Subspace full;
    for (int i = 0; i < ring.f2_dim(); ++i) {
        Bits b;
        b.set(i);
        full.insert(b);
    }
    CHECK(set.contains(Subspace{}));
    CHECK(set.contains(full));
    for (const auto& a : oracle) {
        for (const auto& b : oracle) CHECK(set.contains(a.sum(b)));
        CHECK(is_constacyclic(a, ring));
    }
    CHECK(brute_force_ideals(ring, kDefaultOracleDimCap, 3) == oracle);

    std::set<Subspace> enumerated;
    CodeStream st(sys);
    while (auto c = st.next()) {
        const Subspace s = code_ideal(*c, sys, ring);
        CHECK(pow2(static_cast<unsigned>(s.dim())) == code_size(*c, sys));
        enumerated.insert(s);
    }
    CHECK(enumerated == set);

    int self_dual = 0;
    for (const auto& c : oracle) {
        const Subspace d = dual_code(c, ring);
        CHECK(c.dim() + d.dim() == ring.f2_dim());
        CHECK(is_constacyclic(d, ring));
        if (d == c) ++self_dual;
    }
    CHECK(self_dual == 11);
    CHECK(dual_code(Subspace{}, ring) == full);
    CHECK(is_self_dual(ring.ideal_of({u_power(ring, 2, kOne)}), ring));

    for (std::size_t i = 0; i < oracle.size(); i += 7) {
        const auto gens = recover_generators(oracle[i], ring);
        CHECK(gens.size() <= 2);
        CHECK(ring.ideal_of(gens) == oracle[i]);
    }
}

TEST_CASE("oracle respects its dimension cap") {
    const AmbientRing ring(params(2, 1, 2, 2));
    CHECK_THROWS_AS(brute_force_ideals(ring), CapExceeded);
}

TEST_CASE("submodules of the free module of rank 2") {
    for (auto [m, e] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 2}, {1, 4}, {3, 1}}) {
        const BigInt q = pow2(static_cast<unsigned>(m));
        CHECK(BigInt(brute_force_submodules_length2(m, e).size()) == count_submodules_length2(q, e));
    }
}

TEST_CASE("code ideals at several factors") {
    const Params p = params(1, 3, 2, 2);
    const CodeSystem sys = build_code_system(p);
    const AmbientRing ring(p);
    CodeStream st(sys);
    std::mt19937_64 rng(24);
    for (int i = 0; i < 2000; ++i) {
        st.skip(rng() % 60);
        auto c = st.next();
        if (!c) break;
        const Subspace s = code_ideal(*c, sys, ring);
        CHECK(pow2(static_cast<unsigned>(s.dim())) == code_size(*c, sys));
        CHECK(is_constacyclic(s, ring));
    }
}
