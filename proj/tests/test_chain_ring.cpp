#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "chaincodes/chain_ring.hpp"
#include "chaincodes/factor.hpp"

using namespace chaincodes;

namespace {

// Every element of K = F[x]/<f^e>, as reduced representatives.
std::vector<ChainElem> all_elements(const ChainCtx& K) {
    const int len = K.d() * K.e();
    const std::uint32_t q = K.F().order();
    std::vector<ChainElem> out;
    std::vector<std::uint32_t> c(static_cast<std::size_t>(len), 0);
    for (;;) {
        std::vector<FieldElem> coeffs;
        for (auto v : c) coeffs.emplace_back(v);
        out.push_back(K.make(Poly(std::move(coeffs))));
        std::size_t i = 0;
        while (i < c.size() && ++c[i] == q) c[i++] = 0;
        if (i == c.size()) break;
    }
    return out;
}

using Pair = std::pair<Poly, Poly>;

// The K-span of the rows, by enumerating every coefficient tuple.
std::set<Pair> span(const ChainCtx& K, const std::vector<ChainElem>& elems, const std::vector<ModuleRow>& rows) {
    std::set<Pair> acc{{Poly{}, Poly{}}};
    for (const auto& r : rows) {
        std::set<Pair> next;
        for (const auto& a : acc) {
            for (const auto& c : elems) {
                next.insert({K.add(ChainElem{a.first}, K.mul(c, r.first)).rep,
                             K.add(ChainElem{a.second}, K.mul(c, r.second)).rep});
            }
        }
        acc = std::move(next);
    }
    return acc;
}

void check_forms(const ChainCtx& K, unsigned seed) {
    const auto elems = all_elements(K);
    std::mt19937_64 rng(seed);
    std::map<std::set<Pair>, ModuleForm> seen;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<ModuleRow> rows;
        const int nrows = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < nrows; ++i) {
            // Bias toward non-units so that every pivot depth shows up.
            ChainElem a = elems[rng() % elems.size()];
            ChainElem b = elems[rng() % elems.size()];
            a = K.mul(a, K.pi_power(static_cast<int>(rng() % (K.e() + 1))));
            b = K.mul(b, K.pi_power(static_cast<int>(rng() % (K.e() + 1))));
            rows.emplace_back(a, b);
        }
        const ModuleForm form = K.canonical_module_form(rows);
        const auto s = span(K, elems, rows);
        CHECK(span(K, elems, K.form_rows(form)) == s);
        // |S| = q^{d (2e - top - bottom)}
        std::size_t expect = 1;
        const std::size_t residue = static_cast<std::size_t>(1) << (K.F().degree() * K.d());
        for (int i = 0; i < K.form_size_exponent(form); ++i) expect *= residue;
        CHECK(s.size() == expect);
        auto [it, inserted] = seen.emplace(s, form);
        if (!inserted) CHECK(it->second == form);
    }
    // Distinct spans give distinct forms.
    std::set<ModuleForm> forms;
    for (const auto& [s, f] : seen) forms.insert(f);
    CHECK(forms.size() == seen.size());
}

}  // namespace

TEST_CASE("f-adic expansion round-trips and pi-degree") {
    auto F = std::make_shared<const Field>(2);
    const ChainCtx K(F, Poly{2, 1, 1}, 3);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        std::vector<FieldElem> c(6);
        for (auto& v : c) v = FieldElem{static_cast<std::uint32_t>(rng() % 4)};
        const ChainElem a = K.make(Poly(c));
        const auto digits = K.f_adic_expand(a);
        CHECK(digits.size() == 3);
        for (const auto& dgt : digits) CHECK(dgt.degree() < 2);
        CHECK(K.f_adic_recompose(digits) == a);
        int v = 0;
        while (v < 3 && digits[static_cast<std::size_t>(v)].is_zero()) ++v;
        CHECK(K.pi_degree(a) == v);
        CHECK(K.is_unit(a) == (v == 0));
        if (v == 0) CHECK(K.mul(a, K.inv(a)) == K.one());
        if (v < 3) CHECK(K.pi_degree(K.div_pi_power(a, v)) == 0);
    }
    CHECK(K.pi_power(3).is_zero());
    CHECK(K.pi_degree(K.zero()) == 3);
    CHECK_THROWS_AS(K.inv(K.pi_power(1)), std::domain_error);
    CHECK_THROWS_AS(ChainCtx(F, Poly{1, 2}, 2), std::invalid_argument);
}

TEST_CASE("ideals of K form a chain") {
    auto F = std::make_shared<const Field>(1);
    const ChainCtx K(F, Poly{1, 1, 1}, 3);
    const auto elems = all_elements(K);
    std::map<int, std::size_t> count;
    for (const auto& a : elems) ++count[K.pi_degree(a)];
    // q^{d(e - l)} - q^{d(e - l - 1)} elements with pi-degree exactly l.
    CHECK(count[0] == 64 - 16);
    CHECK(count[1] == 16 - 4);
    CHECK(count[2] == 4 - 1);
    CHECK(count[3] == 1);
}

TEST_CASE("canonical module form against brute-force spans") {
    auto F1 = std::make_shared<const Field>(1);
    auto F2 = std::make_shared<const Field>(2);
    check_forms(ChainCtx(F1, Poly{1, 1}, 2), 1);
    check_forms(ChainCtx(F1, Poly{1, 1}, 3), 2);
    check_forms(ChainCtx(F1, Poly{1, 1}, 4), 3);
    check_forms(ChainCtx(F1, Poly{1, 1, 1}, 2), 4);
    check_forms(ChainCtx(F2, Poly{2, 1}, 2), 5);
}

TEST_CASE("omega and u^2 for every factor") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 3}, {2, 3}, {1, 7}}) {
        for (int k : {2, 3}) {
            ParamSpec spec;
            spec.m = m;
            spec.n = n;
            spec.k = k;
            spec.alpha = m == 2 ? 3 : 1;
            const Params p = make_params(spec);
            const Field& F = p.F();
            const FactorData fd = build_factor_data(p);
            const Poly base = fd.base;
            for (std::size_t j = 0; j < fd.size(); ++j) {
                const ChainCtx K(p, fd.factors[j].f, fd.cofactors[j]);
                CHECK(K.is_unit(K.omega()));
                const ChainElem lhs = K.mul(K.mul(K.omega(), K.omega()), K.pi_power(1 << k));
                const ChainElem rhs = K.make(p_scale(F, p_pow(F, base, 1u << k), F.inv(p.alpha)));
                CHECK(lhs == rhs);
                CHECK(K.u_square() == lhs);
            }
        }
    }
}

TEST_CASE("K + uK arithmetic") {
    ParamSpec spec;
    spec.n = 3;
    const Params p = make_params(spec);
    const FactorData fd = build_factor_data(p);
    const ChainCtx K(p, fd.factors[1].f, fd.cofactors[1]);
    std::mt19937_64 rng(5);
    auto rnd = [&] {
        std::vector<FieldElem> c(16);
        for (auto& v : c) v = FieldElem{static_cast<std::uint32_t>(rng() % 2)};
        return K.make(Poly(c));
    };
    const ExtElem u{K.zero(), K.one()};
    for (int i = 0; i < 100; ++i) {
        const ExtElem a{rnd(), rnd()};
        const ExtElem b{rnd(), rnd()};
        const ExtElem c{rnd(), rnd()};
        CHECK(K.ext_mul(a, b) == K.ext_mul(b, a));
        CHECK(K.ext_mul(K.ext_mul(a, b), c) == K.ext_mul(a, K.ext_mul(b, c)));
        const ExtElem ua = K.ext_mul(u, a);
        const ModuleRow shifted = K.u_shift({a.c0, a.c1});
        CHECK(ua.c0 == shifted.first);
        CHECK(ua.c1 == shifted.second);
    }
    CHECK(K.ext_mul(u, u).c0 == K.u_square());
}

TEST_CASE("closure under multiplication by u") {
    ParamSpec spec;
    const Params p = make_params(spec);
    const FactorData fd = build_factor_data(p);
    const ChainCtx K(p, fd.factors[0].f, fd.cofactors[0]);
    for (const auto& a : all_elements(K)) CHECK_FALSE(K.is_u_closed({{K.one(), a}}));
    for (int s = 0; s <= K.e(); ++s) {
        CHECK(K.is_u_closed({{K.pi_power(s), K.zero()}, {K.zero(), K.pi_power(s)}}));
    }
    CHECK(K.is_u_closed({{K.zero(), K.one()}, {K.pi_power(1), K.zero()}}));
}
