#include "chaincodes/factor.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chaincodes {

namespace {

// x^{q^i} mod f, q = 2^m, as i*m repeated squarings of x.
Poly x_pow_q(const Field& F, int i, const Poly& f) {
    return p_frobenius(F, Poly::x(), i * F.degree(), f);
}

std::vector<int> prime_divisors(int v) {
    std::vector<int> out;
    for (int p = 2; p * p <= v; ++p) {
        if (v % p != 0) continue;
        out.push_back(p);
        while (v % p == 0) v /= p;
    }
    if (v > 1) out.push_back(v);
    return out;
}

Poly random_poly(const Field& F, int below_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, F.order() - 1);
    std::vector<FieldElem> c(static_cast<std::size_t>(below_degree));
    for (auto& v : c) v = FieldElem{dist(rng)};
    return Poly(std::move(c));
}

// Splits g, a product of distinct monic irreducibles of degree d, using the
// absolute trace T(a) = a + a^2 + ... + a^{2^{md-1}} mod g.
void equal_degree_split(const Field& F, const Poly& g, int d, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const int trace_len = F.degree() * d;
    for (;;) {
        const Poly a = random_poly(F, g.degree(), rng);
        Poly term = a;
        Poly trace = a;
        for (int j = 1; j < trace_len; ++j) {
            term = p_mulmod(F, term, term, g);
            trace = p_add(trace, term);
        }
        if (trace.is_zero()) continue;
        const Poly c = p_gcd(F, trace, g);
        if (c.degree() <= 0 || c.degree() >= g.degree()) continue;
        equal_degree_split(F, c, d, rng, out);
        equal_degree_split(F, p_div_exact(F, g, c), d, rng, out);
        return;
    }
}

bool canonical_less(const Factor& a, const Factor& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    const auto& ac = a.f.coeffs();
    const auto& bc = b.f.coeffs();
    return std::lexicographical_compare(ac.begin(), ac.end(), bc.begin(), bc.end());
}

}  // namespace

bool is_irreducible(const Field& F, const Poly& f) {
    const int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const Poly monic = p_monic(F, f);
    if (x_pow_q(F, d, monic) != p_mod(F, Poly::x(), monic)) return false;
    for (int p : prime_divisors(d)) {
        const Poly h = x_pow_q(F, d / p, monic);
        if (!p_gcd(F, p_sub(h, Poly::x()), monic).is_one()) return false;
    }
    return true;
}

std::vector<Factor> factor_xn_delta(const Field& F, int n, FieldElem d0, std::uint64_t seed) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("n must be odd and positive");
    if (d0.is_zero()) throw std::invalid_argument("delta0 must be nonzero");

    std::mt19937_64 rng(seed);
    Poly g = p_add(Poly::monomial(kOne, n), Poly::constant(d0));
    std::vector<Poly> irreducibles;

    // Distinct-degree factorization; x^n + d0 is squarefree because n is odd.
    Poly h = Poly::x();
    for (int i = 1; g.degree() >= 2 * i; ++i) {
        h = p_frobenius(F, h, F.degree(), g);
        const Poly gi = p_gcd(F, p_sub(h, Poly::x()), g);
        if (gi.degree() > 0) {
            equal_degree_split(F, gi, i, rng, irreducibles);
            g = p_div_exact(F, g, gi);
            h = p_mod(F, h, g);
        }
    }
    if (g.degree() > 0) irreducibles.push_back(g);

    std::vector<Factor> out;
    for (auto& f : irreducibles) {
        Poly monic = p_monic(F, f);
        if (!is_irreducible(F, monic)) throw std::logic_error("factorization produced a reducible factor");
        const int deg = monic.degree();
        out.push_back({std::move(monic), deg});
    }
    std::sort(out.begin(), out.end(), canonical_less);

    Poly product = Poly::one();
    for (const auto& fa : out) product = p_mul(F, product, fa.f);
    if (product != p_add(Poly::monomial(kOne, n), Poly::constant(d0))) {
        throw std::logic_error("factor product does not reassemble x^n + delta0");
    }
    return out;
}

bool idempotent_identities_hold(const Field& F, const FactorData& fd) {
    const Poly& M = fd.modulus;
    Poly sum;
    for (std::size_t j = 0; j < fd.size(); ++j) {
        const Poly& ej = fd.idempotents[j];
        sum = p_add(sum, ej);
        if (p_mulmod(F, ej, ej, M) != ej) return false;
        for (std::size_t l = j + 1; l < fd.size(); ++l) {
            if (!p_mulmod(F, ej, fd.idempotents[l], M).is_zero()) return false;
        }
    }
    return p_mod(F, sum, M).is_one();
}

FactorData build_factor_data(const Params& params, std::uint64_t seed) {
    const Field& F = params.F();
    const unsigned e = static_cast<unsigned>(params.nilpotency());
    FactorData fd;
    fd.factors = factor_xn_delta(F, params.n, params.delta0, seed);
    fd.base = p_add(Poly::monomial(kOne, params.n), Poly::constant(params.delta0));
    fd.modulus = p_pow(F, fd.base, e);

    Poly reassembled = Poly::one();
    for (const auto& fa : fd.factors) {
        const Poly Fj = p_div_exact(F, fd.base, fa.f);
        const Poly fje = p_pow(F, fa.f, e);
        const Poly Fje = p_pow(F, Fj, e);
        reassembled = p_mul(F, reassembled, fje);
        const XgcdResult x = p_xgcd(F, Fje, fje);
        if (!x.g.is_one()) throw std::logic_error("F_j^e and f_j^e are not coprime");
        fd.cofactors.push_back(Fj);
        fd.bezout_g.push_back(x.s);
        fd.bezout_h.push_back(x.t);
        fd.idempotents.push_back(p_mulmod(F, x.s, Fje, fd.modulus));
    }
    if (reassembled != fd.modulus) throw std::logic_error("prod f_j^e != (x^n + delta0)^e");
    if (!idempotent_identities_hold(F, fd)) throw std::logic_error("idempotent identities violated");
    return fd;
}

}  // namespace chaincodes
