#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "chaincodes/params.hpp"
#include "chaincodes/poly.hpp"

namespace chaincodes {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'c0de'2024ULL;

struct Factor {
    Poly f;
    int degree = 0;
};

// Monic irreducible factors of x^n + d0 (n odd, d0 != 0), sorted by degree
// then by coefficient sequence (lowest degree first). Every factor passes
// Rabin's irreducibility test before it is returned.
std::vector<Factor> factor_xn_delta(const Field& F, int n, FieldElem d0,
                                    std::uint64_t seed = kDefaultSeed);

bool is_irreducible(const Field& F, const Poly& f);

// Per-factor data of the CRT decomposition of A = F[x]/<(x^n + d0)^e>,
// e = 2^k lambda.
struct FactorData {
    std::vector<Factor> factors;
    std::vector<Poly> cofactors;   // F_j = (x^n + d0) / f_j
    std::vector<Poly> bezout_g;    // g_j F_j^e + h_j f_j^e = 1
    std::vector<Poly> bezout_h;
    std::vector<Poly> idempotents; // eps_j = g_j F_j^e mod (x^n + d0)^e
    Poly base;                     // x^n + d0
    Poly modulus;                  // (x^n + d0)^e

    std::size_t size() const { return factors.size(); }
};

// Throws std::logic_error if any idempotent identity fails.
FactorData build_factor_data(const Params& params, std::uint64_t seed = kDefaultSeed);

// Sum eps_j = 1, eps_j^2 = eps_j, eps_j eps_l = 0 (j != l), all mod the
// modulus.
bool idempotent_identities_hold(const Field& F, const FactorData& fd);

}  // namespace chaincodes
