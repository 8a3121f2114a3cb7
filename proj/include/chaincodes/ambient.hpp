#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "chaincodes/enumerator.hpp"
#include "chaincodes/f2_linear.hpp"
#include "chaincodes/params.hpp"
#include "chaincodes/poly.hpp"

namespace chaincodes {

// Element of R = F_{2^m}[u]/<u^{2 lambda}>: u-adic digits, index = power of u.
using RElem = std::vector<FieldElem>;

// Element of R[x]/<x^N - (delta + alpha u^2)>, N = 2^k n; coeffs[i] is the
// coefficient of x^i. Also a codeword (c_0, ..., c_{N-1}).
struct RPoly {
    std::vector<RElem> coeffs;

    auto operator<=>(const RPoly&) const = default;
};

// xi0 + u xi1 in A + uA, A = F_{2^m}[x]/<(x^n + delta0)^{2^k lambda}>.
struct AmbientElem {
    Poly xi0;
    Poly xi1;

    auto operator<=>(const AmbientElem&) const = default;
};

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultMaterializeCap = std::uint64_t{1} << 24;
inline constexpr int kDefaultOracleDimCap = 16;

// Both sides of the Psi isomorphism plus the F_2-linear encoding of R[x]/<..>
// used by the oracle: coordinate ((i * 2 lambda) + j) * m + b is bit b of the
// u^j digit of the x^i coefficient.
class AmbientRing {
public:
    explicit AmbientRing(const Params& params);

    const Params& params() const { return params_; }
    const Field& F() const { return params_.F(); }
    int length() const { return N_; }
    int u_digits() const { return U_; }
    // Dimension of R[x]/<..> over F_2.
    int f2_dim() const { return N_ * U_ * params_.m; }
    // The modulus (x^n + delta0)^{2^k lambda} of A.
    const Poly& a_modulus() const { return a_modulus_; }
    // u^2 as an element of A: alpha^{-1} (x^n + delta0)^{2^k}.
    const Poly& a_u_square() const { return a_u_square_; }
    const RElem& gamma() const { return gamma_; }

    // R arithmetic.
    RElem r_zero() const { return RElem(static_cast<std::size_t>(U_), kZero); }
    RElem r_scalar(FieldElem c) const;
    RElem r_add(const RElem& a, const RElem& b) const;
    RElem r_mul(const RElem& a, const RElem& b) const;
    bool r_is_zero(const RElem& a) const;

    // R[x]/<x^N - gamma> arithmetic.
    RPoly zero() const;
    RPoly one() const;
    RPoly add(const RPoly& a, const RPoly& b) const;
    RPoly mul(const RPoly& a, const RPoly& b) const;
    RPoly scale(const RPoly& a, const RElem& c) const;
    // (c_0, ..., c_{N-1}) -> (gamma c_{N-1}, c_0, ..., c_{N-2}).
    RPoly constacyclic_shift(const RPoly& a) const;
    // sum_i a_i b_i in R.
    RElem inner_product(const RPoly& a, const RPoly& b) const;
    // sum of coeff * u^u_power * x^x_power over the terms.
    struct Term {
        int x_power;
        int u_power;
        FieldElem coeff;
    };
    RPoly from_terms(const std::vector<Term>& terms) const;

    // A + uA arithmetic.
    AmbientElem a_reduce(const AmbientElem& a) const;
    AmbientElem a_add(const AmbientElem& a, const AmbientElem& b) const;
    AmbientElem a_mul(const AmbientElem& a, const AmbientElem& b) const;

    RPoly psi_lift(const AmbientElem& a) const;
    AmbientElem psi_inverse(const RPoly& c) const;

    Bits encode(const RPoly& a) const;
    RPoly decode(const Bits& v) const;

    // The F_2-linear view exists only while f2_dim() <= Bits::kCapacity;
    // encode, decode and ideal_of throw CapExceeded otherwise.
    bool linear_available() const { return f2_dim() <= Bits::kCapacity; }
    // Multiplication by x, by u and (m > 1) by a generator of F_{2^m}.
    const std::vector<LinearMap>& ideal_operators() const { return ops_; }
    // Ideal generated by the given elements.
    Subspace ideal_of(const std::vector<RPoly>& gens) const;

private:
    void require_linear() const;

    Params params_;
    int N_;
    int U_;
    Poly a_modulus_;
    Poly a_u_square_;
    RElem gamma_;
    std::vector<RElem> gamma_powers_;  // gamma^0 .. gamma^{lambda-1}
    std::vector<LinearMap> ops_;
};

// eps_j (c0 + u c1) in A + uA.
AmbientElem lift_component(const ExtElem& g, int j, const CodeSystem& sys, const AmbientRing& ring);

// The ideal sum_j eps_j C_j as an F_2-subspace of R[x]/<..>.
Subspace code_ideal(const CodeDescriptor& code, const CodeSystem& sys, const AmbientRing& ring);

// All codewords; throws CapExceeded rather than truncating.
std::vector<RPoly> materialize_code(const CodeDescriptor& code, const CodeSystem& sys, const AmbientRing& ring,
                                    std::uint64_t cap = kDefaultMaterializeCap);
std::vector<RPoly> materialize(const Subspace& ideal, const AmbientRing& ring,
                               std::uint64_t cap = kDefaultMaterializeCap);

struct OracleStats {
    std::size_t principal_ideals = 0;
    std::size_t sum_rounds = 0;
};

// All subspaces of F_2^dim invariant under ops: closures of single vectors,
// then pairwise sums to a fixpoint. Sorted.
std::vector<Subspace> invariant_subspace_lattice(int dim, const std::vector<LinearMap>& ops, unsigned threads = 1,
                                                 OracleStats* stats = nullptr);

// Every ideal of R[x]/<x^N - gamma>, found by closing each element to its
// principal ideal and then closing that family under pairwise sums. Result is
// sorted. Throws CapExceeded when the F_2-dimension exceeds dim_cap.
std::vector<Subspace> brute_force_ideals(const AmbientRing& ring, int dim_cap = kDefaultOracleDimCap,
                                         unsigned threads = 1, OracleStats* stats = nullptr);

// Every F_{2^m}[pi]/<pi^e>-submodule of (F_{2^m}[pi]/<pi^e>)^2, found by
// exhaustive search without any chain-ring normal form.
std::vector<Subspace> brute_force_submodules_length2(int m, int e, unsigned threads = 1);

// {a : [a, b] = 0 for all b in C}, with the inner product valued in R.
// Asserts |C| |C^perp| = |R|^N.
Subspace dual_code(const Subspace& code, const AmbientRing& ring);
bool is_self_dual(const Subspace& code, const AmbientRing& ring);

// Closed under the constacyclic shift (checked on a basis).
bool is_constacyclic(const Subspace& code, const AmbientRing& ring);

// Greedy generator recovery: the element with the largest principal ideal,
// then whatever else is needed to reach the whole ideal.
std::vector<RPoly> recover_generators(const Subspace& ideal, const AmbientRing& ring);

}  // namespace chaincodes
