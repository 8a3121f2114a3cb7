#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chaincodes/bigint.hpp"
#include "chaincodes/chain_ring.hpp"
#include "chaincodes/factor.hpp"
#include "chaincodes/params.hpp"

namespace chaincodes {

// The six ideal families of K_j + uK_j. With H = 2^{k-1} lambda,
// e = 2^k lambda and B = 2^k (lambda - 1):
//   F1  <omega f^{2^{k-1}+s} + f^{H+ceil(s/2)} h + u f^s>,  0 <= s < B
//   F2  <f^{H+ceil(s/2)} h + u f^s>,                        B <= s < e
//   F3  <f^s>,                                              0 <= s <= e
//   F4  <u f^s, f^{s+1}>,                                   0 <= s <= e-2
//   F5  <f^{s+ceil(t/2)} h + u f^s, f^{s+t}>,   2 <= t <= 2^k, s <= e-1-t
//   F6  <omega f^{2^{k-1}+s} + f^{s+ceil(t/2)} h + u f^s, f^{s+t}>,
//                                         2^k+1 <= t <= e-1, s <= e-1-t
// h runs over residues modulo f^{H-ceil(s/2)} (F1, F2) or f^{floor(t/2)}
// (F5, F6).
enum class Family : int { F1 = 1, F2 = 2, F3 = 3, F4 = 4, F5 = 5, F6 = 6 };

struct IdealDescriptor {
    int j = 0;  // factor index, 0-based
    Family family = Family::F3;
    int s = 0;
    int t = 0;  // 0 for F1-F3, 1 for F4
    Poly h;     // residue h(x); zero when the family has none

    auto operator<=>(const IdealDescriptor&) const = default;
};

struct CodeDescriptor {
    std::vector<IdealDescriptor> components;  // one per factor
};

// Parameters, factorization and one chain ring per factor.
struct CodeSystem {
    Params params;
    FactorData factors;
    std::vector<ChainCtx> chains;

    std::size_t r() const { return chains.size(); }
};

CodeSystem build_code_system(const Params& params, std::uint64_t seed = kDefaultSeed);

// Number of f-adic digits of h for the given family/s/t.
int h_digit_count(Family family, int s, int t, const Params& params);

// Lazy enumeration of all ideals of K_j + uK_j in canonical order: family,
// then t, then s, then h with the least significant f-adic digit varying
// fastest and field elements in integer order.
class IdealStream {
public:
    IdealStream(const ChainCtx& ctx, const Params& params, int j);

    std::optional<IdealDescriptor> next();
    void reset();

private:
    struct Slot {
        Family family;
        int s;
        int t;
        int h_digits;
    };

    const ChainCtx* ctx_;
    int j_;
    std::vector<Slot> slots_;
    std::size_t slot_ = 0;
    std::vector<std::uint32_t> counter_;
    bool fresh_slot_ = true;
};

// Cartesian product of the per-factor streams; the last factor varies fastest.
class CodeStream {
public:
    explicit CodeStream(const CodeSystem& sys);

    std::optional<CodeDescriptor> next();
    // Advances past up to `count` codes; returns how many were skipped.
    std::uint64_t skip(std::uint64_t count);

private:
    const CodeSystem* sys_;
    std::vector<IdealStream> streams_;
    std::vector<IdealDescriptor> current_;
    bool started_ = false;
    bool done_ = false;
};

// log base 2^{m d_j} of |C_j|.
int ideal_size_exponent(const IdealDescriptor& desc, const Params& params);
BigInt ideal_size(const IdealDescriptor& desc, const Params& params, int d);
BigInt code_size(const CodeDescriptor& code, const CodeSystem& sys);

// The literal generators of C_j (one for F1-F3, two for F4-F6).
std::vector<ExtElem> descriptor_generators(const IdealDescriptor& desc, const ChainCtx& ctx,
                                           const Params& params);
// The generator matrix of theta^{-1}(C_j) as a K_j-submodule of K_j^2.
std::vector<ModuleRow> descriptor_matrix(const IdealDescriptor& desc, const ChainCtx& ctx,
                                         const Params& params);
ModuleForm descriptor_form(const IdealDescriptor& desc, const ChainCtx& ctx, const Params& params);

// Whether the descriptor's submodule is closed under (a0, a1) -> (u^2 a1, a0).
bool ideal_membership_check(const IdealDescriptor& desc, const ChainCtx& ctx, const Params& params);

// Number of ideals of K_j + uK_j, q = 2^{m d_j}.
BigInt count_ideals_sum(const BigInt& q, int k, int lambda);
BigInt count_ideals_closed_form(const BigInt& q, int k, int lambda);

struct FamilyCounts {
    BigInt principal;  // F1 + F2
    BigInt diagonal;   // F3
    BigInt two_gen;    // F4 + F5 + F6
    BigInt total() const { return principal + diagonal + two_gen; }
};
FamilyCounts count_ideals_by_family(const BigInt& q, int k, int lambda);

struct CodeCount {
    std::vector<BigInt> per_factor_sum;
    std::vector<BigInt> per_factor_closed;
    BigInt total;
};
// Throws std::logic_error if the two count routes disagree.
CodeCount count_codes(const Params& params, const FactorData& fd);

// Number of K-submodules of K^2 for a chain ring with residue field of size q
// and nilpotency index e.
BigInt count_submodules_length2(const BigInt& q, int e);

}  // namespace chaincodes
