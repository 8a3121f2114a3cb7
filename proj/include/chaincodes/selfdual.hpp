#pragma once

#include <string>
#include <vector>

#include "chaincodes/ambient.hpp"
#include "chaincodes/enumerator.hpp"

namespace chaincodes {

struct SelfDualEntry {
    int case_index = 0;               // 1..4
    std::vector<RPoly> generators;    // in R[x]/<x^4 - (1 + alpha u^2)>
    IdealDescriptor descriptor;
};

// Self-dual (1 + alpha u^2)-constacyclic codes of length 4 over
// F_{2^m}[u]/<u^4>, in four cases:
//   1  <u^2>
//   2  <u^2 b0 + u (x+1)^3, u^2 (x+1)>
//   3  <u^2 h + u (x+1)^2, u^2 (x+1)^2>,            h = b1 + b2 (x+1)
//   4  <alpha0 (x+1)^3 + u^2 h + u (x+1), u^2 (x+1)^3>, h = alpha0^{-1} + b3 (x+1) + b4 (x+1)^2
// Each entry is matched to its enumerated descriptor. Requires
// n = 1, k = 2, lambda = 2, delta = 1; throws std::invalid_argument otherwise.
std::vector<SelfDualEntry> list_self_dual_length4(const CodeSystem& sys, const AmbientRing& ring);

// 1 + 2^m + 2 * 4^m.
BigInt self_dual_count_length4(int m);

// The eleven m = 1, alpha = 1 codes written out as generator pairs.
std::vector<std::vector<RPoly>> explicit_self_dual_list_m1(const AmbientRing& ring);

// Sum of p_i(x) u^{j_i} in R[x]/<x^N - gamma>.
struct UTerm {
    Poly p;
    int u_power;
};
RPoly ring_poly(const AmbientRing& ring, const std::vector<UTerm>& terms);

}  // namespace chaincodes
