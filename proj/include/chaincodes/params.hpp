#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "chaincodes/gf2m.hpp"

namespace chaincodes {

struct ParamSpec {
    int m = 1;
    int n = 1;
    int k = 2;
    int lambda = 2;
    std::uint32_t delta = 1;
    std::uint32_t alpha = 1;
    std::optional<std::uint32_t> reduction;
};

// Code parameters: length 2^k n over F_{2^m}[u]/<u^{2 lambda}>, shift
// constant delta + alpha u^2. delta0 and alpha0 are the derived roots with
// delta0^{2^k} = delta and alpha0^2 = alpha^{-1}.
struct Params {
    std::shared_ptr<const Field> field;
    int m = 0;
    int n = 0;
    int k = 0;
    int lambda = 0;
    FieldElem delta;
    FieldElem alpha;
    FieldElem delta0;
    FieldElem alpha0;

    // Nilpotency index 2^k lambda of each f_j in K_j.
    int nilpotency() const { return (1 << k) * lambda; }
    // Half of it, 2^{k-1} lambda.
    int half_nilpotency() const { return (1 << (k - 1)) * lambda; }
    // Code length 2^k n.
    int length() const { return (1 << k) * n; }
    // Number of u-adic digits of an element of R.
    int u_digits() const { return 2 * lambda; }

    const Field& F() const { return *field; }
};

// Validates every invariant and throws std::invalid_argument naming the one
// that failed.
Params make_params(const ParamSpec& spec);

}  // namespace chaincodes
