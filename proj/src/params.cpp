#include "chaincodes/params.hpp"

#include <stdexcept>
#include <string>

namespace chaincodes {

Params make_params(const ParamSpec& spec) {
    if (spec.n < 1 || spec.n % 2 == 0) {
        throw std::invalid_argument("n must be odd and positive, got " + std::to_string(spec.n));
    }
    if (spec.k < 2 || spec.k > 12) throw std::invalid_argument("k must satisfy 2 <= k <= 12");
    if (spec.lambda < 2 || spec.lambda > 1024) {
        throw std::invalid_argument("lambda must satisfy 2 <= lambda <= 1024");
    }
    if (static_cast<long long>(spec.n) * spec.lambda * (1LL << spec.k) > (1LL << 16)) {
        throw std::invalid_argument("2^k * lambda * n exceeds the supported degree bound 65536");
    }

    Params p;
    p.field = std::make_shared<const Field>(spec.m, spec.reduction);
    const Field& F = *p.field;
    const FieldElem delta{spec.delta};
    const FieldElem alpha{spec.alpha};
    if (!F.contains(delta) || delta.is_zero()) {
        throw std::invalid_argument("delta must be a nonzero element of F_2^m");
    }
    if (!F.contains(alpha) || alpha.is_zero()) {
        throw std::invalid_argument("alpha must be a nonzero element of F_2^m");
    }
    p.m = spec.m;
    p.n = spec.n;
    p.k = spec.k;
    p.lambda = spec.lambda;
    p.delta = delta;
    p.alpha = alpha;
    p.delta0 = F.root_2k(delta, spec.k);
    p.alpha0 = F.sqrt(F.inv(alpha));
    if (F.mul(F.square(p.alpha0), alpha) != kOne) throw std::logic_error("alpha0^2 * alpha != 1");
    return p;
}

}  // namespace chaincodes
