#include "chaincodes/gf2m.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace chaincodes {

namespace {

// Primitive polynomials over F_2, bit i = coefficient of y^i. Index m.
constexpr std::uint32_t kBuiltinReduction[Field::kMaxDegree + 1] = {
    0,
    0x3,      // y + 1 (the prime field; y == 1)
    0x7,      // y^2 + y + 1
    0xB,      // y^3 + y + 1
    0x13,     // y^4 + y + 1
    0x25,     // y^5 + y^2 + 1
    0x43,     // y^6 + y + 1
    0x89,     // y^7 + y^3 + 1
    0x11D,    // y^8 + y^4 + y^3 + y^2 + 1
    0x211,    // y^9 + y^4 + 1
    0x409,    // y^10 + y^3 + 1
    0x805,    // y^11 + y^2 + 1
    0x1053,   // y^12 + y^6 + y^4 + y + 1
    0x201B,   // y^13 + y^4 + y^3 + y + 1
    0x4443,   // y^14 + y^10 + y^6 + y + 1
    0x8003,   // y^15 + y + 1
    0x1100B,  // y^16 + y^12 + y^3 + y + 1
};

int bit_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (b != 0) {
        if (b & 1u) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

std::uint64_t bit_mod(std::uint64_t a, std::uint64_t p) {
    const int dp = bit_degree(p);
    for (int da = bit_degree(a); da >= dp; da = bit_degree(a)) a ^= p << (da - dp);
    return a;
}

std::uint64_t bit_gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a = bit_mod(a, b);
        std::swap(a, b);
    }
    return a;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t v) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 2; p * p <= v; ++p) {
        if (v % p != 0) continue;
        out.push_back(p);
        while (v % p == 0) v /= p;
    }
    if (v > 1) out.push_back(v);
    return out;
}

}  // namespace

bool is_irreducible_gf2(std::uint64_t poly) {
    const int d = bit_degree(poly);
    if (d <= 0) return false;
    if (d == 1) return true;
    if (d > 31) throw std::invalid_argument("is_irreducible_gf2: degree too large");
    // gcd(x^{2^i} - x, P) = 1 for 1 <= i <= d/2.
    std::uint64_t xp = 2;  // x^{2^i} mod P
    for (int i = 1; i <= d / 2; ++i) {
        xp = bit_mod(clmul(xp, xp), poly);
        if (bit_gcd(poly, xp ^ 2u) != 1) return false;
    }
    return true;
}

std::uint32_t Field::builtin_reduction(int m) {
    if (m < 1 || m > kMaxDegree) throw std::invalid_argument("field degree m must lie in [1, 16]");
    return kBuiltinReduction[m];
}

Field::Field(int m, std::optional<std::uint32_t> reduction) : m_(m) {
    if (m < 1 || m > kMaxDegree) {
        throw std::invalid_argument("field degree m must lie in [1, 16], got " + std::to_string(m));
    }
    reduction_ = reduction.value_or(kBuiltinReduction[m]);
    if (bit_degree(reduction_) != m) {
        throw std::invalid_argument("reduction polynomial must have degree " + std::to_string(m));
    }
    if (!is_irreducible_gf2(reduction_)) {
        throw std::invalid_argument("reduction polynomial is reducible over F_2");
    }

    const std::uint32_t group = order() - 1;
    if (m == 1) {
        primitive_ = kOne;
    } else {
        const auto primes = prime_factors(group);
        for (std::uint32_t g = 2; g < order(); ++g) {
            bool ok = true;
            for (std::uint32_t p : primes) {
                if (pow(FieldElem{g}, group / p) == kOne) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                primitive_ = FieldElem{g};
                break;
            }
        }
    }

    if (m <= kTableDegreeLimit) {
        log_.assign(order(), 0);
        antilog_.assign(group, 0);
        FieldElem v = kOne;
        for (std::uint32_t i = 0; i < group; ++i) {
            antilog_[i] = v.bits;
            log_[v.bits] = i;
            v = mul_slow(v, primitive_);
        }
    }
}

FieldElem Field::mul_slow(FieldElem a, FieldElem b) const {
    return FieldElem{static_cast<std::uint32_t>(bit_mod(clmul(a.bits, b.bits), reduction_))};
}

FieldElem Field::mul(FieldElem a, FieldElem b) const {
    if (a.is_zero() || b.is_zero()) return kZero;
    if (log_.empty()) return mul_slow(a, b);
    const std::uint32_t group = order() - 1;
    std::uint32_t e = log_[a.bits] + log_[b.bits];
    if (e >= group) e -= group;
    return FieldElem{antilog_[e]};
}

FieldElem Field::inv(FieldElem a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero in F_2^m");
    const std::uint32_t group = order() - 1;
    if (!log_.empty()) {
        const std::uint32_t l = log_[a.bits];
        return FieldElem{antilog_[l == 0 ? 0 : group - l]};
    }
    return pow(a, group - 1);
}

FieldElem Field::pow(FieldElem a, std::uint64_t e) const {
    FieldElem result = kOne;
    FieldElem base = a;
    while (e != 0) {
        if (e & 1u) result = log_.empty() ? mul_slow(result, base) : mul(result, base);
        base = log_.empty() ? mul_slow(base, base) : mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldElem Field::sqrt(FieldElem a) const {
    FieldElem r = a;
    for (int i = 0; i + 1 < m_; ++i) r = mul(r, r);
    return r;
}

FieldElem Field::root_2k(FieldElem d, int k) const {
    if (d.is_zero()) throw std::invalid_argument("root_2k: element must be nonzero");
    if (k < 1) throw std::invalid_argument("root_2k: k must be >= 1");
    // Squaring is the Frobenius automorphism of order m, so the inverse of
    // a -> a^{2^k} is a -> a^{2^{(m - k mod m)}}: apply m - (k mod m) squarings.
    const int steps = (m_ - (k % m_)) % m_;
    FieldElem r = d;
    for (int i = 0; i < steps; ++i) r = mul(r, r);
    FieldElem check = r;
    for (int i = 0; i < k; ++i) check = mul(check, check);
    if (check != d) throw std::logic_error("root_2k: postcondition d0^{2^k} = d violated");
    return r;
}

}  // namespace chaincodes
