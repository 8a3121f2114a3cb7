#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "chaincodes/bigint.hpp"
#include "chaincodes/gf2m.hpp"

namespace chaincodes {

// Dense univariate polynomial over F_{2^m}; coeffs[i] is the coefficient of
// x^i. Always normalized: the zero polynomial has no coefficients and every
// other polynomial has a nonzero leading coefficient.
class Poly {
public:
    static constexpr int kDegreeOfZero = -1;

    Poly() = default;
    explicit Poly(std::vector<FieldElem> coeffs);
    Poly(std::initializer_list<std::uint32_t> bits);

    static Poly constant(FieldElem c);
    static Poly monomial(FieldElem c, int degree);
    static Poly x() { return monomial(kOne, 1); }
    static Poly one() { return constant(kOne); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == kOne; }
    FieldElem coeff(int i) const;
    FieldElem lead() const { return is_zero() ? kZero : coeffs_.back(); }
    const std::vector<FieldElem>& coeffs() const { return coeffs_; }

    auto operator<=>(const Poly&) const = default;

    std::string to_string() const;

private:
    void normalize();
    std::vector<FieldElem> coeffs_;
};

Poly p_add(const Poly& a, const Poly& b);
inline Poly p_sub(const Poly& a, const Poly& b) { return p_add(a, b); }
Poly p_scale(const Field& F, const Poly& a, FieldElem c);
Poly p_mul(const Field& F, const Poly& a, const Poly& b);
Poly p_shift(const Poly& a, int k);  // a * x^k

// Throws std::domain_error on a zero divisor.
std::pair<Poly, Poly> p_divmod(const Field& F, const Poly& a, const Poly& b);
Poly p_mod(const Field& F, const Poly& a, const Poly& b);
Poly p_div_exact(const Field& F, const Poly& a, const Poly& b);

FieldElem p_eval(const Field& F, const Poly& a, FieldElem at);
Poly p_monic(const Field& F, const Poly& a);

// Monic gcd; gcd(0, 0) is rejected.
Poly p_gcd(const Field& F, const Poly& a, const Poly& b);

struct XgcdResult {
    Poly g;  // monic
    Poly s;
    Poly t;  // s*a + t*b = g
};
XgcdResult p_xgcd(const Field& F, const Poly& a, const Poly& b);

Poly p_pow(const Field& F, const Poly& base, unsigned e);
Poly p_mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& modulus);
// base^e mod modulus by square-and-multiply; modulus must be nonconstant.
Poly p_powmod(const Field& F, const Poly& base, const BigInt& e, const Poly& modulus);
// a^{2^times} mod modulus.
Poly p_frobenius(const Field& F, const Poly& a, int times, const Poly& modulus);

}  // namespace chaincodes
