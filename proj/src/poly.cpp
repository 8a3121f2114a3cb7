#include "chaincodes/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace chaincodes {

Poly::Poly(std::vector<FieldElem> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<std::uint32_t> bits) {
    coeffs_.reserve(bits.size());
    for (auto b : bits) coeffs_.push_back(FieldElem{b});
    normalize();
}

Poly Poly::constant(FieldElem c) { return Poly(std::vector<FieldElem>{c}); }

Poly Poly::monomial(FieldElem c, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
    std::vector<FieldElem> v(static_cast<std::size_t>(degree) + 1, kZero);
    v.back() = c;
    return Poly(std::move(v));
}

FieldElem Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const FieldElem c = coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool unit = c == kOne;
        if (!unit || i == 0) os << c.bits;
        if (i > 0) {
            if (!unit) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly p_add(const Poly& a, const Poly& b) {
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<FieldElem> out(std::max(ac.size(), bc.size()));
    for (std::size_t i = 0; i < ac.size(); ++i) out[i] = ac[i];
    for (std::size_t i = 0; i < bc.size(); ++i) out[i] = FieldElem{out[i].bits ^ bc[i].bits};
    return Poly(std::move(out));
}

Poly p_scale(const Field& F, const Poly& a, FieldElem c) {
    if (c.is_zero()) return {};
    std::vector<FieldElem> out(a.coeffs());
    for (auto& v : out) v = F.mul(v, c);
    return Poly(std::move(out));
}

Poly p_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<FieldElem> out(ac.size() + bc.size() - 1);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i].is_zero()) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) {
            out[i + j].bits ^= F.mul(ac[i], bc[j]).bits;
        }
    }
    return Poly(std::move(out));
}

Poly p_shift(const Poly& a, int k) {
    if (a.is_zero() || k == 0) return a;
    std::vector<FieldElem> out(static_cast<std::size_t>(k), kZero);
    out.insert(out.end(), a.coeffs().begin(), a.coeffs().end());
    return Poly(std::move(out));
}

std::pair<Poly, Poly> p_divmod(const Field& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<FieldElem> rem(a.coeffs());
    const int db = b.degree();
    const FieldElem lead_inv = F.inv(b.lead());
    std::vector<FieldElem> quot(static_cast<std::size_t>(a.degree() - db + 1), kZero);
    const auto& bc = b.coeffs();
    for (int i = a.degree(); i >= db; --i) {
        const FieldElem c = rem[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        const FieldElem q = F.mul(c, lead_inv);
        quot[static_cast<std::size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(i - db + j)].bits ^= F.mul(q, bc[static_cast<std::size_t>(j)]).bits;
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly p_mod(const Field& F, const Poly& a, const Poly& b) {
    if (a.degree() < b.degree() && !b.is_zero()) return a;
    return p_divmod(F, a, b).second;
}

Poly p_div_exact(const Field& F, const Poly& a, const Poly& b) {
    auto [q, r] = p_divmod(F, a, b);
    if (!r.is_zero()) throw std::logic_error("p_div_exact: nonzero remainder");
    return q;
}

FieldElem p_eval(const Field& F, const Poly& a, FieldElem at) {
    FieldElem acc = kZero;
    for (int i = a.degree(); i >= 0; --i) acc = F.add(F.mul(acc, at), a.coeff(i));
    return acc;
}

Poly p_monic(const Field& F, const Poly& a) {
    if (a.is_zero() || a.lead() == kOne) return a;
    return p_scale(F, a, F.inv(a.lead()));
}

Poly p_gcd(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = p_mod(F, x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return p_monic(F, x);
}

XgcdResult p_xgcd(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("xgcd(0, 0) is undefined");
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(), s1;
    Poly t0, t1 = Poly::one();
    while (!r1.is_zero()) {
        auto [q, r] = p_divmod(F, r0, r1);
        Poly s2 = p_sub(s0, p_mul(F, q, s1));
        Poly t2 = p_sub(t0, p_mul(F, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const FieldElem li = F.inv(r0.lead());
    return {p_scale(F, r0, li), p_scale(F, s0, li), p_scale(F, t0, li)};
}

Poly p_pow(const Field& F, const Poly& base, unsigned e) {
    Poly result = Poly::one();
    Poly b = base;
    while (e != 0) {
        if (e & 1u) result = p_mul(F, result, b);
        e >>= 1;
        if (e != 0) b = p_mul(F, b, b);
    }
    return result;
}

Poly p_mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& modulus) {
    return p_mod(F, p_mul(F, a, b), modulus);
}

Poly p_powmod(const Field& F, const Poly& base, const BigInt& e, const Poly& modulus) {
    if (modulus.degree() < 1) throw std::invalid_argument("p_powmod: modulus must be nonconstant");
    if (e < 0) throw std::invalid_argument("p_powmod: negative exponent");
    Poly result = Poly::one();
    Poly b = p_mod(F, base, modulus);
    const auto bits = static_cast<std::size_t>(e == 0 ? 0 : msb(e) + 1);
    for (std::size_t i = bits; i-- > 0;) {
        result = p_mulmod(F, result, result, modulus);
        if (bit_test(e, static_cast<unsigned>(i))) result = p_mulmod(F, result, b, modulus);
    }
    return result;
}

Poly p_frobenius(const Field& F, const Poly& a, int times, const Poly& modulus) {
    Poly r = p_mod(F, a, modulus);
    for (int i = 0; i < times; ++i) r = p_mulmod(F, r, r, modulus);
    return r;
}

}  // namespace chaincodes
