#pragma once

#include <memory>
#include <vector>

#include "chaincodes/params.hpp"
#include "chaincodes/poly.hpp"

namespace chaincodes {

// Residue of F_{2^m}[x] modulo f^e, stored as its reduced representative.
struct ChainElem {
    Poly rep;

    auto operator<=>(const ChainElem&) const = default;
    bool is_zero() const { return rep.is_zero(); }
};

// xi0 + u xi1 in K + uK.
struct ExtElem {
    ChainElem c0;
    ChainElem c1;

    auto operator<=>(const ExtElem&) const = default;
};

// A row (a0, a1) of a generator matrix of a K-submodule of K^2.
using ModuleRow = std::pair<ChainElem, ChainElem>;

// Strong echelon form of a K-submodule of K^2:
//   [ f^top  top_other ]
//   [ 0      f^bottom  ]
// top == e means there is no row with a pivot in column 0 (top_other is then
// zero); bottom == e means the column-1 part is zero. top_other is reduced
// modulo f^bottom. Two generator sets span the same submodule iff their forms
// are equal.
struct ModuleForm {
    int top = 0;
    ChainElem top_other;
    int bottom = 0;

    auto operator<=>(const ModuleForm&) const = default;
};

// The chain ring K = F_{2^m}[x]/<f^e> for a monic irreducible f of degree d,
// together with the unit omega and the constant u^2 = omega^2 f^{2^k} of the
// extension K + uK.
class ChainCtx {
public:
    // Generic chain ring without the extension data (omega = 1, u^2 = 0);
    // used for module-level checks independent of any code parameters.
    ChainCtx(std::shared_ptr<const Field> field, Poly f, int e);

    // K_j for factor f_j of x^n + delta0 with cofactor F_j; builds omega_j and
    // asserts omega_j^2 f_j^{2^k} == alpha^{-1} (x^n + delta0)^{2^k} mod f_j^e.
    ChainCtx(const Params& params, const Poly& f, const Poly& cofactor);

    const Field& F() const { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const { return field_; }
    const Poly& f() const { return f_; }
    int d() const { return f_.degree(); }
    int e() const { return e_; }
    const Poly& modulus() const { return pow_f_.back(); }
    const Poly& f_power(int i) const { return pow_f_.at(static_cast<std::size_t>(i)); }
    const ChainElem& omega() const { return omega_; }
    const ChainElem& u_square() const { return u_square_; }

    ChainElem make(const Poly& p) const;
    ChainElem zero() const { return {}; }
    ChainElem one() const { return make(Poly::one()); }
    ChainElem pi_power(int s) const;  // f^s, zero for s >= e

    ChainElem add(const ChainElem& a, const ChainElem& b) const { return {p_add(a.rep, b.rep)}; }
    ChainElem mul(const ChainElem& a, const ChainElem& b) const;
    // Throws std::domain_error when a is not a unit.
    ChainElem inv(const ChainElem& a) const;
    bool is_unit(const ChainElem& a) const;

    // Digits b_0..b_{e-1}, each of degree < d, with a = sum b_i f^i.
    std::vector<Poly> f_adic_expand(const ChainElem& a) const;
    ChainElem f_adic_recompose(const std::vector<Poly>& digits) const;

    // Index of the first nonzero f-adic digit; e for zero.
    int pi_degree(const ChainElem& a) const;
    // a / f^s for pi_degree(a) >= s (exact polynomial division).
    ChainElem div_pi_power(const ChainElem& a, int s) const;
    // Representative of a modulo f^w.
    ChainElem reduce_pi_power(const ChainElem& a, int w) const;

    ExtElem ext_add(const ExtElem& a, const ExtElem& b) const;
    ExtElem ext_mul(const ExtElem& a, const ExtElem& b) const;

    // (a0, a1) -> (u^2-coefficient * a1, a0): multiplication by u under
    // theta(a0, a1) = a0 + u a1.
    ModuleRow u_shift(const ModuleRow& row) const;

    ModuleForm canonical_module_form(const std::vector<ModuleRow>& rows) const;
    // Rows of a module form (zero rows omitted).
    std::vector<ModuleRow> form_rows(const ModuleForm& form) const;
    // log_{q^d} of the submodule size: (e - top) + (e - bottom).
    int form_size_exponent(const ModuleForm& form) const { return 2 * e_ - form.top - form.bottom; }

    // Canonical form of the ideal of K + uK generated by the given elements.
    ModuleForm ideal_form(const std::vector<ExtElem>& gens) const;
    // Whether the submodule spanned by rows is closed under u_shift.
    bool is_u_closed(const std::vector<ModuleRow>& rows) const;

private:
    void init_powers();

    std::shared_ptr<const Field> field_;
    Poly f_;
    int e_;
    std::vector<Poly> pow_f_;  // f^0 .. f^e
    ChainElem omega_;
    ChainElem u_square_;
};

// omega_j = alpha0 F_j^{2^{k-1}} mod f_j^{2^k lambda}.
ChainElem make_omega(const Params& params, const ChainCtx& ctx, const Poly& cofactor);

}  // namespace chaincodes
