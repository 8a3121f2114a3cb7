#include "chaincodes/chain_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace chaincodes {

ChainCtx::ChainCtx(std::shared_ptr<const Field> field, Poly f, int e)
    : field_(std::move(field)), f_(std::move(f)), e_(e) {
    if (f_.degree() < 1 || f_.lead() != kOne) throw std::invalid_argument("chain ring: f must be monic, degree >= 1");
    if (e_ < 1) throw std::invalid_argument("chain ring: nilpotency index must be >= 1");
    init_powers();
    omega_ = one();
}

ChainCtx::ChainCtx(const Params& params, const Poly& f, const Poly& cofactor)
    : field_(params.field), f_(f), e_(params.nilpotency()) {
    if (f_.degree() < 1 || f_.lead() != kOne) throw std::invalid_argument("chain ring: f must be monic, degree >= 1");
    init_powers();
    omega_ = make_omega(params, *this, cofactor);
    u_square_ = mul(mul(omega_, omega_), pi_power(1 << params.k));

    const Field& Fd = F();
    const Poly base = p_add(Poly::monomial(kOne, params.n), Poly::constant(params.delta0));
    const Poly rhs = p_scale(Fd, p_pow(Fd, base, 1u << params.k), Fd.inv(params.alpha));
    if (make(rhs) != u_square_) {
        throw std::logic_error("omega^2 f^{2^k} != alpha^{-1} (x^n + delta0)^{2^k} mod f^e");
    }
    if (!is_unit(omega_)) throw std::logic_error("omega is not a unit");
}

void ChainCtx::init_powers() {
    pow_f_.clear();
    pow_f_.push_back(Poly::one());
    for (int i = 1; i <= e_; ++i) pow_f_.push_back(p_mul(F(), pow_f_.back(), f_));
}

ChainElem ChainCtx::make(const Poly& p) const { return {p_mod(F(), p, modulus())}; }

ChainElem ChainCtx::pi_power(int s) const {
    if (s >= e_) return zero();
    return {f_power(s)};
}

ChainElem ChainCtx::mul(const ChainElem& a, const ChainElem& b) const {
    return {p_mulmod(F(), a.rep, b.rep, modulus())};
}

bool ChainCtx::is_unit(const ChainElem& a) const { return !p_mod(F(), a.rep, f_).is_zero(); }

ChainElem ChainCtx::inv(const ChainElem& a) const {
    if (!is_unit(a)) throw std::domain_error("chain ring inverse of a non-unit");
    const XgcdResult x = p_xgcd(F(), a.rep, modulus());
    return make(x.s);
}

std::vector<Poly> ChainCtx::f_adic_expand(const ChainElem& a) const {
    std::vector<Poly> digits;
    digits.reserve(static_cast<std::size_t>(e_));
    Poly rest = a.rep;
    for (int i = 0; i < e_; ++i) {
        auto [q, r] = p_divmod(F(), rest, f_);
        digits.push_back(std::move(r));
        rest = std::move(q);
    }
    return digits;
}

ChainElem ChainCtx::f_adic_recompose(const std::vector<Poly>& digits) const {
    Poly acc;
    for (std::size_t i = digits.size(); i-- > 0;) {
        acc = p_add(p_mul(F(), acc, f_), digits[i]);
    }
    return make(acc);
}

int ChainCtx::pi_degree(const ChainElem& a) const {
    if (a.is_zero()) return e_;
    Poly rest = a.rep;
    int v = 0;
    for (; v < e_; ++v) {
        auto [q, r] = p_divmod(F(), rest, f_);
        if (!r.is_zero()) break;
        rest = std::move(q);
    }
    return v;
}

ChainElem ChainCtx::div_pi_power(const ChainElem& a, int s) const {
    if (s == 0) return a;
    if (s > e_) throw std::invalid_argument("div_pi_power: exponent exceeds nilpotency index");
    return {p_div_exact(F(), a.rep, f_power(s))};
}

ChainElem ChainCtx::reduce_pi_power(const ChainElem& a, int w) const {
    if (w >= e_) return a;
    return {p_mod(F(), a.rep, f_power(w))};
}

ExtElem ChainCtx::ext_add(const ExtElem& a, const ExtElem& b) const {
    return {add(a.c0, b.c0), add(a.c1, b.c1)};
}

ExtElem ChainCtx::ext_mul(const ExtElem& a, const ExtElem& b) const {
    const ChainElem c0 = add(mul(a.c0, b.c0), mul(u_square_, mul(a.c1, b.c1)));
    const ChainElem c1 = add(mul(a.c0, b.c1), mul(a.c1, b.c0));
    return {c0, c1};
}

ModuleRow ChainCtx::u_shift(const ModuleRow& row) const { return {mul(u_square_, row.second), row.first}; }

ModuleForm ChainCtx::canonical_module_form(const std::vector<ModuleRow>& rows) const {
    ModuleForm form;
    form.top = e_;
    std::vector<ChainElem> column1;

    std::size_t pivot = rows.size();
    int v = e_;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int deg = pi_degree(rows[i].first);
        if (deg < v) {
            v = deg;
            pivot = i;
        }
    }
    if (pivot < rows.size()) {
        // Scale the pivot row so its first entry is exactly f^v.
        const ChainElem unit = div_pi_power(rows[pivot].first, v);
        const ChainElem top_other = mul(rows[pivot].second, inv(unit));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pivot) continue;
            const ChainElem c = div_pi_power(rows[i].first, v);
            column1.push_back(add(rows[i].second, mul(c, top_other)));
        }
        // f^{e-v} kills the pivot entry but not necessarily its partner.
        column1.push_back(mul(pi_power(e_ - v), top_other));
        form.top = v;
        form.top_other = top_other;
    } else {
        for (const auto& r : rows) column1.push_back(r.second);
    }

    int w = e_;
    for (const auto& c : column1) w = std::min(w, pi_degree(c));
    form.bottom = w;
    if (form.top < e_) form.top_other = reduce_pi_power(form.top_other, w);
    return form;
}

std::vector<ModuleRow> ChainCtx::form_rows(const ModuleForm& form) const {
    std::vector<ModuleRow> rows;
    if (form.top < e_) rows.push_back({pi_power(form.top), form.top_other});
    if (form.bottom < e_) rows.push_back({zero(), pi_power(form.bottom)});
    return rows;
}

ModuleForm ChainCtx::ideal_form(const std::vector<ExtElem>& gens) const {
    std::vector<ModuleRow> rows;
    for (const auto& g : gens) {
        const ModuleRow r{g.c0, g.c1};
        rows.push_back(r);
        rows.push_back(u_shift(r));
    }
    return canonical_module_form(rows);
}

bool ChainCtx::is_u_closed(const std::vector<ModuleRow>& rows) const {
    std::vector<ModuleRow> extended = rows;
    for (const auto& r : rows) extended.push_back(u_shift(r));
    return canonical_module_form(rows) == canonical_module_form(extended);
}

ChainElem make_omega(const Params& params, const ChainCtx& ctx, const Poly& cofactor) {
    const Field& F = params.F();
    const Poly p = p_pow(F, cofactor, 1u << (params.k - 1));
    return ctx.make(p_scale(F, p, params.alpha0));
}

}  // namespace chaincodes
