#include "chaincodes/selfdual.hpp"

#include <map>
#include <stdexcept>

namespace chaincodes {

RPoly ring_poly(const AmbientRing& ring, const std::vector<UTerm>& terms) {
    std::vector<AmbientRing::Term> t;
    for (const auto& term : terms) {
        for (int i = 0; i <= term.p.degree(); ++i) t.push_back({i, term.u_power, term.p.coeff(i)});
    }
    return ring.from_terms(t);
}

BigInt self_dual_count_length4(int m) {
    const BigInt q = pow2(static_cast<unsigned>(m));
    return 1 + q + 2 * q * q;
}

namespace {

void require_length4(const Params& p) {
    if (p.n != 1 || p.k != 2 || p.lambda != 2 || p.delta != kOne) {
        throw std::invalid_argument("self-dual list requires n = 1, k = 2, lambda = 2, delta = 1");
    }
}

Poly x_plus_1_pow(const Field& F, int e) { return p_pow(F, Poly{1, 1}, static_cast<unsigned>(e)); }

}  // namespace

std::vector<SelfDualEntry> list_self_dual_length4(const CodeSystem& sys, const AmbientRing& ring) {
    const Params& p = sys.params;
    require_length4(p);
    const Field& F = p.F();
    const ChainCtx& ctx = sys.chains.at(0);

    std::map<ModuleForm, IdealDescriptor> by_form;
    IdealStream stream(ctx, p, 0);
    while (auto d = stream.next()) by_form.emplace(descriptor_form(*d, ctx, p), *d);

    const Poly y1 = x_plus_1_pow(F, 1);
    const Poly y2 = x_plus_1_pow(F, 2);
    const Poly y3 = x_plus_1_pow(F, 3);
    const std::uint32_t q = F.order();

    std::vector<std::pair<int, std::vector<RPoly>>> raw;
    raw.push_back({1, {ring_poly(ring, {{Poly::one(), 2}})}});
    for (std::uint32_t b0 = 0; b0 < q; ++b0) {
        raw.push_back({2,
                       {ring_poly(ring, {{Poly::constant(FieldElem{b0}), 2}, {y3, 1}}),
                        ring_poly(ring, {{y1, 2}})}});
    }
    for (std::uint32_t b2 = 0; b2 < q; ++b2) {
        for (std::uint32_t b1 = 0; b1 < q; ++b1) {
            const Poly h = p_add(Poly::constant(FieldElem{b1}), p_scale(F, y1, FieldElem{b2}));
            raw.push_back({3, {ring_poly(ring, {{h, 2}, {y2, 1}}), ring_poly(ring, {{y2, 2}})}});
        }
    }
    for (std::uint32_t b4 = 0; b4 < q; ++b4) {
        for (std::uint32_t b3 = 0; b3 < q; ++b3) {
            Poly h = Poly::constant(F.inv(p.alpha0));
            h = p_add(h, p_scale(F, y1, FieldElem{b3}));
            h = p_add(h, p_scale(F, y2, FieldElem{b4}));
            raw.push_back({4,
                           {ring_poly(ring, {{p_scale(F, y3, p.alpha0), 0}, {h, 2}, {y1, 1}}),
                            ring_poly(ring, {{y3, 2}})}});
        }
    }

    std::vector<SelfDualEntry> out;
    for (auto& [c, gens] : raw) {
        std::vector<ExtElem> ext;
        for (const auto& g : gens) {
            const AmbientElem a = ring.psi_inverse(g);
            ext.push_back({ctx.make(a.xi0), ctx.make(a.xi1)});
        }
        const auto it = by_form.find(ctx.ideal_form(ext));
        if (it == by_form.end()) throw std::logic_error("self-dual code has no enumerated descriptor");
        out.push_back({c, std::move(gens), it->second});
    }
    return out;
}

std::vector<std::vector<RPoly>> explicit_self_dual_list_m1(const AmbientRing& ring) {
    const Params& p = ring.params();
    require_length4(p);
    if (p.m != 1) throw std::invalid_argument("explicit list is for m = 1");
    const Field& F = p.F();
    const Poly one = Poly::one();
    const Poly x = Poly::x();
    const Poly y1 = x_plus_1_pow(F, 1);
    const Poly y2 = x_plus_1_pow(F, 2);
    const Poly y3 = x_plus_1_pow(F, 3);
    const Poly x2 = Poly{0, 0, 1};
    const Poly x2x1 = Poly{1, 1, 1};
    auto rp = [&](std::vector<UTerm> t) { return ring_poly(ring, t); };
    return {
        {rp({{one, 2}})},
        {rp({{y3, 1}}), rp({{y1, 2}})},
        {rp({{one, 2}, {y3, 1}}), rp({{y1, 2}})},
        {rp({{y2, 1}}), rp({{y2, 2}})},
        {rp({{one, 2}, {y2, 1}}), rp({{y2, 2}})},
        {rp({{y1, 2}, {y2, 1}}), rp({{y2, 2}})},
        {rp({{x, 2}, {y2, 1}}), rp({{y2, 2}})},
        {rp({{y3, 0}, {one, 2}, {y1, 1}}), rp({{y3, 2}})},
        {rp({{y3, 0}, {x, 2}, {y1, 1}}), rp({{y3, 2}})},
        {rp({{y3, 0}, {x2, 2}, {y1, 1}}), rp({{y3, 2}})},
        {rp({{y3, 0}, {x2x1, 2}, {y1, 1}}), rp({{y3, 2}})},
    };
}

}  // namespace chaincodes
