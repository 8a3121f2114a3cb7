#include "chaincodes/enumerator.hpp"

#include <stdexcept>

namespace chaincodes {

namespace {

int ceil_half(int v) { return (v + 1) / 2; }
int floor_half(int v) { return v / 2; }

// First s of family F2: 2^k (lambda - 1).
int omega_boundary(const Params& p) { return (1 << p.k) * (p.lambda - 1); }

}  // namespace

CodeSystem build_code_system(const Params& params, std::uint64_t seed) {
    CodeSystem sys{params, build_factor_data(params, seed), {}};
    sys.chains.reserve(sys.factors.size());
    for (std::size_t j = 0; j < sys.factors.size(); ++j) {
        sys.chains.emplace_back(params, sys.factors.factors[j].f, sys.factors.cofactors[j]);
    }
    return sys;
}

int h_digit_count(Family family, int s, int t, const Params& params) {
    switch (family) {
        case Family::F1:
        case Family::F2:
            return params.half_nilpotency() - ceil_half(s);
        case Family::F5:
        case Family::F6:
            return floor_half(t);
        default:
            return 0;
    }
}

IdealStream::IdealStream(const ChainCtx& ctx, const Params& params, int j) : ctx_(&ctx), j_(j) {
    const int e = params.nilpotency();
    const int B = omega_boundary(params);
    const int two_k = 1 << params.k;
    auto push = [&](Family fam, int s, int t) { slots_.push_back({fam, s, t, h_digit_count(fam, s, t, params)}); };

    for (int s = 0; s < B; ++s) push(Family::F1, s, 0);
    for (int s = B; s < e; ++s) push(Family::F2, s, 0);
    for (int s = 0; s <= e; ++s) push(Family::F3, s, 0);
    for (int s = 0; s <= e - 2; ++s) push(Family::F4, s, 1);
    for (int t = 2; t <= two_k; ++t) {
        for (int s = 0; s <= e - 1 - t; ++s) push(Family::F5, s, t);
    }
    for (int t = two_k + 1; t <= e - 1; ++t) {
        for (int s = 0; s <= e - 1 - t; ++s) push(Family::F6, s, t);
    }
    reset();
}

void IdealStream::reset() {
    slot_ = 0;
    fresh_slot_ = true;
    counter_.clear();
}

std::optional<IdealDescriptor> IdealStream::next() {
    const std::uint32_t q = ctx_->F().order();
    const int d = ctx_->d();
    while (slot_ < slots_.size()) {
        const Slot& sl = slots_[slot_];
        if (fresh_slot_) {
            counter_.assign(static_cast<std::size_t>(sl.h_digits * d), 0);
            fresh_slot_ = false;
        } else {
            // Odometer increment, position 0 fastest.
            std::size_t pos = 0;
            while (pos < counter_.size() && ++counter_[pos] == q) counter_[pos++] = 0;
            if (pos == counter_.size()) {
                ++slot_;
                fresh_slot_ = true;
                continue;
            }
        }
        std::vector<Poly> digits;
        digits.reserve(static_cast<std::size_t>(sl.h_digits));
        for (int i = 0; i < sl.h_digits; ++i) {
            std::vector<FieldElem> c(static_cast<std::size_t>(d));
            for (int b = 0; b < d; ++b) c[static_cast<std::size_t>(b)] = FieldElem{counter_[static_cast<std::size_t>(i * d + b)]};
            digits.emplace_back(std::move(c));
        }
        Poly h;
        for (std::size_t i = digits.size(); i-- > 0;) h = p_add(p_mul(ctx_->F(), h, ctx_->f()), digits[i]);
        return IdealDescriptor{j_, sl.family, sl.s, sl.t, std::move(h)};
    }
    return std::nullopt;
}

CodeStream::CodeStream(const CodeSystem& sys) : sys_(&sys) {
    for (std::size_t j = 0; j < sys.r(); ++j) streams_.emplace_back(sys.chains[j], sys.params, static_cast<int>(j));
}

std::optional<CodeDescriptor> CodeStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        for (auto& st : streams_) {
            auto d = st.next();
            if (!d) {
                done_ = true;
                return std::nullopt;
            }
            current_.push_back(std::move(*d));
        }
        return CodeDescriptor{current_};
    }
    for (std::size_t j = streams_.size(); j-- > 0;) {
        if (auto d = streams_[j].next()) {
            current_[j] = std::move(*d);
            return CodeDescriptor{current_};
        }
        streams_[j].reset();
        current_[j] = *streams_[j].next();
    }
    done_ = true;
    return std::nullopt;
}

std::uint64_t CodeStream::skip(std::uint64_t count) {
    std::uint64_t skipped = 0;
    while (skipped < count && next()) ++skipped;
    return skipped;
}

int ideal_size_exponent(const IdealDescriptor& desc, const Params& params) {
    const int e = params.nilpotency();
    switch (desc.family) {
        case Family::F1:
        case Family::F2:
            return e - desc.s;
        case Family::F3:
            return 2 * e - 2 * desc.s;
        case Family::F4:
            return 2 * e - 2 * desc.s - 1;
        case Family::F5:
        case Family::F6:
            return 2 * e - 2 * desc.s - desc.t;
    }
    throw std::logic_error("unknown family");
}

BigInt ideal_size(const IdealDescriptor& desc, const Params& params, int d) {
    return pow2(static_cast<unsigned>(params.m * d * ideal_size_exponent(desc, params)));
}

BigInt code_size(const CodeDescriptor& code, const CodeSystem& sys) {
    BigInt size = 1;
    for (const auto& c : code.components) {
        size *= ideal_size(c, sys.params, sys.chains[static_cast<std::size_t>(c.j)].d());
    }
    return size;
}

namespace {

// omega f^{2^{k-1}+s} + f^{offset} h, or just the h term when with_omega is false.
ChainElem leading_entry(const IdealDescriptor& desc, const ChainCtx& ctx, const Params& params, bool with_omega,
                        int offset) {
    ChainElem a = ctx.mul(ctx.pi_power(offset), ctx.make(desc.h));
    if (with_omega) a = ctx.add(a, ctx.mul(ctx.omega(), ctx.pi_power((1 << (params.k - 1)) + desc.s)));
    return a;
}

}  // namespace

std::vector<ExtElem> descriptor_generators(const IdealDescriptor& desc, const ChainCtx& ctx, const Params& params) {
    const int s = desc.s;
    const int t = desc.t;
    const int H = params.half_nilpotency();
    switch (desc.family) {
        case Family::F1:
            return {{leading_entry(desc, ctx, params, true, H + ceil_half(s)), ctx.pi_power(s)}};
        case Family::F2:
            return {{leading_entry(desc, ctx, params, false, H + ceil_half(s)), ctx.pi_power(s)}};
        case Family::F3:
            return {{ctx.pi_power(s), ctx.zero()}};
        case Family::F4:
            return {{ctx.zero(), ctx.pi_power(s)}, {ctx.pi_power(s + 1), ctx.zero()}};
        case Family::F5:
            return {{leading_entry(desc, ctx, params, false, s + ceil_half(t)), ctx.pi_power(s)},
                    {ctx.pi_power(s + t), ctx.zero()}};
        case Family::F6:
            return {{leading_entry(desc, ctx, params, true, s + ceil_half(t)), ctx.pi_power(s)},
                    {ctx.pi_power(s + t), ctx.zero()}};
    }
    throw std::logic_error("unknown family");
}

std::vector<ModuleRow> descriptor_matrix(const IdealDescriptor& desc, const ChainCtx& ctx, const Params& params) {
    if (desc.family == Family::F3) {
        return {{ctx.pi_power(desc.s), ctx.zero()}, {ctx.zero(), ctx.pi_power(desc.s)}};
    }
    std::vector<ModuleRow> rows;
    for (const auto& g : descriptor_generators(desc, ctx, params)) rows.emplace_back(g.c0, g.c1);
    return rows;
}

ModuleForm descriptor_form(const IdealDescriptor& desc, const ChainCtx& ctx, const Params& params) {
    return ctx.canonical_module_form(descriptor_matrix(desc, ctx, params));
}

bool ideal_membership_check(const IdealDescriptor& desc, const ChainCtx& ctx, const Params& params) {
    return ctx.is_u_closed(descriptor_matrix(desc, ctx, params));
}

BigInt count_ideals_sum(const BigInt& q, int k, int lambda) {
    const int H = (1 << (k - 1)) * lambda;
    BigInt total = 0;
    for (int i = 0; i <= H; ++i) total += (1 + 4 * i) * big_pow(q, static_cast<unsigned>(H - i));
    return total;
}

BigInt count_ideals_closed_form(const BigInt& q, int k, int lambda) {
    if (q < 2) throw std::invalid_argument("closed-form count needs q >= 2");
    const int H = (1 << (k - 1)) * lambda;
    const BigInt four_h = 4 * H;
    const BigInt num = (q + 3) * big_pow(q, static_cast<unsigned>(H + 1)) - q * (four_h + 5) + four_h + 1;
    const BigInt den = (q - 1) * (q - 1);
    if (num % den != 0) throw std::logic_error("closed-form count is not an integer");
    return num / den;
}

FamilyCounts count_ideals_by_family(const BigInt& q, int k, int lambda) {
    const int e = (1 << k) * lambda;
    const int H = e / 2;
    FamilyCounts fc;
    for (int s = 0; s <= e - 1; ++s) fc.principal += big_pow(q, static_cast<unsigned>(H - ceil_half(s)));
    fc.diagonal = e + 1;
    for (int t = 1; t <= e - 1; ++t) fc.two_gen += (e - t) * big_pow(q, static_cast<unsigned>(floor_half(t)));
    return fc;
}

CodeCount count_codes(const Params& params, const FactorData& fd) {
    CodeCount cc;
    cc.total = 1;
    for (const auto& fa : fd.factors) {
        const BigInt q = pow2(static_cast<unsigned>(params.m * fa.degree));
        BigInt sum = count_ideals_sum(q, params.k, params.lambda);
        BigInt closed = count_ideals_closed_form(q, params.k, params.lambda);
        if (sum != closed) throw std::logic_error("sum and closed-form ideal counts disagree");
        cc.total *= sum;
        cc.per_factor_sum.push_back(std::move(sum));
        cc.per_factor_closed.push_back(std::move(closed));
    }
    return cc;
}

BigInt count_submodules_length2(const BigInt& q, int e) {
    if (e < 1) throw std::invalid_argument("nilpotency index must be >= 1");
    BigInt total = 0;
    for (int i = 0; i <= e; ++i) total += (2 * i + 1) * big_pow(q, static_cast<unsigned>(e - i));
    return total;
}

}  // namespace chaincodes
