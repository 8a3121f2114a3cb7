#include "chaincodes/ambient.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <set>
#include <thread>

namespace chaincodes {

AmbientRing::AmbientRing(const Params& params)
    : params_(params), N_(params.length()), U_(params.u_digits()) {
    const Field& Fd = F();
    const Poly base = p_add(Poly::monomial(kOne, params.n), Poly::constant(params.delta0));
    a_modulus_ = p_pow(Fd, base, static_cast<unsigned>(params.nilpotency()));
    a_u_square_ = p_scale(Fd, p_pow(Fd, base, 1u << params.k), Fd.inv(params.alpha));

    gamma_ = r_zero();
    gamma_[0] = params.delta;
    gamma_[2] = params.alpha;
    gamma_powers_.push_back(r_scalar(kOne));
    for (int l = 1; l < params.lambda; ++l) gamma_powers_.push_back(r_mul(gamma_powers_.back(), gamma_));

    const int D = f2_dim();
    if (D > Bits::kCapacity) return;
    auto build = [&](auto&& fn) {
        std::vector<Bits> cols;
        cols.reserve(static_cast<std::size_t>(D));
        for (int i = 0; i < D; ++i) {
            Bits v;
            v.set(i);
            cols.push_back(encode(fn(decode(v))));
        }
        return LinearMap(std::move(cols));
    };
    RPoly x = zero();
    RPoly u = zero();
    if (N_ > 1) {
        x.coeffs[1][0] = kOne;
    } else {
        x.coeffs[0] = gamma_;
    }
    u.coeffs[0][1] = kOne;
    ops_.push_back(build([&](const RPoly& a) { return mul(a, x); }));
    ops_.push_back(build([&](const RPoly& a) { return mul(a, u); }));
    if (params.m > 1) {
        const RElem g = r_scalar(Fd.primitive_element());
        ops_.push_back(build([&](const RPoly& a) { return scale(a, g); }));
    }
}

RElem AmbientRing::r_scalar(FieldElem c) const {
    RElem r = r_zero();
    r[0] = c;
    return r;
}

RElem AmbientRing::r_add(const RElem& a, const RElem& b) const {
    RElem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = FieldElem{a[i].bits ^ b[i].bits};
    return r;
}

RElem AmbientRing::r_mul(const RElem& a, const RElem& b) const {
    const Field& Fd = F();
    RElem r = r_zero();
    for (int i = 0; i < U_; ++i) {
        if (a[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j < U_; ++j) {
            const auto idx = static_cast<std::size_t>(i + j);
            r[idx] = Fd.add(r[idx], Fd.mul(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]));
        }
    }
    return r;
}

bool AmbientRing::r_is_zero(const RElem& a) const {
    return std::all_of(a.begin(), a.end(), [](FieldElem c) { return c.is_zero(); });
}

RPoly AmbientRing::zero() const { return RPoly{std::vector<RElem>(static_cast<std::size_t>(N_), r_zero())}; }

RPoly AmbientRing::one() const {
    RPoly r = zero();
    r.coeffs[0][0] = kOne;
    return r;
}

RPoly AmbientRing::add(const RPoly& a, const RPoly& b) const {
    RPoly r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = r_add(r.coeffs[i], b.coeffs[i]);
    return r;
}

RPoly AmbientRing::mul(const RPoly& a, const RPoly& b) const {
    RPoly r = zero();
    for (int i = 0; i < N_; ++i) {
        const RElem& ai = a.coeffs[static_cast<std::size_t>(i)];
        if (r_is_zero(ai)) continue;
        for (int j = 0; j < N_; ++j) {
            RElem t = r_mul(ai, b.coeffs[static_cast<std::size_t>(j)]);
            int pos = i + j;
            if (pos >= N_) {
                pos -= N_;
                t = r_mul(t, gamma_);
            }
            auto& slot = r.coeffs[static_cast<std::size_t>(pos)];
            slot = r_add(slot, t);
        }
    }
    return r;
}

RPoly AmbientRing::scale(const RPoly& a, const RElem& c) const {
    RPoly r = a;
    for (auto& x : r.coeffs) x = r_mul(x, c);
    return r;
}

RPoly AmbientRing::constacyclic_shift(const RPoly& a) const {
    RPoly r = zero();
    r.coeffs[0] = r_mul(gamma_, a.coeffs.back());
    for (int i = 1; i < N_; ++i) r.coeffs[static_cast<std::size_t>(i)] = a.coeffs[static_cast<std::size_t>(i - 1)];
    return r;
}

RElem AmbientRing::inner_product(const RPoly& a, const RPoly& b) const {
    RElem acc = r_zero();
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) acc = r_add(acc, r_mul(a.coeffs[i], b.coeffs[i]));
    return acc;
}

RPoly AmbientRing::from_terms(const std::vector<Term>& terms) const {
    RPoly r = zero();
    const RPoly x = [&] {
        RPoly t = zero();
        if (N_ > 1) {
            t.coeffs[1][0] = kOne;
        } else {
            t.coeffs[0] = gamma_;
        }
        return t;
    }();
    for (const auto& t : terms) {
        if (t.u_power >= U_ || t.coeff.is_zero()) continue;
        RPoly mono = zero();
        mono.coeffs[0][static_cast<std::size_t>(t.u_power)] = t.coeff;
        for (int i = 0; i < t.x_power; ++i) mono = mul(mono, x);
        r = add(r, mono);
    }
    return r;
}

AmbientElem AmbientRing::a_reduce(const AmbientElem& a) const {
    return {p_mod(F(), a.xi0, a_modulus_), p_mod(F(), a.xi1, a_modulus_)};
}

AmbientElem AmbientRing::a_add(const AmbientElem& a, const AmbientElem& b) const {
    return {p_add(a.xi0, b.xi0), p_add(a.xi1, b.xi1)};
}

AmbientElem AmbientRing::a_mul(const AmbientElem& a, const AmbientElem& b) const {
    const Field& Fd = F();
    const Poly& M = a_modulus_;
    const Poly x11 = p_mulmod(Fd, a.xi1, b.xi1, M);
    const Poly c0 = p_add(p_mulmod(Fd, a.xi0, b.xi0, M), p_mulmod(Fd, a_u_square_, x11, M));
    const Poly c1 = p_add(p_mulmod(Fd, a.xi0, b.xi1, M), p_mulmod(Fd, a.xi1, b.xi0, M));
    return {c0, c1};
}

RPoly AmbientRing::psi_lift(const AmbientElem& a) const {
    const Field& Fd = F();
    const AmbientElem red = a_reduce(a);
    RPoly r = zero();
    auto place = [&](const Poly& xi, int u_offset) {
        for (int i = 0; i <= xi.degree(); ++i) {
            const FieldElem c = xi.coeff(i);
            if (c.is_zero()) continue;
            const RElem& g = gamma_powers_[static_cast<std::size_t>(i / N_)];
            auto& slot = r.coeffs[static_cast<std::size_t>(i % N_)];
            for (int j = 0; j + u_offset < U_; ++j) {
                const auto idx = static_cast<std::size_t>(j + u_offset);
                slot[idx] = Fd.add(slot[idx], Fd.mul(c, g[static_cast<std::size_t>(j)]));
            }
        }
    };
    place(red.xi0, 0);
    place(red.xi1, 1);
    return r;
}

AmbientElem AmbientRing::psi_inverse(const RPoly& c) const {
    const Field& Fd = F();
    std::vector<Poly> u_pow{Poly::one()};
    for (int l = 1; l < params_.lambda; ++l) u_pow.push_back(p_mulmod(Fd, u_pow.back(), a_u_square_, a_modulus_));
    AmbientElem out;
    for (int i = 0; i < N_; ++i) {
        for (int j = 0; j < U_; ++j) {
            const FieldElem v = c.coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (v.is_zero()) continue;
            const Poly term = p_shift(p_scale(Fd, u_pow[static_cast<std::size_t>(j / 2)], v), i);
            Poly& dst = (j % 2 == 0) ? out.xi0 : out.xi1;
            dst = p_add(dst, term);
        }
    }
    return a_reduce(out);
}

void AmbientRing::require_linear() const {
    if (!linear_available()) {
        throw CapExceeded("ambient F_2-dimension " + std::to_string(f2_dim()) + " exceeds " +
                          std::to_string(Bits::kCapacity));
    }
}

Bits AmbientRing::encode(const RPoly& a) const {
    require_linear();
    const int m = params_.m;
    Bits v;
    for (int i = 0; i < N_; ++i) {
        for (int j = 0; j < U_; ++j) {
            const std::uint32_t bits = a.coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].bits;
            for (int b = 0; b < m; ++b) {
                if ((bits >> b) & 1u) v.set((i * U_ + j) * m + b);
            }
        }
    }
    return v;
}

RPoly AmbientRing::decode(const Bits& v) const {
    require_linear();
    const int m = params_.m;
    RPoly r = zero();
    for (int i = 0; i < N_; ++i) {
        for (int j = 0; j < U_; ++j) {
            std::uint32_t bits = 0;
            for (int b = 0; b < m; ++b) {
                if (v.test((i * U_ + j) * m + b)) bits |= 1u << b;
            }
            r.coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = FieldElem{bits};
        }
    }
    return r;
}

Subspace AmbientRing::ideal_of(const std::vector<RPoly>& gens) const {
    require_linear();
    std::vector<Bits> v;
    v.reserve(gens.size());
    for (const auto& g : gens) v.push_back(encode(g));
    return invariant_closure(v, ops_);
}

AmbientElem lift_component(const ExtElem& g, int j, const CodeSystem& sys, const AmbientRing& ring) {
    const Poly& eps = sys.factors.idempotents.at(static_cast<std::size_t>(j));
    const Field& Fd = ring.F();
    return {p_mulmod(Fd, eps, g.c0.rep, ring.a_modulus()), p_mulmod(Fd, eps, g.c1.rep, ring.a_modulus())};
}

Subspace code_ideal(const CodeDescriptor& code, const CodeSystem& sys, const AmbientRing& ring) {
    std::vector<RPoly> gens;
    for (const auto& c : code.components) {
        const ChainCtx& ctx = sys.chains.at(static_cast<std::size_t>(c.j));
        for (const auto& g : descriptor_generators(c, ctx, sys.params)) {
            gens.push_back(ring.psi_lift(lift_component(g, c.j, sys, ring)));
        }
    }
    return ring.ideal_of(gens);
}

std::vector<RPoly> materialize(const Subspace& ideal, const AmbientRing& ring, std::uint64_t cap) {
    if (ideal.dim() >= 64 || (std::uint64_t{1} << ideal.dim()) > cap) {
        throw CapExceeded("code has 2^" + std::to_string(ideal.dim()) + " words, above the materialization cap " +
                          std::to_string(cap));
    }
    std::vector<RPoly> words;
    words.reserve(std::size_t{1} << ideal.dim());
    ideal.for_each_element([&](const Bits& b) { words.push_back(ring.decode(b)); });
    return words;
}

std::vector<RPoly> materialize_code(const CodeDescriptor& code, const CodeSystem& sys, const AmbientRing& ring,
                                    std::uint64_t cap) {
    return materialize(code_ideal(code, sys, ring), ring, cap);
}

std::vector<Subspace> invariant_subspace_lattice(int dim, const std::vector<LinearMap>& ops, unsigned threads,
                                                 OracleStats* stats) {
    if (dim > 30) throw CapExceeded("dimension too large for exhaustive search");
    const std::uint64_t total = std::uint64_t{1} << dim;
    threads = std::max(1u, threads);

    std::set<Subspace> found;
    std::mutex mu;
    auto worker = [&](unsigned id) {
        std::set<Subspace> local;
        for (std::uint64_t v = id; v < total; v += threads) {
            Bits b;
            for (int i = 0; i < dim; ++i) {
                if ((v >> i) & 1u) b.set(i);
            }
            local.insert(invariant_closure(std::vector<Bits>{b}, ops));
        }
        const std::lock_guard<std::mutex> lock(mu);
        found.merge(local);
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    if (stats) stats->principal_ideals = found.size();

    // A sum of invariant subspaces is invariant, so no further closure is needed.
    std::vector<Subspace> all(found.begin(), found.end());
    std::vector<Subspace> fresh = all;
    std::size_t rounds = 0;
    while (!fresh.empty()) {
        ++rounds;
        std::vector<Subspace> next;
        for (const auto& a : fresh) {
            for (std::size_t i = 0; i < all.size(); ++i) {
                Subspace s = a.sum(all[i]);
                if (found.insert(s).second) next.push_back(std::move(s));
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        fresh = std::move(next);
    }
    if (stats) stats->sum_rounds = rounds;
    return {found.begin(), found.end()};
}

std::vector<Subspace> brute_force_ideals(const AmbientRing& ring, int dim_cap, unsigned threads,
                                         OracleStats* stats) {
    const int D = ring.f2_dim();
    if (D > dim_cap) {
        throw CapExceeded("ambient F_2-dimension " + std::to_string(D) + " exceeds the oracle cap " +
                          std::to_string(dim_cap));
    }
    return invariant_subspace_lattice(D, ring.ideal_operators(), threads, stats);
}

std::vector<Subspace> brute_force_submodules_length2(int m, int e, unsigned threads) {
    if (m < 1 || e < 1) throw std::invalid_argument("submodule oracle needs m >= 1 and e >= 1");
    const Field F(m);
    // Coordinate ((c * e) + i) * m + b: bit b of the pi^i digit of component c.
    const int D = 2 * e * m;
    auto coord = [&](int c, int i, int b) { return ((c * e) + i) * m + b; };
    std::vector<Bits> pi_cols;
    std::vector<Bits> scal_cols;
    for (int c = 0; c < 2; ++c) {
        for (int i = 0; i < e; ++i) {
            for (int b = 0; b < m; ++b) {
                Bits p;
                if (i + 1 < e) p.set(coord(c, i + 1, b));
                pi_cols.push_back(p);
                Bits s;
                const std::uint32_t img = F.mul(FieldElem{1u << b}, F.primitive_element()).bits;
                for (int bb = 0; bb < m; ++bb) {
                    if ((img >> bb) & 1u) s.set(coord(c, i, bb));
                }
                scal_cols.push_back(s);
            }
        }
    }
    std::vector<LinearMap> ops{LinearMap(std::move(pi_cols))};
    if (m > 1) ops.emplace_back(std::move(scal_cols));
    return invariant_subspace_lattice(D, ops, threads);
}

Subspace dual_code(const Subspace& code, const AmbientRing& ring) {
    const int D = ring.f2_dim();
    const int out_bits = ring.u_digits() * ring.params().m;
    std::vector<RPoly> units;
    units.reserve(static_cast<std::size_t>(D));
    for (int p = 0; p < D; ++p) {
        Bits e;
        e.set(p);
        units.push_back(ring.decode(e));
    }
    // Row (b, o): the F_2-functional a -> bit o of [a, b].
    Subspace constraints;
    for (const auto& b : code.basis()) {
        const RPoly bp = ring.decode(b);
        std::vector<Bits> rows(static_cast<std::size_t>(out_bits));
        for (int p = 0; p < D; ++p) {
            RPoly ip_in = ring.zero();
            ip_in.coeffs[0] = ring.inner_product(units[static_cast<std::size_t>(p)], bp);
            const Bits val = ring.encode(ip_in);
            for (int o = 0; o < out_bits; ++o) {
                if (val.test(o)) rows[static_cast<std::size_t>(o)].set(p);
            }
        }
        for (const auto& r : rows) constraints.insert(r);
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(D), false);
    for (const auto& r : constraints.basis()) is_pivot[static_cast<std::size_t>(r.top())] = true;
    Subspace dual;
    for (int f = 0; f < D; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Bits v;
        v.set(f);
        for (const auto& r : constraints.basis()) {
            if (r.test(f)) v.set(r.top());
        }
        dual.insert(v);
    }
    if (code.dim() + dual.dim() != D) throw std::logic_error("|C| |C^perp| != |R|^N");
    return dual;
}

bool is_self_dual(const Subspace& code, const AmbientRing& ring) { return dual_code(code, ring) == code; }

bool is_constacyclic(const Subspace& code, const AmbientRing& ring) {
    return std::all_of(code.basis().begin(), code.basis().end(), [&](const Bits& b) {
        return code.contains(ring.encode(ring.constacyclic_shift(ring.decode(b))));
    });
}

std::vector<RPoly> recover_generators(const Subspace& ideal, const AmbientRing& ring) {
    constexpr int kFullScanDim = 10;
    constexpr int kSamples = 1024;
    std::vector<Bits> candidates(ideal.basis());
    if (ideal.dim() <= kFullScanDim) {
        ideal.for_each_element([&](const Bits& b) {
            if (b.any()) candidates.push_back(b);
        });
    } else {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
        for (int i = 0; i < kSamples; ++i) {
            Bits b;
            for (const auto& v : ideal.basis()) {
                if (rng() & 1u) b ^= v;
            }
            candidates.push_back(b);
        }
    }
    std::vector<Subspace> principal;
    principal.reserve(candidates.size());
    for (const auto& c : candidates) principal.push_back(invariant_closure(std::vector<Bits>{c}, ring.ideal_operators()));
    std::vector<RPoly> gens;
    Subspace span;
    while (span != ideal) {
        std::size_t best = candidates.size();
        Subspace best_span;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (span.contains(candidates[i])) continue;
            Subspace s = span.sum(principal[i]);
            if (best == candidates.size() || s.dim() > best_span.dim()) {
                best = i;
                best_span = std::move(s);
            }
        }
        gens.push_back(ring.decode(candidates[best]));
        span = std::move(best_span);
    }
    return gens;
}

}  // namespace chaincodes
