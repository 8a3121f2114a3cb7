#include "chaincodes/f2_linear.hpp"

#include <algorithm>

namespace chaincodes {

Bits Subspace::reduce(Bits v) const {
    for (const auto& b : basis_) {
        if (v.test(b.top())) v ^= b;
    }
    return v;
}

bool Subspace::insert(Bits v) {
    v = reduce(v);
    const int p = v.top();
    if (p < 0) return false;
    // Keep the basis fully reduced: clear the new pivot from older rows.
    for (auto& b : basis_) {
        if (b.test(p)) b ^= v;
    }
    const auto pos = std::find_if(basis_.begin(), basis_.end(), [p](const Bits& b) { return b.top() < p; });
    basis_.insert(pos, v);
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    Subspace r = *this;
    for (const auto& b : other.basis_) r.insert(b);
    return r;
}

bool Subspace::is_subspace_of(const Subspace& other) const {
    return std::all_of(basis_.begin(), basis_.end(), [&](const Bits& b) { return other.contains(b); });
}

void Subspace::for_each_element(const std::function<void(const Bits&)>& fn) const {
    const std::size_t n = basis_.size();
    Bits cur;
    fn(cur);
    // Gray-code walk: one XOR per element.
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << n); ++i) {
        cur ^= basis_[static_cast<std::size_t>(std::countr_zero(i))];
        fn(cur);
    }
}

Subspace invariant_closure(Subspace start, const std::vector<LinearMap>& ops) {
    std::vector<Bits> queue(start.basis());
    while (!queue.empty()) {
        const Bits v = queue.back();
        queue.pop_back();
        for (const auto& op : ops) {
            const Bits w = op.apply(v);
            if (start.insert(w)) queue.push_back(w);
        }
    }
    return start;
}

Subspace invariant_closure(const std::vector<Bits>& gens, const std::vector<LinearMap>& ops) {
    Subspace s;
    for (const auto& g : gens) s.insert(g);
    return invariant_closure(std::move(s), ops);
}

}  // namespace chaincodes
