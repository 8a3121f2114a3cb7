#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace chaincodes {

// Vector over F_2 of dimension at most 256.
class Bits {
public:
    static constexpr int kCapacity = 256;

    constexpr Bits() = default;

    bool test(int i) const { return (w_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u; }
    void set(int i) { w_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
    void flip(int i) { w_[static_cast<std::size_t>(i >> 6)] ^= std::uint64_t{1} << (i & 63); }

    bool any() const { return (w_[0] | w_[1] | w_[2] | w_[3]) != 0; }
    // Index of the highest set bit, -1 for zero.
    int top() const {
        for (int i = 3; i >= 0; --i) {
            if (w_[static_cast<std::size_t>(i)] != 0) {
                return i * 64 + 63 - std::countl_zero(w_[static_cast<std::size_t>(i)]);
            }
        }
        return -1;
    }

    Bits& operator^=(const Bits& o) {
        for (std::size_t i = 0; i < 4; ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }
    Bits operator&(const Bits& o) const {
        Bits r;
        for (std::size_t i = 0; i < 4; ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }
    int popcount() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    auto operator<=>(const Bits&) const = default;

    std::uint64_t word(int i) const { return w_[static_cast<std::size_t>(i)]; }

private:
    std::array<std::uint64_t, 4> w_{};
};

// F_2-linear map of F_2^dim given by the images of the unit vectors.
class LinearMap {
public:
    LinearMap() = default;
    explicit LinearMap(std::vector<Bits> columns) : cols_(std::move(columns)) {}

    Bits apply(const Bits& v) const {
        Bits r;
        for (std::size_t i = 0; i < cols_.size(); ++i) {
            if (v.test(static_cast<int>(i))) r ^= cols_[i];
        }
        return r;
    }
    std::size_t dim() const { return cols_.size(); }

private:
    std::vector<Bits> cols_;
};

// Subspace of F_2^dim kept in fully reduced row echelon form; the basis is
// sorted by decreasing pivot, so equal subspaces have identical bases.
class Subspace {
public:
    Subspace() = default;

    // Returns true if v was not already contained.
    bool insert(Bits v);
    bool contains(Bits v) const { return !reduce(v).any(); }
    Bits reduce(Bits v) const;

    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Bits>& basis() const { return basis_; }

    Subspace sum(const Subspace& other) const;
    bool is_subspace_of(const Subspace& other) const;

    // Calls fn for every element (2^dim of them).
    void for_each_element(const std::function<void(const Bits&)>& fn) const;

    auto operator<=>(const Subspace&) const = default;

private:
    std::vector<Bits> basis_;  // pivots strictly decreasing
};

// Smallest subspace containing gens and invariant under every operator.
Subspace invariant_closure(const std::vector<Bits>& gens, const std::vector<LinearMap>& ops);
Subspace invariant_closure(Subspace start, const std::vector<LinearMap>& ops);

}  // namespace chaincodes
