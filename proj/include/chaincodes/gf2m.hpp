#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace chaincodes {

// Element of F_{2^m} in the polynomial basis {1, y, ..., y^{m-1}}; bit i is
// the coefficient of y^i.
struct FieldElem {
    std::uint32_t bits = 0;

    constexpr FieldElem() = default;
    constexpr explicit FieldElem(std::uint32_t b) : bits(b) {}

    constexpr bool is_zero() const { return bits == 0; }
    constexpr auto operator<=>(const FieldElem&) const = default;
};

inline constexpr FieldElem kZero{0};
inline constexpr FieldElem kOne{1};

// The field F_{2^m}, 1 <= m <= 16. Immutable after construction.
class Field {
public:
    static constexpr int kMaxDegree = 16;
    static constexpr int kTableDegreeLimit = 12;

    // Uses the built-in reduction polynomial for m unless one is given.
    // Throws std::invalid_argument for out-of-range m or a reducible or
    // wrong-degree reduction polynomial.
    explicit Field(int m, std::optional<std::uint32_t> reduction = std::nullopt);

    int degree() const { return m_; }
    std::uint32_t reduction() const { return reduction_; }
    std::uint32_t order() const { return 1u << m_; }
    bool has_tables() const { return !log_.empty(); }

    bool contains(FieldElem a) const { return a.bits < order(); }

    FieldElem add(FieldElem a, FieldElem b) const { return FieldElem{a.bits ^ b.bits}; }
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;
    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
    FieldElem pow(FieldElem a, std::uint64_t e) const;
    FieldElem square(FieldElem a) const { return mul(a, a); }

    // b with b^2 = a, computed as a^{2^{m-1}}.
    FieldElem sqrt(FieldElem a) const;

    // The unique d0 with d0^{2^k} = d. Throws on d = 0 or k < 1.
    FieldElem root_2k(FieldElem d, int k) const;

    // A generator of the multiplicative group (y itself for the built-in
    // primitive polynomials).
    FieldElem primitive_element() const { return primitive_; }

    static std::uint32_t builtin_reduction(int m);

private:
    FieldElem mul_slow(FieldElem a, FieldElem b) const;

    int m_;
    std::uint32_t reduction_;
    FieldElem primitive_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> antilog_;
};

// Irreducibility of a bit-encoded polynomial over F_2 (Rabin's test).
bool is_irreducible_gf2(std::uint64_t poly);

}  // namespace chaincodes
