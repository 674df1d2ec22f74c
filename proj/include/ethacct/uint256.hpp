// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ethacct/bytes.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ethacct
{
/// Fixed-width 256-bit unsigned integer. Limbs are stored least significant first.
/// Arithmetic operators wrap modulo 2^256; use the checked_* helpers where overflow matters.
struct Uint256
{
    std::array<uint64_t, 4> limbs{};

    constexpr Uint256() noexcept = default;
    constexpr Uint256(uint64_t v) noexcept : limbs{v, 0, 0, 0} {}  // NOLINT(implicit)
    constexpr Uint256(uint64_t l3, uint64_t l2, uint64_t l1, uint64_t l0) noexcept
      : limbs{l0, l1, l2, l3}
    {}

    /// Big-endian bytes, at most 32 of them (shorter inputs are left-padded).
    static Uint256 from_be_bytes(BytesView bytes);
    /// Hex text with optional 0x prefix, up to 64 digits; odd digit counts are accepted.
    static Uint256 from_hex(std::string_view text);
    /// Decimal digits; throws std::out_of_range above 2^256-1.
    static Uint256 from_dec(std::string_view text);

    std::array<uint8_t, 32> to_be_bytes() const noexcept;
    /// Minimal big-endian form: no leading zero bytes, zero is empty.
    Bytes to_minimal_bytes() const;
    std::string to_dec() const;
    /// 0x-prefixed lowercase, no leading zeros ("0x0" for zero).
    std::string to_hex() const;

    constexpr bool is_zero() const noexcept
    {
        return (limbs[0] | limbs[1] | limbs[2] | limbs[3]) == 0;
    }
    constexpr bool bit(unsigned i) const noexcept { return (limbs[i / 64] >> (i % 64)) & 1; }
    unsigned bit_length() const noexcept;
    /// True when the value fits in 64 bits.
    constexpr bool fits_u64() const noexcept { return (limbs[1] | limbs[2] | limbs[3]) == 0; }

    friend constexpr bool operator==(const Uint256&, const Uint256&) noexcept = default;
    friend constexpr std::strong_ordering operator<=>(const Uint256& a, const Uint256& b) noexcept
    {
        for (int i = 3; i >= 0; --i)
            if (a.limbs[i] != b.limbs[i])
                return a.limbs[i] <=> b.limbs[i];
        return std::strong_ordering::equal;
    }

    friend Uint256 operator+(const Uint256& a, const Uint256& b) noexcept;
    friend Uint256 operator-(const Uint256& a, const Uint256& b) noexcept;
    friend Uint256 operator*(const Uint256& a, const Uint256& b) noexcept;
    friend Uint256 operator>>(const Uint256& a, unsigned shift) noexcept;
};

/// Sum, or nullopt on overflow past 2^256-1.
std::optional<Uint256> checked_add(const Uint256& a, const Uint256& b) noexcept;
/// Difference, or nullopt when b > a.
std::optional<Uint256> checked_sub(const Uint256& a, const Uint256& b) noexcept;
/// Product, or nullopt on overflow past 2^256-1.
std::optional<Uint256> checked_mul(const Uint256& a, const Uint256& b) noexcept;

/// Full 512-bit product, least significant limb first.
std::array<uint64_t, 8> mul_wide(const Uint256& a, const Uint256& b) noexcept;

inline constexpr Uint256 uint256_max{~0ULL, ~0ULL, ~0ULL, ~0ULL};
}  // namespace ethacct
