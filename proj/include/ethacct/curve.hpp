// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ethacct/uint256.hpp>

#include <optional>

/// secp256k1 field, scalar and group arithmetic.
namespace ethacct::secp256k1
{
namespace detail
{
/// Reduces a 512-bit value modulo m, where 2^256 = fold (mod m) and m > 2^255.
Uint256 reduce_wide(const std::array<uint64_t, 8>& t, const Uint256& m, const Uint256& fold) noexcept;
/// v mod m for v < 2m, without branching on v.
Uint256 reduce_once(const Uint256& v, const Uint256& m) noexcept;
Uint256 add_mod(const Uint256& a, const Uint256& b, const Uint256& m) noexcept;
Uint256 sub_mod(const Uint256& a, const Uint256& b, const Uint256& m) noexcept;

struct FieldTag
{
    static constexpr Uint256 modulus{0xFFFFFFFFFFFFFFFF, 0xFFFFFFFFFFFFFFFF, 0xFFFFFFFFFFFFFFFF,
        0xFFFFFFFEFFFFFC2F};
    static constexpr Uint256 fold{0x1000003D1};
};

struct ScalarTag
{
    static constexpr Uint256 modulus{0xFFFFFFFFFFFFFFFF, 0xFFFFFFFFFFFFFFFE, 0xBAAEDCE6AF48A03B,
        0xBFD25E8CD0364141};
    static constexpr Uint256 fold{0, 0x1, 0x4551231950B75FC4, 0x402DA1732FC9BEBF};
};
}  // namespace detail

/// Integer modulo a fixed 256-bit prime. The stored value is always fully reduced.
template <typename Tag>
class ModInt
{
public:
    static constexpr const Uint256& modulus() noexcept { return Tag::modulus; }

    constexpr ModInt() noexcept = default;

    /// Reduces any 256-bit value into [0, modulus).
    static ModInt reduce(const Uint256& v) noexcept
    {
        // 2*m > 2^256, so one conditional subtraction suffices.
        return ModInt{detail::reduce_once(v, Tag::modulus)};
    }
    /// Returns nullopt unless v < modulus.
    static std::optional<ModInt> from_canonical(const Uint256& v) noexcept
    {
        if (v >= Tag::modulus)
            return std::nullopt;
        return ModInt{v};
    }
    static ModInt from_u64(uint64_t v) noexcept { return ModInt{Uint256{v}}; }

    const Uint256& value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_.is_zero(); }
    bool is_odd() const noexcept { return value_.limbs[0] & 1; }

    friend ModInt operator+(const ModInt& a, const ModInt& b) noexcept
    {
        return ModInt{detail::add_mod(a.value_, b.value_, Tag::modulus)};
    }
    friend ModInt operator-(const ModInt& a, const ModInt& b) noexcept
    {
        return ModInt{detail::sub_mod(a.value_, b.value_, Tag::modulus)};
    }
    friend ModInt operator*(const ModInt& a, const ModInt& b) noexcept
    {
        return ModInt{detail::reduce_wide(mul_wide(a.value_, b.value_), Tag::modulus, Tag::fold)};
    }
    ModInt operator-() const noexcept { return ModInt{} - *this; }
    friend bool operator==(const ModInt&, const ModInt&) noexcept = default;

    ModInt square() const noexcept { return *this * *this; }

    /// this^e with a fixed square-and-multiply pattern over all 256 exponent bits.
    ModInt pow(const Uint256& e) const noexcept
    {
        ModInt result = from_u64(1);
        for (int i = 255; i >= 0; --i)
        {
            result = result.square();
            const ModInt with = result * *this;
            const uint64_t mask = 0 - static_cast<uint64_t>(e.bit(static_cast<unsigned>(i)));
            for (size_t l = 0; l < 4; ++l)
                result.value_.limbs[l] ^= (result.value_.limbs[l] ^ with.value_.limbs[l]) & mask;
        }
        return result;
    }

    /// Swaps a and b when mask is all ones; leaves them when mask is zero.
    static void conditional_swap(ModInt& a, ModInt& b, uint64_t mask) noexcept
    {
        for (size_t l = 0; l < 4; ++l)
        {
            const uint64_t t = (a.value_.limbs[l] ^ b.value_.limbs[l]) & mask;
            a.value_.limbs[l] ^= t;
            b.value_.limbs[l] ^= t;
        }
    }

    /// Multiplicative inverse by Fermat's little theorem; zero maps to zero.
    ModInt inverse() const noexcept { return pow(Tag::modulus - Uint256{2}); }

private:
    explicit constexpr ModInt(const Uint256& v) noexcept : value_{v} {}

    Uint256 value_{};
};

using FieldElement = ModInt<detail::FieldTag>;
using Scalar = ModInt<detail::ScalarTag>;

/// Square root in the base field (p = 3 mod 4), or nullopt for non-residues.
std::optional<FieldElement> sqrt(const FieldElement& a) noexcept;

/// Curve point in affine coordinates with an explicit point-at-infinity flag.
struct AffinePoint
{
    FieldElement x;
    FieldElement y;
    bool infinity = false;

    static AffinePoint at_infinity() noexcept { return {{}, {}, true}; }

    friend bool operator==(const AffinePoint& a, const AffinePoint& b) noexcept
    {
        if (a.infinity || b.infinity)
            return a.infinity == b.infinity;
        return a.x == b.x && a.y == b.y;
    }
};

/// Domain parameters (p, a, b, G, n, h). The cofactor never enters arithmetic.
struct CurveParams
{
    Uint256 p;
    FieldElement a;
    FieldElement b;
    AffinePoint g;
    Uint256 n;
    unsigned h;
};

const CurveParams& params() noexcept;
const AffinePoint& generator() noexcept;

/// Checks the constants: p's closed form, G on the curve, n*G = infinity.
bool self_check() noexcept;

bool is_on_curve(const AffinePoint& p) noexcept;
AffinePoint negate(const AffinePoint& p) noexcept;
AffinePoint point_add(const AffinePoint& p, const AffinePoint& q) noexcept;

/// k*P over a Montgomery ladder with complete addition formulas: the sequence of field
/// operations is independent of the bits of k.
AffinePoint scalar_mul(const Scalar& k, const AffinePoint& p) noexcept;
/// k*P for an arbitrary (unreduced) 256-bit k, same ladder.
AffinePoint multiply(const Uint256& k, const AffinePoint& p) noexcept;
AffinePoint scalar_mul_base(const Scalar& k) noexcept;
/// a*P + b*G.
AffinePoint double_scalar_mul(const Scalar& a, const AffinePoint& p, const Scalar& b) noexcept;
}  // namespace ethacct::secp256k1
