// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0

#include <ethacct/curve.hpp>

namespace ethacct::secp256k1
{
namespace detail
{
namespace
{
__extension__ typedef unsigned __int128 u128;

/// a - b over 4 limbs; returns the borrow bit.
uint64_t sub_borrow(Uint256& out, const Uint256& a, const Uint256& b) noexcept
{
    uint64_t borrow = 0;
    for (size_t i = 0; i < 4; ++i)
    {
        const u128 d = u128{a.limbs[i]} - b.limbs[i] - borrow;
        out.limbs[i] = static_cast<uint64_t>(d);
        borrow = static_cast<uint64_t>(d >> 64) & 1;
    }
    return borrow;
}

Uint256 select(uint64_t mask, const Uint256& if_set, const Uint256& if_clear) noexcept
{
    Uint256 r;
    for (size_t i = 0; i < 4; ++i)
        r.limbs[i] = (if_set.limbs[i] & mask) | (if_clear.limbs[i] & ~mask);
    return r;
}
}  // namespace

Uint256 reduce_once(const Uint256& v, const Uint256& m) noexcept
{
    Uint256 d;
    const uint64_t borrow = sub_borrow(d, v, m);
    return select(0 - borrow, v, d);
}

Uint256 add_mod(const Uint256& a, const Uint256& b, const Uint256& m) noexcept
{
    Uint256 s;
    uint64_t carry = 0;
    for (size_t i = 0; i < 4; ++i)
    {
        const u128 t = u128{a.limbs[i]} + b.limbs[i] + carry;
        s.limbs[i] = static_cast<uint64_t>(t);
        carry = static_cast<uint64_t>(t >> 64);
    }
    Uint256 d;
    const uint64_t borrow = sub_borrow(d, s, m);
    // Keep the raw sum only when it neither overflowed nor reached m.
    return select(0 - ((carry ^ 1) & borrow), s, d);
}

Uint256 sub_mod(const Uint256& a, const Uint256& b, const Uint256& m) noexcept
{
    Uint256 d;
    const uint64_t borrow = sub_borrow(d, a, b);
    const Uint256 addend = select(0 - borrow, m, Uint256{});
    return d + addend;
}

Uint256 reduce_wide(const std::array<uint64_t, 8>& in, const Uint256& m, const Uint256& fold) noexcept
{
    size_t fold_len = 4;
    while (fold_len > 1 && fold.limbs[fold_len - 1] == 0)
        --fold_len;

    // Each pass rewrites t = lo + hi * fold; four passes bring any 512-bit value below 2^256
    // for fold < 2^130.
    std::array<uint64_t, 8> t = in;
    for (int pass = 0; pass < 4; ++pass)
    {
        std::array<uint64_t, 8> next{t[0], t[1], t[2], t[3], 0, 0, 0, 0};
        for (size_t i = 0; i < 4; ++i)
        {
            uint64_t carry = 0;
            for (size_t j = 0; j < fold_len; ++j)
            {
                const u128 p = u128{t[4 + i]} * fold.limbs[j] + next[i + j] + carry;
                next[i + j] = static_cast<uint64_t>(p);
                carry = static_cast<uint64_t>(p >> 64);
            }
            for (size_t k = i + fold_len; k < 8; ++k)
            {
                const u128 p = u128{next[k]} + carry;
                next[k] = static_cast<uint64_t>(p);
                carry = static_cast<uint64_t>(p >> 64);
            }
        }
        t = next;
    }
    return reduce_once(Uint256{t[3], t[2], t[1], t[0]}, m);
}
}  // namespace detail

std::optional<FieldElement> sqrt(const FieldElement& a) noexcept
{
    static const Uint256 exponent = (FieldElement::modulus() + Uint256{1}) >> 2;
    const auto root = a.pow(exponent);
    if (root.square() != a)
        return std::nullopt;
    return root;
}

namespace
{
FieldElement fe(const Uint256& v) noexcept
{
    return FieldElement::reduce(v);
}

/// Homogeneous projective point (X:Y:Z); the identity is (0:1:0).
struct Projective
{
    FieldElement x;
    FieldElement y = FieldElement::from_u64(1);
    FieldElement z;

    static Projective from_affine(const AffinePoint& p) noexcept
    {
        if (p.infinity)
            return {};
        return {p.x, p.y, FieldElement::from_u64(1)};
    }

    AffinePoint to_affine() const noexcept
    {
        if (z.is_zero())
            return AffinePoint::at_infinity();
        const auto zinv = z.inverse();
        return {x * zinv, y * zinv, false};
    }
};

const FieldElement b3 = FieldElement::from_u64(21);

// Complete addition for short Weierstrass curves with a = 0 (Renes, Costello, Batina 2016,
// algorithm 7). Valid for every pair of inputs including the identity and P = Q.
Projective add(const Projective& p, const Projective& q) noexcept
{
    auto t0 = p.x * q.x;
    auto t1 = p.y * q.y;
    auto t2 = p.z * q.z;
    auto t3 = p.x + p.y;
    auto t4 = q.x + q.y;
    t3 = t3 * t4;
    t4 = t0 + t1;
    t3 = t3 - t4;
    t4 = p.y + p.z;
    auto x3 = q.y + q.z;
    t4 = t4 * x3;
    x3 = t1 + t2;
    t4 = t4 - x3;
    x3 = p.x + p.z;
    auto y3 = q.x + q.z;
    x3 = x3 * y3;
    y3 = t0 + t2;
    y3 = x3 - y3;
    x3 = t0 + t0;
    t0 = x3 + t0;
    t2 = b3 * t2;
    auto z3 = t1 + t2;
    t1 = t1 - t2;
    y3 = b3 * y3;
    x3 = t4 * y3;
    t2 = t3 * t1;
    x3 = t2 - x3;
    y3 = y3 * t0;
    t1 = t1 * z3;
    y3 = t1 + y3;
    t0 = t0 * t3;
    z3 = z3 * t4;
    z3 = z3 + t0;
    return {x3, y3, z3};
}

// Doubling, algorithm 9 of the same reference.
Projective dbl(const Projective& p) noexcept
{
    auto t0 = p.y * p.y;
    auto z3 = t0 + t0;
    z3 = z3 + z3;
    z3 = z3 + z3;
    auto t1 = p.y * p.z;
    auto t2 = p.z * p.z;
    t2 = b3 * t2;
    auto x3 = t2 * z3;
    auto y3 = t0 + t2;
    z3 = t1 * z3;
    t1 = t2 + t2;
    t2 = t1 + t2;
    t0 = t0 - t2;
    y3 = t0 * y3;
    y3 = x3 + y3;
    t1 = p.x * p.y;
    x3 = t0 * t1;
    x3 = x3 + x3;
    return {x3, y3, z3};
}

void conditional_swap(Projective& a, Projective& b, uint64_t mask) noexcept
{
    FieldElement::conditional_swap(a.x, b.x, mask);
    FieldElement::conditional_swap(a.y, b.y, mask);
    FieldElement::conditional_swap(a.z, b.z, mask);
}

Projective ladder(const Uint256& k, const Projective& p) noexcept
{
    Projective r0;
    Projective r1 = p;
    for (int i = 255; i >= 0; --i)
    {
        const uint64_t mask = 0 - static_cast<uint64_t>(k.bit(static_cast<unsigned>(i)));
        conditional_swap(r0, r1, mask);
        r1 = add(r0, r1);
        r0 = dbl(r0);
        conditional_swap(r0, r1, mask);
    }
    return r0;
}
}  // namespace

const CurveParams& params() noexcept
{
    static const CurveParams curve{
        FieldElement::modulus(),
        FieldElement{},
        FieldElement::from_u64(7),
        AffinePoint{
            fe(Uint256{0x79BE667EF9DCBBAC, 0x55A06295CE870B07, 0x029BFCDB2DCE28D9, 0x59F2815B16F81798}),
            fe(Uint256{0x483ADA7726A3C465, 0x5DA4FBFC0E1108A8, 0xFD17B448A6855419, 0x9C47D08FFB10D4B8}),
            false},
        Scalar::modulus(),
        1,
    };
    return curve;
}

const AffinePoint& generator() noexcept
{
    return params().g;
}

bool self_check() noexcept
{
    const auto& c = params();
    const Uint256 expected_p =
        Uint256{} - (Uint256{1ULL << 32} + Uint256{1 << 9} + Uint256{1 << 8} + Uint256{1 << 7} +
                        Uint256{1 << 6} + Uint256{1 << 4} + Uint256{1});
    return c.p == expected_p && c.h == 1 && is_on_curve(c.g) && multiply(c.n, c.g).infinity;
}

bool is_on_curve(const AffinePoint& p) noexcept
{
    if (p.infinity)
        return true;
    return p.y.square() == p.x.square() * p.x + params().b;
}

AffinePoint negate(const AffinePoint& p) noexcept
{
    if (p.infinity)
        return p;
    return {p.x, -p.y, false};
}

AffinePoint point_add(const AffinePoint& p, const AffinePoint& q) noexcept
{
    return add(Projective::from_affine(p), Projective::from_affine(q)).to_affine();
}

AffinePoint multiply(const Uint256& k, const AffinePoint& p) noexcept
{
    return ladder(k, Projective::from_affine(p)).to_affine();
}

AffinePoint scalar_mul(const Scalar& k, const AffinePoint& p) noexcept
{
    return multiply(k.value(), p);
}

AffinePoint scalar_mul_base(const Scalar& k) noexcept
{
    return multiply(k.value(), generator());
}

AffinePoint double_scalar_mul(const Scalar& a, const AffinePoint& p, const Scalar& b) noexcept
{
    const auto ap = ladder(a.value(), Projective::from_affine(p));
    const auto bg = ladder(b.value(), Projective::from_affine(generator()));
    return add(ap, bg).to_affine();
}
}  // namespace ethacct::secp256k1
