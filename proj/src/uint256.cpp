// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0

#include <ethacct/uint256.hpp>

#include <algorithm>
#include <stdexcept>

namespace ethacct
{
namespace
{
__extension__ typedef unsigned __int128 u128;

/// Divides in place by a small divisor, returning the remainder.
uint64_t div_small(Uint256& v, uint64_t divisor) noexcept
{
    u128 rem = 0;
    for (int i = 3; i >= 0; --i)
    {
        const u128 cur = (rem << 64) | v.limbs[i];
        v.limbs[i] = static_cast<uint64_t>(cur / divisor);
        rem = cur % divisor;
    }
    return static_cast<uint64_t>(rem);
}
}  // namespace

Uint256 Uint256::from_be_bytes(BytesView bytes)
{
    if (bytes.size() > 32)
        throw std::out_of_range{"integer wider than 256 bits"};
    Uint256 r;
    for (size_t i = 0; i < bytes.size(); ++i)
    {
        const size_t pos = bytes.size() - 1 - i;  // byte significance
        r.limbs[pos / 8] |= uint64_t{bytes[i]} << (8 * (pos % 8));
    }
    return r;
}

Uint256 Uint256::from_hex(std::string_view text)
{
    if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X'))
        text.remove_prefix(2);
    if (text.empty())
        throw HexError{"empty hex integer"};
    std::string padded(text.size() % 2, '0');
    padded += text;
    const auto bytes = ethacct::from_hex(padded);
    auto view = BytesView{bytes};
    while (!view.empty() && view.front() == 0)
        view = view.subspan(1);
    return from_be_bytes(view);
}

Uint256 Uint256::from_dec(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument{"empty decimal integer"};
    Uint256 r;
    for (const char c : text)
    {
        if (c < '0' || c > '9')
            throw std::invalid_argument{"invalid decimal digit"};
        auto scaled = checked_mul(r, 10);
        if (!scaled)
            throw std::out_of_range{"decimal integer exceeds 256 bits"};
        auto next = checked_add(*scaled, static_cast<uint64_t>(c - '0'));
        if (!next)
            throw std::out_of_range{"decimal integer exceeds 256 bits"};
        r = *next;
    }
    return r;
}

std::array<uint8_t, 32> Uint256::to_be_bytes() const noexcept
{
    std::array<uint8_t, 32> out{};
    for (size_t pos = 0; pos < 32; ++pos)
        out[31 - pos] = static_cast<uint8_t>(limbs[pos / 8] >> (8 * (pos % 8)));
    return out;
}

Bytes Uint256::to_minimal_bytes() const
{
    const auto full = to_be_bytes();
    const auto first = std::find_if(full.begin(), full.end(), [](uint8_t b) { return b != 0; });
    return Bytes(first, full.end());
}

std::string Uint256::to_dec() const
{
    if (is_zero())
        return "0";
    std::string out;
    Uint256 v = *this;
    while (!v.is_zero())
        out += static_cast<char>('0' + div_small(v, 10));
    std::reverse(out.begin(), out.end());
    return out;
}

std::string Uint256::to_hex() const
{
    auto s = ethacct::to_hex(to_minimal_bytes(), false);
    if (!s.empty() && s[0] == '0')
        s.erase(0, 1);
    return "0x" + (s.empty() ? std::string{"0"} : s);
}

unsigned Uint256::bit_length() const noexcept
{
    for (int i = 3; i >= 0; --i)
        if (limbs[i] != 0)
            return static_cast<unsigned>(64 * i + 64 - __builtin_clzll(limbs[i]));
    return 0;
}

Uint256 operator+(const Uint256& a, const Uint256& b) noexcept
{
    Uint256 r;
    uint64_t carry = 0;
    for (size_t i = 0; i < 4; ++i)
    {
        const u128 s = u128{a.limbs[i]} + b.limbs[i] + carry;
        r.limbs[i] = static_cast<uint64_t>(s);
        carry = static_cast<uint64_t>(s >> 64);
    }
    return r;
}

Uint256 operator-(const Uint256& a, const Uint256& b) noexcept
{
    Uint256 r;
    uint64_t borrow = 0;
    for (size_t i = 0; i < 4; ++i)
    {
        const u128 d = u128{a.limbs[i]} - b.limbs[i] - borrow;
        r.limbs[i] = static_cast<uint64_t>(d);
        borrow = static_cast<uint64_t>(d >> 64) & 1;
    }
    return r;
}

std::array<uint64_t, 8> mul_wide(const Uint256& a, const Uint256& b) noexcept
{
    std::array<uint64_t, 8> r{};
    for (size_t i = 0; i < 4; ++i)
    {
        uint64_t carry = 0;
        for (size_t j = 0; j < 4; ++j)
        {
            const u128 t = u128{a.limbs[i]} * b.limbs[j] + r[i + j] + carry;
            r[i + j] = static_cast<uint64_t>(t);
            carry = static_cast<uint64_t>(t >> 64);
        }
        r[i + 4] = carry;
    }
    return r;
}

Uint256 operator*(const Uint256& a, const Uint256& b) noexcept
{
    const auto w = mul_wide(a, b);
    return Uint256{w[3], w[2], w[1], w[0]};
}

Uint256 operator>>(const Uint256& a, unsigned shift) noexcept
{
    if (shift >= 256)
        return {};
    Uint256 r;
    const unsigned limb_shift = shift / 64;
    const unsigned bit_shift = shift % 64;
    for (unsigned i = 0; i + limb_shift < 4; ++i)
    {
        r.limbs[i] = a.limbs[i + limb_shift] >> bit_shift;
        if (bit_shift != 0 && i + limb_shift + 1 < 4)
            r.limbs[i] |= a.limbs[i + limb_shift + 1] << (64 - bit_shift);
    }
    return r;
}

std::optional<Uint256> checked_add(const Uint256& a, const Uint256& b) noexcept
{
    const auto r = a + b;
    if (r < a)
        return std::nullopt;
    return r;
}

std::optional<Uint256> checked_sub(const Uint256& a, const Uint256& b) noexcept
{
    if (b > a)
        return std::nullopt;
    return a - b;
}

std::optional<Uint256> checked_mul(const Uint256& a, const Uint256& b) noexcept
{
    const auto w = mul_wide(a, b);
    if ((w[4] | w[5] | w[6] | w[7]) != 0)
        return std::nullopt;
    return Uint256{w[3], w[2], w[1], w[0]};
}
}  // namespace ethacct
