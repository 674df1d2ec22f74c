// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0

#include <ethacct/keccak.hpp>

#include <bit>
#include <cstring>

namespace ethacct
{
namespace
{
constexpr uint64_t round_constants[24] = {0x0000000000000001, 0x0000000000008082,
    0x800000000000808a, 0x8000000080008000, 0x000000000000808b, 0x0000000080000001,
    0x8000000080008081, 0x8000000000008009, 0x000000000000008a, 0x0000000000000088,
    0x0000000080008009, 0x000000008000000a, 0x000000008000808b, 0x800000000000008b,
    0x8000000000008089, 0x8000000000008003, 0x8000000000008002, 0x8000000000000080,
    0x000000000000800a, 0x800000008000000a, 0x8000000080008081, 0x8000000000008080,
    0x0000000080000001, 0x8000000080008008};

uint64_t load_le(const uint8_t* p) noexcept
{
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i)
        v = v << 8 | p[i];
    return v;
}

void absorb_block(std::array<uint64_t, 25>& state, const uint8_t* block) noexcept
{
    for (size_t i = 0; i < Keccak256::rate / 8; ++i)
        state[i] ^= load_le(block + 8 * i);
    keccakf1600(state);
}
}  // namespace

void keccakf1600(std::array<uint64_t, 25>& a) noexcept
{
    using std::rotl;
    for (const auto rc : round_constants)
    {
        // Theta.
        const uint64_t c0 = a[0] ^ a[5] ^ a[10] ^ a[15] ^ a[20];
        const uint64_t c1 = a[1] ^ a[6] ^ a[11] ^ a[16] ^ a[21];
        const uint64_t c2 = a[2] ^ a[7] ^ a[12] ^ a[17] ^ a[22];
        const uint64_t c3 = a[3] ^ a[8] ^ a[13] ^ a[18] ^ a[23];
        const uint64_t c4 = a[4] ^ a[9] ^ a[14] ^ a[19] ^ a[24];
        const uint64_t d0 = c4 ^ rotl(c1, 1);
        const uint64_t d1 = c0 ^ rotl(c2, 1);
        const uint64_t d2 = c1 ^ rotl(c3, 1);
        const uint64_t d3 = c2 ^ rotl(c4, 1);
        const uint64_t d4 = c3 ^ rotl(c0, 1);

        // Rho and pi: b[y][2x+3y] = rotl(a[x][y] ^ d[x], r[x][y]).
        const uint64_t b00 = a[0] ^ d0;
        const uint64_t b10 = rotl(a[6] ^ d1, 44);
        const uint64_t b20 = rotl(a[12] ^ d2, 43);
        const uint64_t b30 = rotl(a[18] ^ d3, 21);
        const uint64_t b40 = rotl(a[24] ^ d4, 14);
        const uint64_t b01 = rotl(a[3] ^ d3, 28);
        const uint64_t b11 = rotl(a[9] ^ d4, 20);
        const uint64_t b21 = rotl(a[10] ^ d0, 3);
        const uint64_t b31 = rotl(a[16] ^ d1, 45);
        const uint64_t b41 = rotl(a[22] ^ d2, 61);
        const uint64_t b02 = rotl(a[1] ^ d1, 1);
        const uint64_t b12 = rotl(a[7] ^ d2, 6);
        const uint64_t b22 = rotl(a[13] ^ d3, 25);
        const uint64_t b32 = rotl(a[19] ^ d4, 8);
        const uint64_t b42 = rotl(a[20] ^ d0, 18);
        const uint64_t b03 = rotl(a[4] ^ d4, 27);
        const uint64_t b13 = rotl(a[5] ^ d0, 36);
        const uint64_t b23 = rotl(a[11] ^ d1, 10);
        const uint64_t b33 = rotl(a[17] ^ d2, 15);
        const uint64_t b43 = rotl(a[23] ^ d3, 56);
        const uint64_t b04 = rotl(a[2] ^ d2, 62);
        const uint64_t b14 = rotl(a[8] ^ d3, 55);
        const uint64_t b24 = rotl(a[14] ^ d4, 39);
        const uint64_t b34 = rotl(a[15] ^ d0, 41);
        const uint64_t b44 = rotl(a[21] ^ d1, 2);

        // Chi, row by row; iota on lane 0.
        a[0] = b00 ^ (~b10 & b20) ^ rc;
        a[1] = b10 ^ (~b20 & b30);
        a[2] = b20 ^ (~b30 & b40);
        a[3] = b30 ^ (~b40 & b00);
        a[4] = b40 ^ (~b00 & b10);
        a[5] = b01 ^ (~b11 & b21);
        a[6] = b11 ^ (~b21 & b31);
        a[7] = b21 ^ (~b31 & b41);
        a[8] = b31 ^ (~b41 & b01);
        a[9] = b41 ^ (~b01 & b11);
        a[10] = b02 ^ (~b12 & b22);
        a[11] = b12 ^ (~b22 & b32);
        a[12] = b22 ^ (~b32 & b42);
        a[13] = b32 ^ (~b42 & b02);
        a[14] = b42 ^ (~b02 & b12);
        a[15] = b03 ^ (~b13 & b23);
        a[16] = b13 ^ (~b23 & b33);
        a[17] = b23 ^ (~b33 & b43);
        a[18] = b33 ^ (~b43 & b03);
        a[19] = b43 ^ (~b03 & b13);
        a[20] = b04 ^ (~b14 & b24);
        a[21] = b14 ^ (~b24 & b34);
        a[22] = b24 ^ (~b34 & b44);
        a[23] = b34 ^ (~b44 & b04);
        a[24] = b44 ^ (~b04 & b14);
    }
}

Keccak256& Keccak256::update(BytesView data) noexcept
{
    auto p = data.data();
    auto n = data.size();
    if (buffered_ != 0)
    {
        const size_t take = std::min(n, rate - buffered_);
        std::memcpy(buffer_.data() + buffered_, p, take);
        buffered_ += take;
        p += take;
        n -= take;
        if (buffered_ < rate)
            return *this;
        absorb_block(state_, buffer_.data());
        buffered_ = 0;
    }
    for (; n >= rate; p += rate, n -= rate)
        absorb_block(state_, p);
    if (n != 0)
    {
        std::memcpy(buffer_.data(), p, n);
        buffered_ = n;
    }
    return *this;
}

Digest256 Keccak256::finalize() noexcept
{
    std::memset(buffer_.data() + buffered_, 0, rate - buffered_);
    buffer_[buffered_] ^= 0x01;
    buffer_[rate - 1] ^= 0x80;
    absorb_block(state_, buffer_.data());

    Digest256 out;
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<uint8_t>(state_[i / 8] >> (8 * (i % 8)));

    state_ = {};
    buffered_ = 0;
    return out;
}

Digest256 keccak256(BytesView data) noexcept
{
    return Keccak256{}.update(data).finalize();
}
}  // namespace ethacct
