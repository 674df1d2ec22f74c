// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ethacct/bytes.hpp>

#include <array>
#include <cstdint>

namespace ethacct
{
using Digest256 = std::array<uint8_t, 32>;

/// Keccak-f[1600] permutation over 25 little-endian lanes.
void keccakf1600(std::array<uint64_t, 25>& state) noexcept;

/// Incremental Keccak-256: rate 1088 bits, capacity 512, original Keccak padding (0x01).
/// This is the Ethereum hash and differs from FIPS-202 SHA3-256 (padding 0x06).
class Keccak256
{
public:
    static constexpr size_t rate = 136;

    Keccak256& update(BytesView data) noexcept;
    /// Pads, squeezes and resets the hasher.
    Digest256 finalize() noexcept;

private:
    std::array<uint64_t, 25> state_{};
    std::array<uint8_t, rate> buffer_{};
    size_t buffered_ = 0;
};

Digest256 keccak256(BytesView data) noexcept;
}  // namespace ethacct
