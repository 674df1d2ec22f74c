// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ethacct/bytes.hpp>
#include <ethacct/uint256.hpp>

#include <json.hpp>

#include <array>
#include <fstream>
#include <random>
#include <string>

namespace ethacct::test
{
inline const nlohmann::json& golden()
{
    static const nlohmann::json doc = [] {
        std::ifstream in{std::string{ETHACCT_GOLDEN_DIR} + "/vectors.json"};
        return nlohmann::json::parse(in);
    }();
    return doc;
}

inline std::string hex(BytesView b)
{
    return to_hex(b, false);
}

inline Bytes random_bytes(std::mt19937_64& rng, size_t n)
{
    Bytes out(n);
    for (auto& b : out)
        b = static_cast<uint8_t>(rng());
    return out;
}

inline Uint256 random_u256(std::mt19937_64& rng)
{
    return Uint256{rng(), rng(), rng(), rng()};
}

inline std::array<uint8_t, 32> random_digest(std::mt19937_64& rng)
{
    std::array<uint8_t, 32> d{};
    for (auto& b : d)
        b = static_cast<uint8_t>(rng());
    return d;
}
}  // namespace ethacct::test
