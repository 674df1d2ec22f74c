// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0

#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace ethacct;

TEST(uint256, hex_and_decimal_round_trip)
{
    const auto v = Uint256::from_dec("115792089237316195423570985008687907853269984665640564039457584007913129639935");
    EXPECT_EQ(v, uint256_max);
    EXPECT_EQ(v.to_hex(), "0x" + std::string(64, 'f'));
    EXPECT_EQ(Uint256{}.to_hex(), "0x0");
    EXPECT_EQ(Uint256{}.to_dec(), "0");
    EXPECT_EQ(Uint256::from_hex("0x0400").to_dec(), "1024");
    EXPECT_EQ(Uint256::from_hex("ABC"), Uint256{0xabc});
}

TEST(uint256, minimal_bytes)
{
    EXPECT_TRUE(Uint256{}.to_minimal_bytes().empty());
    EXPECT_EQ(Uint256{1024}.to_minimal_bytes(), (Bytes{0x04, 0x00}));
    EXPECT_EQ(uint256_max.to_minimal_bytes().size(), 32u);
}

TEST(uint256, rejects_bad_input)
{
    EXPECT_ANY_THROW(Uint256::from_dec(""));
    EXPECT_ANY_THROW(Uint256::from_dec("12a"));
    EXPECT_ANY_THROW(Uint256::from_dec(
        "115792089237316195423570985008687907853269984665640564039457584007913129639936"));
    EXPECT_ANY_THROW(Uint256::from_be_bytes(Bytes(33, 1)));
}

TEST(uint256, checked_arithmetic)
{
    EXPECT_FALSE(checked_add(uint256_max, Uint256{1}).has_value());
    EXPECT_FALSE(checked_sub(Uint256{1}, Uint256{2}).has_value());
    EXPECT_EQ(*checked_mul(Uint256{1ULL << 32}, Uint256{1ULL << 32}), (Uint256{0, 0, 1, 0}));
    EXPECT_FALSE(checked_mul(Uint256{0, 1, 0, 0}, Uint256{0, 1, 0, 0}).has_value());
    EXPECT_EQ(uint256_max + Uint256{1}, Uint256{});
}

TEST(uint256, random_decimal_round_trip)
{
    std::mt19937_64 rng{7};
    for (int i = 0; i < 200; ++i)
    {
        const auto v = test::random_u256(rng);
        EXPECT_EQ(Uint256::from_dec(v.to_dec()), v);
        EXPECT_EQ(Uint256::from_hex(v.to_hex()), v);
        EXPECT_EQ(Uint256::from_be_bytes(v.to_minimal_bytes()), v);
    }
}
