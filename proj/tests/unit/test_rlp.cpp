// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0

#include "rlp_mutations.hpp"

#include <ethacct/rlp.hpp>

#include <gtest/gtest.h>

using namespace ethacct;
using rlp::Item;

namespace
{
rlp::Errc decode_error(BytesView data)
{
    try
    {
        rlp::decode(data);
    }
    catch (const rlp::Error& e)
    {
        return e.code();
    }
    ADD_FAILURE() << "decoded " << to_hex(data);
    return rlp::Errc::truncated;
}
}  // namespace

TEST(rlp, golden_vectors)
{
    const auto& g = test::golden();
    EXPECT_EQ(test::hex(rlp::encode(Item::List{Item::string("cat"), Item::string("dog")})),
        g["rlp_cat_dog"].get<std::string>());
    EXPECT_EQ(test::hex(rlp::encode(Item::uint(Uint256{1024}))), g["rlp_1024"].get<std::string>());
    const Item empty = Item::List{};
    const Item nested = Item::List{empty, Item::List{empty}, Item::List{empty, Item::List{empty}}};
    EXPECT_EQ(test::hex(rlp::encode(nested)), g["rlp_list_nested"].get<std::string>());
    EXPECT_EQ(rlp::decode(rlp::encode(nested)), nested);
}

TEST(rlp, single_bytes_and_empty)
{
    EXPECT_EQ(rlp::encode(Bytes{0x00}), (Bytes{0x00}));
    EXPECT_EQ(rlp::encode(Bytes{0x7f}), (Bytes{0x7f}));
    EXPECT_EQ(rlp::encode(Bytes{0x80}), (Bytes{0x81, 0x80}));
    EXPECT_EQ(rlp::encode(Bytes{}), (Bytes{0x80}));
    EXPECT_EQ(rlp::encode(Item::List{}), (Bytes{0xc0}));
    EXPECT_EQ(rlp::encode(Item::uint(Uint256{})), (Bytes{0x80}));
}

TEST(rlp, length_boundaries)
{
    const auto s55 = rlp::encode(Bytes(55, 'x'));
    const auto s56 = rlp::encode(Bytes(56, 'x'));
    EXPECT_EQ(s55.size(), 56u);
    EXPECT_EQ(s55[0], 0xb7);
    EXPECT_EQ(test::hex(BytesView{s55}.first(2)), test::golden()["rlp_str55"].get<std::string>());
    EXPECT_EQ(s56[0], 0xb8);
    EXPECT_EQ(s56[1], 56);
    EXPECT_EQ(test::hex(BytesView{s56}.first(3)), test::golden()["rlp_str56"].get<std::string>());

    // 55 single-byte items give a 55-byte list payload, 56 give 56.
    const auto l55 = rlp::encode(Item::List(55, Bytes{0x01}));
    const auto l56 = rlp::encode(Item::List(56, Bytes{0x01}));
    EXPECT_EQ(l55[0], 0xf7);
    EXPECT_EQ(l56[0], 0xf8);
    EXPECT_EQ(l56[1], 56);
    EXPECT_EQ(rlp::decode(l56).list().size(), 56u);
}

TEST(rlp, rejects_non_canonical)
{
    using E = rlp::Errc;
    EXPECT_EQ(decode_error(Bytes{0x81, 0x05}), E::non_canonical);        // single byte below 0x80
    EXPECT_EQ(decode_error(Bytes{0xb8, 0x05, 1, 2, 3, 4, 5}), E::non_canonical);  // long form for short
    EXPECT_EQ(decode_error(Bytes{0xb9, 0x00, 0x38}), E::non_canonical);  // leading zero length
    EXPECT_EQ(decode_error(Bytes{0xf8, 0x01, 0x01}), E::non_canonical);
    EXPECT_EQ(decode_error(Bytes{0x82, 0x01}), E::truncated);
    EXPECT_EQ(decode_error(Bytes{}), E::truncated);
    EXPECT_EQ(decode_error(Bytes{0x01, 0x02}), E::trailing_bytes);
    EXPECT_EQ(decode_error(Bytes{0xc2, 0x83, 0x01}), E::truncated);
    EXPECT_THROW(rlp::rlp_bytes_to_uint(Bytes{0x00, 0x01}), rlp::Error);
    EXPECT_EQ(rlp::rlp_bytes_to_uint(Bytes{0x04, 0x00}), Uint256{1024});
}

TEST(rlp, depth_limit)
{
    Item item = Item::List{};
    for (int i = 0; i < 70; ++i)
        item = Item::List{item};
    EXPECT_THROW(rlp::encode(item), rlp::Error);
    const Bytes deep = rlp::encode(item, 100);
    EXPECT_EQ(decode_error(deep), rlp::Errc::depth_exceeded);
    EXPECT_EQ(rlp::decode(deep, 100), item);
}

TEST(rlp, fuzzed_round_trip)
{
    std::mt19937_64 rng{21};
    for (int i = 0; i < 10000; ++i)
    {
        const auto item = test::random_rlp_item(rng, 4);
        const auto enc = rlp::encode(item);
        ASSERT_EQ(rlp::decode(enc), item) << to_hex(enc);
    }
}

TEST(rlp, length_byte_increase_never_accepts_non_canonical)
{
    // A larger length can shift item boundaries inside a list onto another canonical
    // encoding, so the mutated bytes must either be rejected or re-encode identically.
    std::mt19937_64 rng{22};
    size_t mutations = 0, rejected = 0;
    for (int i = 0; i < 500; ++i)
    {
        const auto enc = rlp::encode(test::random_rlp_item(rng, 3));
        std::vector<size_t> offsets;
        test::rlp_length_offsets(enc, 0, offsets);
        for (const auto off : offsets)
        {
            if (enc[off] == 0xff)
                continue;
            auto mutated = enc;
            ++mutated[off];
            ++mutations;
            try
            {
                ASSERT_EQ(rlp::encode(rlp::decode(mutated)), mutated) << to_hex(enc) << " @" << off;
            }
            catch (const rlp::Error&)
            {
                ++rejected;
            }
        }
    }
    EXPECT_GT(mutations, 1000u);
    EXPECT_GT(rejected, mutations * 8 / 10);
}

TEST(rlp, top_level_length_increase_rejected)
{
    std::mt19937_64 rng{23};
    for (int i = 0; i < 1000; ++i)
    {
        const auto enc = rlp::encode(test::random_rlp_item(rng, 3));
        std::vector<size_t> offsets;
        test::rlp_length_offsets(enc, 0, offsets);
        if (offsets.empty() || enc[offsets[0]] == 0xff)
            continue;
        auto mutated = enc;
        ++mutated[offsets[0]];
        ASSERT_THROW(rlp::decode(mutated), rlp::Error) << to_hex(enc);
    }
}

TEST(rlp, non_canonical_variants_rejected)
{
    std::mt19937_64 rng{24};
    size_t variants = 0;
    for (int i = 0; i < 1000; ++i)
    {
        const auto item = test::random_rlp_item(rng, 3);
        for (const auto& v : test::non_canonical_variants(item))
        {
            ++variants;
            ASSERT_NE(v, rlp::encode(item));
            ASSERT_EQ(decode_error(v), rlp::Errc::non_canonical) << to_hex(v);
        }
    }
    EXPECT_GT(variants, 2000u);
}
