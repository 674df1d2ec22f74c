// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0

#include "helpers.hpp"

#include <ethacct/rlp.hpp>
#include <ethacct/transaction.hpp>

#include <gtest/gtest.h>

using namespace ethacct;

namespace
{
const nlohmann::json& eip155()
{
    static const nlohmann::json doc = [] {
        std::ifstream in{std::string{ETHACCT_GOLDEN_DIR} + "/eip155.json"};
        return nlohmann::json::parse(in);
    }();
    return doc;
}

LegacyTransaction reference_tx()
{
    LegacyTransaction tx;
    tx.nonce = 9;
    tx.gas_price = Uint256{20'000'000'000ULL};
    tx.gas_limit = 21000;
    tx.to = Address::from_hex("0x3535353535353535353535353535353535353535");
    tx.value = Uint256{1'000'000'000'000'000'000ULL};
    tx.chain_id = 1;
    return tx;
}

ecdsa::PrivateKey reference_key()
{
    return ecdsa::PrivateKey::from_hex(eip155()["private_key"].get<std::string>());
}

Uint256 boundary_u256(std::mt19937_64& rng)
{
    switch (rng() % 5)
    {
    case 0: return Uint256{};
    case 1: return Uint256{1};
    case 2: return Uint256{~uint64_t{0}};
    case 3: return uint256_max;
    default: return test::random_u256(rng);
    }
}
}  // namespace

TEST(transaction, eip155_reference)
{
    const auto& g = eip155();
    const auto tx = reference_tx();
    EXPECT_EQ(test::hex(signing_payload(tx)), g["signing_payload"].get<std::string>());
    EXPECT_EQ(test::hex(signing_hash(tx)), g["signing_hash"].get<std::string>());
    const auto raw = sign_transaction(tx, reference_key());
    EXPECT_EQ(test::hex(raw.bytes), g["raw"].get<std::string>());
    const auto stx = decode_raw(raw.bytes);
    EXPECT_EQ(stx.v, g["v"].get<uint64_t>());
    EXPECT_EQ(stx.r, Uint256::from_hex(g["r"].get<std::string>()));
    EXPECT_EQ(stx.s, Uint256::from_hex(g["s"].get<std::string>()));
    EXPECT_EQ(stx.body, tx);
    EXPECT_EQ(test::hex(recover_sender(stx).bytes), g["sender"].get<std::string>());
}

TEST(transaction, pipeline_composition)
{
    const auto tx = reference_tx();
    const auto key = reference_key();
    const auto payload = signing_payload(tx);
    const auto digest = keccak256(payload);
    const auto sig = ecdsa::sign(digest, key);
    const auto stx = attach_signature(tx, sig);
    EXPECT_EQ(stx.v, 35 + 2 * tx.chain_id + sig.y_parity);
    EXPECT_EQ(encode_signed(stx), sign_transaction(tx, key));
}

TEST(transaction, random_round_trip)
{
    std::mt19937_64 rng{41};
    const auto key = ecdsa::PrivateKey::from_uint(Uint256{99});
    const auto sender = rehydrate(key).address;
    for (int i = 0; i < 200; ++i)
    {
        LegacyTransaction tx;
        tx.nonce = rng() % 3 == 0 ? ~uint64_t{0} : rng() % 1000;
        tx.gas_price = boundary_u256(rng);
        tx.gas_limit = rng() % 2 ? 21000 : ~uint64_t{0};
        if (rng() % 4)
            tx.to = Address::from_bytes(test::random_bytes(rng, 20));
        tx.value = boundary_u256(rng);
        tx.data = test::random_bytes(rng, rng() % 80);
        tx.chain_id = rng() % 2 ? 1 : 1 + rng() % 100000;
        const auto raw = sign_transaction(tx, key);
        const auto stx = decode_raw(raw.bytes);
        ASSERT_EQ(stx.body, tx);
        ASSERT_EQ(encode_signed(stx), raw);
        ASSERT_EQ(recover_sender(stx), sender);
    }
}

TEST(transaction, decode_rejections)
{
    const auto raw = sign_transaction(reference_tx(), reference_key());
    auto items = rlp::decode(raw.bytes).list();

    auto expect_code = [](const rlp::Item::List& list, TxErrc code) {
        try
        {
            decode_raw(rlp::encode(list));
            ADD_FAILURE() << "decoded";
        }
        catch (const TxError& e)
        {
            EXPECT_EQ(e.code(), code);
        }
    };

    auto short_list = items;
    short_list.pop_back();
    expect_code(short_list, TxErrc::wrong_item_count);

    auto pre155 = items;
    pre155[6] = rlp::Item::uint(Uint256{27});
    expect_code(pre155, TxErrc::unsupported_format);

    auto high_s = items;
    high_s[8] = rlp::Item::uint(secp256k1::params().n - Uint256::from_hex(eip155()["s"].get<std::string>()));
    expect_code(high_s, TxErrc::high_s);

    auto zero_r = items;
    zero_r[7] = rlp::Item::uint(Uint256{});
    expect_code(zero_r, TxErrc::bad_signature);

    auto bad_to = items;
    bad_to[3] = Bytes(19, 0x35);
    expect_code(bad_to, TxErrc::bad_field);

    EXPECT_THROW(decode_raw(Bytes{0x01, 0x02}), std::exception);
}

TEST(transaction, single_field_tamper)
{
    std::mt19937_64 rng{42};
    const auto key = ecdsa::PrivateKey::from_uint(Uint256{1234567});
    const auto sender = rehydrate(key).address;
    for (int i = 0; i < 1000; ++i)
    {
        LegacyTransaction tx = reference_tx();
        tx.nonce = rng() % 100;
        tx.data = test::random_bytes(rng, rng() % 40);
        const auto stx = decode_raw(sign_transaction(tx, key).bytes);
        auto mutated = stx;
        switch (i % 4)
        {
        case 0: mutated.body.nonce += 1 + rng() % 5; break;
        case 1: mutated.body.to->bytes[rng() % 20] ^= static_cast<uint8_t>(1 + rng() % 255); break;
        case 2: mutated.body.value = mutated.body.value + Uint256{1 + rng() % 1000}; break;
        default:
            if (mutated.body.data.empty())
                mutated.body.data.push_back(static_cast<uint8_t>(rng()));
            else
                mutated.body.data[rng() % mutated.body.data.size()] ^= static_cast<uint8_t>(1 + rng() % 255);
        }
        try
        {
            ASSERT_NE(recover_sender(decode_raw(encode_signed(mutated).bytes)), sender);
        }
        catch (const std::exception&)
        {
            // rejection is an acceptable outcome
        }
    }
}

TEST(transaction, intrinsic_gas)
{
    EXPECT_EQ(intrinsic_gas({}), 21000u);
    EXPECT_EQ(intrinsic_gas(Bytes{0, 1, 0, 2}), 21000u + 4 + 16 + 4 + 16);
}

TEST(transaction, contract_creation_has_empty_to)
{
    auto tx = reference_tx();
    tx.to.reset();
    const auto stx = decode_raw(sign_transaction(tx, reference_key()).bytes);
    EXPECT_FALSE(stx.body.to.has_value());
}
