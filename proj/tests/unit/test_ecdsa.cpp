// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0

#include "helpers.hpp"

#include <ethacct/account.hpp>
#include <ethacct/ecdsa.hpp>

#include <gtest/gtest.h>

using namespace ethacct;
using namespace ethacct::ecdsa;

namespace
{
Digest256 to_digest(const std::string& hex)
{
    Digest256 d{};
    const auto b = from_hex(hex);
    std::copy(b.begin(), b.end(), d.begin());
    return d;
}
}  // namespace

TEST(ecdsa, golden_signatures)
{
    for (const auto& v : test::golden()["signatures"])
    {
        const auto key = PrivateKey::from_hex(v["d"].get<std::string>());
        const auto digest = to_digest(v["digest"].get<std::string>());
        const auto sig = sign(digest, key);
        EXPECT_EQ(test::hex(sig.r.value().to_be_bytes()), v["r"].get<std::string>());
        EXPECT_EQ(test::hex(sig.s.value().to_be_bytes()), v["s"].get<std::string>());
        EXPECT_EQ(sig.y_parity, v["parity"].get<int>());
        EXPECT_EQ(test::hex(derive_address(derive_public(key)).bytes), v["address"].get<std::string>());
    }
}

TEST(ecdsa, round_trip_random)
{
    std::mt19937_64 rng{31};
    SeededEntropy entropy{31};
    for (int i = 0; i < 200; ++i)
    {
        const auto pair = keygen(entropy);
        const auto digest = test::random_digest(rng);
        const auto sig = sign(digest, pair.secret);
        ASSERT_LE(sig.s.value(), half_order());
        ASSERT_TRUE(verify(digest, sig, pair.public_key));
        ASSERT_EQ(recover(digest, sig), pair.public_key);
    }
}

TEST(ecdsa, deterministic)
{
    const auto key = PrivateKey::from_uint(Uint256{42});
    Digest256 digest{};
    digest[0] = 7;
    EXPECT_EQ(sign(digest, key), sign(digest, key));
    EXPECT_EQ(deterministic_nonce(key, digest), deterministic_nonce(key, digest));
    EXPECT_NE(deterministic_nonce(key, digest, 0), deterministic_nonce(key, digest, 1));
}

TEST(ecdsa, verify_rejects_out_of_range)
{
    const auto key = PrivateKey::from_uint(Uint256{5});
    const auto pub = derive_public(key);
    Digest256 digest{};
    auto sig = sign(digest, key);
    auto bad = sig;
    bad.r = Scalar{};
    EXPECT_FALSE(verify(digest, bad, pub));
    bad = sig;
    bad.s = Scalar{};
    EXPECT_FALSE(verify(digest, bad, pub));
    bad = sig;
    bad.s = -sig.s;  // plain ECDSA accepts the high-s twin; the transaction codec rejects it
    EXPECT_TRUE(verify(digest, bad, pub));
    digest[31] = 1;
    EXPECT_FALSE(verify(digest, sig, pub));
}

TEST(ecdsa, recover_wrong_parity_gives_other_key)
{
    const auto key = PrivateKey::from_uint(Uint256{77});
    Digest256 digest{};
    digest[5] = 9;
    auto sig = sign(digest, key);
    sig.y_parity ^= 1;
    EXPECT_NE(recover(digest, sig), derive_public(key));
    sig.r = Scalar{};
    EXPECT_THROW(recover(digest, sig), RecoveryError);
}

TEST(ecdsa, private_key_validation)
{
    EXPECT_THROW(PrivateKey::from_uint(Uint256{}), KeyError);
    EXPECT_THROW(PrivateKey::from_uint(secp256k1::params().n), KeyError);
    EXPECT_THROW(PrivateKey::from_hex("0x1234"), KeyError);
    EXPECT_THROW(PrivateKey::from_hex("zz" + std::string(62, '0')), std::exception);
    const auto k = PrivateKey::from_hex("0x" + std::string(63, '0') + "1\n");
    EXPECT_EQ(k.scalar(), Scalar::from_u64(1));
    EXPECT_EQ(k.to_hex(), "0x" + std::string(63, '0') + "1");
}

TEST(ecdsa, keygen_rejection_sampling)
{
    // First candidate is zero, second is n (both invalid), third is 2.
    Bytes buffer(32, 0);
    const auto n = secp256k1::params().n.to_be_bytes();
    buffer.insert(buffer.end(), n.begin(), n.end());
    Bytes two(32, 0);
    two[31] = 2;
    buffer.insert(buffer.end(), two.begin(), two.end());
    BufferEntropy entropy{buffer};
    EXPECT_EQ(keygen(entropy).secret, PrivateKey::from_uint(Uint256{2}));
    EXPECT_THROW(keygen(entropy), EntropyExhausted);
}

TEST(ecdsa, public_key_serialization)
{
    const auto pub = derive_public(PrivateKey::from_uint(Uint256{1}));
    const auto ser = pub.serialize();
    EXPECT_EQ(PublicKey::from_bytes(ser), pub);
    auto bad = ser;
    bad[63] ^= 1;
    EXPECT_THROW(PublicKey::from_bytes(bad), KeyError);
}
