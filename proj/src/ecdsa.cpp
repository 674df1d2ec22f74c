// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0

#include <ethacct/ecdsa.hpp>

#include <openssl/evp.h>
#include <openssl/hmac.h>

#include <algorithm>
#include <cstring>

namespace ethacct::ecdsa
{
using secp256k1::FieldElement;

namespace
{
using Block = std::array<uint8_t, 32>;

Block hmac_sha256(const Block& key, std::initializer_list<BytesView> parts)
{
    Bytes msg;
    for (const auto& p : parts)
        msg.insert(msg.end(), p.begin(), p.end());
    Block out{};
    unsigned len = 0;
    if (HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()), msg.data(), msg.size(),
            out.data(), &len) == nullptr ||
        len != out.size())
        throw std::runtime_error{"HMAC-SHA256 failed"};
    return out;
}

/// RFC 6979 section 3.2 candidate generator for a 256-bit group order and SHA-256.
class NonceGenerator
{
public:
    NonceGenerator(const PrivateKey& key, const Digest256& digest)
    {
        const auto x = key.to_bytes();
        const auto h1 = Scalar::reduce(Uint256::from_be_bytes(digest)).value().to_be_bytes();
        v_.fill(0x01);
        k_.fill(0x00);
        static constexpr uint8_t zero = 0x00;
        static constexpr uint8_t one = 0x01;
        k_ = hmac_sha256(k_, {v_, {&zero, 1}, x, h1});
        v_ = hmac_sha256(k_, {v_});
        k_ = hmac_sha256(k_, {v_, {&one, 1}, x, h1});
        v_ = hmac_sha256(k_, {v_});
    }

    Scalar next()
    {
        for (;;)
        {
            if (!first_)
            {
                static constexpr uint8_t zero = 0x00;
                k_ = hmac_sha256(k_, {v_, {&zero, 1}});
                v_ = hmac_sha256(k_, {v_});
            }
            first_ = false;
            v_ = hmac_sha256(k_, {v_});
            const auto candidate = Uint256::from_be_bytes(v_);
            if (auto k = Scalar::from_canonical(candidate); k && !k->is_zero())
                return *k;
        }
    }

private:
    Block v_{};
    Block k_{};
    bool first_ = true;
};

Scalar digest_scalar(const Digest256& digest) noexcept
{
    return Scalar::reduce(Uint256::from_be_bytes(digest));
}
}  // namespace

PrivateKey PrivateKey::from_uint(const Uint256& value)
{
    const auto d = Scalar::from_canonical(value);
    if (!d || d->is_zero())
        throw KeyError{"private key out of range [1, n-1]"};
    return PrivateKey{*d};
}

PrivateKey PrivateKey::from_bytes(std::span<const uint8_t, 32> bytes)
{
    return from_uint(Uint256::from_be_bytes(bytes));
}

PrivateKey PrivateKey::from_hex(std::string_view text)
{
    Bytes raw;
    try
    {
        raw = ethacct::from_hex(text);
    }
    catch (const HexError& e)
    {
        throw KeyError{std::string{"private key: "} + e.what()};
    }
    if (raw.size() != 32)
        throw KeyError{"private key must be 32 bytes"};
    return from_bytes(std::span<const uint8_t, 32>{raw.data(), 32});
}

std::string PrivateKey::to_hex() const
{
    return ethacct::to_hex(to_bytes());
}

PublicKey PublicKey::from_point(const AffinePoint& p)
{
    if (p.infinity || !secp256k1::is_on_curve(p))
        throw KeyError{"public key is not a valid curve point"};
    return PublicKey{p};
}

PublicKey PublicKey::from_bytes(std::span<const uint8_t, 64> bytes)
{
    const auto x = FieldElement::from_canonical(Uint256::from_be_bytes(bytes.first<32>()));
    const auto y = FieldElement::from_canonical(Uint256::from_be_bytes(bytes.last<32>()));
    if (!x || !y)
        throw KeyError{"public key coordinate out of range"};
    return from_point({*x, *y, false});
}

std::array<uint8_t, 64> PublicKey::serialize() const noexcept
{
    std::array<uint8_t, 64> out{};
    const auto x = point_.x.value().to_be_bytes();
    const auto y = point_.y.value().to_be_bytes();
    std::copy(x.begin(), x.end(), out.begin());
    std::copy(y.begin(), y.end(), out.begin() + 32);
    return out;
}

PublicKey derive_public(const PrivateKey& key) noexcept
{
    // d in [1, n-1] never yields infinity.
    return PublicKey::from_point(secp256k1::scalar_mul_base(key.scalar()));
}

const Uint256& half_order() noexcept
{
    static const Uint256 half = Scalar::modulus() >> 1;
    return half;
}

void SystemEntropy::fill(std::span<uint8_t, 32> out)
{
    for (size_t i = 0; i < out.size(); i += 4)
    {
        const uint32_t w = device_();
        std::memcpy(out.data() + i, &w, 4);
    }
}

void SeededEntropy::fill(std::span<uint8_t, 32> out)
{
    for (size_t i = 0; i < out.size(); i += 8)
    {
        const uint64_t w = engine_();
        for (size_t b = 0; b < 8; ++b)
            out[i + b] = static_cast<uint8_t>(w >> (8 * b));
    }
}

void BufferEntropy::fill(std::span<uint8_t, 32> out)
{
    if (data_.size() - pos_ < out.size())
        throw EntropyExhausted{"entropy source exhausted"};
    std::copy_n(data_.begin() + static_cast<ptrdiff_t>(pos_), out.size(), out.begin());
    pos_ += out.size();
}

KeyPair keygen(EntropySource& entropy)
{
    std::array<uint8_t, 32> block{};
    for (;;)
    {
        entropy.fill(block);
        const auto candidate = Scalar::from_canonical(Uint256::from_be_bytes(block));
        if (!candidate || candidate->is_zero())
            continue;
        auto secret = PrivateKey::from_uint(candidate->value());
        std::fill(block.begin(), block.end(), 0);
        return {secret, derive_public(secret)};
    }
}

Scalar deterministic_nonce(const PrivateKey& key, const Digest256& digest, unsigned attempt)
{
    NonceGenerator gen{key, digest};
    auto k = gen.next();
    for (unsigned i = 0; i < attempt; ++i)
        k = gen.next();
    return k;
}

RecoverableSignature sign(const Digest256& digest, const PrivateKey& key)
{
    const auto e = digest_scalar(digest);
    NonceGenerator gen{key, digest};
    for (;;)
    {
        const auto k = gen.next();
        const auto big_r = secp256k1::scalar_mul_base(k);
        // x >= n cannot be expressed through a one-bit recovery id; draw the next nonce.
        const auto r = Scalar::from_canonical(big_r.x.value());
        if (!r || r->is_zero())
            continue;
        auto s = k.inverse() * (e + *r * key.scalar());
        if (s.is_zero())
            continue;
        uint8_t parity = big_r.y.is_odd() ? 1 : 0;
        if (s.value() > half_order())
        {
            s = -s;
            parity ^= 1;
        }
        return {*r, s, parity};
    }
}

bool verify(const Digest256& digest, const RecoverableSignature& sig, const PublicKey& pub) noexcept
{
    if (sig.r.is_zero() || sig.s.is_zero())
        return false;
    const auto w = sig.s.inverse();
    const auto u1 = digest_scalar(digest) * w;
    const auto u2 = sig.r * w;
    const auto x = secp256k1::double_scalar_mul(u2, pub.point(), u1);
    if (x.infinity)
        return false;
    return Scalar::reduce(x.x.value()) == sig.r;
}

PublicKey recover(const Digest256& digest, const RecoverableSignature& sig)
{
    if (sig.r.is_zero() || sig.s.is_zero())
        throw RecoveryError{"signature component is zero"};
    if (sig.y_parity > 1)
        throw RecoveryError{"recovery id must be 0 or 1"};

    const auto x = FieldElement::reduce(sig.r.value());
    const auto y = secp256k1::sqrt(x.square() * x + secp256k1::params().b);
    if (!y)
        throw RecoveryError{"r is not the x coordinate of a curve point"};
    const auto big_r = AffinePoint{x, y->is_odd() == (sig.y_parity == 1) ? *y : -*y, false};

    const auto r_inv = sig.r.inverse();
    const auto q = secp256k1::double_scalar_mul(sig.s * r_inv, big_r, -(digest_scalar(digest) * r_inv));
    if (q.infinity)
        throw RecoveryError{"recovered point is at infinity"};
    return PublicKey::from_point(q);
}
}  // namespace ethacct::ecdsa
