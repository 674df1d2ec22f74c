// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ethacct/curve.hpp>
#include <ethacct/keccak.hpp>

#include <array>
#include <memory>
#include <random>
#include <span>
#include <stdexcept>
#include <string_view>

/// ECDSA over secp256k1 with recoverable, low-s signatures.
namespace ethacct::ecdsa
{
using secp256k1::AffinePoint;
using secp256k1::Scalar;

class KeyError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class RecoveryError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class EntropyExhausted : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Secret scalar d in [1, n-1].
class PrivateKey
{
public:
    /// Throws KeyError unless 1 <= value <= n-1.
    static PrivateKey from_uint(const Uint256& value);
    static PrivateKey from_bytes(std::span<const uint8_t, 32> bytes);
    /// 64 hex digits, optional 0x prefix, surrounding whitespace tolerated.
    static PrivateKey from_hex(std::string_view text);

    const Scalar& scalar() const noexcept { return d_; }
    std::array<uint8_t, 32> to_bytes() const noexcept { return d_.value().to_be_bytes(); }
    /// 0x-prefixed, 64 lowercase digits.
    std::string to_hex() const;

    friend bool operator==(const PrivateKey&, const PrivateKey&) = default;

private:
    explicit PrivateKey(const Scalar& d) noexcept : d_{d} {}
    Scalar d_;
};

/// Q = d*G; serialized as the 64-byte x || y without any prefix byte.
class PublicKey
{
public:
    /// Throws KeyError for the point at infinity or a point off the curve.
    static PublicKey from_point(const AffinePoint& p);
    static PublicKey from_bytes(std::span<const uint8_t, 64> bytes);

    const AffinePoint& point() const noexcept { return point_; }
    std::array<uint8_t, 64> serialize() const noexcept;

    friend bool operator==(const PublicKey&, const PublicKey&) = default;

private:
    explicit PublicKey(const AffinePoint& p) noexcept : point_{p} {}
    AffinePoint point_;
};

PublicKey derive_public(const PrivateKey& key) noexcept;

struct RecoverableSignature
{
    Scalar r;
    Scalar s;
    uint8_t y_parity = 0;

    friend bool operator==(const RecoverableSignature&, const RecoverableSignature&) = default;
};

/// Half the group order; signatures produced here always have s <= n/2.
const Uint256& half_order() noexcept;

/// Source of uniformly random 32-byte blocks for key generation.
class EntropySource
{
public:
    virtual ~EntropySource() = default;
    /// Throws EntropyExhausted when no more randomness is available.
    virtual void fill(std::span<uint8_t, 32> out) = 0;
};

/// Operating-system randomness via std::random_device.
class SystemEntropy final : public EntropySource
{
public:
    void fill(std::span<uint8_t, 32> out) override;

private:
    std::random_device device_;
};

/// Reproducible pseudo-random stream for tests and benchmarks. Not for real keys.
class SeededEntropy final : public EntropySource
{
public:
    explicit SeededEntropy(uint64_t seed) : engine_{seed} {}
    void fill(std::span<uint8_t, 32> out) override;

private:
    std::mt19937_64 engine_;
};

/// Serves fixed bytes in 32-byte blocks, then throws EntropyExhausted.
class BufferEntropy final : public EntropySource
{
public:
    explicit BufferEntropy(Bytes data) : data_{std::move(data)} {}
    void fill(std::span<uint8_t, 32> out) override;

private:
    Bytes data_;
    size_t pos_ = 0;
};

struct KeyPair
{
    PrivateKey secret;
    PublicKey public_key;
};

/// Draws 32-byte candidates until one lies in [1, n-1].
KeyPair keygen(EntropySource& entropy);

/// Deterministic RFC 6979 nonce (HMAC-SHA256) for the given key and digest. `attempt`
/// selects the attempt-th acceptable candidate of the generator, starting at 0.
Scalar deterministic_nonce(const PrivateKey& key, const Digest256& digest, unsigned attempt = 0);

RecoverableSignature sign(const Digest256& digest, const PrivateKey& key);

bool verify(const Digest256& digest, const RecoverableSignature& sig, const PublicKey& pub) noexcept;

/// Reconstructs the signer's key from (r, s, y_parity). Throws RecoveryError.
PublicKey recover(const Digest256& digest, const RecoverableSignature& sig);
}  // namespace ethacct::ecdsa
