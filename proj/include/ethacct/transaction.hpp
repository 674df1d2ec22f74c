// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ethacct/account.hpp>
#include <ethacct/rlp.hpp>

#include <optional>
#include <stdexcept>

namespace ethacct
{
/// Legacy transaction body with EIP-155 replay protection.
struct LegacyTransaction
{
    uint64_t nonce = 0;
    Uint256 gas_price;
    uint64_t gas_limit = 0;
    std::optional<Address> to;  ///< Empty for contract creation.
    Uint256 value;
    Bytes data;
    uint64_t chain_id = 1;

    friend bool operator==(const LegacyTransaction&, const LegacyTransaction&) = default;
};

struct SignedTransaction
{
    LegacyTransaction body;
    Uint256 r;
    Uint256 s;
    uint64_t v = 0;

    /// Recovery bit carried in v = 35 + 2 * chain_id + y_parity.
    uint8_t y_parity() const noexcept { return static_cast<uint8_t>((v - 35) % 2); }

    friend bool operator==(const SignedTransaction&, const SignedTransaction&) = default;
};

/// The strict RLP bytes of the signed 9-tuple, as submitted to a node.
struct RawTransaction
{
    Bytes bytes;

    std::string to_hex() const { return ethacct::to_hex(bytes); }
    friend bool operator==(const RawTransaction&, const RawTransaction&) = default;
};

enum class TxErrc
{
    wrong_item_count,
    unsupported_format,  ///< v below 35: pre-EIP-155 or typed envelope
    bad_field,           ///< nested list, out-of-range integer or malformed `to`
    bad_signature,       ///< r or s outside [1, n-1]
    high_s,              ///< s above n/2
};

class TxError : public std::runtime_error
{
public:
    TxError(TxErrc code, const std::string& what) : std::runtime_error{what}, code_{code} {}
    TxErrc code() const noexcept { return code_; }

private:
    TxErrc code_;
};

/// RLP of (nonce, gasPrice, gasLimit, to, value, data, chainId, 0, 0): the r, s slots of the
/// unsigned form hold zero (empty strings) and chain id occupies the v slot.
Bytes signing_payload(const LegacyTransaction& tx);
Digest256 signing_hash(const LegacyTransaction& tx);

/// Embeds a recoverable signature: v = 35 + 2 * chain_id + y_parity.
SignedTransaction attach_signature(const LegacyTransaction& tx, const ecdsa::RecoverableSignature& sig);
RawTransaction encode_signed(const SignedTransaction& stx);

/// payload -> keccak256 -> sign -> embed v -> RLP.
RawTransaction sign_transaction(const LegacyTransaction& tx, const ecdsa::PrivateKey& key);

/// Strict decode. Throws rlp::Error or TxError.
SignedTransaction decode_raw(BytesView raw);

/// Recomputes the signing hash, recovers the public key and derives its address.
/// Throws ecdsa::RecoveryError.
Address recover_sender(const SignedTransaction& stx);

/// 21000 plus the calldata surcharge of 16 gas per non-zero and 4 per zero byte.
uint64_t intrinsic_gas(BytesView data, uint64_t base = 21000) noexcept;
}  // namespace ethacct
