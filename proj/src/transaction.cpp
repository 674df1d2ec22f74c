// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0

#include <ethacct/transaction.hpp>

namespace ethacct
{
namespace
{
constexpr uint64_t eip155_offset = 35;

rlp::Item::List body_items(const LegacyTransaction& tx)
{
    return {
        rlp::Item::uint(tx.nonce),
        rlp::Item::uint(tx.gas_price),
        rlp::Item::uint(tx.gas_limit),
        tx.to ? rlp::Item{Bytes(tx.to->bytes.begin(), tx.to->bytes.end())} : rlp::Item{Bytes{}},
        rlp::Item::uint(tx.value),
        rlp::Item{tx.data},
    };
}

const Bytes& field_bytes(const rlp::Item& item, const char* name)
{
    if (item.is_list())
        throw TxError{TxErrc::bad_field, std::string{"transaction field '"} + name + "' is a list"};
    return item.bytes();
}

Uint256 field_uint(const rlp::Item& item, const char* name)
{
    const auto& b = field_bytes(item, name);
    if (b.size() > 32)
        throw TxError{TxErrc::bad_field, std::string{"transaction field '"} + name + "' exceeds 256 bits"};
    return rlp::rlp_bytes_to_uint(b);
}

uint64_t field_u64(const rlp::Item& item, const char* name)
{
    const auto v = field_uint(item, name);
    if (!v.fits_u64())
        throw TxError{TxErrc::bad_field, std::string{"transaction field '"} + name + "' exceeds 64 bits"};
    return v.limbs[0];
}
}  // namespace

Bytes signing_payload(const LegacyTransaction& tx)
{
    auto items = body_items(tx);
    items.emplace_back(rlp::Item::uint(tx.chain_id));
    items.emplace_back(Bytes{});
    items.emplace_back(Bytes{});
    return rlp::encode(items);
}

Digest256 signing_hash(const LegacyTransaction& tx)
{
    return keccak256(signing_payload(tx));
}

SignedTransaction attach_signature(const LegacyTransaction& tx, const ecdsa::RecoverableSignature& sig)
{
    return {tx, sig.r.value(), sig.s.value(), eip155_offset + 2 * tx.chain_id + sig.y_parity};
}

RawTransaction encode_signed(const SignedTransaction& stx)
{
    auto items = body_items(stx.body);
    items.emplace_back(rlp::Item::uint(stx.v));
    items.emplace_back(rlp::Item::uint(stx.r));
    items.emplace_back(rlp::Item::uint(stx.s));
    return {rlp::encode(items)};
}

RawTransaction sign_transaction(const LegacyTransaction& tx, const ecdsa::PrivateKey& key)
{
    const auto digest = keccak256(signing_payload(tx));
    return encode_signed(attach_signature(tx, ecdsa::sign(digest, key)));
}

SignedTransaction decode_raw(BytesView raw)
{
    const auto item = rlp::decode(raw);
    if (!item.is_list())
        throw TxError{TxErrc::unsupported_format, "raw transaction is not an RLP list"};
    const auto& f = item.list();
    if (f.size() != 9)
        throw TxError{TxErrc::wrong_item_count, "raw transaction must have 9 fields"};

    SignedTransaction stx;
    auto& body = stx.body;
    body.nonce = field_u64(f[0], "nonce");
    body.gas_price = field_uint(f[1], "gasPrice");
    body.gas_limit = field_u64(f[2], "gasLimit");
    const auto& to = field_bytes(f[3], "to");
    if (to.size() == 20)
        body.to = Address::from_bytes(to);
    else if (!to.empty())
        throw TxError{TxErrc::bad_field, "'to' must be empty or 20 bytes"};
    body.value = field_uint(f[4], "value");
    body.data = field_bytes(f[5], "data");

    stx.v = field_u64(f[6], "v");
    if (stx.v < eip155_offset)
        throw TxError{TxErrc::unsupported_format, "v below 35: not an EIP-155 transaction"};
    body.chain_id = (stx.v - eip155_offset) / 2;

    stx.r = field_uint(f[7], "r");
    stx.s = field_uint(f[8], "s");
    const auto& n = secp256k1::Scalar::modulus();
    if (stx.r.is_zero() || stx.r >= n || stx.s.is_zero() || stx.s >= n)
        throw TxError{TxErrc::bad_signature, "signature component out of range"};
    if (stx.s > ecdsa::half_order())
        throw TxError{TxErrc::high_s, "signature s above n/2"};
    return stx;
}

Address recover_sender(const SignedTransaction& stx)
{
    const auto r = secp256k1::Scalar::from_canonical(stx.r);
    const auto s = secp256k1::Scalar::from_canonical(stx.s);
    if (!r || !s || stx.v < eip155_offset)
        throw ecdsa::RecoveryError{"signature out of range"};
    const ecdsa::RecoverableSignature sig{*r, *s, stx.y_parity()};
    return derive_address(ecdsa::recover(signing_hash(stx.body), sig));
}

uint64_t intrinsic_gas(BytesView data, uint64_t base) noexcept
{
    uint64_t gas = base;
    for (const auto b : data)
        gas += b == 0 ? 4 : 16;
    return gas;
}
}  // namespace ethacct
