// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ethacct/ecdsa.hpp>

#include <array>
#include <compare>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace ethacct
{
/// 20-byte account address.
struct Address
{
    std::array<uint8_t, 20> bytes{};

    /// Exactly 20 bytes of hex, optional 0x prefix, either case.
    static Address from_hex(std::string_view text);
    static Address from_bytes(BytesView b);
    /// 0x-prefixed lowercase.
    std::string to_hex() const { return ethacct::to_hex(bytes); }

    friend auto operator<=>(const Address&, const Address&) = default;
};

/// Last 20 bytes of keccak256 over the 64-byte x || y serialization (no 0x04 prefix).
Address derive_address(const ecdsa::PublicKey& pub);

enum class FootprintForm
{
    full,     ///< secret, public key, address and nonce
    reduced,  ///< secret and nonce; everything else is recomputed
};

/// Persistent storage required by an account, in bytes.
constexpr size_t account_footprint(FootprintForm form) noexcept
{
    constexpr size_t secret = 32;
    constexpr size_t public_key = 64;
    constexpr size_t address = 20;
    constexpr size_t nonce = 8;
    return form == FootprintForm::full ? secret + public_key + address + nonce : secret + nonce;
}

struct AccountState
{
    ecdsa::PrivateKey secret;
    ecdsa::PublicKey public_key;
    Address address;
    uint64_t next_nonce = 0;
};

/// Recomputes the public key and address from the secret.
AccountState rehydrate(const ecdsa::PrivateKey& secret, uint64_t next_nonce = 0);

/// The reduced on-disk form: secret-key hex on the first line, optional decimal nonce on
/// the second.
struct AccountFile
{
    ecdsa::PrivateKey secret;
    std::optional<uint64_t> nonce;
};

AccountFile parse_account_file(std::string_view text);
std::string format_account_file(const AccountFile& file);
AccountFile load_account_file(const std::filesystem::path& path);
void save_account_file(const std::filesystem::path& path, const AccountFile& file);
}  // namespace ethacct
