// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ethacct/bytes.hpp>
#include <ethacct/uint256.hpp>

#include <stdexcept>
#include <variant>
#include <vector>

/// Recursive Length Prefix serialization with strict (canonical-only) decoding.
namespace ethacct::rlp
{
inline constexpr size_t default_max_depth = 64;

enum class Errc
{
    truncated,       ///< Input ends before the declared length.
    non_canonical,   ///< A shorter encoding exists for the same item.
    trailing_bytes,  ///< Bytes left over after the top-level item.
    depth_exceeded,  ///< Nesting deeper than the configured limit.
};

const char* to_string(Errc e) noexcept;

class Error : public std::runtime_error
{
public:
    Error(Errc code, const std::string& what) : std::runtime_error{what}, code_{code} {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Either a byte string or a list of items.
class Item
{
public:
    using List = std::vector<Item>;

    Item() = default;
    Item(Bytes bytes) : value_{std::move(bytes)} {}  // NOLINT(implicit)
    Item(List list) : value_{std::move(list)} {}     // NOLINT(implicit)

    static Item string(std::string_view s) { return Bytes(s.begin(), s.end()); }
    static Item uint(const Uint256& v) { return v.to_minimal_bytes(); }

    bool is_list() const noexcept { return std::holds_alternative<List>(value_); }
    const Bytes& bytes() const { return std::get<Bytes>(value_); }
    const List& list() const { return std::get<List>(value_); }

    friend bool operator==(const Item&, const Item&) = default;

private:
    std::variant<Bytes, List> value_;
};

Bytes encode(const Item& item, size_t max_depth = default_max_depth);

/// Strict decode of exactly one item spanning the whole input.
Item decode(BytesView data, size_t max_depth = default_max_depth);

/// Minimal big-endian form of an integer; zero is the empty string.
inline Bytes uint_to_rlp_bytes(const Uint256& v)
{
    return v.to_minimal_bytes();
}

/// Inverse of uint_to_rlp_bytes. Leading zero bytes are non-canonical; more than
/// 32 bytes throws std::out_of_range.
Uint256 rlp_bytes_to_uint(BytesView bytes);
}  // namespace ethacct::rlp
