// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ethacct
{
using Bytes = std::vector<uint8_t>;
using BytesView = std::span<const uint8_t>;

/// Thrown on malformed hexadecimal text.
class HexError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Lowercase hex, 0x-prefixed unless `prefix` is false.
std::string to_hex(BytesView bytes, bool prefix = true);

/// Parses hex with an optional 0x/0X prefix; either letter case. Surrounding whitespace is
/// ignored. An odd number of digits is an error.
Bytes from_hex(std::string_view text);

inline BytesView as_bytes(std::string_view s) noexcept
{
    return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}
}  // namespace ethacct
