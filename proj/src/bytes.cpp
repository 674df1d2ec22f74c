// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0

#include <ethacct/bytes.hpp>

namespace ethacct
{
namespace
{
int hex_digit(char c) noexcept
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}

std::string_view trim(std::string_view s) noexcept
{
    constexpr std::string_view ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}
}  // namespace

std::string to_hex(BytesView bytes, bool prefix)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2 + 2);
    if (prefix)
        out += "0x";
    for (const auto b : bytes)
    {
        out += digits[b >> 4];
        out += digits[b & 0xf];
    }
    return out;
}

Bytes from_hex(std::string_view text)
{
    text = trim(text);
    if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X'))
        text.remove_prefix(2);
    if (text.size() % 2 != 0)
        throw HexError{"hex string has odd length"};

    Bytes out(text.size() / 2);
    for (size_t i = 0; i < out.size(); ++i)
    {
        const int hi = hex_digit(text[2 * i]);
        const int lo = hex_digit(text[2 * i + 1]);
        if (hi < 0 || lo < 0)
            throw HexError{"invalid hex digit"};
        out[i] = static_cast<uint8_t>(hi << 4 | lo);
    }
    return out;
}
}  // namespace ethacct
