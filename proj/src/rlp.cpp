// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0

#include <ethacct/rlp.hpp>

namespace ethacct::rlp
{
namespace
{
constexpr uint8_t string_offset = 0x80;
constexpr uint8_t list_offset = 0xc0;
constexpr size_t short_limit = 55;

void append_length(Bytes& out, size_t len, uint8_t offset)
{
    if (len <= short_limit)
    {
        out.push_back(static_cast<uint8_t>(offset + len));
        return;
    }
    const auto be = Uint256{len}.to_minimal_bytes();
    out.push_back(static_cast<uint8_t>(offset + short_limit + be.size()));
    out.insert(out.end(), be.begin(), be.end());
}

void encode_into(Bytes& out, const Item& item, size_t depth, size_t max_depth)
{
    if (!item.is_list())
    {
        const auto& b = item.bytes();
        if (b.size() == 1 && b[0] < string_offset)
        {
            out.push_back(b[0]);
            return;
        }
        append_length(out, b.size(), string_offset);
        out.insert(out.end(), b.begin(), b.end());
        return;
    }

    if (depth >= max_depth)
        throw Error{Errc::depth_exceeded, "rlp: nesting exceeds depth limit"};
    Bytes payload;
    for (const auto& child : item.list())
        encode_into(payload, child, depth + 1, max_depth);
    append_length(out, payload.size(), list_offset);
    out.insert(out.end(), payload.begin(), payload.end());
}

struct Header
{
    bool list;
    size_t payload_offset;
    size_t payload_len;
};

/// Parses the prefix at the start of `in`, checking that the payload fits.
Header read_header(BytesView in)
{
    if (in.empty())
        throw Error{Errc::truncated, "rlp: empty input"};
    const uint8_t b = in[0];
    if (b < string_offset)
        return {false, 0, 1};

    const bool list = b >= list_offset;
    const uint8_t offset = list ? list_offset : string_offset;
    const size_t tag = b - offset;

    Header h{list, 1, tag};
    if (tag > short_limit)
    {
        const size_t len_of_len = tag - short_limit;
        if (in.size() < 1 + len_of_len)
            throw Error{Errc::truncated, "rlp: truncated length"};
        if (in[1] == 0)
            throw Error{Errc::non_canonical, "rlp: length has leading zero"};
        if (len_of_len > sizeof(size_t))
            throw Error{Errc::truncated, "rlp: length exceeds input"};
        size_t len = 0;
        for (size_t i = 0; i < len_of_len; ++i)
            len = len << 8 | in[1 + i];
        if (len <= short_limit)
            throw Error{Errc::non_canonical, "rlp: long form used for short payload"};
        h.payload_offset = 1 + len_of_len;
        h.payload_len = len;
    }
    if (in.size() - h.payload_offset < h.payload_len)
        throw Error{Errc::truncated, "rlp: payload exceeds input"};
    if (!list && h.payload_len == 1 && in[h.payload_offset] < string_offset)
        throw Error{Errc::non_canonical, "rlp: single byte below 0x80 must encode as itself"};
    return h;
}

/// Decodes one item from the front of `in`; returns it with the number of bytes consumed.
Item decode_one(BytesView in, size_t& consumed, size_t depth, size_t max_depth)
{
    const auto h = read_header(in);
    consumed = h.payload_offset + h.payload_len;
    const auto payload = in.subspan(h.payload_offset, h.payload_len);
    if (!h.list)
        return Bytes(payload.begin(), payload.end());

    if (depth >= max_depth)
        throw Error{Errc::depth_exceeded, "rlp: nesting exceeds depth limit"};
    Item::List items;
    for (size_t pos = 0; pos < payload.size();)
    {
        size_t used = 0;
        items.push_back(decode_one(payload.subspan(pos), used, depth + 1, max_depth));
        pos += used;
    }
    return items;
}
}  // namespace

const char* to_string(Errc e) noexcept
{
    switch (e)
    {
    case Errc::truncated:
        return "truncated";
    case Errc::non_canonical:
        return "non_canonical";
    case Errc::trailing_bytes:
        return "trailing_bytes";
    case Errc::depth_exceeded:
        return "depth_exceeded";
    }
    return "unknown";
}

Bytes encode(const Item& item, size_t max_depth)
{
    Bytes out;
    encode_into(out, item, 0, max_depth);
    return out;
}

Item decode(BytesView data, size_t max_depth)
{
    size_t used = 0;
    auto item = decode_one(data, used, 0, max_depth);
    if (used != data.size())
        throw Error{Errc::trailing_bytes, "rlp: trailing bytes after item"};
    return item;
}

Uint256 rlp_bytes_to_uint(BytesView bytes)
{
    if (!bytes.empty() && bytes[0] == 0)
        throw Error{Errc::non_canonical, "rlp: integer has leading zero byte"};
    return Uint256::from_be_bytes(bytes);
}
}  // namespace ethacct::rlp
