// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0

#include <ethacct/wire.hpp>

namespace ethacct::wire
{
namespace
{
void put_u64(Bytes& out, uint64_t v)
{
    for (int i = 7; i >= 0; --i)
        out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

uint64_t get_u64(BytesView in) noexcept
{
    uint64_t v = 0;
    for (const auto b : in.first(8))
        v = v << 8 | b;
    return v;
}

template <class... Ts>
struct overloaded : Ts...
{
    using Ts::operator()...;
};
}  // namespace

const char* to_string(AckStatus s) noexcept
{
    switch (s)
    {
    case AckStatus::accepted:
        return "accepted";
    case AckStatus::nonce_too_low:
        return "nonce_too_low";
    case AckStatus::nonce_too_high_pending:
        return "nonce_too_high_pending";
    case AckStatus::insufficient_balance:
        return "insufficient_balance";
    case AckStatus::invalid_signature:
        return "invalid_signature";
    case AckStatus::pool_full:
        return "pool_full";
    }
    return "unknown";
}

uint16_t crc16_ccitt(BytesView data) noexcept
{
    uint16_t crc = 0xFFFF;
    for (const auto b : data)
    {
        crc ^= static_cast<uint16_t>(b << 8);
        for (int i = 0; i < 8; ++i)
            crc = static_cast<uint16_t>(crc & 0x8000 ? (crc << 1) ^ 0x1021 : crc << 1);
    }
    return crc;
}

Bytes encode_frame(const Frame& frame)
{
    if (frame.payload.size() > max_payload)
        throw WireError{"frame payload exceeds 65535 bytes"};
    const auto len = static_cast<uint16_t>(frame.payload.size());

    Bytes out;
    out.reserve(frame.payload.size() + frame_overhead);
    out.push_back(frame_magic);
    out.push_back(frame.type);
    out.push_back(static_cast<uint8_t>(len >> 8));
    out.push_back(static_cast<uint8_t>(len));
    out.insert(out.end(), frame.payload.begin(), frame.payload.end());
    const auto crc = crc16_ccitt(BytesView{out}.subspan(1));
    out.push_back(static_cast<uint8_t>(crc >> 8));
    out.push_back(static_cast<uint8_t>(crc));
    return out;
}

void FrameDecoder::push(BytesView bytes)
{
    buffer_.insert(buffer_.end(), bytes.begin(), bytes.end());
}

std::optional<FrameDecoder::Event> FrameDecoder::next()
{
    while (!buffer_.empty() && buffer_.front() != frame_magic)
        buffer_.pop_front();
    if (buffer_.size() < 4)
        return std::nullopt;

    const size_t len = size_t{buffer_[2]} << 8 | buffer_[3];
    if (buffer_.size() < len + frame_overhead)
        return std::nullopt;

    const Bytes body(buffer_.begin() + 1, buffer_.begin() + static_cast<ptrdiff_t>(4 + len));
    const uint16_t crc = static_cast<uint16_t>(buffer_[4 + len] << 8 | buffer_[5 + len]);
    if (crc16_ccitt(body) != crc)
    {
        buffer_.pop_front();
        return Corrupt{};
    }
    buffer_.erase(buffer_.begin(), buffer_.begin() + static_cast<ptrdiff_t>(len + frame_overhead));
    return Frame{body[0], Bytes(body.begin() + 3, body.end())};
}

Frame to_frame(const Message& msg)
{
    return std::visit(
        overloaded{
            [](const NonceQuery& m) {
                return Frame{static_cast<uint8_t>(MsgType::nonce_query),
                    Bytes(m.address.bytes.begin(), m.address.bytes.end())};
            },
            [](const NonceReply& m) {
                Frame f{static_cast<uint8_t>(MsgType::nonce_reply), {}};
                put_u64(f.payload, m.nonce);
                return f;
            },
            [](const SubmitRaw& m) { return Frame{static_cast<uint8_t>(MsgType::submit_raw), m.raw}; },
            [](const Ack& m) {
                Frame f{static_cast<uint8_t>(MsgType::ack), {static_cast<uint8_t>(m.status)}};
                put_u64(f.payload, m.nonce);
                return f;
            },
        },
        msg);
}

Message from_frame(const Frame& frame)
{
    const auto& p = frame.payload;
    switch (static_cast<MsgType>(frame.type))
    {
    case MsgType::nonce_query:
        if (p.size() != 20)
            throw WireError{"NonceQuery payload must be 20 bytes"};
        return NonceQuery{Address::from_bytes(p)};
    case MsgType::nonce_reply:
        if (p.size() != 8)
            throw WireError{"NonceReply payload must be 8 bytes"};
        return NonceReply{get_u64(p)};
    case MsgType::submit_raw:
        return SubmitRaw{p};
    case MsgType::ack:
        if (p.size() != 9)
            throw WireError{"Ack payload must be 9 bytes"};
        if (p[0] > static_cast<uint8_t>(AckStatus::pool_full))
            throw WireError{"unknown Ack status"};
        return Ack{static_cast<AckStatus>(p[0]), get_u64(BytesView{p}.subspan(1))};
    }
    throw WireError{"unknown message type"};
}
}  // namespace ethacct::wire
