// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ethacct/account.hpp>

#include <deque>
#include <optional>
#include <stdexcept>
#include <variant>

/// Framing and messages for the device <-> node byte link.
///
/// Frame layout, all integers big-endian:
///
///     0xAA | type (1) | payload length (2) | payload | CRC-16 (2)
///
/// The CRC is CRC-16/CCITT-FALSE (poly 0x1021, init 0xFFFF, no reflection, no xor-out)
/// computed over type || length || payload.
namespace ethacct::wire
{
inline constexpr uint8_t frame_magic = 0xAA;
inline constexpr size_t frame_overhead = 6;
inline constexpr size_t max_payload = 0xFFFF;

enum class MsgType : uint8_t
{
    nonce_query = 0x01,  ///< payload: 20-byte address
    nonce_reply = 0x02,  ///< payload: 8-byte nonce
    submit_raw = 0x03,   ///< payload: raw transaction bytes
    ack = 0x04,          ///< payload: status byte, 8-byte nonce
};

enum class AckStatus : uint8_t
{
    accepted = 0,
    nonce_too_low = 1,
    nonce_too_high_pending = 2,
    insufficient_balance = 3,
    invalid_signature = 4,
    pool_full = 5,  ///< pending pool for the sender is at capacity
};

const char* to_string(AckStatus s) noexcept;

class WireError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

uint16_t crc16_ccitt(BytesView data) noexcept;

struct Frame
{
    uint8_t type = 0;
    Bytes payload;

    friend bool operator==(const Frame&, const Frame&) = default;
};

/// Throws WireError when the payload exceeds 65535 bytes.
Bytes encode_frame(const Frame& frame);

/// Incremental frame parser. Bytes before a magic byte are skipped; a frame whose CRC
/// does not verify is reported once as corrupt and scanning resumes after its magic byte.
class FrameDecoder
{
public:
    struct Corrupt
    {};
    using Event = std::variant<Frame, Corrupt>;

    void push(BytesView bytes);
    /// Next complete event, or nullopt if more input is needed.
    std::optional<Event> next();
    void reset() noexcept { buffer_.clear(); }

private:
    std::deque<uint8_t> buffer_;
};

struct NonceQuery
{
    Address address;
    friend bool operator==(const NonceQuery&, const NonceQuery&) = default;
};

struct NonceReply
{
    uint64_t nonce = 0;
    friend bool operator==(const NonceReply&, const NonceReply&) = default;
};

struct SubmitRaw
{
    Bytes raw;
    friend bool operator==(const SubmitRaw&, const SubmitRaw&) = default;
};

struct Ack
{
    AckStatus status = AckStatus::accepted;
    uint64_t nonce = 0;  ///< echoes the submitted transaction's nonce
    friend bool operator==(const Ack&, const Ack&) = default;
};

using Message = std::variant<NonceQuery, NonceReply, SubmitRaw, Ack>;

Frame to_frame(const Message& msg);
/// Throws WireError on an unknown type or a payload of the wrong shape.
Message from_frame(const Frame& frame);

inline Bytes encode_message(const Message& msg)
{
    return encode_frame(to_frame(msg));
}
}  // namespace ethacct::wire
