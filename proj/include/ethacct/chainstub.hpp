// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ethacct/link.hpp>
#include <ethacct/transaction.hpp>
#include <ethacct/wire.hpp>

#include <map>
#include <mutex>
#include <stop_token>
#include <vector>

namespace ethacct
{
using wire::AckStatus;

struct Receipt
{
    AckStatus status = AckStatus::invalid_signature;
    uint64_t consumed_nonce = 0;  ///< the submitted transaction's nonce
    Uint256 new_balance;          ///< sender balance after processing

    friend bool operator==(const Receipt&, const Receipt&) = default;
};

/// What the bridge talks to: the in-process stub or a JSON-RPC relay.
class ChainBackend
{
public:
    virtual ~ChainBackend() = default;
    /// Accepted-transaction count (the next expected nonce) for `addr`.
    virtual uint64_t get_transaction_count(const Address& addr) = 0;
    /// Validates and applies a raw transaction. Malformed input is answered, not thrown.
    virtual Receipt submit_raw(BytesView raw) = 0;
};

/// Sequential validator with the nonce semantics of a real node: lower nonces are
/// discarded, higher ones wait in a bounded per-sender pool, and the expected nonce is
/// applied if the sender can pay gas_limit * gas_price + value (flat gas, burned).
/// All operations are serialized by an internal lock.
class ChainStub final : public ChainBackend
{
public:
    static constexpr uint64_t default_chain_id = 3;
    static constexpr size_t default_pending_limit = 64;

    struct AccountRecord
    {
        Uint256 balance;
        uint64_t nonce = 0;
    };

    struct LogEntry
    {
        Address sender;
        SignedTransaction tx;
        Digest256 hash;  ///< keccak256 of the raw bytes
    };

    explicit ChainStub(uint64_t chain_id = default_chain_id, size_t pending_limit = default_pending_limit)
      : chain_id_{chain_id}, pending_limit_{pending_limit}
    {}

    Receipt submit_raw(BytesView raw) override;
    uint64_t get_transaction_count(const Address& addr) override;

    /// Credits `amount`; saturates at 2^256-1 and reports it on std::clog. Returns the new
    /// balance.
    Uint256 faucet(const Address& addr, const Uint256& amount);

    uint64_t chain_id() const noexcept { return chain_id_; }
    Uint256 balance(const Address& addr) const;
    size_t pending_count(const Address& addr) const;
    std::vector<LogEntry> log() const;

    /// Sum of every account balance.
    Uint256 total_balances() const;
    /// Everything the faucet actually credited.
    Uint256 total_minted() const;
    /// Gas charges plus value sent to contract creation.
    Uint256 total_burned() const;

private:
    /// Applies a transaction whose nonce equals the sender's; false if it cannot pay.
    bool try_apply(const Address& sender, const SignedTransaction& stx, BytesView raw);
    void drain_pending(const Address& sender);

    struct Pending
    {
        SignedTransaction tx;
        Bytes raw;
    };

    uint64_t chain_id_;
    size_t pending_limit_;
    mutable std::mutex mutex_;
    std::map<Address, AccountRecord> accounts_;
    std::map<Address, std::map<uint64_t, Pending>> pending_;
    std::vector<LogEntry> log_;
    Uint256 minted_;
    Uint256 burned_;
};

/// Serves the framed protocol on the node side of a link against a backend.
/// An exact repeat of the previous SubmitRaw frame whose answer was `accepted` is answered
/// from cache, so device retransmissions stay idempotent.
class NodeService
{
public:
    NodeService(ChainBackend& backend, ByteLink& link) : backend_{backend}, link_{link} {}

    /// One receive cycle. Returns false once the link is closed and drained.
    bool poll(std::chrono::milliseconds timeout);
    /// Serves until stop is requested or the link closes.
    void run(std::stop_token stop);

    size_t replayed() const noexcept { return replayed_; }

private:
    void handle(const wire::Frame& frame);

    ChainBackend& backend_;
    ByteLink& link_;
    wire::FrameDecoder decoder_;
    wire::Frame last_request_;
    Bytes last_response_;
    size_t replayed_ = 0;
};
}  // namespace ethacct
