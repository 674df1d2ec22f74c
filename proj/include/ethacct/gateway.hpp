// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ethacct/bench.hpp>
#include <ethacct/link.hpp>
#include <ethacct/transaction.hpp>
#include <ethacct/wire.hpp>

#include <chrono>
#include <functional>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>

namespace ethacct
{
using wire::AckStatus;

/// Ack timeout and retransmission budget. Attempt k (1-based) that times out waits
/// k * backoff_step before the next one.
struct RetryPolicy
{
    std::chrono::milliseconds timeout{2000};
    unsigned retries = 3;
    std::chrono::milliseconds backoff_step{100};
};

/// Fixed fields for every transaction the device produces.
struct TxTemplate
{
    Address to;
    Uint256 gas_price{20'000'000'000ULL};
    uint64_t base_gas_limit = 21000;  ///< the calldata surcharge is added per transaction
    Uint256 value;
    uint64_t chain_id = 3;
};

enum class GatewayErrc
{
    timeout,          ///< retry budget exhausted without a valid reply
    malformed_frame,  ///< a frame with a valid CRC but undecodable content
    link_closed,
    not_bootstrapped,
};

class GatewayError : public std::runtime_error
{
public:
    GatewayError(GatewayErrc code, const std::string& what) : std::runtime_error{what}, code_{code} {}
    GatewayErrc code() const noexcept { return code_; }

private:
    GatewayErrc code_;
};

struct StreamOptions
{
    /// Consecutive non-accepted Acks tolerated for one payload before the stream halts.
    size_t max_stalls = 8;
    /// Called after every non-accepted Ack with the running stall count (e.g. to wait for
    /// a balance refill).
    std::function<void(const wire::Ack&, size_t stalls)> on_stall;
    /// Pause before resubmitting after a stall.
    std::chrono::milliseconds stall_backoff{0};
};

struct StreamReport
{
    size_t accepted = 0;
    size_t retransmissions = 0;  ///< frames resent after a timeout or a corrupt reply
    size_t resyncs = 0;          ///< re-bootstraps triggered by nonce errors
    std::vector<wire::Ack> acks;  ///< every Ack received, in order
    std::vector<double> latency_ns;  ///< submit-to-accept time per accepted payload
    std::optional<bench::BenchStats> latency;
    bool completed = false;
    std::string halt_reason;
};

/// Device-side session: owns the account and keeps at most one transaction in flight.
class GatewaySession
{
public:
    GatewaySession(AccountState account, ByteLink& link, TxTemplate tx_template, RetryPolicy retry = {})
      : account_{std::move(account)}, link_{link}, template_{std::move(tx_template)}, retry_{retry}
    {}

    /// Asks the node for the sender's transaction count and adopts it as the next nonce.
    uint64_t bootstrap_nonce();

    /// Builds, signs and submits one transaction carrying `data`, then blocks for its Ack.
    /// The local nonce advances only when the Ack says accepted.
    wire::Ack submit_one(BytesView data);

    /// Sequential submit_one over `payloads`. Nonce errors trigger a re-bootstrap; an
    /// insufficient balance stalls on the same nonce. Link failures end the stream with a
    /// partial report instead of throwing.
    StreamReport run_stream(std::span<const Bytes> payloads, const StreamOptions& options = {});

    /// The transaction submit_one would send next for `data`.
    LegacyTransaction build_transaction(BytesView data) const;

    const AccountState& account() const noexcept { return account_; }
    /// Overrides the local nonce (resynchronization tests, restored state).
    void set_next_nonce(uint64_t nonce) noexcept { account_.next_nonce = nonce; }
    bool bootstrapped() const noexcept { return bootstrapped_; }
    size_t retransmissions() const noexcept { return retransmissions_; }

private:
    /// Sends `frame` and waits for a reply accepted by `match`, retransmitting the identical
    /// bytes on timeout or corruption.
    wire::Message exchange(const Bytes& frame, const std::function<bool(const wire::Message&)>& match);

    AccountState account_;
    ByteLink& link_;
    TxTemplate template_;
    RetryPolicy retry_;
    wire::FrameDecoder decoder_;
    bool bootstrapped_ = false;
    size_t retransmissions_ = 0;
};

/// Key-value gateway configuration:
///
///     # comment
///     chain_id = 3
///     recipient = 0x3535353535353535353535353535353535353535
///     gas_price = 20000000000
///     gas_limit = 21000
///     value = 0
///     timeout_ms = 2000
///     retries = 3
///     faucet_wei = 1000000000000000000   (in-process chain only)
///     rpc_url = http://127.0.0.1:8545     (relay to a real node instead)
///
/// Unknown keys and malformed values throw std::invalid_argument.
struct GatewayConfig
{
    TxTemplate tx;
    RetryPolicy retry;
    Uint256 faucet_wei;
    std::optional<std::string> rpc_url;
};

GatewayConfig parse_gateway_config(std::istream& in);
GatewayConfig load_gateway_config(const std::string& path);

/// Newline-delimited hex payloads; blank lines and '#' comments are skipped.
std::vector<Bytes> parse_payloads(std::istream& in);
}  // namespace ethacct
