// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0

#include <ethacct/gateway.hpp>

#include <charconv>
#include <fstream>
#include <thread>

namespace ethacct
{
namespace
{
using steady = std::chrono::steady_clock;

double ns_since(steady::time_point start)
{
    return static_cast<double>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(steady::now() - start).count());
}

std::string_view trim(std::string_view s) noexcept
{
    constexpr std::string_view ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

uint64_t parse_u64(std::string_view key, std::string_view v)
{
    uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw std::invalid_argument{"config: '" + std::string{key} + "' must be an unsigned integer"};
    return out;
}
}  // namespace

wire::Message GatewaySession::exchange(
    const Bytes& frame, const std::function<bool(const wire::Message&)>& match)
{
    for (unsigned attempt = 1; attempt <= retry_.retries + 1; ++attempt)
    {
        if (attempt > 1)
            ++retransmissions_;
        link_.send(frame);

        const auto deadline = steady::now() + retry_.timeout;
        bool corrupt = false;
        while (!corrupt)
        {
            const auto now = steady::now();
            if (now >= deadline)
                break;
            const auto bytes =
                link_.receive(std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now) +
                              std::chrono::milliseconds{1});
            if (bytes.empty())
            {
                if (link_.closed())
                    throw GatewayError{GatewayErrc::link_closed, "link closed"};
                continue;
            }
            decoder_.push(bytes);
            while (auto event = decoder_.next())
            {
                const auto* f = std::get_if<wire::Frame>(&*event);
                if (f == nullptr)
                {
                    corrupt = true;
                    break;
                }
                wire::Message msg;
                try
                {
                    msg = wire::from_frame(*f);
                }
                catch (const wire::WireError& e)
                {
                    throw GatewayError{GatewayErrc::malformed_frame, e.what()};
                }
                if (match(msg))
                {
                    decoder_.reset();
                    return msg;
                }
                // Anything else is a late reply to an earlier attempt.
            }
        }
        if (corrupt)
            decoder_.reset();
        else if (attempt <= retry_.retries)
            std::this_thread::sleep_for(retry_.backoff_step * attempt);
    }
    throw GatewayError{GatewayErrc::timeout, "no valid reply after retry budget"};
}

uint64_t GatewaySession::bootstrap_nonce()
{
    const auto frame = wire::encode_message(wire::NonceQuery{account_.address});
    const auto reply = exchange(frame, [](const wire::Message& m) {
        return std::holds_alternative<wire::NonceReply>(m);
    });
    account_.next_nonce = std::get<wire::NonceReply>(reply).nonce;
    bootstrapped_ = true;
    return account_.next_nonce;
}

LegacyTransaction GatewaySession::build_transaction(BytesView data) const
{
    LegacyTransaction tx;
    tx.nonce = account_.next_nonce;
    tx.gas_price = template_.gas_price;
    tx.gas_limit = intrinsic_gas(data, template_.base_gas_limit);
    tx.to = template_.to;
    tx.value = template_.value;
    tx.data.assign(data.begin(), data.end());
    tx.chain_id = template_.chain_id;
    return tx;
}

wire::Ack GatewaySession::submit_one(BytesView data)
{
    if (!bootstrapped_)
        throw GatewayError{GatewayErrc::not_bootstrapped, "bootstrap_nonce must run first"};

    const auto tx = build_transaction(data);
    const auto raw = sign_transaction(tx, account_.secret);
    const auto frame = wire::encode_message(wire::SubmitRaw{raw.bytes});
    const auto reply = exchange(frame, [nonce = tx.nonce](const wire::Message& m) {
        const auto* ack = std::get_if<wire::Ack>(&m);
        return ack != nullptr && ack->nonce == nonce;
    });
    const auto ack = std::get<wire::Ack>(reply);
    if (ack.status == AckStatus::accepted)
        account_.next_nonce += 1;
    return ack;
}

StreamReport GatewaySession::run_stream(std::span<const Bytes> payloads, const StreamOptions& options)
{
    StreamReport report;
    const auto retransmissions_before = retransmissions_;
    auto finish = [&](std::string reason) {
        report.retransmissions = retransmissions_ - retransmissions_before;
        if (!report.latency_ns.empty())
            report.latency = bench::summarize(report.latency_ns);
        report.completed = reason.empty();
        report.halt_reason = std::move(reason);
        return report;
    };

    for (const auto& payload : payloads)
    {
        const auto start = steady::now();
        for (size_t stalls = 0;;)
        {
            wire::Ack ack;
            try
            {
                ack = submit_one(payload);
            }
            catch (const GatewayError& e)
            {
                return finish(e.what());
            }
            report.acks.push_back(ack);
            if (ack.status == AckStatus::accepted)
            {
                ++report.accepted;
                report.latency_ns.push_back(ns_since(start));
                break;
            }

            ++stalls;
            if (options.on_stall)
                options.on_stall(ack, stalls);
            if (stalls > options.max_stalls)
                return finish(std::string{"stalled on "} + wire::to_string(ack.status));

            switch (ack.status)
            {
            case AckStatus::nonce_too_low:
            case AckStatus::nonce_too_high_pending:
                try
                {
                    bootstrap_nonce();
                }
                catch (const GatewayError& e)
                {
                    return finish(e.what());
                }
                ++report.resyncs;
                break;
            case AckStatus::insufficient_balance:
                break;
            default:
                return finish(std::string{"rejected: "} + wire::to_string(ack.status));
            }
            if (options.stall_backoff.count() > 0)
                std::this_thread::sleep_for(options.stall_backoff);
        }
    }
    return finish({});
}

GatewayConfig parse_gateway_config(std::istream& in)
{
    GatewayConfig cfg;
    std::string line;
    bool have_recipient = false;
    while (std::getline(in, line))
    {
        auto view = trim(line);
        if (view.empty() || view.front() == '#')
            continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument{"config: expected key = value, got '" + std::string{view} + "'"};
        const auto key = trim(view.substr(0, eq));
        const auto value = trim(view.substr(eq + 1));

        if (key == "chain_id")
            cfg.tx.chain_id = parse_u64(key, value);
        else if (key == "recipient")
        {
            cfg.tx.to = Address::from_hex(value);
            have_recipient = true;
        }
        else if (key == "gas_price")
            cfg.tx.gas_price = Uint256::from_dec(value);
        else if (key == "gas_limit")
            cfg.tx.base_gas_limit = parse_u64(key, value);
        else if (key == "value")
            cfg.tx.value = Uint256::from_dec(value);
        else if (key == "timeout_ms")
            cfg.retry.timeout = std::chrono::milliseconds{parse_u64(key, value)};
        else if (key == "retries")
            cfg.retry.retries = static_cast<unsigned>(parse_u64(key, value));
        else if (key == "faucet_wei")
            cfg.faucet_wei = Uint256::from_dec(value);
        else if (key == "rpc_url")
            cfg.rpc_url = std::string{value};
        else
            throw std::invalid_argument{"config: unknown key '" + std::string{key} + "'"};
    }
    if (!have_recipient)
        throw std::invalid_argument{"config: 'recipient' is required"};
    return cfg;
}

GatewayConfig load_gateway_config(const std::string& path)
{
    std::ifstream in{path};
    if (!in)
        throw std::runtime_error{"cannot open config file " + path};
    return parse_gateway_config(in);
}

std::vector<Bytes> parse_payloads(std::istream& in)
{
    std::vector<Bytes> out;
    std::string line;
    while (std::getline(in, line))
    {
        const auto view = trim(line);
        if (view.empty() || view.front() == '#')
            continue;
        out.push_back(from_hex(view));
    }
    return out;
}
}  // namespace ethacct
