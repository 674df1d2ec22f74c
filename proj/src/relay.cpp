// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0

#include <ethacct/relay.hpp>

#include <httplib.h>

#include <algorithm>
#include <cctype>

namespace ethacct
{
struct JsonRpcClient::Impl
{
    Impl(const std::string& base, std::string p) : http{base}, path{std::move(p)} {}

    httplib::Client http;
    std::string path;
    uint64_t next_id = 1;
};

namespace
{
std::pair<std::string, std::string> split_url(const std::string& url)
{
    const auto scheme = url.find("://");
    if (scheme == std::string::npos)
        throw TransportError{"RPC URL must start with http://"};
    const auto slash = url.find('/', scheme + 3);
    if (slash == std::string::npos)
        return {url, "/"};
    return {url.substr(0, slash), url.substr(slash)};
}

uint64_t parse_quantity_u64(const nlohmann::json& v)
{
    if (!v.is_string())
        throw TransportError{"expected hex quantity"};
    const auto q = Uint256::from_hex(v.get<std::string>());
    if (!q.fits_u64())
        throw TransportError{"quantity exceeds 64 bits"};
    return q.limbs[0];
}
}  // namespace

JsonRpcClient::JsonRpcClient(const std::string& url)
{
    auto [base, path] = split_url(url);
    impl_ = std::make_unique<Impl>(base, path);
    impl_->http.set_connection_timeout(5);
    impl_->http.set_read_timeout(10);
}

JsonRpcClient::~JsonRpcClient() = default;
JsonRpcClient::JsonRpcClient(JsonRpcClient&&) noexcept = default;
JsonRpcClient& JsonRpcClient::operator=(JsonRpcClient&&) noexcept = default;

nlohmann::json JsonRpcClient::call(const std::string& method, nlohmann::json params)
{
    const nlohmann::json request = {
        {"jsonrpc", "2.0"},
        {"id", impl_->next_id++},
        {"method", method},
        {"params", std::move(params)},
    };
    const auto res = impl_->http.Post(impl_->path, request.dump(), "application/json");
    if (!res)
        throw TransportError{"HTTP request failed: " + httplib::to_string(res.error())};
    if (res->status != 200)
        throw TransportError{"HTTP status " + std::to_string(res->status)};

    nlohmann::json reply;
    try
    {
        reply = nlohmann::json::parse(res->body);
    }
    catch (const nlohmann::json::parse_error& e)
    {
        throw TransportError{std::string{"invalid JSON-RPC response: "} + e.what()};
    }
    if (!reply.is_object())
        throw TransportError{"JSON-RPC response is not an object"};
    if (const auto err = reply.find("error"); err != reply.end() && !err->is_null())
        throw RpcError{err->value("code", int64_t{0}), err->value("message", std::string{})};
    if (!reply.contains("result"))
        throw TransportError{"JSON-RPC response lacks a result"};
    return reply["result"];
}

std::string JsonRpcClient::send_raw_transaction(const std::string& raw_hex)
{
    const auto result = call("eth_sendRawTransaction", {raw_hex});
    if (!result.is_string())
        throw TransportError{"eth_sendRawTransaction result is not a string"};
    return result.get<std::string>();
}

uint64_t JsonRpcClient::get_transaction_count(const Address& addr)
{
    return parse_quantity_u64(call("eth_getTransactionCount", {addr.to_hex(), "pending"}));
}

Uint256 JsonRpcClient::get_balance(const Address& addr)
{
    const auto result = call("eth_getBalance", {addr.to_hex(), "latest"});
    if (!result.is_string())
        throw TransportError{"eth_getBalance result is not a string"};
    return Uint256::from_hex(result.get<std::string>());
}

uint64_t RelayBackend::get_transaction_count(const Address& addr)
{
    return client_.get_transaction_count(addr);
}

AckStatus RelayBackend::classify(const RpcError& e) noexcept
{
    std::string msg = e.what();
    std::transform(msg.begin(), msg.end(), msg.begin(), [](unsigned char c) { return std::tolower(c); });
    if (msg.find("nonce too low") != std::string::npos || msg.find("already known") != std::string::npos)
        return AckStatus::nonce_too_low;
    if (msg.find("nonce too high") != std::string::npos)
        return AckStatus::nonce_too_high_pending;
    if (msg.find("insufficient funds") != std::string::npos)
        return AckStatus::insufficient_balance;
    if (msg.find("txpool is full") != std::string::npos)
        return AckStatus::pool_full;
    return AckStatus::invalid_signature;
}

Receipt RelayBackend::submit_raw(BytesView raw)
{
    SignedTransaction stx;
    Address sender;
    try
    {
        stx = decode_raw(raw);
        sender = recover_sender(stx);
    }
    catch (const std::exception&)
    {
        return {AckStatus::invalid_signature, 0, {}};
    }

    Receipt receipt{AckStatus::accepted, stx.body.nonce, {}};
    try
    {
        client_.send_raw_transaction(to_hex(raw));
    }
    catch (const RpcError& e)
    {
        receipt.status = classify(e);
    }
    receipt.new_balance = client_.get_balance(sender);
    return receipt;
}
}  // namespace ethacct
