// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ethacct/chainstub.hpp>

#include <json.hpp>

#include <memory>
#include <stdexcept>
#include <string>

namespace ethacct
{
/// The node answered with a JSON-RPC error object.
class RpcError : public std::runtime_error
{
public:
    RpcError(int64_t code, const std::string& message)
      : std::runtime_error{message}, code_{code}
    {}
    int64_t code() const noexcept { return code_; }

private:
    int64_t code_;
};

/// HTTP failure or a response that is not JSON-RPC 2.0.
class TransportError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Minimal JSON-RPC 2.0 client over HTTP POST.
class JsonRpcClient
{
public:
    /// `url` as "http://host:port[/path]".
    explicit JsonRpcClient(const std::string& url);
    ~JsonRpcClient();
    JsonRpcClient(JsonRpcClient&&) noexcept;
    JsonRpcClient& operator=(JsonRpcClient&&) noexcept;

    /// Returns the "result" member. Throws RpcError or TransportError.
    nlohmann::json call(const std::string& method, nlohmann::json params);

    /// eth_sendRawTransaction; returns the transaction hash string.
    std::string send_raw_transaction(const std::string& raw_hex);
    /// eth_getTransactionCount(address, "pending").
    uint64_t get_transaction_count(const Address& addr);
    /// eth_getBalance(address, "latest").
    Uint256 get_balance(const Address& addr);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Adapts a remote node to the bridge: node error messages are mapped onto Ack statuses.
class RelayBackend final : public ChainBackend
{
public:
    explicit RelayBackend(const std::string& url) : client_{url} {}

    uint64_t get_transaction_count(const Address& addr) override;
    /// Transport failures propagate; node rejections become statuses.
    Receipt submit_raw(BytesView raw) override;

    /// Best-effort mapping of geth-style error strings.
    static AckStatus classify(const RpcError& e) noexcept;

private:
    JsonRpcClient client_;
};

/// One-shot relay of a raw transaction hex string.
inline std::string relay_submit(const std::string& url, const std::string& raw_hex)
{
    return JsonRpcClient{url}.send_raw_transaction(raw_hex);
}
}  // namespace ethacct
