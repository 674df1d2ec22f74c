// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0

#include "harness.hpp"
#include "helpers.hpp"

#include <ethacct/relay.hpp>

#include <httplib.h>
#include <gtest/gtest.h>

using namespace ethacct;
using nlohmann::json;

namespace
{
/// A JSON-RPC node mock backed by a chain stub, answering with the error strings
/// that common execution clients use.
class MockNode
{
public:
    MockNode()
    {
        server_.Post("/", [this](const httplib::Request& req, httplib::Response& res) {
            const auto request = json::parse(req.body);
            methods_.push_back(request["method"].get<std::string>());
            params_.push_back(request["params"]);
            json reply = {{"jsonrpc", "2.0"}, {"id", request["id"]}};
            handle(request["method"].get<std::string>(), request["params"], reply);
            res.set_content(reply.dump(), "application/json");
        });
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread{[this] { server_.listen_after_bind(); }};
        server_.wait_until_ready();
    }

    ~MockNode()
    {
        server_.stop();
        thread_.join();
    }

    std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }

    ChainStub chain;
    std::vector<std::string> methods_;
    std::vector<json> params_;

private:
    void handle(const std::string& method, const json& params, json& reply)
    {
        if (method == "eth_getTransactionCount")
        {
            const auto n = chain.get_transaction_count(Address::from_hex(params[0].get<std::string>()));
            reply["result"] = Uint256{n}.to_hex();
        }
        else if (method == "eth_getBalance")
            reply["result"] = chain.balance(Address::from_hex(params[0].get<std::string>())).to_hex();
        else if (method == "eth_sendRawTransaction")
        {
            Bytes raw;
            try
            {
                raw = from_hex(params[0].get<std::string>());
            }
            catch (const std::exception&)
            {
                reply["error"] = {{"code", -32602}, {"message", "invalid argument 0: hex string has odd length"}};
                return;
            }
            const auto r = chain.submit_raw(raw);
            static const std::map<AckStatus, std::string> messages = {
                {AckStatus::nonce_too_low, "nonce too low"},
                {AckStatus::nonce_too_high_pending, "nonce too high"},
                {AckStatus::insufficient_balance, "insufficient funds for gas * price + value"},
                {AckStatus::invalid_signature, "invalid sender"},
                {AckStatus::pool_full, "txpool is full"},
            };
            if (r.status == AckStatus::accepted)
                reply["result"] = to_hex(keccak256(raw));
            else
                reply["error"] = {{"code", -32000}, {"message", messages.at(r.status)}};
        }
        else
            reply["error"] = {{"code", -32601}, {"message", "method not found"}};
    }

    httplib::Server server_;
    int port_ = 0;
    std::thread thread_;
};

const auto key = ecdsa::PrivateKey::from_uint(Uint256{0x12345});
}  // namespace

TEST(relay, bootstrap_and_submit)
{
    MockNode node;
    const auto addr = rehydrate(key).address;
    JsonRpcClient client{node.url()};
    EXPECT_EQ(client.get_transaction_count(addr), 0u);
    EXPECT_EQ(node.params_.back()[1], "pending");

    node.chain.faucet(addr, Uint256{1'000'000'000'000'000'000ULL});
    LegacyTransaction tx;
    tx.gas_price = Uint256{20'000'000'000ULL};
    tx.gas_limit = 21000;
    tx.to = Address::from_hex("0x3535353535353535353535353535353535353535");
    tx.chain_id = ChainStub::default_chain_id;
    const auto raw = sign_transaction(tx, key);
    const auto hash = relay_submit(node.url(), raw.to_hex());
    EXPECT_EQ(hash, to_hex(keccak256(raw.bytes)));
    EXPECT_EQ(client.get_transaction_count(addr), 1u);

    try
    {
        client.send_raw_transaction(raw.to_hex());
        FAIL();
    }
    catch (const RpcError& e)
    {
        EXPECT_EQ(e.code(), -32000);
        EXPECT_EQ(RelayBackend::classify(e), AckStatus::nonce_too_low);
    }
}

TEST(relay, malformed_hex_error_propagates)
{
    MockNode node;
    try
    {
        relay_submit(node.url(), "0xabc");
        FAIL();
    }
    catch (const RpcError& e)
    {
        EXPECT_EQ(e.code(), -32602);
        EXPECT_NE(std::string{e.what()}.find("odd length"), std::string::npos);
    }
}

TEST(relay, transport_errors)
{
    EXPECT_THROW(JsonRpcClient{"localhost:8545"}, TransportError);
    JsonRpcClient dead{"http://127.0.0.1:1"};
    EXPECT_THROW(dead.get_transaction_count(Address{}), TransportError);
}

TEST(relay, classification)
{
    EXPECT_EQ(RelayBackend::classify(RpcError{-32000, "Nonce too low"}), AckStatus::nonce_too_low);
    EXPECT_EQ(RelayBackend::classify(RpcError{-32000, "already known"}), AckStatus::nonce_too_low);
    EXPECT_EQ(RelayBackend::classify(RpcError{-32000, "nonce too high"}), AckStatus::nonce_too_high_pending);
    EXPECT_EQ(RelayBackend::classify(RpcError{-32000, "insufficient funds for gas * price + value"}),
        AckStatus::insufficient_balance);
    EXPECT_EQ(RelayBackend::classify(RpcError{-32000, "txpool is full"}), AckStatus::pool_full);
    EXPECT_EQ(RelayBackend::classify(RpcError{-32000, "invalid sender"}), AckStatus::invalid_signature);
}

TEST(relay, gateway_over_json_rpc)
{
    MockNode mock;
    RelayBackend backend{mock.url()};
    auto [device, node_end] = make_pipe();
    NodeService node{backend, *node_end};
    std::jthread t{[&node](std::stop_token st) { node.run(st); }};

    GatewaySession session{rehydrate(key), *device, test::GatewayHarness::tx_template()};
    const auto payloads = test::numbered_payloads(5);
    const auto tx = session.build_transaction(payloads[0]);
    mock.chain.faucet(session.account().address, Uint256{tx.gas_limit} * tx.gas_price * Uint256{5});

    EXPECT_EQ(session.bootstrap_nonce(), 0u);
    const auto report = session.run_stream(payloads);
    EXPECT_TRUE(report.completed);
    EXPECT_EQ(report.accepted, 5u);
    EXPECT_EQ(mock.chain.get_transaction_count(session.account().address), 5u);
    t.request_stop();
}
