// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0

#include <ethacct/account.hpp>
#include <ethacct/bench.hpp>
#include <ethacct/chainstub.hpp>
#include <ethacct/gateway.hpp>
#include <ethacct/relay.hpp>
#include <ethacct/rlp.hpp>
#include <ethacct/transaction.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

using namespace ethacct;
using nlohmann::json;

namespace
{
constexpr int exit_usage = 1;
constexpr int exit_domain = 2;

/// Failures caused by the command's inputs rather than its usage.
class DomainError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::string read_stdin()
{
    return {std::istreambuf_iterator<char>{std::cin}, std::istreambuf_iterator<char>{}};
}

Bytes hex_arg_or_stdin(const std::string& arg)
{
    return from_hex(arg.empty() ? read_stdin() : arg);
}

void emit(const std::string& format, const json& obj, const std::vector<std::string>& lines)
{
    if (format == "json")
        std::cout << obj.dump() << '\n';
    else
        for (const auto& l : lines)
            std::cout << l << '\n';
}

json rlp_to_json(const rlp::Item& item)
{
    if (!item.is_list())
        return to_hex(item.bytes());
    json arr = json::array();
    for (const auto& child : item.list())
        arr.push_back(rlp_to_json(child));
    return arr;
}

rlp::Item json_to_rlp(const json& j)
{
    if (j.is_string())
        return from_hex(j.get<std::string>());
    if (!j.is_array())
        throw DomainError{"rlp encode: expected hex strings and arrays"};
    rlp::Item::List items;
    for (const auto& child : j)
        items.push_back(json_to_rlp(child));
    return items;
}

json tx_json(const SignedTransaction& stx)
{
    const auto& b = stx.body;
    return {
        {"nonce", b.nonce},
        {"gas_price", b.gas_price.to_dec()},
        {"gas_limit", b.gas_limit},
        {"to", b.to ? b.to->to_hex() : std::string{}},
        {"value", b.value.to_dec()},
        {"data", to_hex(b.data)},
        {"chain_id", b.chain_id},
        {"v", stx.v},
        {"r", stx.r.to_hex()},
        {"s", stx.s.to_hex()},
    };
}

std::vector<std::string> json_lines(const json& obj)
{
    std::vector<std::string> lines;
    for (const auto& [k, v] : obj.items())
        lines.push_back(k + "=" + (v.is_string() ? v.get<std::string>() : v.dump()));
    return lines;
}

int run_gateway(const std::string& account_path, const std::string& config_path,
    const std::string& payloads_path, const std::string& format)
{
    const auto file = load_account_file(account_path);
    const auto cfg = load_gateway_config(config_path);
    std::ifstream payload_in{payloads_path};
    if (!payload_in)
        throw DomainError{"cannot open " + payloads_path};
    const auto payloads = parse_payloads(payload_in);

    auto [device_end, node_end] = make_pipe();
    std::unique_ptr<ChainBackend> backend;
    ChainStub* stub = nullptr;
    if (cfg.rpc_url)
        backend = std::make_unique<RelayBackend>(*cfg.rpc_url);
    else
    {
        auto local = std::make_unique<ChainStub>(cfg.tx.chain_id);
        stub = local.get();
        backend = std::move(local);
    }

    GatewaySession session{rehydrate(file.secret), *device_end, cfg.tx, cfg.retry};
    if (stub && !cfg.faucet_wei.is_zero())
        stub->faucet(session.account().address, cfg.faucet_wei);

    NodeService node{*backend, *node_end};
    std::jthread node_thread{[&node](std::stop_token st) { node.run(st); }};

    const auto start_nonce = session.bootstrap_nonce();
    if (file.nonce && *file.nonce != start_nonce)
        std::cerr << "note: stored nonce " << *file.nonce << " differs from chain nonce " << start_nonce
                  << "; using the chain value\n";
    const auto report = session.run_stream(payloads);
    node_thread.request_stop();
    node_thread.join();

    json obj = {
        {"address", session.account().address.to_hex()},
        {"payloads", payloads.size()},
        {"accepted", report.accepted},
        {"start_nonce", start_nonce},
        {"final_nonce", session.account().next_nonce},
        {"retransmissions", report.retransmissions},
        {"resyncs", report.resyncs},
        {"latency_mean_ns", report.latency ? report.latency->mean_ns : 0.0},
        {"status", report.completed ? std::string{"completed"} : "halted: " + report.halt_reason},
    };
    emit(format, obj, json_lines(obj));
    return report.completed ? 0 : exit_domain;
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Ethereum account, transaction signing and device gateway toolkit", "ethacct"};
    app.require_subcommand(1);
    std::string format = "text";
    const auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    // keygen
    auto* keygen = app.add_subcommand("keygen", "Generate a private key");
    std::string keygen_out;
    std::optional<uint64_t> keygen_seed;
    keygen->add_option("--out", keygen_out, "Write the key file here and print the address");
    keygen->add_option("--seed", keygen_seed, "Deterministic seed (testing only)");
    add_format(keygen);

    // address
    auto* address = app.add_subcommand("address", "Print the address of a key file");
    std::string key_path;
    address->add_option("--key", key_path, "Private key file")->required();
    add_format(address);

    // sign-tx
    auto* sign_tx = app.add_subcommand("sign-tx", "Build and sign a legacy EIP-155 transaction");
    std::string sign_key, gas_price = "20000000000", to, value = "0", data;
    uint64_t nonce = 0, gas_limit = 21000, chain_id = ChainStub::default_chain_id;
    sign_tx->add_option("--key", sign_key, "Private key file")->required();
    sign_tx->add_option("--nonce", nonce)->required();
    sign_tx->add_option("--gas-price", gas_price, "Wei per gas (decimal)");
    sign_tx->add_option("--gas-limit", gas_limit);
    sign_tx->add_option("--to", to, "Recipient address; omit for contract creation");
    sign_tx->add_option("--value", value, "Wei (decimal)");
    sign_tx->add_option("--data", data, "Hex payload");
    sign_tx->add_option("--chain-id", chain_id);
    add_format(sign_tx);

    // decode-tx / recover-sender
    auto* decode_tx = app.add_subcommand("decode-tx", "Decode a raw transaction (hex argument or stdin)");
    std::string raw_hex;
    decode_tx->add_option("--raw", raw_hex);
    add_format(decode_tx);
    auto* recover = app.add_subcommand("recover-sender", "Recover the sender address of a raw transaction");
    recover->add_option("--raw", raw_hex);
    add_format(recover);

    // rlp
    auto* rlp_cmd = app.add_subcommand("rlp", "RLP codec over stdin/stdout");
    rlp_cmd->require_subcommand(1);
    auto* rlp_encode = rlp_cmd->add_subcommand("encode", "JSON nested array of hex strings (or a single hex string) to RLP hex");
    auto* rlp_decode = rlp_cmd->add_subcommand("decode", "RLP hex to a JSON nested array of hex strings");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Timing harness");
    std::string bench_op = "sign", bench_format = "table", samples_out;
    size_t trials = 1000, warmup = bench::default_warmup;
    uint64_t bench_seed = 1;
    std::optional<double> cpu_hz;
    bench_cmd->add_option("--op", bench_op)->check(CLI::IsMember({"keygen", "sign", "verify", "tx-phases"}));
    bench_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--warmup", warmup);
    bench_cmd->add_option("--seed", bench_seed);
    bench_cmd->add_option("--format", bench_format)->check(CLI::IsMember({"table", "csv", "json"}));
    bench_cmd->add_option("--cpu-hz", cpu_hz, "Also report equivalent cycles at this clock rate");
    bench_cmd->add_option("--samples", samples_out, "Write per-trial samples (CSV) to this file");

    // gateway
    auto* gateway = app.add_subcommand("gateway", "Device gateway session");
    gateway->require_subcommand(1);
    auto* gateway_run = gateway->add_subcommand("run", "Bootstrap the nonce and stream payloads");
    std::string account_path, config_path, payloads_path;
    gateway_run->add_option("--account", account_path)->required();
    gateway_run->add_option("--config", config_path)->required();
    gateway_run->add_option("--payloads", payloads_path)->required();
    add_format(gateway_run);

    // chain
    auto* chain = app.add_subcommand("chain", "JSON-RPC relay to a node");
    chain->require_subcommand(1);
    std::string rpc_url, chain_address;
    auto* chain_nonce = chain->add_subcommand("nonce", "eth_getTransactionCount(address, pending)");
    auto* chain_balance = chain->add_subcommand("balance", "eth_getBalance(address, latest)");
    auto* chain_send = chain->add_subcommand("send", "eth_sendRawTransaction (hex argument or stdin)");
    for (auto* c : {chain_nonce, chain_balance, chain_send})
    {
        c->add_option("--rpc", rpc_url, "http://host:port")->required();
        add_format(c);
    }
    chain_nonce->add_option("--address", chain_address)->required();
    chain_balance->add_option("--address", chain_address)->required();
    chain_send->add_option("--raw", raw_hex);

    // storage
    auto* storage = app.add_subcommand("storage", "Light-node header storage and account footprint");
    double blocks = 14'497'082, header_bytes = 500, interval = 13.2;
    std::string footprint;
    storage->add_option("--blocks", blocks);
    storage->add_option("--header-bytes", header_bytes);
    storage->add_option("--interval", interval, "Seconds per block");
    storage->add_option("--footprint", footprint, "Print the account footprint instead")
        ->check(CLI::IsMember({"full", "reduced"}));
    add_format(storage);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try
    {
        if (*keygen)
        {
            std::unique_ptr<ecdsa::EntropySource> entropy;
            if (keygen_seed)
                entropy = std::make_unique<ecdsa::SeededEntropy>(*keygen_seed);
            else
                entropy = std::make_unique<ecdsa::SystemEntropy>();
            const auto pair = ecdsa::keygen(*entropy);
            const auto addr = derive_address(pair.public_key).to_hex();
            if (!keygen_out.empty())
            {
                save_account_file(keygen_out, {pair.secret, std::nullopt});
                emit(format, {{"address", addr}}, {addr});
            }
            else
                emit(format, {{"private_key", pair.secret.to_hex()}, {"address", addr}}, {pair.secret.to_hex()});
        }
        else if (*address)
        {
            const auto acct = rehydrate(load_account_file(key_path).secret);
            const auto addr = acct.address.to_hex();
            emit(format, {{"address", addr}}, {addr});
        }
        else if (*sign_tx)
        {
            LegacyTransaction tx;
            tx.nonce = nonce;
            tx.gas_price = Uint256::from_dec(gas_price);
            tx.gas_limit = gas_limit;
            if (!to.empty())
                tx.to = Address::from_hex(to);
            tx.value = Uint256::from_dec(value);
            tx.data = from_hex(data);
            tx.chain_id = chain_id;
            const auto key = load_account_file(sign_key).secret;
            const auto raw = sign_transaction(tx, key);
            emit(format,
                {{"raw", raw.to_hex()}, {"hash", to_hex(keccak256(raw.bytes))},
                    {"signing_hash", to_hex(signing_hash(tx))}},
                {raw.to_hex()});
        }
        else if (*decode_tx)
        {
            const auto obj = tx_json(decode_raw(hex_arg_or_stdin(raw_hex)));
            emit(format, obj, json_lines(obj));
        }
        else if (*recover)
        {
            const auto addr = recover_sender(decode_raw(hex_arg_or_stdin(raw_hex))).to_hex();
            emit(format, {{"sender", addr}}, {addr});
        }
        else if (*rlp_encode)
        {
            const auto input = read_stdin();
            const auto trimmed = input.substr(0, input.find_last_not_of(" \t\r\n") + 1);
            const auto first = trimmed.find_first_not_of(" \t\r\n");
            rlp::Item item;
            if (first != std::string::npos && (trimmed[first] == '[' || trimmed[first] == '"'))
                item = json_to_rlp(json::parse(trimmed));
            else
                item = from_hex(trimmed);
            std::cout << to_hex(rlp::encode(item)) << '\n';
        }
        else if (*rlp_decode)
        {
            std::cout << rlp_to_json(rlp::decode(from_hex(read_stdin()))).dump() << '\n';
        }
        else if (*bench_cmd)
        {
            if (bench_op == "tx-phases")
            {
                const auto b = bench::phase_breakdown(trials, bench_seed);
                if (bench_format == "json" || bench_format == "csv")
                {
                    json rows = json::array();
                    if (bench_format == "csv")
                        std::cout << "phase,name,mean_ns,percent\n";
                    for (const auto& r : b.rows)
                    {
                        if (bench_format == "csv")
                            std::cout << r.phase << ',' << r.name << ',' << r.mean_ns << ',' << r.percent << '\n';
                        rows.push_back({{"phase", r.phase}, {"name", r.name}, {"mean_ns", r.mean_ns},
                            {"percent", r.percent}});
                    }
                    if (bench_format == "json")
                        std::cout << json{{"trials", b.trials}, {"phases", rows}}.dump() << '\n';
                }
                else
                    std::cout << bench::format_phase_table(b);
            }
            else
            {
                const auto m = bench::measure_named(bench_op, trials, bench_seed, warmup);
                const bench::ReportRow row{bench_op, m.stats};
                if (bench_format == "csv")
                    std::cout << bench::format_csv({&row, 1});
                else if (bench_format == "json")
                    std::cout << json{{"op", bench_op}, {"min_ns", m.stats.min_ns}, {"max_ns", m.stats.max_ns},
                                     {"mean_ns", m.stats.mean_ns}, {"sd_ns", m.stats.sd_ns},
                                     {"trials", m.stats.trials}}
                                     .dump()
                              << '\n';
                else
                    std::cout << bench::format_table({&row, 1}, cpu_hz);
                const double ratio = m.stats.mean_ns > 0 ? m.stats.sd_ns / m.stats.mean_ns : 0.0;
                if (trials >= 100 && ratio > bench::default_dispersion_threshold)
                    std::cerr << "warning: " << bench_op << " sd/mean = " << ratio << " exceeds "
                              << bench::default_dispersion_threshold << '\n';
                if (!samples_out.empty())
                {
                    std::ofstream out{samples_out};
                    out << "trial,ns\n";
                    for (size_t i = 0; i < m.samples_ns.size(); ++i)
                        out << i << ',' << m.samples_ns[i] << '\n';
                }
            }
        }
        else if (*gateway_run)
        {
            return run_gateway(account_path, config_path, payloads_path, format);
        }
        else if (*chain_nonce)
        {
            const auto n = JsonRpcClient{rpc_url}.get_transaction_count(Address::from_hex(chain_address));
            emit(format, {{"nonce", n}}, {std::to_string(n)});
        }
        else if (*chain_balance)
        {
            const auto b = JsonRpcClient{rpc_url}.get_balance(Address::from_hex(chain_address));
            emit(format, {{"balance", b.to_dec()}}, {b.to_dec()});
        }
        else if (*chain_send)
        {
            const auto raw = hex_arg_or_stdin(raw_hex);
            const auto hash = relay_submit(rpc_url, to_hex(raw));
            emit(format, {{"hash", hash}}, {hash});
        }
        else if (*storage)
        {
            if (!footprint.empty())
            {
                const auto bytes =
                    account_footprint(footprint == "full" ? FootprintForm::full : FootprintForm::reduced);
                emit(format, {{"footprint_bytes", bytes}}, {std::to_string(bytes)});
            }
            else
            {
                const auto e = bench::estimate_node_storage(blocks, header_bytes, interval);
                std::ostringstream a, b, c;
                a << std::fixed << std::setprecision(0) << e.total_header_bytes;
                b << std::fixed << std::setprecision(2) << e.daily_blocks;
                c << std::fixed << std::setprecision(0) << e.daily_header_bytes;
                emit(format,
                    {{"total_header_bytes", e.total_header_bytes}, {"daily_blocks", e.daily_blocks},
                        {"daily_header_bytes", e.daily_header_bytes}},
                    {a.str(), b.str(), c.str()});
            }
        }
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_domain;
    }
    return 0;
}
