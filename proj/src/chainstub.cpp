// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0

#include <ethacct/chainstub.hpp>

#include <iostream>

namespace ethacct
{
namespace
{
/// gas_limit * gas_price + value, or nullopt when it does not fit in 256 bits.
std::optional<Uint256> upfront_cost(const LegacyTransaction& tx)
{
    const auto gas = checked_mul(Uint256{tx.gas_limit}, tx.gas_price);
    if (!gas)
        return std::nullopt;
    return checked_add(*gas, tx.value);
}

Uint256 saturating_add(const Uint256& a, const Uint256& b)
{
    return checked_add(a, b).value_or(uint256_max);
}
}  // namespace

Receipt ChainStub::submit_raw(BytesView raw)
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

    std::lock_guard lock{mutex_};
    auto& account = accounts_[sender];
    Receipt receipt{AckStatus::invalid_signature, stx.body.nonce, account.balance};
    if (stx.body.chain_id != chain_id_)
        return receipt;

    if (stx.body.nonce < account.nonce)
    {
        receipt.status = AckStatus::nonce_too_low;
        return receipt;
    }
    if (stx.body.nonce > account.nonce)
    {
        auto& pool = pending_[sender];
        if (pool.size() >= pending_limit_ && !pool.contains(stx.body.nonce))
        {
            receipt.status = AckStatus::pool_full;
            return receipt;
        }
        pool.insert_or_assign(stx.body.nonce, Pending{stx, Bytes(raw.begin(), raw.end())});
        receipt.status = AckStatus::nonce_too_high_pending;
        return receipt;
    }

    if (!try_apply(sender, stx, raw))
    {
        receipt.status = AckStatus::insufficient_balance;
        return receipt;
    }
    drain_pending(sender);
    receipt.status = AckStatus::accepted;
    receipt.new_balance = accounts_[sender].balance;
    return receipt;
}

bool ChainStub::try_apply(const Address& sender, const SignedTransaction& stx, BytesView raw)
{
    auto& from = accounts_[sender];
    const auto cost = upfront_cost(stx.body);
    if (!cost || *cost > from.balance)
        return false;

    from.balance = from.balance - *cost;
    from.nonce += 1;
    const auto gas = *cost - stx.body.value;
    burned_ = saturating_add(burned_, gas);
    if (stx.body.to)
    {
        auto& to = accounts_[*stx.body.to];
        to.balance = saturating_add(to.balance, stx.body.value);
    }
    else
    {
        burned_ = saturating_add(burned_, stx.body.value);
    }
    log_.push_back({sender, stx, keccak256(raw)});
    return true;
}

void ChainStub::drain_pending(const Address& sender)
{
    const auto it = pending_.find(sender);
    if (it == pending_.end())
        return;
    auto& pool = it->second;
    for (;;)
    {
        const auto nonce = accounts_[sender].nonce;
        pool.erase(pool.begin(), pool.lower_bound(nonce));
        const auto next = pool.find(nonce);
        if (next == pool.end() || !try_apply(sender, next->second.tx, next->second.raw))
            break;
        pool.erase(next);
    }
    if (pool.empty())
        pending_.erase(it);
}

uint64_t ChainStub::get_transaction_count(const Address& addr)
{
    std::lock_guard lock{mutex_};
    const auto it = accounts_.find(addr);
    return it == accounts_.end() ? 0 : it->second.nonce;
}

Uint256 ChainStub::faucet(const Address& addr, const Uint256& amount)
{
    std::lock_guard lock{mutex_};
    auto& account = accounts_[addr];
    const auto sum = checked_add(account.balance, amount);
    if (!sum)
        std::clog << "warning: faucet credit to " << addr.to_hex() << " saturated at 2^256-1\n";
    const auto credited = sum ? amount : uint256_max - account.balance;
    account.balance = account.balance + credited;
    minted_ = saturating_add(minted_, credited);
    return account.balance;
}

Uint256 ChainStub::balance(const Address& addr) const
{
    std::lock_guard lock{mutex_};
    const auto it = accounts_.find(addr);
    return it == accounts_.end() ? Uint256{} : it->second.balance;
}

size_t ChainStub::pending_count(const Address& addr) const
{
    std::lock_guard lock{mutex_};
    const auto it = pending_.find(addr);
    return it == pending_.end() ? 0 : it->second.size();
}

std::vector<ChainStub::LogEntry> ChainStub::log() const
{
    std::lock_guard lock{mutex_};
    return log_;
}

Uint256 ChainStub::total_balances() const
{
    std::lock_guard lock{mutex_};
    Uint256 sum;
    for (const auto& [addr, rec] : accounts_)
        sum = saturating_add(sum, rec.balance);
    return sum;
}

Uint256 ChainStub::total_minted() const
{
    std::lock_guard lock{mutex_};
    return minted_;
}

Uint256 ChainStub::total_burned() const
{
    std::lock_guard lock{mutex_};
    return burned_;
}

bool NodeService::poll(std::chrono::milliseconds timeout)
{
    const auto bytes = link_.receive(timeout);
    if (bytes.empty())
        return !link_.closed();
    decoder_.push(bytes);
    while (auto event = decoder_.next())
    {
        // Corrupt frames are dropped; the device retransmits after its timeout.
        if (const auto* frame = std::get_if<wire::Frame>(&*event))
            handle(*frame);
    }
    return true;
}

void NodeService::run(std::stop_token stop)
{
    while (!stop.stop_requested())
    {
        if (!poll(std::chrono::milliseconds{20}))
            break;
    }
}

void NodeService::handle(const wire::Frame& frame)
{
    wire::Message request;
    try
    {
        request = wire::from_frame(frame);
    }
    catch (const wire::WireError&)
    {
        return;
    }

    if (const auto* q = std::get_if<wire::NonceQuery>(&request))
    {
        try
        {
            link_.send(wire::encode_message(wire::NonceReply{backend_.get_transaction_count(q->address)}));
        }
        catch (const std::exception& e)
        {
            std::clog << "node: backend failure: " << e.what() << '\n';
        }
        return;
    }
    if (const auto* submit = std::get_if<wire::SubmitRaw>(&request))
    {
        if (frame == last_request_ && !last_response_.empty())
        {
            ++replayed_;
            link_.send(last_response_);
            return;
        }
        Receipt receipt;
        try
        {
            receipt = backend_.submit_raw(submit->raw);
        }
        catch (const std::exception& e)
        {
            // No answer: the device times out and retransmits.
            std::clog << "node: backend failure: " << e.what() << '\n';
            return;
        }
        const auto response = wire::encode_message(wire::Ack{receipt.status, receipt.consumed_nonce});
        last_request_ = frame;
        last_response_ = receipt.status == AckStatus::accepted ? response : Bytes{};
        link_.send(response);
    }
}
}  // namespace ethacct
