// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0

#include <ethacct/link.hpp>

namespace ethacct
{
void ByteQueue::write(BytesView bytes)
{
    {
        std::lock_guard lock{mutex_};
        if (closed_)
            return;
        data_.insert(data_.end(), bytes.begin(), bytes.end());
    }
    ready_.notify_all();
}

Bytes ByteQueue::read(std::chrono::milliseconds timeout)
{
    std::unique_lock lock{mutex_};
    ready_.wait_for(lock, timeout, [this] { return !data_.empty() || closed_; });
    Bytes out(data_.begin(), data_.end());
    data_.clear();
    return out;
}

void ByteQueue::close()
{
    {
        std::lock_guard lock{mutex_};
        closed_ = true;
    }
    ready_.notify_all();
}

bool ByteQueue::closed() const
{
    std::lock_guard lock{mutex_};
    return closed_;
}

void PipeLink::close()
{
    in_->close();
    out_->close();
}

std::pair<std::unique_ptr<PipeLink>, std::unique_ptr<PipeLink>> make_pipe()
{
    auto a_to_b = std::make_shared<ByteQueue>();
    auto b_to_a = std::make_shared<ByteQueue>();
    return {std::make_unique<PipeLink>(b_to_a, a_to_b), std::make_unique<PipeLink>(a_to_b, b_to_a)};
}

void TapLink::send(BytesView bytes)
{
    Bytes chunk(bytes.begin(), bytes.end());
    size_t index = 0;
    {
        std::lock_guard lock{mutex_};
        index = trace_.size();
        trace_.push_back(chunk);
    }
    if (mutator_)
        chunk = mutator_(std::move(chunk), index);
    if (!chunk.empty())
        inner_.send(chunk);
}

std::vector<Bytes> TapLink::trace() const
{
    std::lock_guard lock{mutex_};
    return trace_;
}
}  // namespace ethacct
