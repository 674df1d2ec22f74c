// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ethacct/bytes.hpp>

#include <chrono>
#include <condition_variable>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <utility>

namespace ethacct
{
/// One end of a bidirectional byte channel (the serial line between device and bridge).
class ByteLink
{
public:
    virtual ~ByteLink() = default;

    virtual void send(BytesView bytes) = 0;
    /// Whatever bytes are available, waiting up to `timeout` for the first one. Returns an
    /// empty buffer on timeout or once the peer closed and the channel drained.
    virtual Bytes receive(std::chrono::milliseconds timeout) = 0;
    virtual void close() = 0;
    virtual bool closed() const = 0;
};

/// Thread-safe in-memory byte queue, one direction of a pipe.
class ByteQueue
{
public:
    void write(BytesView bytes);
    Bytes read(std::chrono::milliseconds timeout);
    void close();
    bool closed() const;

private:
    mutable std::mutex mutex_;
    std::condition_variable ready_;
    std::deque<uint8_t> data_;
    bool closed_ = false;
};

class PipeLink final : public ByteLink
{
public:
    PipeLink(std::shared_ptr<ByteQueue> in, std::shared_ptr<ByteQueue> out)
      : in_{std::move(in)}, out_{std::move(out)}
    {}

    void send(BytesView bytes) override { out_->write(bytes); }
    Bytes receive(std::chrono::milliseconds timeout) override { return in_->read(timeout); }
    void close() override;
    bool closed() const override { return in_->closed() && out_->closed(); }

private:
    std::shared_ptr<ByteQueue> in_;
    std::shared_ptr<ByteQueue> out_;
};

/// Two connected ends: bytes sent on one arrive at the other.
std::pair<std::unique_ptr<PipeLink>, std::unique_ptr<PipeLink>> make_pipe();

/// Wraps a link, recording every sent chunk and optionally rewriting it before it leaves
/// (corrupt, drop, delay). Each send carries exactly one frame in this code base, so the
/// trace is a frame trace.
class TapLink final : public ByteLink
{
public:
    /// Receives the chunk and its zero-based index; returns the bytes to forward
    /// (empty drops the chunk).
    using Mutator = std::function<Bytes(Bytes chunk, size_t index)>;

    explicit TapLink(ByteLink& inner, Mutator mutator = {}) : inner_{inner}, mutator_{std::move(mutator)} {}

    void send(BytesView bytes) override;
    Bytes receive(std::chrono::milliseconds timeout) override { return inner_.receive(timeout); }
    void close() override { inner_.close(); }
    bool closed() const override { return inner_.closed(); }

    /// Chunks as handed to send(), before mutation.
    std::vector<Bytes> trace() const;

private:
    ByteLink& inner_;
    Mutator mutator_;
    mutable std::mutex mutex_;
    std::vector<Bytes> trace_;
};
}  // namespace ethacct
