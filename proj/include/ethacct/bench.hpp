// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

/// Timing harness for the signer pipeline and the node-storage arithmetic.
namespace ethacct::bench
{
/// Wall-clock statistics in nanoseconds. standard_deviation is the population SD.
struct BenchStats
{
    double min_ns = 0;
    double max_ns = 0;
    double mean_ns = 0;
    double sd_ns = 0;
    size_t trials = 0;
};

/// Throws std::invalid_argument on an empty sample.
BenchStats summarize(std::span<const double> samples_ns);

struct Measurement
{
    BenchStats stats;
    std::vector<double> samples_ns;
};

/// Builds the timed closure for trial `i`; the build itself is not timed.
using TrialFactory = std::function<std::function<void()>(size_t trial)>;

inline constexpr size_t default_warmup = 10;

/// Runs `warmup` untimed trials, then `trials` timed ones on a monotonic clock.
/// Only one measurement may run at a time; a concurrent call throws std::logic_error.
Measurement measure(size_t trials, const TrialFactory& factory, size_t warmup = default_warmup);

struct PhaseRow
{
    int phase = 0;  ///< 2 encode, 3 hash, 4 sign, 5 final encode
    std::string name;
    double mean_ns = 0;
    double percent = 0;
};

struct PhaseBreakdown
{
    std::array<PhaseRow, 4> rows;
    size_t trials = 0;
    double total_mean_ns() const noexcept;
};

/// Times the four transaction-construction phases over random keys and random data.
PhaseBreakdown phase_breakdown(size_t trials, uint64_t seed = 1);

struct Dispersion
{
    BenchStats stats;
    double ratio = 0;  ///< SD / mean
    bool warning = false;
};

inline constexpr double default_dispersion_threshold = 0.05;

/// SD/mean of an operation's run time; flags (does not fail) values above `threshold`.
/// Requires at least 100 trials.
Dispersion timing_dispersion(const std::function<void()>& op, size_t trials,
    double threshold = default_dispersion_threshold);

struct StorageEstimate
{
    double total_header_bytes = 0;
    double daily_blocks = 0;
    double daily_header_bytes = 0;
};

/// Header storage a light node would need. Throws std::invalid_argument for non-positive
/// inputs (including a zero interval).
StorageEstimate estimate_node_storage(double block_count, double avg_header_bytes,
    double block_interval_seconds);

/// One row of the ECDSA-style report (KeyGen / SignGen / SignVer).
struct ReportRow
{
    std::string op;
    BenchStats stats;
};

/// Fixed-layout text table. With `cpu_hz`, adds columns in millions of equivalent cycles.
std::string format_table(std::span<const ReportRow> rows, std::optional<double> cpu_hz = std::nullopt);
/// Header "op,min_ns,max_ns,mean_ns,sd_ns,trials" then one line per row.
std::string format_csv(std::span<const ReportRow> rows);
std::string format_phase_table(const PhaseBreakdown& breakdown);

/// Named operations for the CLI: keygen, sign, verify.
Measurement measure_named(std::string_view op, size_t trials, uint64_t seed, size_t warmup = default_warmup);
}  // namespace ethacct::bench
