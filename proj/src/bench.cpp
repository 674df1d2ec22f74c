// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0

#include <ethacct/bench.hpp>
#include <ethacct/transaction.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#ifdef __linux__
#include <sched.h>
#endif

namespace ethacct::bench
{
namespace
{
using clock = std::chrono::steady_clock;

template <typename T>
void keep(const T& value) noexcept
{
    asm volatile("" : : "g"(&value) : "memory");
}

double elapsed_ns(clock::time_point a, clock::time_point b) noexcept
{
    return static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(b - a).count());
}

std::atomic<bool> session_active{false};

/// Exclusive measurement session pinned to the CPU it starts on (best effort).
class Session
{
public:
    Session()
    {
        if (session_active.exchange(true))
            throw std::logic_error{"another measurement session is running"};
#ifdef __linux__
        pinned_ = sched_getaffinity(0, sizeof(saved_), &saved_) == 0;
        if (pinned_)
        {
            cpu_set_t one;
            CPU_ZERO(&one);
            const int cpu = sched_getcpu();
            CPU_SET(cpu < 0 ? 0 : cpu, &one);
            pinned_ = sched_setaffinity(0, sizeof(one), &one) == 0;
        }
#endif
    }
    ~Session()
    {
#ifdef __linux__
        if (pinned_)
            sched_setaffinity(0, sizeof(saved_), &saved_);
#endif
        session_active = false;
    }
    Session(const Session&) = delete;
    Session& operator=(const Session&) = delete;

private:
#ifdef __linux__
    cpu_set_t saved_{};
    bool pinned_ = false;
#endif
};

struct TrialInput
{
    ecdsa::PrivateKey key;
    LegacyTransaction tx;
};

TrialInput random_input(std::mt19937_64& rng, ecdsa::SeededEntropy& entropy)
{
    const auto key = ecdsa::keygen(entropy).secret;
    LegacyTransaction tx;
    tx.nonce = rng() % 1000;
    tx.gas_price = Uint256{20'000'000'000ULL};
    Address to;
    for (auto& b : to.bytes)
        b = static_cast<uint8_t>(rng());
    tx.to = to;
    tx.value = Uint256{0};
    tx.data.resize(32);
    for (auto& b : tx.data)
        b = static_cast<uint8_t>(rng());
    tx.gas_limit = intrinsic_gas(tx.data);
    tx.chain_id = 3;
    return {key, std::move(tx)};
}
}  // namespace

BenchStats summarize(std::span<const double> samples)
{
    if (samples.empty())
        throw std::invalid_argument{"no samples"};
    BenchStats s;
    s.trials = samples.size();
    const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
    s.min_ns = *lo;
    s.max_ns = *hi;
    s.mean_ns = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(s.trials);
    double sq = 0;
    for (const auto x : samples)
        sq += (x - s.mean_ns) * (x - s.mean_ns);
    s.sd_ns = std::sqrt(sq / static_cast<double>(s.trials));
    // Rounding can push the mean a hair outside [min, max] for constant samples.
    s.mean_ns = std::clamp(s.mean_ns, s.min_ns, s.max_ns);
    return s;
}

Measurement measure(size_t trials, const TrialFactory& factory, size_t warmup)
{
    if (trials == 0)
        throw std::invalid_argument{"trials must be at least 1"};
    Session session;
    for (size_t i = 0; i < warmup; ++i)
        factory(i)();

    Measurement m;
    m.samples_ns.reserve(trials);
    for (size_t i = 0; i < trials; ++i)
    {
        auto op = factory(warmup + i);
        const auto t0 = clock::now();
        op();
        const auto t1 = clock::now();
        m.samples_ns.push_back(elapsed_ns(t0, t1));
    }
    m.stats = summarize(m.samples_ns);
    return m;
}

double PhaseBreakdown::total_mean_ns() const noexcept
{
    double total = 0;
    for (const auto& r : rows)
        total += r.mean_ns;
    return total;
}

PhaseBreakdown phase_breakdown(size_t trials, uint64_t seed)
{
    if (trials == 0)
        throw std::invalid_argument{"trials must be at least 1"};
    Session session;
    std::mt19937_64 rng{seed};
    ecdsa::SeededEntropy entropy{seed ^ 0x9e3779b97f4a7c15ULL};

    std::array<double, 4> sums{};
    for (size_t i = 0; i < trials + default_warmup; ++i)
    {
        const auto input = random_input(rng, entropy);

        const auto t0 = clock::now();
        const auto payload = signing_payload(input.tx);
        const auto t1 = clock::now();
        const auto digest = keccak256(payload);
        const auto t2 = clock::now();
        const auto sig = ecdsa::sign(digest, input.key);
        const auto t3 = clock::now();
        const auto raw = encode_signed(attach_signature(input.tx, sig));
        const auto t4 = clock::now();
        keep(raw);

        if (i < default_warmup)
            continue;
        sums[0] += elapsed_ns(t0, t1);
        sums[1] += elapsed_ns(t1, t2);
        sums[2] += elapsed_ns(t2, t3);
        sums[3] += elapsed_ns(t3, t4);
    }

    PhaseBreakdown out;
    out.trials = trials;
    const std::array<const char*, 4> names{"rlp-encode", "keccak256", "ecdsa-sign", "rlp-encode-signed"};
    double total = 0;
    for (size_t p = 0; p < 4; ++p)
    {
        out.rows[p] = {static_cast<int>(p + 2), names[p], sums[p] / static_cast<double>(trials), 0};
        total += out.rows[p].mean_ns;
    }
    for (auto& r : out.rows)
        r.percent = total > 0 ? 100.0 * r.mean_ns / total : 25.0;
    return out;
}

Dispersion timing_dispersion(const std::function<void()>& op, size_t trials, double threshold)
{
    if (trials < 100)
        throw std::invalid_argument{"timing dispersion needs at least 100 trials"};
    const auto m = measure(trials, [&](size_t) { return op; });
    Dispersion d{m.stats, m.stats.mean_ns > 0 ? m.stats.sd_ns / m.stats.mean_ns : 0.0, false};
    d.warning = d.ratio > threshold;
    return d;
}

StorageEstimate estimate_node_storage(double block_count, double avg_header_bytes, double block_interval_seconds)
{
    if (!(block_interval_seconds > 0))
        throw std::invalid_argument{"block interval must be positive"};
    if (!(block_count > 0) || !(avg_header_bytes > 0))
        throw std::invalid_argument{"block count and header size must be positive"};
    constexpr double seconds_per_day = 86400;
    StorageEstimate e;
    e.total_header_bytes = block_count * avg_header_bytes;
    e.daily_blocks = seconds_per_day / block_interval_seconds;
    e.daily_header_bytes = e.daily_blocks * avg_header_bytes;
    return e;
}

std::string format_table(std::span<const ReportRow> rows, std::optional<double> cpu_hz)
{
    std::ostringstream out;
    out << std::fixed << std::setprecision(1);
    out << std::left << std::setw(10) << "Function" << std::right << std::setw(14) << "Min(ns)"
        << std::setw(14) << "Max(ns)" << std::setw(14) << "Mean(ns)" << std::setw(14) << "SD(ns)"
        << std::setw(8) << "Trials";
    if (cpu_hz)
        out << std::setw(12) << "Min(Mcyc)" << std::setw(12) << "Max(Mcyc)" << std::setw(12)
            << "Mean(Mcyc)" << std::setw(12) << "SD(Mcyc)";
    out << '\n';
    for (const auto& r : rows)
    {
        const auto& s = r.stats;
        out << std::left << std::setw(10) << r.op << std::right << std::setw(14) << s.min_ns
            << std::setw(14) << s.max_ns << std::setw(14) << s.mean_ns << std::setw(14) << s.sd_ns
            << std::setw(8) << s.trials;
        if (cpu_hz)
        {
            const double mcyc = *cpu_hz / 1e15;  // ns -> millions of cycles
            out << std::setprecision(2) << std::setw(12) << s.min_ns * mcyc << std::setw(12)
                << s.max_ns * mcyc << std::setw(12) << s.mean_ns * mcyc << std::setw(12)
                << s.sd_ns * mcyc << std::setprecision(1);
        }
        out << '\n';
    }
    return out.str();
}

std::string format_csv(std::span<const ReportRow> rows)
{
    std::ostringstream out;
    out << std::fixed << std::setprecision(1);
    out << "op,min_ns,max_ns,mean_ns,sd_ns,trials\n";
    for (const auto& r : rows)
        out << r.op << ',' << r.stats.min_ns << ',' << r.stats.max_ns << ',' << r.stats.mean_ns << ','
            << r.stats.sd_ns << ',' << r.stats.trials << '\n';
    return out.str();
}

std::string format_phase_table(const PhaseBreakdown& b)
{
    std::ostringstream out;
    out << std::fixed;
    out << std::left << std::setw(7) << "Phase" << std::setw(20) << "Operation" << std::right
        << std::setw(16) << "Mean(ns)" << std::setw(10) << "Perc." << '\n';
    for (const auto& r : b.rows)
        out << std::left << std::setw(7) << r.phase << std::setw(20) << r.name << std::right
            << std::setprecision(1) << std::setw(16) << r.mean_ns << std::setprecision(2)
            << std::setw(9) << r.percent << "%\n";
    return out.str();
}

Measurement measure_named(std::string_view op, size_t trials, uint64_t seed, size_t warmup)
{
    std::mt19937_64 rng{seed};
    ecdsa::SeededEntropy entropy{seed};

    auto random_digest = [&rng] {
        Digest256 d;
        for (auto& b : d)
            b = static_cast<uint8_t>(rng());
        return d;
    };

    if (op == "keygen")
        return measure(trials, [&](size_t) {
            return [&entropy] { keep(ecdsa::keygen(entropy)); };
        }, warmup);
    if (op == "sign")
        return measure(trials, [&](size_t) {
            const auto key = ecdsa::keygen(entropy).secret;
            const auto digest = random_digest();
            return std::function<void()>{[key, digest] { keep(ecdsa::sign(digest, key)); }};
        }, warmup);
    if (op == "verify")
        return measure(trials, [&](size_t) {
            const auto pair = ecdsa::keygen(entropy);
            const auto digest = random_digest();
            const auto sig = ecdsa::sign(digest, pair.secret);
            return std::function<void()>{[pub = pair.public_key, digest, sig] {
                const bool ok = ecdsa::verify(digest, sig, pub);
                keep(ok);
            }};
        }, warmup);
    throw std::invalid_argument{"unknown benchmark operation '" + std::string{op} + "'"};
}
}  // namespace ethacct::bench
