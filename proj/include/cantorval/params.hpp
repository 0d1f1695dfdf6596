#pragma once

#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "cantorval/rational.hpp"

namespace cantorval {

// Eventually periodic parameter sequence a = (a_n), every entry in (0,1).
// The sequence is prefix followed by the period repeated forever. An empty
// period restricts the sequence to finitely many terms; only depth-bounded
// operations accept such sequences.
class ParamSequence {
public:
    ParamSequence(std::vector<Rat> prefix, std::vector<Rat> period)
        : prefix_(std::move(prefix)), period_(std::move(period)), memo_(std::make_shared<Memo>()) {
        for (const Rat& a : prefix_) check_entry(a);
        for (const Rat& a : period_) check_entry(a);
        memo_->d.push_back(Rat(1));  // d_0 = |I| = 1
    }

    static ParamSequence constant(const Rat& a) { return ParamSequence({}, {a}); }

    const std::vector<Rat>& prefix() const { return prefix_; }
    const std::vector<Rat>& period() const { return period_; }
    bool eventually_periodic() const { return !period_.empty(); }
    long prefix_length() const { return static_cast<long>(prefix_.size()); }
    long period_length() const { return static_cast<long>(period_.size()); }

    // a_n, 1-based.
    Rat ratio(long n) const {
        if (n < 1) throw PreconditionError("index-out-of-range", "ratio index must be >= 1");
        long p = prefix_length();
        if (n <= p) return prefix_[static_cast<size_t>(n - 1)];
        if (period_.empty())
            throw PreconditionError("index-out-of-range",
                                    "finite sequence has only " + std::to_string(p) + " terms");
        return period_[static_cast<size_t>((n - p - 1) % period_length())];
    }

    // d_n = prod_{i<=n} (1-a_i)/2, memoized; d_0 = 1.
    Rat d(long n) const {
        if (n < 0) throw PreconditionError("index-out-of-range", "d index must be >= 0");
        std::lock_guard<std::mutex> lock(memo_->mu);
        auto& d = memo_->d;
        while (static_cast<long>(d.size()) <= n) {
            long i = static_cast<long>(d.size());
            d.push_back(d.back() * lambda(i));
        }
        return d[static_cast<size_t>(n)];
    }

    // lambda_n = (1-a_n)/2, always in (0, 1/2).
    Rat lambda(long n) const { return (1 - ratio(n)) / 2; }

    // Endpoint-difference weight d_{n-1} - d_n, always positive.
    Rat weight(long n) const {
        if (n < 1) throw PreconditionError("index-out-of-range", "weight index must be >= 1");
        return d(n - 1) - d(n);
    }

    // Contraction of d over one full period.
    Rat period_contraction() const {
        if (period_.empty())
            throw PreconditionError("not-eventually-periodic", "no period to contract over");
        Rat rho(1);
        for (const Rat& a : period_) rho *= (1 - a) / 2;
        return rho;
    }

private:
    struct Memo {
        std::mutex mu;
        std::vector<Rat> d;
    };

    static void check_entry(const Rat& a) {
        if (a <= 0 || a >= 1)
            throw PreconditionError("entry-out-of-range",
                                    "sequence entry " + rat_to_string(a) + " is not in (0,1)");
    }

    std::vector<Rat> prefix_;
    std::vector<Rat> period_;
    std::shared_ptr<Memo> memo_;  // shared across copies; append-only under lock
};

// The rank structure of a sequence: k0 is the smallest index with
// a_{k0+1} < 1/3, and ks lists the indices j > k0 with a_j > 1/3 in
// increasing order (these are the refinement steps that create gaps).
struct RankIndex {
    long k0 = 0;
    std::vector<long> ks;  // ks[i] = k_{i+1}

    // k_n with the k_0 convention: k(0) = k0, k(n) = ks[n-1].
    long k(long n) const {
        if (n == 0) return k0;
        if (n < 1 || n > static_cast<long>(ks.size()))
            throw PreconditionError("index-out-of-range",
                                    "rank index " + std::to_string(n) + " not materialized");
        return ks[static_cast<size_t>(n - 1)];
    }

    long count() const { return static_cast<long>(ks.size()); }
};

// Builds the rank structure with the first `count` rank indices.
inline RankIndex rank_indices(const ParamSequence& seq, long count) {
    if (!seq.eventually_periodic())
        throw PreconditionError("not-eventually-periodic", "rank indices need an infinite tail");
    const Rat third(1, 3);
    bool period_has_above = false;
    for (const Rat& a : seq.period())
        if (a > third) period_has_above = true;
    if (!period_has_above)
        throw PreconditionError("no-index-above-one-third",
                                "no period entry exceeds 1/3; Theorem on finite unions applies");
    // Minimal k0: smallest j >= 0 with a_{j+1} < 1/3. Searching one prefix
    // plus one period covers all distinct entries.
    long horizon = seq.prefix_length() + seq.period_length();
    long k0 = -1;
    for (long j = 0; j < horizon; ++j) {
        if (seq.ratio(j + 1) < third) {
            k0 = j;
            break;
        }
    }
    if (k0 < 0)
        throw PreconditionError("no-k0", "no entry is strictly below 1/3");
    RankIndex ranks;
    ranks.k0 = k0;
    ranks.ks.reserve(static_cast<size_t>(count));
    for (long j = k0 + 1; static_cast<long>(ranks.ks.size()) < count; ++j)
        if (seq.ratio(j) > third) ranks.ks.push_back(j);
    return ranks;
}

namespace detail {

// Number of rank indices contributed by one period.
inline long ranks_per_period(const ParamSequence& seq) {
    const Rat third(1, 3);
    long c = 0;
    for (const Rat& a : seq.period())
        if (a > third) ++c;
    return c;
}

}  // namespace detail

// Exact tail sum  sum_{i=from}^{inf} (d_{k_i - 1} - d_{k_i}).
// Past the preperiod the terms scale by rho = period contraction once per
// rank cycle, so the tail is a finite head plus a geometric block sum.
inline Rat tail_weight_sum(const ParamSequence& seq, const RankIndex& ranks, long from) {
    if (!seq.eventually_periodic())
        throw PreconditionError("not-eventually-periodic", "tail sum needs an infinite tail");
    if (from < 1) throw PreconditionError("index-out-of-range", "tail sum start must be >= 1");
    long cycle = detail::ranks_per_period(seq);
    long prefix_len = seq.prefix_length();
    // Make sure enough rank indices are on hand.
    RankIndex full = ranks;
    auto ensure = [&](long n) {
        if (n > full.count()) full = rank_indices(seq, n + cycle);
    };
    // First index i0 >= from whose rank index sits past the prefix, so that
    // k_{i0+cycle} = k_{i0} + period and d scales by rho.
    long i0 = from;
    ensure(i0);
    while (full.k(i0) < prefix_len + 1) {
        ++i0;
        ensure(i0);
    }
    ensure(i0 + cycle);
    Rat head(0);
    for (long i = from; i < i0; ++i) head += seq.weight(full.k(i));
    Rat block(0);
    for (long i = i0; i < i0 + cycle; ++i) block += seq.weight(full.k(i));
    Rat rho = seq.period_contraction();
    return head + block / (1 - rho);
}

}  // namespace cantorval
