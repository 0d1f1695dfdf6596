#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <numeric>
#include <thread>
#include <vector>

#include "cantorval/classify.hpp"
#include "cantorval/gapcalc.hpp"
#include "cantorval/geometry.hpp"

namespace cantorval {

// Finite-depth ground truth: the merged union C_n(a) - C_n(a), its gaps
// inside [-1,1], and the exact total measure.
struct DepthSlice {
    long depth = 0;
    IntervalUnion set_union;
    std::vector<Interval> gaps;
    Rat total_measure;
};

struct OracleOptions {
    long depth_cap = 13;  // 3^13 ~ 1.6M codes with full materialization
    unsigned workers = 0; // 0 = hardware concurrency
};

namespace detail {

// One partition of the enumeration: all codes whose first `prefix_len`
// digits decode from indices [begin, end), suffixes exhausted. Sums are
// integers scaled by the common denominator; T is int64 when everything
// fits, cpp_int otherwise.
template <typename T>
IntervalUnion enumerate_partition(const std::vector<T>& weights, const T& base, const T& len,
                                  long prefix_len, long depth, long begin, long end) {
    long suffix_count = 1;
    for (long i = prefix_len; i < depth; ++i) suffix_count *= 3;
    std::vector<T> sums;
    sums.reserve(static_cast<size_t>(end - begin) * static_cast<size_t>(suffix_count));
    std::vector<int> digits(static_cast<size_t>(depth), 0);
    for (long idx = begin; idx < end; ++idx) {
        long rest = idx;
        T acc = base;
        for (long i = prefix_len - 1; i >= 0; --i) {
            int dgt = static_cast<int>(rest % 3);
            rest /= 3;
            acc += T(dgt) * weights[static_cast<size_t>(i)];
        }
        // exhaust the suffix with an explicit odometer
        std::fill(digits.begin() + prefix_len, digits.end(), 0);
        std::vector<T> partial(static_cast<size_t>(depth - prefix_len + 1));
        partial[0] = acc;
        for (long i = prefix_len; i < depth; ++i) partial[static_cast<size_t>(i - prefix_len + 1)] = partial[static_cast<size_t>(i - prefix_len)];
        while (true) {
            sums.push_back(partial[static_cast<size_t>(depth - prefix_len)]);
            long i = depth - 1;
            while (i >= prefix_len && digits[static_cast<size_t>(i)] == 2) {
                digits[static_cast<size_t>(i)] = 0;
                --i;
            }
            if (i < prefix_len) break;
            ++digits[static_cast<size_t>(i)];
            // recompute partial sums from position i on
            for (long j = i; j < depth; ++j)
                partial[static_cast<size_t>(j - prefix_len + 1)] =
                    partial[static_cast<size_t>(j - prefix_len)] +
                    T(digits[static_cast<size_t>(j)]) * weights[static_cast<size_t>(j)];
        }
    }
    std::sort(sums.begin(), sums.end());
    // sweep into maximal components; touching counts as connected
    std::vector<std::pair<T, T>> comps;
    for (const T& x : sums) {
        if (!comps.empty() && x <= comps.back().second)
            comps.back().second = std::max(comps.back().second, T(x + len));
        else
            comps.emplace_back(x, x + len);
    }
    std::vector<Interval> parts;
    parts.reserve(comps.size());
    for (auto& [l, r] : comps) parts.emplace_back(Rat(Int(l)), Rat(Int(r)));
    return IntervalUnion(std::move(parts));
}

inline long pow3(long e) {
    long v = 1;
    while (e-- > 0) v *= 3;
    return v;
}

}  // namespace detail

// Enumerates all 3^depth intervals J_s, merges them, and reports the slice.
// Endpoints are generated over a common denominator so the hot loop is
// integer-only; partitions by code prefix fan out to `workers` threads and
// are reduced in deterministic order.
inline DepthSlice enumerate_difference(const ParamSequence& seq, long depth,
                                       const OracleOptions& opts = {}) {
    if (depth < 0 || depth > opts.depth_cap)
        throw PreconditionError("depth-cap-exceeded",
                                "depth " + std::to_string(depth) + " exceeds cap " +
                                    std::to_string(opts.depth_cap));
    // common denominator for all weights and the interval length
    std::vector<Rat> w(static_cast<size_t>(depth));
    Int den = denominator(Rat(2) * seq.d(depth));
    for (long i = 1; i <= depth; ++i) {
        w[static_cast<size_t>(i - 1)] = seq.weight(i);
        den = boost::multiprecision::lcm(den, denominator(w[static_cast<size_t>(i - 1)]));
    }
    std::vector<Int> wi(static_cast<size_t>(depth));
    for (long i = 0; i < depth; ++i) wi[static_cast<size_t>(i)] = numerator(w[static_cast<size_t>(i)] * den);
    Int base = -den;
    Int len = numerator(Rat(2) * seq.d(depth) * den);

    unsigned workers = opts.workers ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
    long prefix_len = 0;
    while (prefix_len < depth && detail::pow3(prefix_len) < static_cast<long>(workers) * 4) ++prefix_len;
    long partitions = detail::pow3(prefix_len);

    bool fits64 = den < (Int(1) << 60);
    auto run = [&](auto tag) {
        using T = decltype(tag);
        std::vector<T> tw(wi.size());
        for (size_t i = 0; i < wi.size(); ++i) tw[i] = static_cast<T>(wi[i]);
        T tbase = static_cast<T>(base);
        T tlen = static_cast<T>(len);
        std::vector<std::future<IntervalUnion>> futs;
        long chunk = (partitions + workers - 1) / workers;
        for (long b = 0; b < partitions; b += chunk) {
            long e = std::min(partitions, b + chunk);
            futs.push_back(std::async(std::launch::async, [&, b, e] {
                return detail::enumerate_partition<T>(tw, tbase, tlen, prefix_len, depth, b, e);
            }));
        }
        IntervalUnion acc;
        for (auto& f : futs) acc = IntervalUnion::merge(acc, f.get());
        return acc;
    };

    IntervalUnion scaled = fits64 ? run(std::int64_t{}) : run(Int{});
    // unscale
    std::vector<Interval> parts;
    parts.reserve(scaled.parts().size());
    Rat d(den);
    for (const Interval& p : scaled.parts()) parts.emplace_back(p.l / d, p.r / d);
    DepthSlice slice;
    slice.depth = depth;
    slice.set_union = IntervalUnion(std::move(parts));
    slice.gaps = slice.set_union.gaps();
    slice.total_measure = slice.set_union.measure();
    return slice;
}

// Partial gap-mass sum  sum_{n=1..N} 2 * 3^(n-1) (d_{k_n - 1} - 3 d_{k_n}).
inline Rat gap_mass_partial_sum(const ParamSequence& seq, const RankIndex& ranks, long N) {
    Rat s(0);
    Rat p3(1);
    for (long n = 1; n <= N; ++n) {
        s += 2 * p3 * (seq.d(ranks.k(n) - 1) - 3 * seq.d(ranks.k(n)));
        p3 *= 3;
    }
    return s;
}

// Oracle measure at the rank depth k_N.
inline Rat measure_at_depth(const ParamSequence& seq, const RankIndex& ranks, long N,
                            const OracleOptions& opts = {}) {
    return enumerate_difference(seq, ranks.k(N), opts).total_measure;
}

// Membership in C_depth - C_depth by branch and bound over digits: a
// prefix survives iff its interval J_{s|r} still contains x. Distinct
// surviving prefixes with equal left endpoints collapse.
inline bool contains(const ParamSequence& seq, long depth, const Rat& x) {
    if (x < -1 || x > 1) throw PreconditionError("domain-violation", "membership point outside [-1,1]");
    std::vector<Rat> lefts = {Rat(-1)};
    for (long r = 1; r <= depth; ++r) {
        Rat w = seq.weight(r);
        Rat two_d = 2 * seq.d(r);
        std::vector<Rat> next;
        for (const Rat& l : lefts)
            for (int dgt = 0; dgt <= 2; ++dgt) {
                Rat nl = l + dgt * w;
                if (nl <= x && x <= nl + two_d) next.push_back(nl);
            }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (next.empty()) return false;
        lefts = std::move(next);
    }
    return true;
}

// Largest eps with (-eps, eps) inside the depth slice: the distance from 0
// to the boundary of the component containing it.
inline Rat origin_interior_radius(const ParamSequence& seq, long depth,
                                  const OracleOptions& opts = {}) {
    DepthSlice slice = enumerate_difference(seq, depth, opts);
    for (const Interval& p : slice.set_union.parts())
        if (p.l <= 0 && 0 <= p.r) return std::min(p.r, Rat(-p.l));
    throw StructuralError("structural-error", "0 missing from the difference approximant");
}

struct ContainmentReport {
    long rank_cap = 0;
    bool covered = false;
    std::vector<Interval> uncovered;  // parts of J_t minus family gaps not covered at depth k_N
};

// Exact finite-depth check of the containment behind the main theorem:
// J_t minus the boundary-family gaps of ranks <= N must lie inside the
// union of the depth-k_N intervals extending t.
inline ContainmentReport verify_containment(const ParamSequence& seq, const RankIndex& ranks,
                                            const TernaryCode& t, long N) {
    Verdict v = classify(seq);
    if (v.kind != SetKind::Cantorval)
        throw PreconditionError("certificate-missing", "no Cantorval certificate for this sequence");
    auto [fam0, fam1] = boundary_family(seq, ranks, t, N);
    std::vector<Interval> gaps;
    for (const GapRef& g : fam0.all()) gaps.push_back(gap_interval(seq, g));
    for (const GapRef& g : fam1.all()) gaps.push_back(gap_interval(seq, g));
    IntervalUnion remainder = IntervalUnion({interval_J(seq, t)}).subtract_open(std::move(gaps));
    IntervalUnion cover = detail::enumerate_J_union(seq, t, ranks.k(N));
    ContainmentReport rep;
    rep.rank_cap = N;
    rep.covered = true;
    for (const Interval& p : remainder.parts()) {
        if (!cover.contains(p)) {
            rep.covered = false;
            rep.uncovered.push_back(p);
        }
    }
    return rep;
}

struct CatalogReport {
    long rank_cap = 0;
    size_t expected_count = 0;
    size_t actual_count = 0;
    bool ok = false;
    std::string mismatch;  // description of the first offending gap, if any
};

// At depth k_N the oracle's gaps must be exactly the boundary-family gaps
// of ranks <= N (endpoint-exact set equality, count sum 2*3^(n-1)).
inline CatalogReport gap_catalog_crosscheck(const ParamSequence& seq, const RankIndex& ranks, long N,
                                            const OracleOptions& opts = {}) {
    Verdict v = classify(seq);
    if (v.kind != SetKind::Cantorval || ranks.k0 != 0)
        throw PreconditionError("certificate-missing",
                                "catalog crosscheck needs a Cantorval certificate with k_0 = 0");
    DepthSlice slice = enumerate_difference(seq, ranks.k(N), opts);
    auto [fam0, fam1] = boundary_family(seq, ranks, TernaryCode{}, N);
    std::vector<Interval> expected;
    for (const GapRef& g : fam0.all()) expected.push_back(gap_interval(seq, g));
    for (const GapRef& g : fam1.all()) expected.push_back(gap_interval(seq, g));
    std::sort(expected.begin(), expected.end(),
              [](const Interval& a, const Interval& b) { return a.l < b.l; });

    CatalogReport rep;
    rep.rank_cap = N;
    rep.actual_count = slice.gaps.size();
    for (long n = 1; n <= N; ++n) rep.expected_count += 2 * static_cast<size_t>(detail::pow3(n - 1));
    rep.ok = expected.size() == rep.expected_count && slice.gaps.size() == expected.size();
    if (!rep.ok) {
        rep.mismatch = "gap count mismatch: family " + std::to_string(expected.size()) + ", oracle " +
                       std::to_string(slice.gaps.size());
        return rep;
    }
    for (size_t i = 0; i < expected.size(); ++i) {
        if (!(expected[i].l == slice.gaps[i].l && expected[i].r == slice.gaps[i].r)) {
            rep.ok = false;
            rep.mismatch = "gap " + std::to_string(i) + " differs: family (" +
                           rat_to_string(expected[i].l) + ", " + rat_to_string(expected[i].r) +
                           ") vs oracle (" + rat_to_string(slice.gaps[i].l) + ", " +
                           rat_to_string(slice.gaps[i].r) + ")";
            return rep;
        }
    }
    return rep;
}

}  // namespace cantorval
