#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cantorval/conditions.hpp"

namespace cantorval {

enum class SetKind { FullInterval, FiniteUnionOfIntervals, CantorSet, Cantorval, Unknown };

enum class Provenance { None, Tw1_1, Tw1_2, Sannami, MainStar, FnEquality };

inline std::string to_string(SetKind k) {
    switch (k) {
        case SetKind::FullInterval: return "FullInterval";
        case SetKind::FiniteUnionOfIntervals: return "FiniteUnionOfIntervals";
        case SetKind::CantorSet: return "CantorSet";
        case SetKind::Cantorval: return "Cantorval";
        case SetKind::Unknown: return "Unknown";
    }
    return "?";
}

inline std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::None: return "none";
        case Provenance::Tw1_1: return "tw1-1";
        case Provenance::Tw1_2: return "tw1-2";
        case Provenance::Sannami: return "sannami";
        case Provenance::MainStar: return "main-star";
        case Provenance::FnEquality: return "fn-equality";
    }
    return "?";
}

// One verified index of a sufficiency condition. For the Cantorval
// condition (*) the margin is m_n - 2*tail_{n+1} (>= 0 required); for the
// equality condition it is 0 exactly when the check passes at that n.
struct ConditionRow {
    long n = 0;
    Ext delta, Delta;
    Ext m;         // m_n, or m'_n for the equality condition
    Ext M;         // M'_n (equality condition only; +inf otherwise unused)
    Rat tail;      // the relevant tail sum
    Ext margin;
    bool ok = false;
};

struct ConditionReport {
    std::vector<ConditionRow> rows;
    bool reduced = false;     // periodic reduction applied past the preperiod
    bool definitive = false;  // scaling identity confirmed, so rows cover all n
    bool holds = false;
    long verified_up_to = 0;
    std::string note;
};

namespace detail {

inline void require_both_sides_infinite(const ParamSequence& seq) {
    if (!seq.eventually_periodic())
        throw PreconditionError("not-eventually-periodic", "condition checks need an infinite tail");
    const Rat third(1, 3);
    bool above = false, at_or_below = false;
    for (const Rat& a : seq.period()) {
        if (a > third) above = true;
        else at_or_below = true;
    }
    if (!above || !at_or_below)
        throw PreconditionError("hypotheses-unsatisfied",
                                "need infinitely many a_n > 1/3 and infinitely many a_n <= 1/3");
}

// Smallest n such that k_{n-shift} lands past the prefix, so every d-index
// used at step n (and later) scales by rho per rank cycle.
inline long first_fully_periodic(const ParamSequence& seq, const RankIndex& ranks, long shift) {
    long n = std::max<long>(1, shift);
    while (ranks.k(n - shift) < seq.prefix_length()) ++n;
    return n;
}

}  // namespace detail

// Condition (*): m_n >= 2 * sum_{i=n+1..inf} (d_{k_i-1} - d_{k_i}) for all
// n. Checked for one full rank cycle past the preperiod; beyond that every
// quantity scales by the same per-cycle factor rho, which is verified
// exactly on the next cycle before the report is marked definitive.
inline ConditionReport condition_star(const ParamSequence& seq) {
    detail::require_both_sides_infinite(seq);
    long cycle = detail::ranks_per_period(seq);
    RankIndex ranks = rank_indices(seq, 64 + 4 * cycle);
    long n_per = detail::first_fully_periodic(seq, ranks, 1);
    long last = n_per + cycle - 1;

    ConditionReport rep;
    rep.reduced = true;
    rep.holds = true;
    for (long n = 1; n <= last; ++n) {
        ConditionRow row;
        row.n = n;
        auto [dl, DL] = delta_bounds(seq, ranks, n);
        row.delta = dl;
        row.Delta = DL;
        row.m = margin_m(seq, ranks, n);
        row.tail = tail_weight_sum(seq, ranks, n + 1);
        row.margin = row.m - 2 * row.tail;
        row.ok = row.margin >= Ext(Rat(0));
        if (!row.ok) rep.holds = false;
        rep.rows.push_back(row);
    }
    // scaling identity: one cycle further, m and tail both multiply by rho
    Rat rho = seq.period_contraction();
    bool scaling_ok = true;
    for (long n = n_per; n <= last; ++n) {
        Ext m_next = margin_m(seq, ranks, n + cycle);
        Rat tail_next = tail_weight_sum(seq, ranks, n + cycle + 1);
        Ext m_here = rep.rows[static_cast<size_t>(n - 1)].m;
        const Rat& tail_here = rep.rows[static_cast<size_t>(n - 1)].tail;
        bool m_scales = m_here.is_finite() ? (m_next == Ext(rho * m_here.value()))
                                           : (m_next == m_here);
        if (!m_scales || tail_next != rho * tail_here) scaling_ok = false;
    }
    rep.definitive = scaling_ok;
    rep.verified_up_to = last;
    if (!scaling_ok) {
        // fall back to a bounded scan; not a certificate
        rep.holds = false;
        rep.note = "periodic scaling identity failed; verified up to n = " + std::to_string(last) +
                   " only";
    }
    return rep;
}

// The equality condition: m'_n = M'_n = sum_{i=n..inf} (d_{k_i-1} - d_{k_i})
// for all n, where
//   m'_n = min{delta_{n-1} - (d_{k_{n-1}-1} - d_{k_{n-1}}), 4 d_{k_{n-1}} - Delta_{n-1}, delta_n},
//   M'_n = max{ same two terms,                                              Delta_n}.
// The first two terms are absent at n = 1 when the rank-0 band is empty.
// (This is the [FN]-style condition; the equivalent recurrence is
// delta_{n+1} = delta_n - (d_{k_n-1} - d_{k_n}) with delta_1 equal to the
// full tail sum, which pins the term indices above.)
inline ConditionReport condition_fn(const ParamSequence& seq) {
    detail::require_both_sides_infinite(seq);
    long cycle = detail::ranks_per_period(seq);
    RankIndex ranks = rank_indices(seq, 64 + 4 * cycle);
    long n_per = std::max<long>(2, detail::first_fully_periodic(seq, ranks, 2));
    long last = n_per + cycle - 1;

    auto row_at = [&](long n) {
        ConditionRow row;
        row.n = n;
        auto [dl, DL] = delta_bounds(seq, ranks, n);
        row.delta = dl;
        row.Delta = DL;
        Ext mp = dl;          // delta_n term
        Ext Mp = DL;          // Delta_n term
        // previous-band terms; at n = 1 the band is {1, ..., k0 - 1}
        long prev_lo = n >= 2 ? ranks.k(n - 2) + 1 : 1;
        long prev_hi = ranks.k(n - 1) - 1;
        auto [dl_prev, DL_prev] = band_extrema(seq, prev_lo, prev_hi);
        if (dl_prev.is_finite()) {
            long kprev = ranks.k(n - 1);
            Ext t1 = Ext(dl_prev.value() - seq.weight(kprev));
            Ext t2 = Ext(4 * seq.d(kprev) - DL_prev.value());
            mp = Ext::min(mp, Ext::min(t1, t2));
            Mp = Ext::max(Mp, Ext::max(t1, t2));
        }
        row.m = mp;
        row.M = Mp;
        row.tail = tail_weight_sum(seq, ranks, n);
        row.ok = mp == Ext(row.tail) && Mp == Ext(row.tail);
        row.margin = Ext(Rat(0));
        return row;
    };

    ConditionReport rep;
    rep.reduced = true;
    rep.holds = true;
    for (long n = 1; n <= last; ++n) {
        ConditionRow row = row_at(n);
        if (!row.ok) rep.holds = false;
        rep.rows.push_back(row);
    }
    Rat rho = seq.period_contraction();
    bool scaling_ok = true;
    for (long n = n_per; n <= last; ++n) {
        ConditionRow next = row_at(n + cycle);
        const ConditionRow& here = rep.rows[static_cast<size_t>(n - 1)];
        bool m_scales = here.m.is_finite() ? next.m == Ext(rho * here.m.value()) : next.m == here.m;
        bool M_scales = here.M.is_finite() ? next.M == Ext(rho * here.M.value()) : next.M == here.M;
        if (!m_scales || !M_scales || next.tail != rho * here.tail) scaling_ok = false;
    }
    rep.definitive = scaling_ok;
    rep.verified_up_to = last;
    if (!scaling_ok) {
        rep.holds = false;
        rep.note = "periodic scaling identity failed; verified up to n = " + std::to_string(last) +
                   " only";
    }
    return rep;
}

struct Verdict {
    SetKind kind = SetKind::Unknown;
    Provenance provenance = Provenance::None;
    std::optional<ConditionReport> witness;
};

// Decision cascade over the sufficiency results. Unknown is an honest
// outcome: the Cantorval conditions are sufficient, not necessary.
inline Verdict classify(const ParamSequence& seq) {
    if (!seq.eventually_periodic())
        throw PreconditionError("not-eventually-periodic", "classification needs an infinite tail");
    const Rat third(1, 3);
    bool all_le = true, all_gt = true, period_has_gt = false, prefix_has_gt = false;
    for (const Rat& a : seq.prefix()) {
        if (a > third) prefix_has_gt = true; else all_gt = false;
        if (a > third) all_le = false;
    }
    for (const Rat& a : seq.period()) {
        if (a > third) period_has_gt = true; else all_gt = false;
        if (a > third) all_le = false;
    }
    if (all_le) return {SetKind::FullInterval, Provenance::Tw1_1, std::nullopt};
    if (!period_has_gt && prefix_has_gt)
        return {SetKind::FiniteUnionOfIntervals, Provenance::Tw1_2, std::nullopt};
    if (all_gt) return {SetKind::CantorSet, Provenance::Sannami, std::nullopt};
    try {
        ConditionReport star = condition_star(seq);
        if (star.holds && star.definitive) return {SetKind::Cantorval, Provenance::MainStar, star};
        ConditionReport fn = condition_fn(seq);
        if (fn.holds && fn.definitive) return {SetKind::Cantorval, Provenance::FnEquality, fn};
    } catch (const PreconditionError&) {
        // hypotheses unsatisfied (e.g. entries equal to 1/3 but none below):
        // no sufficient condition applies
    }
    return {SetKind::Unknown, Provenance::None, std::nullopt};
}

// |C(a)-C(a)| = 2 - 2 * sum_{n>=1} 3^(n-1) (d_{k_n - 1} - 3 d_{k_n}),
// valid once a Cantorval certificate holds with k_0 = 0. The series is
// geometric per rank cycle with ratio 3^cycle * rho, which must be < 1.
inline Rat cantorval_measure(const ParamSequence& seq, const RankIndex& ranks) {
    Verdict v = classify(seq);
    if (v.kind != SetKind::Cantorval)
        throw PreconditionError("formula-not-applicable", "no Cantorval certificate for this sequence");
    if (ranks.k0 != 0)
        throw PreconditionError("formula-not-applicable", "measure formula requires k_0 = 0");
    long cycle = detail::ranks_per_period(seq);
    RankIndex full = rank_indices(seq, 64 + 4 * cycle);
    long n0 = 1;
    while (full.k(n0) < seq.prefix_length() + 1) ++n0;
    Rat rho = seq.period_contraction();
    Rat ratio = rho;
    for (long i = 0; i < cycle; ++i) ratio *= 3;
    if (ratio >= 1) throw PreconditionError("divergent-ratio", "gap series does not decay geometrically");
    Rat head(0);
    Rat pow3(1);
    auto term = [&](long n, const Rat& p3) { return p3 * (seq.d(full.k(n) - 1) - 3 * seq.d(full.k(n))); };
    for (long n = 1; n < n0; ++n) {
        head += term(n, pow3);
        pow3 *= 3;
    }
    Rat block(0);
    for (long n = n0; n < n0 + cycle; ++n) {
        block += term(n, pow3);
        pow3 *= 3;
    }
    return 2 - 2 * (head + block / (1 - ratio));
}

// Corollary region membership for the period-2 family (a1, a2, a1, a2, ...),
// via the exact rational inequality system
//   d_2 + 2 d_1 - 1 >= 2 d_2 (d_1 - d_2)/(1 - d_2)
//   4 d_2 - 3 d_1 + 1 >= 2 d_2 (d_1 - d_2)/(1 - d_2)
// (no square roots; the closed-form boundary curves are plot-only).
inline bool corollary_region(const Rat& a1, const Rat& a2) {
    const Rat third(1, 3);
    if (!(a1 > 0 && a1 < third && a2 > third && a2 < 1))
        throw PreconditionError("domain-violation", "need 0 < a1 < 1/3 < a2 < 1");
    Rat d1 = (1 - a1) / 2;
    Rat d2 = d1 * (1 - a2) / 2;
    Rat rhs = 2 * d2 * (d1 - d2) / (1 - d2);
    return d2 + 2 * d1 - 1 >= rhs && 4 * d2 - 3 * d1 + 1 >= rhs;
}

}  // namespace cantorval
