#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "cantorval/conditions.hpp"
#include "cantorval/geometry.hpp"

namespace cantorval {

// A gap of rank n: the open interval G^side_s where |s| = k_n - 1.
struct GapRef {
    TernaryCode code;
    int side = 0;  // 0 = left gap, 1 = right gap
    long rank = 0;

    friend bool operator==(const GapRef& a, const GapRef& b) {
        return a.side == b.side && a.code == b.code;
    }
    friend bool operator<(const GapRef& a, const GapRef& b) {
        if (a.code == b.code) return a.side < b.side;
        return a.code < b.code;
    }
};

inline Interval gap_interval(const ParamSequence& seq, const GapRef& g) {
    return gap(seq, g.code, g.side);
}

// N(i,s): for i=0 the largest j with s_j > 0, for i=1 the largest j with
// s_j < 2; 0 when no such j exists (max over the empty set).
inline long last_index(const TernaryCode& s, int i) {
    for (long j = s.length(); j >= 1; --j) {
        int d = s.digit(j);
        if ((i == 0 && d > 0) || (i == 1 && d < 2)) return j;
    }
    return 0;
}

namespace detail {

// m such that k_m - 1 == len; family roots must sit at such lengths.
inline long rank_of_code_length(const RankIndex& ranks, long len) {
    for (long m = 1; m <= ranks.count(); ++m) {
        if (ranks.k(m) - 1 == len) return m;
        if (ranks.k(m) - 1 > len) break;
    }
    throw PreconditionError("misaligned-code-length",
                            "code length " + std::to_string(len) + " is not k_m - 1 for any rank m");
}

// m such that k_{m-1} <= len < k_m.
inline long enclosing_rank(const RankIndex& ranks, long len) {
    if (len < ranks.k0)
        throw PreconditionError("index-out-of-range", "code shorter than k_0");
    for (long m = 1; m <= ranks.count(); ++m)
        if (len < ranks.k(m)) return m;
    throw PreconditionError("index-out-of-range", "not enough rank indices materialized");
}

}  // namespace detail

// Leftmost (side 0) / rightmost (side 1) gap of rank n in J_t:
// the gap at code t ^ 0^(k_n-|t|-1) resp. t ^ 2^(k_n-|t|-1).
inline GapRef extremal_gap(const RankIndex& ranks, const TernaryCode& t, long n, int side) {
    long kn = ranks.k(n);
    if (kn <= t.length())
        throw PreconditionError("rank-too-small",
                                "k_" + std::to_string(n) + " <= |t|; no rank-" + std::to_string(n) +
                                    " gap inside this interval");
    return GapRef{t.append_run(side == 0 ? 0 : 2, kn - t.length() - 1), side, n};
}

// The recursive gap families G^i_s(m), ..., G^i_s(upToRank).
struct GapFamily {
    TernaryCode origin;
    int side = 0;
    long base_rank = 0;
    std::map<long, std::vector<GapRef>> by_rank;

    std::vector<GapRef> all() const {
        std::vector<GapRef> out;
        for (const auto& [rank, gaps] : by_rank) out.insert(out.end(), gaps.begin(), gaps.end());
        return out;
    }
};

// Materializes G^i_s(n) for n = m..upToRank, where |s| = k_m - 1.
// Each rank-(n+1) layer is the extremal gap of J_s plus, for every member
// G^j_t of an earlier layer, the two extremal gaps flanking it:
// rightmost of J_{t^j} and leftmost of J_{t^(j+1)}. Layer sizes must come
// out as 3^(n-m); a collision would break the measure formula's 3^(n-1)
// factor, so it is surfaced as a structural error.
inline GapFamily family(const ParamSequence& seq, const RankIndex& ranks, const TernaryCode& s,
                        int side, long up_to_rank) {
    (void)seq;
    long m = detail::rank_of_code_length(ranks, s.length());
    if (up_to_rank < m)
        throw PreconditionError("rank-below-m", "family cap below the base rank");
    GapFamily fam;
    fam.origin = s;
    fam.side = side;
    fam.base_rank = m;
    fam.by_rank[m] = {GapRef{s, side, m}};
    for (long n = m; n < up_to_rank; ++n) {
        std::set<GapRef> layer;
        layer.insert(extremal_gap(ranks, s, n + 1, side));
        size_t expected = 1;
        for (long l = m; l <= n; ++l) {
            for (const GapRef& g : fam.by_rank[l]) {
                layer.insert(extremal_gap(ranks, g.code.append(g.side), n + 1, 1));
                layer.insert(extremal_gap(ranks, g.code.append(g.side + 1), n + 1, 0));
                expected += 2;
            }
        }
        if (layer.size() != expected)
            throw StructuralError("family-collision",
                                  "gap family layer at rank " + std::to_string(n + 1) +
                                      " collapsed below 3^(n-m)");
        fam.by_rank[n + 1] = std::vector<GapRef>(layer.begin(), layer.end());
    }
    return fam;
}

// The boundary family G_t: the side-0 family rooted at t padded with 0s and
// the side-1 family rooted at t padded with 2s, out to k_m - 1 where
// k_{m-1} <= |t| < k_m.
inline std::pair<GapFamily, GapFamily> boundary_family(const ParamSequence& seq,
                                                       const RankIndex& ranks,
                                                       const TernaryCode& t, long up_to_rank) {
    long m = detail::enclosing_rank(ranks, t.length());
    long pad = ranks.k(m) - t.length() - 1;
    return {family(seq, ranks, t.append_run(0, pad), 0, up_to_rank),
            family(seq, ranks, t.append_run(2, pad), 1, up_to_rank)};
}

// The extremal gap sequence G^i(s,n): pad with 2i to the next rank
// boundary, then alternate single 1-digits and padding blocks.
inline GapRef extremal_sequence(const RankIndex& ranks, const TernaryCode& s, int side, long n) {
    long m = detail::enclosing_rank(ranks, s.length());
    if (n < m) throw PreconditionError("rank-below-m", "extremal sequence rank below base");
    int pad = side == 0 ? 0 : 2;
    TernaryCode code = s.append_run(pad, ranks.k(m) - s.length() - 1);
    for (long j = m + 1; j <= n; ++j)
        code = code.append(1).append_run(pad, ranks.k(j) - ranks.k(j - 1) - 1);
    return GapRef{code, side, n};
}

// The associated interval J_u of J_s (|s| = k_m - 1): exists when
// N(0,s) lies strictly inside the band (k_{m-1}, k_m); then
// u = (s|(N-1)) ^ (s_N - 1) ^ 2^(k_m-N-1), J_u covers the family G^0_s and
// J_s covers G^1_u.
inline TernaryCode associate(const RankIndex& ranks, const TernaryCode& s) {
    long m = detail::rank_of_code_length(ranks, s.length());
    long N = last_index(s, 0);
    if (N <= ranks.k(m - 1) || N >= ranks.k(m))
        throw PreconditionError("no-associate",
                                "N(0,s) = " + std::to_string(N) + " outside (k_" + std::to_string(m - 1) +
                                    ", k_" + std::to_string(m) + ")");
    return s.restrict(N - 1).append(s.digit(N) - 1).append_run(2, ranks.k(m) - N - 1);
}

// Exact distances and containments behind Claim 1 for an associated pair.
struct CoveringReport {
    long rank = 0;
    Rat gap_separation;    // l(G^0_s) - r(G^1_u)
    Rat right_slack;       // r(J_u) - r(G^0_s)
    Rat left_slack;        // l(G^1_u) - l(J_s)
    Ext margin;            // m_n
    bool bounds_hold = false;       // all three distances >= m_n
    bool containments_hold = false; // G^0_s in J_{u^2} and G^1_u in J_{s^0}
};

inline CoveringReport covering_check(const ParamSequence& seq, const RankIndex& ranks,
                                     const TernaryCode& s, const TernaryCode& u) {
    long m = detail::rank_of_code_length(ranks, s.length());
    TernaryCode expected = associate(ranks, s);
    if (!(expected == u))
        throw PreconditionError("not-associated", "J_u is not the associate of J_s");
    CoveringReport rep;
    rep.rank = m;
    Interval g0s = gap(seq, s, 0);
    Interval g1u = gap(seq, u, 1);
    Interval Js = interval_J(seq, s);
    Interval Ju = interval_J(seq, u);
    rep.gap_separation = g0s.l - g1u.r;
    rep.right_slack = Ju.r - g0s.r;
    rep.left_slack = g1u.l - Js.l;
    rep.margin = margin_m(seq, ranks, m);
    rep.bounds_hold = Ext(rep.gap_separation) >= rep.margin &&
                      Ext(rep.right_slack) >= rep.margin && Ext(rep.left_slack) >= rep.margin;
    Interval Ju2 = interval_J(seq, u.append(2));
    Interval Js0 = interval_J(seq, s.append(0));
    rep.containments_hold = Ju2.contains(g0s) && Js0.contains(g1u);
    return rep;
}

}  // namespace cantorval
