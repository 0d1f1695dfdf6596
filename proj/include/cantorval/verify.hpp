#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cantorval/oracle.hpp"

namespace cantorval {

struct CheckResult {
    enum class Status { Pass, Fail, Skip };
    std::string name;
    Status status = Status::Pass;
    std::string detail;

    bool failed() const { return status == Status::Fail; }
};

struct VerifyOptions {
    long depth = 5;       // enumeration depth for slice-based checks
    long extra_ranks = 3; // how far past the base rank the lemma checks go
    unsigned seed = 1;
    int samples = 40;     // random codes / points per check
};

namespace detail {

class CheckRunner {
public:
    explicit CheckRunner(std::vector<CheckResult>& out) : out_(out) {}

    void run(const std::string& name, const std::function<void()>& body) {
        CheckResult res;
        res.name = name;
        try {
            body();
        } catch (const SkipCheck& s) {
            res.status = CheckResult::Status::Skip;
            res.detail = s.reason;
        } catch (const std::exception& e) {
            res.status = CheckResult::Status::Fail;
            res.detail = e.what();
        }
        out_.push_back(std::move(res));
    }

    struct SkipCheck {
        std::string reason;
    };

    static void require(bool cond, const std::string& what) {
        if (!cond) throw StructuralError("check-failed", what);
    }
    [[noreturn]] static void skip(const std::string& why) { throw SkipCheck{why}; }

private:
    std::vector<CheckResult>& out_;
};

inline TernaryCode random_code(std::mt19937& rng, long len) {
    std::uniform_int_distribution<int> dgt(0, 2);
    std::vector<int> ds(static_cast<size_t>(len));
    for (int& d : ds) d = dgt(rng);
    return TernaryCode(std::move(ds));
}

inline std::vector<TernaryCode> all_codes(long len) {
    std::vector<TernaryCode> out;
    long total = pow3(len);
    for (long idx = 0; idx < total; ++idx) {
        std::vector<int> ds(static_cast<size_t>(len));
        long rest = idx;
        for (long i = len - 1; i >= 0; --i) {
            ds[static_cast<size_t>(i)] = static_cast<int>(rest % 3);
            rest /= 3;
        }
        out.emplace_back(std::move(ds));
    }
    return out;
}

}  // namespace detail

// Named structural checks of the interval calculus, the gap taxonomy and
// the oracle, against one sequence. Rank-dependent checks are skipped when
// the sequence has no rank structure.
inline std::vector<CheckResult> verify_suite(const ParamSequence& seq, const VerifyOptions& opts = {}) {
    using R = detail::CheckRunner;
    std::vector<CheckResult> results;
    R runner(results);
    std::mt19937 rng(opts.seed);
    const long depth = opts.depth;

    runner.run("prop-length-2d", [&] {
        for (int i = 0; i < opts.samples; ++i) {
            long len = static_cast<long>(rng() % (depth + 1));
            TernaryCode s = detail::random_code(rng, len);
            R::require(interval_J(seq, s).length() == 2 * seq.d(len), "|J_s| != 2 d_n at " + s.str());
        }
    });

    runner.run("prop-padding-endpoints", [&] {
        for (int i = 0; i < opts.samples; ++i) {
            long len = static_cast<long>(rng() % depth);
            long k = 1 + static_cast<long>(rng() % 3);
            TernaryCode s = detail::random_code(rng, len);
            Interval base = interval_J(seq, s);
            R::require(interval_J(seq, s.append_run(0, k)).l == base.l, "0-padding moved l");
            R::require(interval_J(seq, s.append_run(1, k)).centre() == base.centre(),
                       "1-padding moved centre");
            R::require(interval_J(seq, s.append_run(2, k)).r == base.r, "2-padding moved r");
        }
    });

    runner.run("prop-endpoint-differences", [&] {
        for (int i = 0; i < opts.samples; ++i) {
            long len = 1 + static_cast<long>(rng() % depth);
            TernaryCode s = detail::random_code(rng, len);
            TernaryCode u = detail::random_code(rng, len);
            Rat expect(0);
            for (long r = 1; r <= len; ++r) expect += (s.digit(r) - u.digit(r)) * seq.weight(r);
            Interval js = interval_J(seq, s), ju = interval_J(seq, u);
            R::require(js.l - ju.l == expect, "l-difference formula");
            R::require(js.centre() - ju.centre() == expect, "c-difference formula");
            R::require(js.r - ju.r == expect, "r-difference formula");
        }
    });

    runner.run("prop-gap-overlap-endpoints", [&] {
        for (int i = 0; i < opts.samples; ++i) {
            long len = static_cast<long>(rng() % depth);
            TernaryCode s = detail::random_code(rng, len);
            auto kids = children(seq, s);
            Rat width3 = seq.d(len) - 3 * seq.d(len + 1);
            if (seq.ratio(len + 1) > Rat(1, 3)) {
                Interval g0 = gap(seq, s, 0), g1 = gap(seq, s, 1);
                R::require(g0.l == kids[0].r && g0.r == kids[1].l, "G^0 endpoints");
                R::require(g1.l == kids[1].r && g1.r == kids[2].l, "G^1 endpoints");
                R::require(g0.length() == width3 && g1.length() == width3, "gap width d_n - 3d_{n+1}");
            } else {
                Interval z0 = overlap(seq, s, 0), z1 = overlap(seq, s, 1);
                R::require(z0.l == kids[1].l && z0.r == kids[0].r, "Z^0 endpoints");
                R::require(z1.l == kids[2].l && z1.r == kids[1].r, "Z^1 endpoints");
                R::require(z0.length() == -width3 && z1.length() == -width3,
                           "overlap width 3d_{n+1} - d_n");
            }
        }
    });

    runner.run("children-tile-parent", [&] {
        for (int i = 0; i < opts.samples; ++i) {
            long len = static_cast<long>(rng() % depth);
            TernaryCode s = detail::random_code(rng, len);
            Interval parent = interval_J(seq, s);
            auto kids = children(seq, s);
            for (int c = 0; c < 3; ++c) {
                R::require(parent.contains(kids[c]), "child escapes parent");
                R::require(kids[c] == interval_J(seq, s.append(c)), "recursive child != closed form");
            }
            IntervalUnion merged({kids[0], kids[1], kids[2]});
            if (seq.ratio(len + 1) > Rat(1, 3)) {
                R::require(merged.parts().size() == 3, "children should leave two gaps");
            } else {
                R::require(merged.parts().size() == 1 && merged.parts()[0] == parent,
                           "children should tile the parent exactly");
            }
        }
    });

    runner.run("refine-invariance", [&] {
        for (long n = 1; n < depth; ++n) {
            long k = 0;
            while (n + k + 1 <= depth && !(seq.ratio(n + k + 1) > Rat(1, 3))) ++k;
            if (k > 0) {
                R::require(refine_invariance_check(seq, n, k), "depth-invariance under small ratios");
                return;
            }
        }
        R::skip("no window with a_j <= 1/3 within depth");
    });

    std::vector<DepthSlice> slices;
    for (long n = 0; n <= depth; ++n) slices.push_back(enumerate_difference(seq, n));

    runner.run("nesting", [&] {
        for (long n = 0; n < depth; ++n)
            R::require(slices[static_cast<size_t>(n)].set_union.covers(
                           slices[static_cast<size_t>(n + 1)].set_union),
                       "depth " + std::to_string(n + 1) + " not nested in depth " + std::to_string(n));
    });

    runner.run("negation-symmetry", [&] {
        for (const DepthSlice& slice : slices) {
            const auto& parts = slice.set_union.parts();
            for (size_t i = 0; i < parts.size(); ++i) {
                const Interval& mirror = parts[parts.size() - 1 - i];
                R::require(parts[i].l == -mirror.r && parts[i].r == -mirror.l,
                           "slice not symmetric under negation");
            }
        }
    });

    runner.run("sumset-shift-identity", [&] {
        long n = std::min<long>(depth, 3);
        // depth-n sumset approximant: all I_t + I_p
        std::vector<Interval> parts;
        long total = detail::pow3(0);
        (void)total;
        std::vector<BinaryCode> ts;
        for (long idx = 0; idx < (1L << n); ++idx) {
            std::vector<int> ds(static_cast<size_t>(n));
            for (long i = 0; i < n; ++i) ds[static_cast<size_t>(i)] = (idx >> (n - 1 - i)) & 1;
            ts.emplace_back(std::move(ds));
        }
        Rat dlen = seq.d(n);
        for (const BinaryCode& t : ts)
            for (const BinaryCode& p : ts) {
                Rat l = left_I(seq, t) + left_I(seq, p);
                parts.emplace_back(l, l + 2 * dlen);
            }
        IntervalUnion sumset(std::move(parts));
        std::vector<Interval> shifted;
        for (const Interval& p : slices[static_cast<size_t>(n)].set_union.parts())
            shifted.emplace_back(p.l + 1, p.r + 1);
        R::require(sumset == IntervalUnion(std::move(shifted)), "C_n+C_n != (C_n-C_n)+1");
    });

    runner.run("contains-vs-enumeration", [&] {
        const DepthSlice& slice = slices.back();
        std::uniform_int_distribution<long> num(-1000, 1000);
        for (int i = 0; i < 1000; ++i) {
            Rat x(num(rng), 1000);
            R::require(contains(seq, depth, x) == slice.set_union.contains(x),
                       "membership mismatch at " + rat_to_string(x));
        }
        R::require(contains(seq, depth, Rat(0)), "0 must always be a member");
        R::require(contains(seq, depth, Rat(1)), "1 must always be a member");
    });

    // ---- rank-dependent checks ----
    RankIndex ranks;
    bool have_ranks = true;
    try {
        ranks = rank_indices(seq, 64);
    } catch (const PreconditionError&) {
        have_ranks = false;
    }
    auto need_ranks = [&] {
        if (!have_ranks) R::skip("sequence has no rank structure");
    };

    runner.run("family-structure", [&] {
        need_ranks();
        long m = 1;
        TernaryCode root = detail::random_code(rng, ranks.k(m) - 1);
        for (int side = 0; side <= 1; ++side) {
            GapFamily fam = family(seq, ranks, root, side, m + opts.extra_ranks);
            long expected = 1;
            for (long n = m; n <= m + opts.extra_ranks; ++n) {
                R::require(static_cast<long>(fam.by_rank[n].size()) == expected,
                           "family layer size != 3^(n-m)");
                expected *= 3;
            }
            // gaps pairwise disjoint, all inside J_root
            Interval parent = interval_J(seq, root);
            std::vector<Interval> gaps;
            for (const GapRef& g : fam.all()) gaps.push_back(gap_interval(seq, g));
            std::sort(gaps.begin(), gaps.end(),
                      [](const Interval& a, const Interval& b) { return a.l < b.l; });
            for (size_t i = 0; i < gaps.size(); ++i) {
                R::require(parent.contains(gaps[i]), "family gap escapes its root interval");
                if (i) R::require(gaps[i - 1].r <= gaps[i].l, "family gaps overlap");
            }
        }
    });

    runner.run("lemma-monotone-extremal-gaps", [&] {
        need_ranks();
        for (int i = 0; i < 6; ++i) {
            long len = static_cast<long>(rng() % (ranks.k(2)));
            if (len < ranks.k0) len = ranks.k0;
            TernaryCode s = detail::random_code(rng, len);
            long m = detail::enclosing_rank(ranks, len);
            Interval js = interval_J(seq, s);
            Rat running(0);
            Interval prev0, prev1;
            for (long n = m; n <= m + opts.extra_ranks; ++n) {
                Interval g0 = gap_interval(seq, extremal_sequence(ranks, s, 0, n));
                Interval g1 = gap_interval(seq, extremal_sequence(ranks, s, 1, n));
                running += seq.weight(ranks.k(n));
                R::require(g0.r == js.l + running, "eq (rG) fails");
                R::require(g1.l == js.r - running, "eq (lG) fails");
                if (n > m) {
                    R::require(g0.r - prev0.r == seq.weight(ranks.k(n)), "eq (r) fails");
                    R::require(prev1.l - g1.l == seq.weight(ranks.k(n)), "eq (r), right side, fails");
                    R::require(g0.l > prev0.l && g0.r > prev0.r, "G^0(s,n) not increasing");
                    R::require(g1.l < prev1.l && g1.r < prev1.r, "G^1(s,n) not decreasing");
                }
                prev0 = g0;
                prev1 = g1;
            }
        }
    });

    runner.run("lemma-family-disjunctions", [&] {
        need_ranks();
        long m = 1;
        if (ranks.k(m) - 1 > 6) R::skip("rank-1 codes too long for exhaustive family checks");
        TernaryCode s = detail::random_code(rng, ranks.k(m) - 1);
        Interval g0s = gap(seq, s, 0);
        Interval g1s = gap(seq, s, 1);
        for (long n = m + 1; n <= m + opts.extra_ranks; ++n) {
            Interval ext0 = gap_interval(seq, extremal_sequence(ranks, s, 0, n));
            Interval ext1 = gap_interval(seq, extremal_sequence(ranks, s, 1, n));
            Interval ext0_s0 = gap_interval(seq, extremal_sequence(ranks, s.append(0), 0, n));
            Interval ext1_s0 = gap_interval(seq, extremal_sequence(ranks, s.append(0), 1, n));
            Interval ext0_s2 = gap_interval(seq, extremal_sequence(ranks, s.append(2), 0, n));
            Interval ext1_s2 = gap_interval(seq, extremal_sequence(ranks, s.append(2), 1, n));
            // (l1) and (l2)
            R::require(ext1_s0.r < g0s.l && g0s.r < ext0.l, "ineq (l1) fails");
            R::require(ext1.r < g1s.l && g1s.r < ext0_s2.l, "ineq (l2) fails");
            // disjunctions over the full families
            GapFamily fam0 = family(seq, ranks, s, 0, n);
            for (const GapRef& gr : fam0.by_rank[n]) {
                Interval g = gap_interval(seq, gr);
                bool first = g.r <= ext0_s0.r;
                bool second = ext1_s0.l <= g.l && g.r <= ext0.r;
                R::require(first || second, "disjunction (1) fails at " + gr.code.str());
            }
            GapFamily fam1 = family(seq, ranks, s, 1, n);
            for (const GapRef& gr : fam1.by_rank[n]) {
                Interval g = gap_interval(seq, gr);
                bool first = g.l >= ext1_s2.l;
                bool second = ext1.l <= g.l && g.r <= ext0_s2.r;
                R::require(first || second, "disjunction (2) fails at " + gr.code.str());
            }
        }
    });

    runner.run("lemma-boundary-family-membership", [&] {
        need_ranks();
        // G^i_s not in the boundary family of J_t forces N(i,s) > |t|
        long t_len = ranks.k0;
        long n_max = 1;
        while (n_max + 1 <= ranks.count() && ranks.k(n_max + 1) - 1 <= 5) ++n_max;
        TernaryCode t = detail::random_code(rng, t_len);
        auto [fam0, fam1] = boundary_family(seq, ranks, t, n_max);
        std::set<GapRef> members;
        for (const GapRef& g : fam0.all()) members.insert(g);
        for (const GapRef& g : fam1.all()) members.insert(g);
        for (long n = 1; n <= n_max; ++n) {
            for (const TernaryCode& s : detail::all_codes(ranks.k(n) - 1)) {
                if (!s.extends(t)) continue;
                for (int i = 0; i <= 1; ++i) {
                    if (!members.count(GapRef{s, i, n}))
                        R::require(last_index(s, i) > t_len,
                                   "gap outside the boundary family with N(i,s) <= |t|");
                }
            }
        }
    });

    runner.run("claim-covering-distances", [&] {
        need_ranks();
        long n = 1;
        while (n <= ranks.count() && ranks.k(n) - 1 <= 5) {
            for (const TernaryCode& s : detail::all_codes(ranks.k(n) - 1)) {
                long N = last_index(s, 0);
                if (N <= ranks.k(n - 1) || N >= ranks.k(n)) continue;
                TernaryCode u = associate(ranks, s);
                R::require(last_index(u, 1) == N, "associate does not preserve N");
                CoveringReport rep = covering_check(seq, ranks, s, u);
                R::require(rep.bounds_hold, "Claim-1 distance bound fails at " + s.str());
                if (rep.margin > Ext(Rat(0)))
                    R::require(rep.containments_hold, "Claim-1 containment fails at " + s.str());
                // printed distance formula: r(J_u) - r(G^0_s) = 3d_N - d_{N-1} - d_{k_n-1} + d_{k_n}
                Rat expect = 3 * seq.d(N) - seq.d(N - 1) - seq.d(ranks.k(n) - 1) + seq.d(ranks.k(n));
                R::require(rep.right_slack == expect, "Claim-1 distance formula mismatch");
            }
            ++n;
        }
        if (n == 1) R::skip("rank-1 codes too long for exhaustive covering checks");
    });

    runner.run("claim-family-disjointness", [&] {
        need_ranks();
        ConditionReport star;
        try {
            star = condition_star(seq);
        } catch (const PreconditionError&) {
            R::skip("condition (*) hypotheses unsatisfied");
        }
        if (!star.holds || !star.definitive) R::skip("condition (*) does not hold");
        long m = 1;
        if (ranks.k(m) - 1 > 4) R::skip("rank-1 codes too long for exhaustive disjointness checks");
        for (const TernaryCode& s : detail::all_codes(ranks.k(m) - 1)) {
            long N = last_index(s, 0);
            if (N <= ranks.k(m - 1) || N >= ranks.k(m)) continue;
            TernaryCode u = associate(ranks, s);
            long cap = m + opts.extra_ranks;
            GapFamily g0s = family(seq, ranks, s, 0, cap);
            GapFamily g1s = family(seq, ranks, s, 1, cap);
            GapFamily g0u = family(seq, ranks, u, 0, cap);
            GapFamily g1u = family(seq, ranks, u, 1, cap);
            auto disjoint = [&](const GapFamily& A, const GapFamily& B, const char* what) {
                for (const GapRef& a : A.all())
                    for (const GapRef& b : B.all()) {
                        Interval ia = gap_interval(seq, a), ib = gap_interval(seq, b);
                        R::require(ia.r <= ib.l || ib.r <= ia.l, std::string("Claim-3: ") + what);
                    }
            };
            disjoint(g0s, g1u, "G^0_s family meets G^1_u family");
            disjoint(g1s, g1u, "G^1_s family meets G^1_u family");
            disjoint(g0s, g0u, "G^0_s family meets G^0_u family");
            disjoint(g1s, g0u, "G^1_s family meets G^0_u family");
        }
    });

    runner.run("gap-catalog", [&] {
        need_ranks();
        if (ranks.k0 != 0) R::skip("catalog check needs k_0 = 0");
        Verdict v = classify(seq);
        if (v.kind != SetKind::Cantorval) R::skip("no Cantorval certificate");
        long N = 1;
        while (N + 1 <= ranks.count() && ranks.k(N + 1) <= 8) ++N;
        CatalogReport rep = gap_catalog_crosscheck(seq, ranks, N);
        R::require(rep.ok, rep.mismatch);
        // oracle measure against the partial gap-mass sum
        Rat measured = measure_at_depth(seq, ranks, N);
        R::require(measured == 2 - gap_mass_partial_sum(seq, ranks, N),
                   "oracle measure disagrees with the partial gap-mass sum");
    });

    runner.run("containment-at-rank-depth", [&] {
        need_ranks();
        Verdict v = classify(seq);
        if (v.kind != SetKind::Cantorval) R::skip("no Cantorval certificate");
        long N = 1;
        while (N + 1 <= ranks.count() && ranks.k(N + 1) <= 7) ++N;
        for (const TernaryCode& t : {TernaryCode{}, detail::random_code(rng, ranks.k0)}) {
            if (t.length() < ranks.k0) continue;
            ContainmentReport rep = verify_containment(seq, ranks, t, N);
            R::require(rep.covered, "remainder of J_t not covered at depth k_N");
        }
    });

    return results;
}

}  // namespace cantorval
