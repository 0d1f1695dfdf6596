#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <tuple>
#include <vector>

#include "cantorval/params.hpp"

namespace cantorval {

// Finite index word over {0,...,Radix-1}. BinaryCode addresses the
// construction intervals I_t, TernaryCode the difference intervals J_s.
template <int Radix>
class Code {
public:
    Code() = default;
    explicit Code(std::vector<int> digits) : digits_(std::move(digits)) {
        for (int d : digits_) check_digit(d);
    }

    static Code parse(const std::string& text) {
        std::vector<int> ds;
        ds.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9') throw ParseError("bad-code", "non-digit in code '" + text + "'");
            ds.push_back(c - '0');
        }
        return Code(std::move(ds));
    }

    long length() const { return static_cast<long>(digits_.size()); }
    bool empty() const { return digits_.empty(); }
    int digit(long i) const { return digits_[static_cast<size_t>(i - 1)]; }  // 1-based, like s_i
    const std::vector<int>& digits() const { return digits_; }

    Code append(int d) const {
        check_digit(d);
        Code out = *this;
        out.digits_.push_back(d);
        return out;
    }

    // this ^ d^(count)
    Code append_run(int d, long count) const {
        check_digit(d);
        Code out = *this;
        out.digits_.insert(out.digits_.end(), static_cast<size_t>(count), d);
        return out;
    }

    // s|n, the first n digits.
    Code restrict(long n) const {
        return Code(std::vector<int>(digits_.begin(), digits_.begin() + n));
    }

    bool extends(const Code& prefix) const {
        if (prefix.length() > length()) return false;
        return std::equal(prefix.digits_.begin(), prefix.digits_.end(), digits_.begin());
    }

    std::string str() const {
        std::string s;
        s.reserve(digits_.size());
        for (int d : digits_) s.push_back(static_cast<char>('0' + d));
        return s;
    }

    friend bool operator==(const Code& a, const Code& b) { return a.digits_ == b.digits_; }
    friend bool operator<(const Code& a, const Code& b) { return a.digits_ < b.digits_; }

private:
    static void check_digit(int d) {
        if (d < 0 || d >= Radix)
            throw ParseError("bad-code", "digit " + std::to_string(d) + " out of range");
    }

    std::vector<int> digits_;
};

using BinaryCode = Code<2>;
using TernaryCode = Code<3>;

enum class IntervalKind { Closed, Open };

// Exact interval. Closed intervals may be degenerate points; open intervals
// must be nonempty.
struct Interval {
    Rat l, r;
    IntervalKind kind = IntervalKind::Closed;

    Interval() = default;
    Interval(Rat left, Rat right, IntervalKind k = IntervalKind::Closed)
        : l(std::move(left)), r(std::move(right)), kind(k) {
        if (l > r || (kind == IntervalKind::Open && l == r))
            throw PreconditionError("bad-interval",
                                    "empty interval [" + rat_to_string(l) + ", " + rat_to_string(r) + "]");
    }

    Rat length() const { return r - l; }
    Rat centre() const { return (l + r) / 2; }

    bool contains(const Rat& x) const {
        return kind == IntervalKind::Closed ? (l <= x && x <= r) : (l < x && x < r);
    }
    // Subset test for closed-in-closed / open-in-closed style checks.
    bool contains(const Interval& other) const { return l <= other.l && other.r <= r; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.l == b.l && a.r == b.r && a.kind == b.kind;
    }
};

// Canonical sorted union of pairwise disjoint, non-touching closed
// intervals. Touching or overlapping inputs are merged on construction.
class IntervalUnion {
public:
    IntervalUnion() = default;

    explicit IntervalUnion(std::vector<Interval> parts) {
        for (const Interval& p : parts)
            if (p.kind != IntervalKind::Closed)
                throw PreconditionError("bad-interval", "union parts must be closed");
        std::sort(parts.begin(), parts.end(),
                  [](const Interval& a, const Interval& b) { return a.l < b.l || (a.l == b.l && a.r < b.r); });
        for (Interval& p : parts) {
            if (!parts_.empty() && p.l <= parts_.back().r)
                parts_.back().r = std::max(parts_.back().r, p.r);
            else
                parts_.push_back(std::move(p));
        }
    }

    static IntervalUnion merge(const IntervalUnion& a, const IntervalUnion& b) {
        IntervalUnion out;
        size_t i = 0, j = 0;
        auto push = [&out](const Interval& p) {
            if (!out.parts_.empty() && p.l <= out.parts_.back().r)
                out.parts_.back().r = std::max(out.parts_.back().r, p.r);
            else
                out.parts_.push_back(p);
        };
        while (i < a.parts_.size() || j < b.parts_.size()) {
            if (j >= b.parts_.size() || (i < a.parts_.size() && a.parts_[i].l <= b.parts_[j].l))
                push(a.parts_[i++]);
            else
                push(b.parts_[j++]);
        }
        return out;
    }

    const std::vector<Interval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    Rat measure() const {
        Rat m(0);
        for (const Interval& p : parts_) m += p.length();
        return m;
    }

    // Open gaps between consecutive parts.
    std::vector<Interval> gaps() const {
        std::vector<Interval> out;
        for (size_t i = 1; i < parts_.size(); ++i)
            out.emplace_back(parts_[i - 1].r, parts_[i].l, IntervalKind::Open);
        return out;
    }

    bool contains(const Rat& x) const {
        // parts_ sorted by left endpoint
        auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                                   [](const Rat& v, const Interval& p) { return v < p.l; });
        return it != parts_.begin() && std::prev(it)->r >= x;
    }

    bool contains(const Interval& iv) const {
        auto it = std::upper_bound(parts_.begin(), parts_.end(), iv.l,
                                   [](const Rat& v, const Interval& p) { return v < p.l; });
        return it != parts_.begin() && std::prev(it)->l <= iv.l && iv.r <= std::prev(it)->r;
    }

    bool covers(const IntervalUnion& other) const {
        for (const Interval& p : other.parts_)
            if (!contains(p)) return false;
        return true;
    }

    // This union minus a collection of open intervals; result stays closed.
    IntervalUnion subtract_open(std::vector<Interval> open) const {
        std::sort(open.begin(), open.end(),
                  [](const Interval& a, const Interval& b) { return a.l < b.l; });
        std::vector<Interval> out;
        for (const Interval& p : parts_) {
            Rat lo = p.l;
            bool alive = true;
            for (const Interval& g : open) {
                if (g.r <= lo || g.kind != IntervalKind::Open) continue;
                if (g.l > p.r) break;
                if (g.l >= lo) out.emplace_back(lo, std::min(g.l, p.r));
                if (g.r >= p.r) {
                    alive = false;
                    break;
                }
                lo = std::max(lo, g.r);
            }
            if (alive) out.emplace_back(lo, p.r);
        }
        return IntervalUnion(std::move(out));
    }

    friend bool operator==(const IntervalUnion& a, const IntervalUnion& b) {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<Interval> parts_;
};

// ---- The interval calculus of the construction ----

// Left endpoint of I_t: sum of t_i * (d_{i-1} - d_i).
inline Rat left_I(const ParamSequence& seq, const BinaryCode& t) {
    Rat l(0);
    for (long i = 1; i <= t.length(); ++i)
        if (t.digit(i)) l += seq.weight(i);
    return l;
}

// I_t, the depth-|t| construction interval; I_empty = [0,1].
inline Interval interval_I(const ParamSequence& seq, const BinaryCode& t) {
    Rat l = left_I(seq, t);
    return Interval(l, l + seq.d(t.length()));
}

// Left endpoint of J_s: -1 + sum of s_i * (d_{i-1} - d_i). This closed form
// is the single source of truth for endpoints; the recursive children
// formulas below serve as an independent cross-check.
inline Rat left_J(const ParamSequence& seq, const TernaryCode& s) {
    Rat l(-1);
    for (long i = 1; i <= s.length(); ++i)
        if (s.digit(i)) l += s.digit(i) * seq.weight(i);
    return l;
}

// J_s, length 2*d_{|s|}; J_empty = [-1,1].
inline Interval interval_J(const ParamSequence& seq, const TernaryCode& s) {
    Rat l = left_J(seq, s);
    return Interval(l, l + 2 * seq.d(s.length()));
}

// (J_{s^0}, J_{s^1}, J_{s^2}) via the displayed recursive formulas.
inline std::array<Interval, 3> children(const ParamSequence& seq, const TernaryCode& s) {
    Interval parent = interval_J(seq, s);
    Rat dn1 = seq.d(s.length() + 1);
    Rat c = parent.centre();
    return {Interval(parent.l, parent.l + 2 * dn1),
            Interval(c - dn1, c + dn1),
            Interval(parent.r - 2 * dn1, parent.r)};
}

// Open gap G^side_s between consecutive children of J_s; exists only when
// a_{|s|+1} > 1/3. Width d_n - 3 d_{n+1}.
inline Interval gap(const ParamSequence& seq, const TernaryCode& s, int side) {
    long n = s.length();
    if (!(seq.ratio(n + 1) > Rat(1, 3)))
        throw PreconditionError("not-a-gap",
                                "a_" + std::to_string(n + 1) + " <= 1/3; children overlap here");
    auto kids = children(seq, s);
    if (side == 0) return Interval(kids[0].r, kids[1].l, IntervalKind::Open);
    if (side == 1) return Interval(kids[1].r, kids[2].l, IntervalKind::Open);
    throw PreconditionError("bad-side", "gap side must be 0 or 1");
}

// Closed overlap Z^side_s of consecutive children; exists when
// a_{|s|+1} <= 1/3, degenerating to a point at a_{|s|+1} = 1/3 exactly.
inline Interval overlap(const ParamSequence& seq, const TernaryCode& s, int side) {
    long n = s.length();
    if (seq.ratio(n + 1) > Rat(1, 3))
        throw PreconditionError("not-an-overlap",
                                "a_" + std::to_string(n + 1) + " > 1/3; children leave a gap here");
    auto kids = children(seq, s);
    if (side == 0) return Interval(kids[1].l, kids[0].r);
    if (side == 1) return Interval(kids[2].l, kids[1].r);
    throw PreconditionError("bad-side", "overlap side must be 0 or 1");
}

namespace detail {

// Union of all J_u with given prefix and code length depth (3^(depth-|prefix|)
// intervals, merged). Small depths only.
inline IntervalUnion enumerate_J_union(const ParamSequence& seq, const TernaryCode& prefix, long depth) {
    std::vector<Interval> parts;
    Rat len = 2 * seq.d(depth);
    // iterative digit expansion, tracking partial left endpoints
    struct Frame {
        Rat left;
        long depth;
    };
    std::vector<Frame> stack;
    stack.push_back({left_J(seq, prefix), prefix.length()});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.depth == depth) {
            parts.emplace_back(f.left, f.left + len);
            continue;
        }
        Rat w = seq.weight(f.depth + 1);
        for (int dgt = 0; dgt <= 2; ++dgt) stack.push_back({f.left + dgt * w, f.depth + 1});
    }
    return IntervalUnion(std::move(parts));
}

}  // namespace detail

// Proposition on refinement invariance: when a_{n+1},...,a_{n+k} <= 1/3 the
// depth-n and depth-(n+k) difference approximants coincide.
inline bool refine_invariance_check(const ParamSequence& seq, long n, long k) {
    for (long j = n + 1; j <= n + k; ++j)
        if (seq.ratio(j) > Rat(1, 3))
            throw PreconditionError("precondition-violated",
                                    "a_" + std::to_string(j) + " > 1/3 inside the invariance window");
    TernaryCode root;
    return detail::enumerate_J_union(seq, root, n) == detail::enumerate_J_union(seq, root, n + k);
}

}  // namespace cantorval
