#pragma once

#include <utility>

#include "cantorval/params.hpp"

namespace cantorval {

// Band extrema of 3d_i - d_{i-1} over i in {k_{n-1}+1, ..., k_n - 1}.
// Empty band (consecutive rank indices) yields the sentinels
// (+inf, -inf), matching min/max over the empty set.
inline std::pair<Ext, Ext> band_extrema(const ParamSequence& seq, long lo, long hi) {
    Ext mn = Ext::pos_inf();
    Ext mx = Ext::neg_inf();
    for (long i = lo; i <= hi; ++i) {
        Ext v(3 * seq.d(i) - seq.d(i - 1));
        mn = Ext::min(mn, v);
        mx = Ext::max(mx, v);
    }
    return {mn, mx};
}

inline std::pair<Ext, Ext> delta_bounds(const ParamSequence& seq, const RankIndex& ranks, long n) {
    if (n < 1) throw PreconditionError("index-out-of-range", "delta_bounds needs n >= 1");
    return band_extrema(seq, ranks.k(n - 1) + 1, ranks.k(n) - 1);
}

// m_n = min{delta_n - (d_{k_n - 1} - d_{k_n}), 4 d_{k_n} - Delta_n};
// +inf exactly when the band is empty.
inline Ext margin_m(const ParamSequence& seq, const RankIndex& ranks, long n) {
    auto [dl, DL] = delta_bounds(seq, ranks, n);
    long kn = ranks.k(n);
    Ext first = dl - seq.weight(kn);
    Ext second = DL.is_neg_inf() ? Ext::pos_inf() : Ext(4 * seq.d(kn) - DL.value());
    return Ext::min(first, second);
}

}  // namespace cantorval
