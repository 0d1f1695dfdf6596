#pragma once

#include <utility>
#include <vector>

#include "cantorval/classify.hpp"

namespace cantorval {

// Multigeometric series (x_1, ..., x_k; q): the block repeated with
// successive powers of q. The full term sequence must be nonincreasing,
// which needs x_i >= x_{i+1} inside the block and x_k >= q * x_1 across
// block boundaries.
struct Multigeometric {
    std::vector<Rat> block;
    Rat q;

    Multigeometric(std::vector<Rat> b, Rat ratio) : block(std::move(b)), q(std::move(ratio)) {
        if (block.empty()) throw PreconditionError("bad-multigeometric", "empty block");
        if (q <= 0 || q >= 1) throw PreconditionError("bad-multigeometric", "ratio must be in (0,1)");
        for (const Rat& x : block)
            if (x <= 0) throw PreconditionError("bad-multigeometric", "block terms must be positive");
        for (size_t i = 1; i < block.size(); ++i)
            if (block[i] > block[i - 1])
                throw PreconditionError("bad-multigeometric", "block must be nonincreasing");
        if (block.back() < q * block.front())
            throw PreconditionError("bad-multigeometric",
                                    "sequence increases across block boundary (x_k < q*x_1)");
    }

    Rat block_sum() const {
        Rat s(0);
        for (const Rat& x : block) s += x;
        return s;
    }

    // r_0, the full series sum.
    Rat total() const { return block_sum() / (1 - q); }

    // Remainders r_0..r_k across the first block; r_{n+k} = q * r_n.
    std::vector<Rat> first_block_remainders() const {
        std::vector<Rat> r;
        r.push_back(total());
        for (const Rat& x : block) r.push_back(r.back() - x);
        return r;
    }
};

// Fast convergence (x_n > r_n for all n) reduces to the first block, since
// both terms and remainders scale by q per block.
inline bool is_fast_convergent(const Multigeometric& mg) {
    std::vector<Rat> r = mg.first_block_remainders();
    for (size_t i = 0; i < mg.block.size(); ++i)
        if (!(mg.block[i] > r[i + 1])) return false;
    return true;
}

// E(x) = r_0 * C(a) with lambda_n = r_n / r_{n-1}, a_n = 1 - 2 lambda_n.
// The resulting a is periodic with period equal to the block length.
inline std::pair<Rat, ParamSequence> series_to_cantor(const Multigeometric& mg) {
    if (!is_fast_convergent(mg))
        throw PreconditionError("not-fast-convergent",
                                "series is not fast convergent; a_n would leave (0,1)");
    std::vector<Rat> r = mg.first_block_remainders();
    std::vector<Rat> period;
    period.reserve(mg.block.size());
    for (size_t i = 1; i < r.size(); ++i) period.push_back(1 - 2 * r[i] / r[i - 1]);
    return {mg.total(), ParamSequence({}, std::move(period))};
}

// The inverse direction: the fast convergent series with E(x) = C(a),
// x_n = lambda_1 ... lambda_{n-1} (1 - lambda_n), r_0 = 1.
inline std::vector<Rat> cantor_to_series(const ParamSequence& seq, long count) {
    std::vector<Rat> terms;
    terms.reserve(static_cast<size_t>(count));
    Rat prod(1);  // lambda_1 * ... * lambda_{n-1}
    for (long n = 1; n <= count; ++n) {
        Rat lam = seq.lambda(n);
        terms.push_back(prod * (1 - lam));
        prod *= lam;
    }
    return terms;
}

// Structure of E(3,3,2,2;q) = E(3,2;q) + E(3,2;q) through the
// sumset/difference-set identity: same verdict as C(a)-C(a) for the
// central Cantor set behind E(3,2;q).
inline Verdict e3322_structure(const Rat& q) {
    if (!(q > 0 && q < Rat(1, 6)))
        throw PreconditionError("q-out-of-range", "need q in (0, 1/6) for fast convergence of E(3,2;q)");
    Multigeometric mg({Rat(3), Rat(2)}, q);
    auto [r0, seq] = series_to_cantor(mg);
    (void)r0;
    return classify(seq);
}

}  // namespace cantorval
