#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cantorval/oracle.hpp"

using namespace cantorval;

namespace {

ParamSequence seq_1521() { return ParamSequence({}, {Rat(1, 15), Rat(11, 21)}); }
ParamSequence seq_3517() { return ParamSequence({}, {Rat(1, 35), Rat(7, 17)}); }

}  // namespace

TEST_CASE("depth slices for the constant sequences") {
    ParamSequence third = ParamSequence::constant(Rat(1, 3));
    for (long depth = 0; depth <= 4; ++depth) {
        DepthSlice slice = enumerate_difference(third, depth);
        REQUIRE(slice.set_union.parts().size() == 1);
        CHECK(slice.set_union.parts()[0] == Interval(Rat(-1), Rat(1)));
        CHECK(slice.gaps.empty());
    }

    ParamSequence h = ParamSequence::constant(Rat(1, 2));
    DepthSlice s1 = enumerate_difference(h, 1);
    REQUIRE(s1.set_union.parts().size() == 3);
    CHECK(s1.set_union.parts()[0] == Interval(Rat(-1), Rat(-1, 2)));
    CHECK(s1.set_union.parts()[1] == Interval(Rat(-1, 4), Rat(1, 4)));
    CHECK(s1.set_union.parts()[2] == Interval(Rat(1, 2), Rat(1)));
    REQUIRE(s1.gaps.size() == 2);
    CHECK(s1.gaps[0] == Interval(Rat(-1, 2), Rat(-1, 4), IntervalKind::Open));
    CHECK(s1.total_measure == Rat(3, 2));
}

TEST_CASE("depth slice measures for the golden sequences") {
    ParamSequence w = seq_1521();
    CHECK(enumerate_difference(w, 2).total_measure == Rat(26, 15));
    CHECK(enumerate_difference(w, 8).total_measure == Rat(130, 81));
}

TEST_CASE("depth cap is enforced") {
    OracleOptions opts;
    opts.depth_cap = 4;
    CHECK_THROWS_AS(enumerate_difference(seq_1521(), 5, opts), PreconditionError);
    try {
        enumerate_difference(seq_1521(), 5, opts);
    } catch (const PreconditionError& e) {
        CHECK(e.code() == "depth-cap-exceeded");
    }
}

TEST_CASE("worker count does not change the result") {
    ParamSequence w = seq_1521();
    OracleOptions one;
    one.workers = 1;
    OracleOptions four;
    four.workers = 4;
    DepthSlice a = enumerate_difference(w, 6, one);
    DepthSlice b = enumerate_difference(w, 6, four);
    CHECK(a.set_union == b.set_union);
}

TEST_CASE("gap mass partial sums match the oracle at rank depths") {
    ParamSequence w = seq_1521();
    RankIndex r = rank_indices(w, 8);
    // N=4 is depth 8: 2 - 2*(2/15)*(1 + 1/3 + 1/9 + 1/27) = 130/81
    CHECK(gap_mass_partial_sum(w, r, 4) == Rat(2) - Rat(130, 81));
    CHECK(measure_at_depth(w, r, 4) == Rat(130, 81));

    ParamSequence s = seq_3517();
    RankIndex rs = rank_indices(s, 8);
    // N=3 is depth 6: 2 - (4/35)(79/49) = 3114/1715
    CHECK(measure_at_depth(s, rs, 3) == Rat(3114, 1715));
    CHECK(gap_mass_partial_sum(s, rs, 3) == Rat(2) - Rat(3114, 1715));

    // partial values decrease toward the exact measure
    Rat prev(2);
    for (long N = 1; N <= 4; ++N) {
        Rat m = Rat(2) - gap_mass_partial_sum(w, r, N);
        CHECK(m < prev);
        CHECK(m > Rat(8, 5));
        prev = m;
    }
}

TEST_CASE("membership via branch and bound") {
    ParamSequence h = ParamSequence::constant(Rat(1, 2));
    CHECK(contains(h, 5, Rat(0)));
    CHECK(contains(h, 5, Rat(1)));
    CHECK(contains(h, 5, Rat(-1)));
    CHECK(!contains(h, 3, Rat(3, 8)));  // inside the rank-1 gap (1/4, 1/2)
    CHECK_THROWS_AS(contains(h, 3, Rat(2)), PreconditionError);
}

TEST_CASE("membership agrees with enumeration on random points") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<long> num(-720, 720);
    for (const ParamSequence& seq : {seq_1521(), seq_3517(), ParamSequence::constant(Rat(1, 2))}) {
        DepthSlice slice = enumerate_difference(seq, 5);
        for (int i = 0; i < 1000; ++i) {
            Rat x(num(rng), 720);
            CHECK(contains(seq, 5, x) == slice.set_union.contains(x));
        }
    }
}

TEST_CASE("origin interior radius") {
    // constant 1/3 keeps all of [-1,1]
    CHECK(origin_interior_radius(ParamSequence::constant(Rat(1, 3)), 3) == Rat(1));
    // constant 1/2: the component around 0 is J_{1^n} = [-d_n, d_n]
    CHECK(origin_interior_radius(ParamSequence::constant(Rat(1, 2)), 1) == Rat(1, 4));
    CHECK(origin_interior_radius(ParamSequence::constant(Rat(1, 2)), 4) == Rat(1, 256));
    // nonincreasing in depth
    ParamSequence w = seq_1521();
    Rat prev(2);
    for (long depth = 1; depth <= 6; ++depth) {
        Rat rad = origin_interior_radius(w, depth);
        CHECK(rad <= prev);
        CHECK(rad > 0);
        prev = rad;
    }
}

TEST_CASE("nesting and symmetry of depth slices") {
    for (const ParamSequence& seq : {seq_1521(), seq_3517()}) {
        DepthSlice prev = enumerate_difference(seq, 0);
        for (long depth = 1; depth <= 6; ++depth) {
            DepthSlice cur = enumerate_difference(seq, depth);
            CHECK(prev.set_union.covers(cur.set_union));
            const auto& parts = cur.set_union.parts();
            for (size_t i = 0; i < parts.size(); ++i) {
                const Interval& mirror = parts[parts.size() - 1 - i];
                CHECK(parts[i].l == -mirror.r);
            }
            prev = cur;
        }
    }
}

TEST_CASE("containment of the remainder at rank depth") {
    ParamSequence s = seq_3517();
    RankIndex r = rank_indices(s, 8);
    ContainmentReport rep = verify_containment(s, r, TernaryCode{}, 2);
    CHECK(rep.covered);
    CHECK(rep.uncovered.empty());
    ContainmentReport rep1 = verify_containment(s, r, TernaryCode::parse("1"), 2);
    CHECK(rep1.covered);

    // fn-equality regime: the theorem still covers the remainder
    ParamSequence w = seq_1521();
    RankIndex rw = rank_indices(w, 8);
    CHECK(verify_containment(w, rw, TernaryCode{}, 3).covered);

    ParamSequence unknown({}, {Rat(1, 100), Rat(2, 5)});
    CHECK_THROWS_AS(verify_containment(unknown, rank_indices(unknown, 8), TernaryCode{}, 2),
                    PreconditionError);
    try {
        verify_containment(unknown, rank_indices(unknown, 8), TernaryCode{}, 2);
    } catch (const PreconditionError& e) {
        CHECK(e.code() == "certificate-missing");
    }
}

TEST_CASE("gap catalog crosscheck") {
    ParamSequence s = seq_3517();
    RankIndex r = rank_indices(s, 8);
    CatalogReport rep = gap_catalog_crosscheck(s, r, 3);
    CHECK(rep.ok);
    CHECK(rep.expected_count == 26);  // 2 + 6 + 18
    CHECK(rep.actual_count == 26);

    CatalogReport rep2 = gap_catalog_crosscheck(s, r, 2);
    CHECK(rep2.ok);
    CHECK(rep2.expected_count == 8);

    ParamSequence w = seq_1521();
    RankIndex rw = rank_indices(w, 8);
    CatalogReport rep3 = gap_catalog_crosscheck(w, rw, 3);
    CHECK(rep3.ok);
    CHECK(rep3.expected_count == 26);
}
