#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "cantorval/region.hpp"

using namespace cantorval;

TEST_CASE("grid axis parsing is exact") {
    GridAxis ax = parse_grid_axis("0:0.06:600");
    CHECK(ax.start == Rat(0));
    CHECK(ax.end == Rat(6, 100));
    CHECK(ax.steps == 600);
    CHECK(ax.node(0) == Rat(0));
    CHECK(ax.node(600) == Rat(6, 100));
    CHECK(ax.node(1) == Rat(1, 10000));

    CHECK(parse_grid_axis("1/3:0.45:10").start == Rat(1, 3));
    CHECK_THROWS_AS(parse_grid_axis("0:1"), ParseError);
    CHECK_THROWS_AS(parse_grid_axis("0:1:0"), ParseError);
}

TEST_CASE("region scan marks the apex and respects the domain") {
    GridAxis a1{Rat(1, 35), Rat(1, 35), 1};
    GridAxis a2{Rat(2, 5), Rat(9, 20), 10};
    // a1 fixed at the apex abscissa; only a2 <= 7/17 can be in the region
    RegionScan scan = region_scan(GridAxis{Rat(1, 35), Rat(1, 35), 1},
                                  GridAxis{Rat(7, 17), Rat(7, 17), 1});
    for (const RegionPoint& p : scan.points) CHECK(p.in_region);

    RegionScan above = region_scan(a1, a2);
    for (const RegionPoint& p : above.points)
        CHECK(p.in_region == (p.a2 <= Rat(7, 17)));

    // out-of-domain nodes are simply not in the region (no error)
    RegionScan wide = region_scan(GridAxis{Rat(0), Rat(1, 2), 4}, GridAxis{Rat(0), Rat(1), 4});
    for (const RegionPoint& p : wide.points) {
        if (!(p.a1 > 0 && p.a1 < Rat(1, 3) && p.a2 > Rat(1, 3) && p.a2 < 1)) CHECK(!p.in_region);
    }
}

TEST_CASE("boundary branches agree at the junction") {
    double a1 = 1.0 / 35.0;
    double b1 = boundary_first_branch(a1);
    double b2 = boundary_second_branch(a1);
    CHECK(std::abs(b1 - b2) < 1e-12);
    CHECK(std::abs(b1 - 7.0 / 17.0) < 1e-12);

    // the exact predicate agrees with the float boundary away from it
    for (int i = 1; i <= 20; ++i) {
        Rat a1r(i, 1000);
        double bound = a1r < Rat(1, 35) ? boundary_first_branch(rat_to_double(a1r))
                                        : boundary_second_branch(rat_to_double(a1r));
        Rat below = Rat(static_cast<long>(bound * 100000) - 10, 100000);
        Rat above = Rat(static_cast<long>(bound * 100000) + 10, 100000);
        if (below > Rat(1, 3)) CHECK(corollary_region(a1r, below));
        if (above < 1) CHECK(!corollary_region(a1r, above));
    }
}

TEST_CASE("csv and svg emission") {
    RegionScan scan = region_scan(GridAxis{Rat(1, 50), Rat(3, 100), 2},
                                  GridAxis{Rat(17, 50), Rat(2, 5), 2});
    std::ostringstream csv;
    emit_region_csv(scan, csv);
    std::string text = csv.str();
    CHECK(text.rfind("a1,a2,inRegion\n", 0) == 0);
    size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    CHECK(lines == 1 + 9);  // header + 3x3 nodes

    std::ostringstream svg;
    emit_region_svg(scan, svg);
    std::string s = svg.str();
    CHECK(s.find("<svg") != std::string::npos);
    CHECK(s.find("<polyline") != std::string::npos);
    CHECK(s.find("<circle") != std::string::npos);

    // identical scans emit byte-identical artifacts
    std::ostringstream csv2;
    emit_region_csv(region_scan(GridAxis{Rat(1, 50), Rat(3, 100), 2},
                                GridAxis{Rat(17, 50), Rat(2, 5), 2}),
                    csv2);
    CHECK(csv.str() == csv2.str());
}

TEST_CASE("decimal parsing is exact") {
    CHECK(parse_decimal_or_rat("0.06") == Rat(6, 100));
    CHECK(parse_decimal_or_rat("0.333") == Rat(333, 1000));
    CHECK(parse_decimal_or_rat("2") == Rat(2));
    CHECK(parse_decimal_or_rat("7/17") == Rat(7, 17));
    CHECK_THROWS_AS(parse_decimal_or_rat("."), ParseError);
}
