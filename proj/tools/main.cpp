// cantorval: exact-arithmetic CLI for central Cantor sets C(a), their
// difference sets, Cantorval certificates, measures and achievement-set
// conversions.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cantorval/cantorval.hpp"

namespace {

using namespace cantorval;

// Inline JSON if it looks like an object, file path otherwise.
json load_json_arg(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] != '{' && arg[0] != '[') {
        std::ifstream in(arg);
        if (!in) throw ParseError("bad-input-file", "cannot open '" + arg + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("bad-json", e.what());
    }
}

void write_out(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("bad-output-file", "cannot open '" + path + "' for writing");
    out << payload;
}

struct Args {
    std::string seq, mg, code, emit = "slice", out, svg, a1, a2;
    long depth = 8, depth_cap = 13, count = 20, rank_cap = 3;
    unsigned workers = 0, seed = 1;
};

int cmd_classify(const Args& a) {
    ParamSequence seq = sequence_from_json(load_json_arg(a.seq));
    write_out(a.out, verdict_to_json(classify(seq)).dump(2) + "\n");
    return 0;
}

int cmd_construct(const Args& a) {
    ParamSequence seq = sequence_from_json(load_json_arg(a.seq));
    if (!a.code.empty()) {
        TernaryCode s = TernaryCode::parse(a.code);
        json j = {{"code", s.str()}, {"J", interval_to_json(interval_J(seq, s))}};
        auto kids = children(seq, s);
        j["children"] = {interval_to_json(kids[0]), interval_to_json(kids[1]),
                         interval_to_json(kids[2])};
        if (seq.ratio(s.length() + 1) > Rat(1, 3)) {
            j["gaps"] = {interval_to_json(gap(seq, s, 0)), interval_to_json(gap(seq, s, 1))};
        } else {
            j["overlaps"] = {interval_to_json(overlap(seq, s, 0)),
                             interval_to_json(overlap(seq, s, 1))};
        }
        write_out(a.out, j.dump(2) + "\n");
        return 0;
    }
    OracleOptions opts{a.depth_cap, a.workers};
    DepthSlice slice = enumerate_difference(seq, a.depth, opts);
    if (!a.svg.empty()) {
        std::ostringstream os;
        os << "<svg xmlns='http://www.w3.org/2000/svg' width='640' height='40'>\n"
           << "<rect width='100%' height='100%' fill='white'/>\n";
        for (const Interval& p : slice.set_union.parts()) {
            double l = (rat_to_double(p.l) + 1) / 2 * 640;
            double r = (rat_to_double(p.r) + 1) / 2 * 640;
            os << "<rect x='" << l << "' y='10' width='" << (r - l)
               << "' height='20' fill='#333333'/>\n";
        }
        os << "</svg>\n";
        write_out(a.svg, os.str());
    }
    write_out(a.out, slice_to_json(slice).dump(2) + "\n");
    return 0;
}

int cmd_oracle(const Args& a) {
    ParamSequence seq = sequence_from_json(load_json_arg(a.seq));
    OracleOptions opts{a.depth_cap, a.workers};
    DepthSlice slice = enumerate_difference(seq, a.depth, opts);
    std::ostringstream os;
    if (a.emit == "slice") {
        os << slice_to_json(slice).dump(2) << "\n";
    } else if (a.emit == "gaps") {
        json gaps = json::array();
        for (const Interval& g : slice.gaps) gaps.push_back(interval_to_json(g));
        os << gaps.dump(2) << "\n";
    } else if (a.emit == "measure") {
        os << json{{"depth", slice.depth},
                   {"measure", rat_to_string(slice.total_measure)},
                   {"measureDecimal", rat_to_double(slice.total_measure)}}
                  .dump(2)
           << "\n";
    } else if (a.emit == "csv") {
        os << "l,r,kind\n";
        for (const Interval& p : slice.set_union.parts())
            os << rat_to_string(p.l) << "," << rat_to_string(p.r) << ",closed\n";
        for (const Interval& g : slice.gaps)
            os << rat_to_string(g.l) << "," << rat_to_string(g.r) << ",open\n";
    } else {
        throw ParseError("bad-emit", "emit must be slice, gaps, measure or csv");
    }
    write_out(a.out, os.str());
    return 0;
}

int cmd_region_scan(const Args& a) {
    GridAxis ax1 = parse_grid_axis(a.a1);
    GridAxis ax2 = parse_grid_axis(a.a2);
    RegionScan scan = region_scan(ax1, ax2);
    std::ostringstream csv;
    emit_region_csv(scan, csv);
    write_out(a.out, csv.str());
    if (!a.svg.empty()) {
        std::ostringstream svg;
        emit_region_svg(scan, svg);
        write_out(a.svg, svg.str());
    }
    return 0;
}

int cmd_measure(const Args& a) {
    ParamSequence seq = sequence_from_json(load_json_arg(a.seq));
    RankIndex ranks = rank_indices(seq, 16);
    Rat m = cantorval_measure(seq, ranks);
    write_out(a.out, json{{"measure", rat_to_string(m)}, {"measureDecimal", rat_to_double(m)}}
                             .dump(2) +
                         "\n");
    return 0;
}

int cmd_convert(const Args& a) {
    if (!a.mg.empty()) {
        Multigeometric mg = multigeometric_from_json(load_json_arg(a.mg));
        auto [r0, seq] = series_to_cantor(mg);
        json j = sequence_to_json(seq);
        j["r0"] = rat_to_string(r0);
        write_out(a.out, j.dump(2) + "\n");
        return 0;
    }
    ParamSequence seq = sequence_from_json(load_json_arg(a.seq));
    json terms = json::array();
    for (const Rat& x : cantor_to_series(seq, a.count)) terms.push_back(rat_to_string(x));
    write_out(a.out, json{{"terms", terms}, {"r0", "1"}}.dump(2) + "\n");
    return 0;
}

int cmd_verify(const Args& a) {
    ParamSequence seq = sequence_from_json(load_json_arg(a.seq));
    VerifyOptions opts;
    opts.depth = a.depth;
    opts.extra_ranks = a.rank_cap;
    opts.seed = a.seed;
    bool any_fail = false;
    std::ostringstream os;
    for (const CheckResult& r : verify_suite(seq, opts)) {
        const char* tag = r.status == CheckResult::Status::Pass   ? "PASS"
                          : r.status == CheckResult::Status::Skip ? "SKIP"
                                                                  : "FAIL";
        os << tag << " " << r.name;
        if (!r.detail.empty()) os << " (" << r.detail << ")";
        os << "\n";
        if (r.failed()) any_fail = true;
    }
    write_out(a.out, os.str());
    return any_fail ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact central Cantor set / difference set toolkit"};
    app.require_subcommand(1);
    Args a;

    auto add_seq = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--seq", a.seq, "sequence JSON (inline or file path)");
        if (required) opt->required();
        return opt;
    };
    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", a.out, "output path (default stdout)"); };

    CLI::App* classify_cmd = app.add_subcommand("classify", "certify the structure of C(a)-C(a)");
    add_seq(classify_cmd);
    add_out(classify_cmd);

    CLI::App* construct_cmd = app.add_subcommand("construct", "interval geometry at one code or depth");
    add_seq(construct_cmd);
    construct_cmd->add_option("--code", a.code, "ternary code s for J_s and its children");
    construct_cmd->add_option("--depth", a.depth, "enumeration depth when no code is given");
    construct_cmd->add_option("--svg", a.svg, "render the depth slice to SVG");
    add_out(construct_cmd);

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "finite-depth brute-force enumeration");
    add_seq(oracle_cmd);
    oracle_cmd->add_option("--depth", a.depth, "enumeration depth");
    oracle_cmd->add_option("--depth-cap", a.depth_cap, "refuse depths beyond this cap");
    oracle_cmd->add_option("--workers", a.workers, "worker threads (0 = hardware)");
    oracle_cmd->add_option("--emit", a.emit, "slice | gaps | measure | csv");
    add_out(oracle_cmd);

    CLI::App* region_cmd = app.add_subcommand("region-scan", "period-2 Cantorval region grid");
    region_cmd->add_option("--a1", a.a1, "grid start:end:steps for a1")->required();
    region_cmd->add_option("--a2", a.a2, "grid start:end:steps for a2")->required();
    region_cmd->add_option("--svg", a.svg, "also render region + boundary curves to SVG");
    add_out(region_cmd);

    CLI::App* measure_cmd = app.add_subcommand("measure", "exact Lebesgue measure of C(a)-C(a)");
    add_seq(measure_cmd);
    add_out(measure_cmd);

    CLI::App* convert_cmd = app.add_subcommand("convert", "achievement set <-> central Cantor set");
    add_seq(convert_cmd, false);
    convert_cmd->add_option("--mg", a.mg, "multigeometric JSON {block, q} (inline or file path)");
    convert_cmd->add_option("--count", a.count, "series terms to emit in the reverse direction");
    add_out(convert_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the structural invariant suite");
    add_seq(verify_cmd);
    verify_cmd->add_option("--depth", a.depth, "enumeration depth for slice-based checks");
    verify_cmd->add_option("--rank-cap", a.rank_cap, "extra ranks for the lemma checks");
    verify_cmd->add_option("--seed", a.seed, "seed for the randomized checks");
    add_out(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(a);
        if (construct_cmd->parsed()) return cmd_construct(a);
        if (oracle_cmd->parsed()) return cmd_oracle(a);
        if (region_cmd->parsed()) return cmd_region_scan(a);
        if (measure_cmd->parsed()) return cmd_measure(a);
        if (convert_cmd->parsed()) {
            if (a.mg.empty() && a.seq.empty())
                throw ParseError("bad-arguments", "convert needs --mg or --seq");
            return cmd_convert(a);
        }
        if (verify_cmd->parsed()) return cmd_verify(a);
    } catch (const ParseError& e) {
        std::cerr << "error (" << e.code() << "): " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error (" << e.code() << "): " << e.what() << "\n";
        return 3;
    } catch (const StructuralError& e) {
        std::cerr << "error (" << e.code() << "): " << e.what() << "\n";
        return 4;
    }
    return 0;
}
