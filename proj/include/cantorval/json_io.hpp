#pragma once

#include <json.hpp>

#include "cantorval/achievement.hpp"
#include "cantorval/classify.hpp"
#include "cantorval/gapcalc.hpp"
#include "cantorval/oracle.hpp"

namespace cantorval {

using nlohmann::json;

// {"prefix": ["1/2"], "period": ["1/15","11/21"]}
inline ParamSequence sequence_from_json(const json& j) {
    if (!j.is_object() || !j.contains("period"))
        throw ParseError("bad-sequence-json", "expected {prefix, period} object");
    std::vector<Rat> prefix, period;
    for (const auto& e : j.value("prefix", json::array())) prefix.push_back(parse_rat(e.get<std::string>()));
    for (const auto& e : j.at("period")) period.push_back(parse_rat(e.get<std::string>()));
    return ParamSequence(std::move(prefix), std::move(period));
}

inline json sequence_to_json(const ParamSequence& seq) {
    json prefix = json::array(), period = json::array();
    for (const Rat& a : seq.prefix()) prefix.push_back(rat_to_string(a));
    for (const Rat& a : seq.period()) period.push_back(rat_to_string(a));
    return {{"prefix", prefix}, {"period", period}};
}

inline json interval_to_json(const Interval& iv) {
    return {{"l", rat_to_string(iv.l)},
            {"r", rat_to_string(iv.r)},
            {"kind", iv.kind == IntervalKind::Closed ? "closed" : "open"}};
}

inline json verdict_to_json(const Verdict& v) {
    json j = {{"kind", to_string(v.kind)}, {"provenance", to_string(v.provenance)}};
    if (v.witness) {
        json rows = json::array();
        for (const ConditionRow& r : v.witness->rows)
            rows.push_back({{"n", r.n},
                            {"delta", r.delta.str()},
                            {"Delta", r.Delta.str()},
                            {"m", r.m.str()},
                            {"tail", rat_to_string(r.tail)},
                            {"margin", r.margin.str()},
                            {"ok", r.ok}});
        j["witness"] = {{"rows", rows},
                        {"reduced", v.witness->reduced},
                        {"definitive", v.witness->definitive},
                        {"verifiedUpTo", v.witness->verified_up_to}};
    }
    return j;
}

inline json slice_to_json(const DepthSlice& slice) {
    json parts = json::array(), gaps = json::array();
    for (const Interval& p : slice.set_union.parts()) parts.push_back(interval_to_json(p));
    for (const Interval& g : slice.gaps) gaps.push_back(interval_to_json(g));
    return {{"depth", slice.depth},
            {"parts", parts},
            {"gaps", gaps},
            {"measure", rat_to_string(slice.total_measure)},
            {"measureDecimal", rat_to_double(slice.total_measure)}};
}

inline json family_to_json(const ParamSequence& seq, const GapFamily& fam) {
    json by_rank = json::object();
    for (const auto& [rank, gaps] : fam.by_rank) {
        json list = json::array();
        for (const GapRef& g : gaps) {
            Interval iv = gap_interval(seq, g);
            list.push_back({{"code", g.code.str()},
                            {"side", g.side},
                            {"l", rat_to_string(iv.l)},
                            {"r", rat_to_string(iv.r)}});
        }
        by_rank[std::to_string(rank)] = list;
    }
    return {{"origin", fam.origin.str()}, {"side", fam.side}, {"baseRank", fam.base_rank},
            {"byRank", by_rank}};
}

// {"block": ["3","2"], "q": "1/9"}
inline Multigeometric multigeometric_from_json(const json& j) {
    if (!j.is_object() || !j.contains("block") || !j.contains("q"))
        throw ParseError("bad-multigeometric-json", "expected {block, q} object");
    std::vector<Rat> block;
    for (const auto& e : j.at("block")) block.push_back(parse_rat(e.get<std::string>()));
    return Multigeometric(std::move(block), parse_rat(j.at("q").get<std::string>()));
}

}  // namespace cantorval
