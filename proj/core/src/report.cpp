#include "mbsb/report.hpp"

#include <nlohmann/json.hpp>

namespace mbsb {

using nlohmann::json;

namespace {

json box_json(const Box3& b) {
    auto bound = [](double v) { return std::isinf(v) ? json(nullptr) : json(v); };
    json lo = json::array(), hi = json::array();
    for (int a = 0; a < 3; ++a) {
        lo.push_back(bound(b.lo[a]));
        hi.push_back(bound(b.hi[a]));
    }
    return json{{"lo", lo}, {"hi", hi}};
}

json supports_json(const Scene& scene, const CandidateBox& cb) {
    json arr = json::array();
    for (Direction d : all_directions) {
        const Support& s = cb.support(d);
        json e;
        e["direction"] = direction_name(d);
        switch (s.kind) {
            case Support::Kind::blue_point: {
                e["kind"] = "blue";
                const Point3& p = scene.retained[static_cast<std::size_t>(s.point)];
                e["point"] = {p.x, p.y, p.z};
                break;
            }
            case Support::Kind::smax_bound:
                e["kind"] = "smax";
                break;
            case Support::Kind::unbounded:
                e["kind"] = "unbounded";
                break;
        }
        arr.push_back(e);
    }
    return arr;
}

json dirs_json(const std::vector<Direction>& ds) {
    json arr = json::array();
    for (Direction d : ds) arr.push_back(direction_name(d));
    return arr;
}

}  // namespace

std::string solve_report_json(const Scene& scene, const SolveResult& result,
                              bool include_timings) {
    json j;
    j["s_min"] = box_json(scene.s_min);
    j["s_max"] = box_json(scene.s_max);
    json stats;
    stats["m_retained"] = result.stats.m_retained;
    stats["discarded_inside"] = result.stats.discarded_inside;
    stats["discarded_outside"] = result.stats.discarded_outside;
    stats["candidates"] = result.stats.candidates;
    if (include_timings) {
        stats["preprocess_ns"] = result.stats.preprocess_ns;
        stats["structures_ns"] = result.stats.structures_ns;
        stats["cases_ns"] = result.stats.cases_ns;
    }
    j["stats"] = stats;

    if (!result.bounded) {
        j["outcome"] = "unbounded";
        j["unbounded_directions"] = dirs_json(result.unbounded_directions);
        return j.dump(2);
    }
    j["outcome"] = "bounded";
    j["box"] = box_json(result.best->box);
    j["volume"] = volume(result.best->box);
    j["case"] = case_label_name(result.best->label);
    j["supports"] = supports_json(scene, *result.best);
    return j.dump(2);
}

std::string oracle_report_json(const Scene& scene, const OracleResult& result) {
    json j;
    j["s_min"] = box_json(scene.s_min);
    j["s_max"] = box_json(scene.s_max);
    j["candidates_examined"] = result.candidates_examined;
    if (!result.bounded) {
        j["outcome"] = "unbounded";
        j["unbounded_directions"] = dirs_json(result.unbounded_directions);
        return j.dump(2);
    }
    j["outcome"] = "bounded";
    j["box"] = box_json(result.box);
    j["volume"] = result.best_volume;
    j["case"] = "oracle";
    return j.dump(2);
}

}  // namespace mbsb
