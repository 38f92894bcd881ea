#include "schurweyl/json_io.hpp"

#include <limits>

namespace schurweyl {

using nlohmann::json;

json json_int(const Int& value) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (value >= lo && value <= hi) return value.convert_to<std::int64_t>();
    return value.str();
}

json to_json(const SurdSum& value) {
    json terms = json::array();
    for (const auto& [rad, q] : value.terms()) {
        terms.push_back({{"num", json_int(numerator(q))},
                         {"den", json_int(denominator(q))},
                         {"radicand", json_int(rad)}});
    }
    return {{"terms", terms}, {"float", value.to_double()}};
}

json to_json(const GTPattern& p) {
    json rows = json::array();
    for (const auto& row : p.rows_top_down()) rows.push_back(row);
    return rows;
}

json to_json(const DoubleGTPattern& d) {
    // recording as printed: innermost row (length 1) first; insertion from
    // the shared top row (length n) down
    json recording = json::array();
    auto rec_rows = d.recording.rows_top_down();
    for (auto it = rec_rows.rbegin(); it != rec_rows.rend(); ++it) recording.push_back(*it);
    return {{"recording", recording}, {"insertion", to_json(d.insertion)}};
}

json to_json(const SchurWeylState& state) {
    json amplitudes = json::array();
    for (std::size_t c = 0; c < state.amplitudes.size(); ++c) {
        const auto& [f, a] = state.amplitudes[c];
        json value = to_json(a);
        if (!state.exact) value["float"] = state.float_amplitudes[c];
        amplitudes.push_back({{"config", f}, {"value", std::move(value)}});
    }
    return {{"lambda", trimmed(state.label.lambda)},
            {"t", format_tableau(state.label.t)},
            {"y", format_tableau(state.label.y)},
            {"mu", state.mu},
            {"exact", state.exact},
            {"amplitudes", std::move(amplitudes)}};
}

json to_json(const CouplingGraph& graph) {
    json levels = json::array();
    for (std::size_t j = 0; j < graph.levels.size(); ++j) {
        const auto& level = graph.levels[j];
        json vertices = json::array();
        for (const auto& v : level.vertices) vertices.push_back(to_json(v));
        json edges = json::array();
        for (const auto& e : level.edges)
            edges.push_back({{"from", e.from}, {"to", e.to}, {"weight", to_json(e.weight)}});
        json entry = {{"level", j}, {"vertices", std::move(vertices)}};
        if (j > 0) {
            entry["letter"] = level.letter;
            entry["edges"] = std::move(edges);
        }
        levels.push_back(std::move(entry));
    }
    return levels;
}

json to_json(const UnitarityReport& report) {
    return {{"mu", report.mu},
            {"n", report.n},
            {"dim", report.dim},
            {"counting_ok", report.counting_ok},
            {"exact", report.exact},
            {"max_deviation", report.max_deviation},
            {"unitary", report.unitary}};
}

GTPattern gt_pattern_from_json(const json& rows_top_down) {
    if (!rows_top_down.is_array() || rows_top_down.empty())
        throw std::invalid_argument("gt pattern json: expected a non-empty array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& row : rows_top_down) rows.push_back(row.get<std::vector<int>>());
    return GTPattern::from_rows_top_down(std::move(rows));
}

DoubleGTPattern double_pattern_from_json(const json& j) {
    if (!j.contains("recording") || !j.contains("insertion"))
        throw std::invalid_argument("double pattern json: needs 'recording' and 'insertion'");
    // recording rows arrive innermost-first
    std::vector<std::vector<int>> rec;
    for (const auto& row : j.at("recording")) rec.push_back(row.get<std::vector<int>>());
    DoubleGTPattern d{GTPattern(std::move(rec)), gt_pattern_from_json(j.at("insertion"))};
    validate_double_pattern(d);
    return d;
}

}  // namespace schurweyl
