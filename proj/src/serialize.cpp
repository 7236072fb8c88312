#include "bressoud/serialize.hpp"

namespace bressoud {

using nlohmann::json;

json overpartition_to_json(const Overpartition& pi) {
    json parts = json::array();
    for (Part p : pi.parts()) parts.push_back({{"overlined", p.overlined}, {"size", p.size}});
    return json{{"parts", parts}};
}

Overpartition overpartition_from_json(const json& j) {
    std::vector<Part> parts;
    for (const auto& item : j.at("parts"))
        parts.push_back(Part{item.at("size").get<int>(), item.at("overlined").get<bool>()});
    return Overpartition::from_canonical(std::move(parts));
}

json partition_to_json(const Partition& tau) {
    json out = json::array();
    for (int p : tau.parts()) out.push_back(p);
    return out;
}

json params_to_json(const FamilyParams& p) {
    return json{{"alphas", p.alphas}, {"eta", p.eta}, {"j", p.j}, {"k", p.k}, {"r", p.r}};
}

const char* action_name(TraceAction a) {
    switch (a) {
        case TraceAction::RemovedOverlined: return "removed_overlined";
        case TraceAction::RemovedPlain: return "removed_plain";
        case TraceAction::InsertedOverlined: return "inserted_overlined";
        case TraceAction::InsertedPlain: return "inserted_plain";
    }
    return "?";
}

json trace_to_json(const std::vector<TraceStep>& trace, int eta) {
    json out = json::array();
    for (const TraceStep& step : trace) {
        const bool overlined = step.action == TraceAction::RemovedOverlined ||
                               step.action == TraceAction::InsertedOverlined;
        json entry{{"t", step.t},
                   {"action", action_name(step.action)},
                   {"removed_or_inserted", render_part(Part{step.t * eta, overlined})},
                   {"s_before", render_ext(step.s_before)},
                   {"g_before", render_ext(step.g_before)}};
        if (step.evidence)
            entry["witness"] = json{{"start", step.evidence->start},
                                    {"width", step.evidence->width}};
        else
            entry["witness"] = nullptr;
        out.push_back(entry);
    }
    return out;
}

json series_to_json(const TruncatedSeries& s) {
    json out = json::array();
    for (int d = 0; d <= s.bound(); ++d) out.push_back(s.coeff(d));
    return out;
}

json report_to_json(const VerifyReport& r) {
    json rows = json::array();
    for (const PerN& row : r.per_n)
        rows.push_back(
            {{"n", row.n}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"pass", row.pass}});
    return json{{"identity", r.identity}, {"max_n", r.max_n},
                {"overall", r.overall},   {"params", params_to_json(r.params)},
                {"per_n", rows},          {"witnesses", r.witnesses}};
}

std::string report_to_csv(const VerifyReport& r) {
    std::string out = "n,lhs,rhs,pass\n";
    for (const PerN& row : r.per_n)
        out += std::to_string(row.n) + "," + std::to_string(row.lhs) + "," +
               std::to_string(row.rhs) + "," + (row.pass ? "1" : "0") + "\n";
    return out;
}

} // namespace bressoud
