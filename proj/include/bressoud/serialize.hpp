#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "bressoud/bijection.hpp"
#include "bressoud/qseries.hpp"
#include "bressoud/verify.hpp"

namespace bressoud {

/* {"parts": [{"overlined": false, "size": 60}, ...]} */
nlohmann::json overpartition_to_json(const Overpartition& pi);
Overpartition overpartition_from_json(const nlohmann::json& j);

nlohmann::json partition_to_json(const Partition& tau); // plain array of sizes

nlohmann::json params_to_json(const FamilyParams& p);

const char* action_name(TraceAction a);

/* Array of {t, action, removed_or_inserted, s_before, g_before, witness};
 * parts appear as text tokens, infinity as "inf", the witness as band
 * indices {start, width} or null. */
nlohmann::json trace_to_json(const std::vector<TraceStep>& trace, int eta);

nlohmann::json series_to_json(const TruncatedSeries& s); // dense [c0, ..., cN]

nlohmann::json report_to_json(const VerifyReport& r);
std::string report_to_csv(const VerifyReport& r); // "n,lhs,rhs,pass" rows

} // namespace bressoud
