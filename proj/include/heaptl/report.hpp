#pragma once

#include "heaptl/boundary.hpp"
#include "heaptl/verify.hpp"

#include <json.hpp>

namespace heaptl {

/// Per-heap JSON report (schema 1): word, edges, boundary columns, kernel
/// data, boundary analysis, and the equivalence verdict. All vertex and
/// generator indices are 1-based.
nlohmann::json heap_report_json(const Heap& e);

nlohmann::json graph_json(const CoxeterGraph& g);

nlohmann::json campaign_report_json(const CoxeterGraph& g, const CampaignConfig& cfg,
                                    const CampaignResult& result);

}  // namespace heaptl
