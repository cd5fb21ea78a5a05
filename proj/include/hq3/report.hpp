#pragma once

#include "hq3/campaign.hpp"

#include <iosfwd>
#include <string>

namespace hq3 {

/// Header line (carries the timestamp), one line per record, then a summary object.
void write_jsonl(std::ostream& os, const GridSpec& grid, const CampaignResult& result, const std::string& timestamp);

/// identity,pass,fail,degenerate,instances with one row per identity.
void write_csv(std::ostream& os, const CampaignResult& result);

/// Human-readable per-identity counts.
void print_summary(std::ostream& os, const GridSpec& grid, const CampaignResult& result);

nlohmann::json summary_json(const GridSpec& grid, const CampaignResult& result);
nlohmann::json record_json(const GridSpec& grid, const CampaignResult& result, const IdentityRecord& r);

std::string utc_timestamp();

}  // namespace hq3
