#pragma once

#include <string>

#include "pangular/bounds.hpp"
#include "pangular/probe.hpp"
#include "pangular/verify.hpp"

namespace pangular {

/// %.17g formatting; every double round-trips through this representation.
std::string fmt17(double v);

// JSON serialization. Every document carries "schema": 1 and a "kind" tag.
std::string to_json(const VerificationReport& rep);
std::string to_json(const SearchResult& res);
std::string to_json(const Verdict& verdict);
std::string to_json(const RegionReport& rep);
std::string to_json(const ChainReport& rep, bool with_alpha_p);
std::string to_json(const BoundResult& res);

/// Lossless inverses of to_json for the report types.
VerificationReport verification_report_from_json(const std::string& text);
SearchResult search_result_from_json(const std::string& text);

// CSV emitters.
std::string catalog_csv();
std::string violations_csv(const VerificationReport& rep);
/// Single `name=value` row, e.g. "s=1,d=4,k=13,K=16,D=16,S=19".
std::string chain_csv(const ChainReport& rep, bool with_alpha_p);
std::string bound_results_csv(const std::vector<BoundResult>& results);
std::string region_csv(const RegionReport& rep);

}  // namespace pangular
