#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "core/genfun.hpp"

namespace mtv {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "mtv-report/1";

std::string tool_version();

enum class CheckKind { kExact, kNumeric };
enum class CheckStatus { kPass, kFail, kSkipped };

const char* status_name(CheckStatus s);
const char* kind_name(CheckKind k);

struct CheckInfo {
  std::string id;
  CheckKind kind;
  std::string anchor;   // the identity or relation being tested
  std::string summary;
  Json defaults;
};

/// Static catalogue, ordered by id. Adding a check means adding an entry here.
const std::vector<CheckInfo>& check_catalogue();
/// Throws kUnknownCheck.
const CheckInfo& find_check(std::string_view id);

struct CaseResult {
  std::string desc;
  std::string lhs;
  std::string rhs;
  std::string delta;       // numeric cases
  std::string coeff_diff;  // exact cases
  bool ok = false;
};

struct Report {
  std::string id;
  Json params;
  CheckStatus status = CheckStatus::kSkipped;
  std::string reason;
  std::vector<CaseResult> cases;
  double ms = 0;
};

class ValueCache;

struct CheckContext {
  ValueCache* cache = nullptr;
};

/// Runs one check with `overrides` merged over its defaults. Infeasible or
/// invalid parameters give a skipped report with a reason; unknown ids throw.
Report run_check(std::string_view id, const Json& overrides = Json::object(), const CheckContext& ctx = {});

/// Runs the checks on up to `jobs` threads; the result is in catalogue order
/// regardless of completion order.
std::vector<Report> run_checks(const std::vector<std::string>& ids, const std::map<std::string, Json>& overrides,
                               int jobs, const CheckContext& ctx = {});

Json report_json(const std::vector<Report>& reports, bool with_timing = true);

/// [{monomial, coeff}] for every nonzero coefficient.
Json series_json(const SeriesQ& s);
/// [{level, k, n, s, m, lhs, rhs, equal}]
Json oracle_rows_json(const std::vector<OracleRow>& rows);

}  // namespace mtv
