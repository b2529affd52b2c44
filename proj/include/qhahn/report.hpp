#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhahn/verify.hpp"

/// Text, JSON and CSV renderings of suite results.
namespace qhahn::report {

inline constexpr const char *kSuiteVersion = "1";

struct ReportOptions {
  std::optional<std::string> filter;
  /// Adds elapsed_ms to each JSON result. Off by default so that identical
  /// runs produce identical bytes.
  bool timings = false;
};

/// Pretty-printed JSON with sorted keys and canonical rational strings,
/// terminated by a newline.
std::string to_json(const std::vector<verify::CheckResult> &results, const std::vector<verify::CheckConfig> &configs,
                    const ReportOptions &options);

/// Header "name,param_set,status,elapsed_ms" plus one row per result.
std::string to_csv(const std::vector<verify::CheckResult> &results);

/// One line per result, a witness or diagnostic line under each non-pass,
/// and a closing summary line.
std::string to_text(const std::vector<verify::CheckResult> &results);

bool all_pass(const std::vector<verify::CheckResult> &results);

} // namespace qhahn::report
