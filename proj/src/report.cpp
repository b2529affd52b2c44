#include "qhahn/report.hpp"

#include <sstream>

#include <json.hpp>

namespace qhahn::report {

namespace {

using nlohmann::json;

double elapsed_ms(const verify::CheckResult &r) {
  return std::chrono::duration<double, std::milli>(r.elapsed).count();
}

json config_json(const verify::CheckConfig &c) {
  json params = json::object();
  for (const auto &[name, value] : c.params)
    params[name] = value.to_string();
  return {{"label", c.label}, {"q", c.q.to_string()}, {"params", params}};
}

} // namespace

bool all_pass(const std::vector<verify::CheckResult> &results) {
  for (const auto &r : results)
    if (r.status != verify::Status::pass)
      return false;
  return true;
}

std::string to_json(const std::vector<verify::CheckResult> &results, const std::vector<verify::CheckConfig> &configs,
                    const ReportOptions &options) {
  json sets = json::array();
  for (const auto &c : configs)
    sets.push_back(config_json(c));
  const verify::CheckConfig shape = configs.empty() ? verify::CheckConfig{} : configs.front();
  json config = {{"cap_t", shape.cap_t},         {"cap_s", shape.cap_s},
                 {"max_n", shape.max_n},         {"max_shift", shape.max_shift},
                 {"seed", shape.seed},           {"parameter_sets", sets},
                 {"filter", options.filter ? json(*options.filter) : json(nullptr)}};

  json rows = json::array();
  int pass = 0, fail = 0, error = 0;
  for (const auto &r : results) {
    json row = {{"name", r.name}, {"param_set", r.config.label}, {"status", verify::status_name(r.status)}};
    if (r.witness)
      row["witness"] = {{"comparison", r.witness->comparison},
                        {"monomial", r.witness->monomial},
                        {"lhs", r.witness->lhs},
                        {"rhs", r.witness->rhs}};
    if (!r.diagnostic.empty())
      row["diagnostic"] = r.diagnostic;
    if (options.timings)
      row["elapsed_ms"] = elapsed_ms(r);
    rows.push_back(std::move(row));
    (r.status == verify::Status::pass ? pass : r.status == verify::Status::fail ? fail : error) += 1;
  }
  const json doc = {{"suite_version", kSuiteVersion},
                    {"config", config},
                    {"results", rows},
                    {"summary", {{"pass", pass}, {"fail", fail}, {"error", error}, {"total", results.size()}}}};
  return doc.dump(2) + "\n";
}

std::string to_csv(const std::vector<verify::CheckResult> &results) {
  std::ostringstream out;
  out << "name,param_set,status,elapsed_ms\n";
  out.setf(std::ios::fixed);
  out.precision(3);
  for (const auto &r : results)
    out << r.name << ',' << r.config.label << ',' << verify::status_name(r.status) << ',' << elapsed_ms(r) << '\n';
  return out.str();
}

std::string to_text(const std::vector<verify::CheckResult> &results) {
  std::ostringstream out;
  int pass = 0;
  for (const auto &r : results) {
    out << (r.status == verify::Status::pass    ? "PASS "
            : r.status == verify::Status::fail ? "FAIL "
                                               : "ERROR")
        << ' ' << r.name << " [" << r.config.label << "]\n";
    if (r.witness)
      out << "      " << r.witness->comparison << " at " << r.witness->monomial << ": lhs " << r.witness->lhs
          << ", rhs " << r.witness->rhs << '\n';
    if (!r.diagnostic.empty())
      out << "      " << r.diagnostic << '\n';
    pass += r.status == verify::Status::pass;
  }
  out << pass << '/' << results.size() << " checks passed\n";
  return out.str();
}

} // namespace qhahn::report
