#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhahn/numeric.hpp"
#include "qhahn/polynomial.hpp"
#include "qhahn/rational.hpp"
#include "qhahn/series.hpp"

/// Registry of executable identity checks and the suite runner.
namespace qhahn::verify {

enum class Mode { exact, numeric };
std::string_view mode_name(Mode m);

struct CheckConfig {
  std::string label = "custom";
  Rational q = Rational(1, 2);
  /// a, b, c, d, alpha, v_ratio and the numeric point x, y, t.
  std::map<std::string, Rational> params;
  int cap_t = 8;
  int cap_s = 8;
  int max_n = 8;
  int max_shift = 3;
  /// Restricts run_suite to checks of this mode; unset runs both.
  std::optional<Mode> mode;
  std::uint64_t seed = 0;
  /// Test-only mutation hook: added to b on the left-hand side of C14a.
  std::optional<Rational> perturb_h_b;

  /// Throws Error when the parameter is missing.
  const Rational &param(const std::string &name) const;
  Caps caps() const { return {cap_t, cap_s}; }
};

/// The two mandated parameter sets, at the given caps.
CheckConfig parameter_set_1();
CheckConfig parameter_set_2();
std::vector<CheckConfig> default_configs();

enum class Status { pass, fail, error };
std::string_view status_name(Status s);

/// First discrepancy: the comparison that failed, the monomial (or index
/// tuple) where it failed, and both sides there.
struct Witness {
  std::string comparison;
  std::string monomial;
  std::string lhs;
  std::string rhs;
};

struct CheckResult {
  std::string name;
  CheckConfig config;
  Status status = Status::pass;
  std::optional<Witness> witness;
  std::string diagnostic;
  std::chrono::nanoseconds elapsed{0};
};

/// Collects comparisons inside a check; keeps the first discrepancy.
class Comparator {
public:
  void equal(const std::string &what, const Polynomial &lhs, const Polynomial &rhs);
  /// Compares at the common (minimum) caps.
  void equal(const std::string &what, const TruncatedSeries &lhs, const TruncatedSeries &rhs);
  void equal(const std::string &what, const std::string &at, const Rational &lhs, const Rational &rhs);
  void agree(const std::string &what, const numeric::CertifiedValue &lhs, const numeric::CertifiedValue &rhs);
  void require(const std::string &what, const std::string &at, bool ok);

  const std::optional<Witness> &witness() const { return witness_; }
  int comparisons() const { return count_; }

private:
  void fail(Witness w);
  std::optional<Witness> witness_;
  int count_ = 0;
};

using CheckFn = std::function<void(const CheckConfig &, Comparator &)>;

struct CheckEntry {
  std::string name;
  Mode mode;
  std::string description;
  CheckFn run;
};

const std::vector<CheckEntry> &registry();

/// Throws UnknownCheck.
CheckResult run_check(const std::string &name, const CheckConfig &config);

/// Shell-style pattern with '*' and '?'.
bool matches(std::string_view pattern, std::string_view name);

/// Every matching check under every config, in config-major, registry order.
/// Runs on up to `threads` workers; the result is independent of `threads`.
std::vector<CheckResult> run_suite(const std::vector<CheckConfig> &configs,
                                   const std::optional<std::string> &filter = std::nullopt, unsigned threads = 1);

namespace detail {
// Registration hooks, one per translation unit.
void add_formal_checks(std::vector<CheckEntry> &out);
void add_family_checks(std::vector<CheckEntry> &out);
void add_numeric_checks(std::vector<CheckEntry> &out);
} // namespace detail

} // namespace qhahn::verify
