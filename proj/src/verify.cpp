#include "qhahn/verify.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "qhahn/errors.hpp"
#include "qhahn/qkernel.hpp"

namespace qhahn::verify {

std::string_view mode_name(Mode m) { return m == Mode::exact ? "exact" : "numeric"; }

std::string_view status_name(Status s) {
  switch (s) {
  case Status::pass:
    return "pass";
  case Status::fail:
    return "fail";
  case Status::error:
    return "error";
  }
  return "error";
}

const Rational &CheckConfig::param(const std::string &name) const {
  auto it = params.find(name);
  if (it == params.end())
    throw Error("parameter '" + name + "' is not set for parameter set " + label);
  return it->second;
}

CheckConfig parameter_set_1() {
  CheckConfig c;
  c.label = "set1";
  c.q = Rational(1, 2);
  c.params = {{"a", Rational(1, 7)},     {"b", Rational(1, 3)}, {"alpha", Rational(2, 5)},
              {"c", Rational(3, 7)},     {"d", Rational(1, 5)}, {"v_ratio", Rational(2, 9)},
              {"x", Rational(1, 3)},     {"y", Rational(1, 5)}, {"t", Rational(1, 2)}};
  return c;
}

CheckConfig parameter_set_2() {
  CheckConfig c;
  c.label = "set2";
  c.q = Rational(2, 3);
  c.params = {{"a", Rational(-1, 5)},    {"b", Rational(1, 2)}, {"alpha", Rational(1, 3)},
              {"c", Rational(1, 4)},     {"d", Rational(2, 7)}, {"v_ratio", Rational(3, 5)},
              {"x", Rational(1, 3)},     {"y", Rational(1, 5)}, {"t", Rational(1, 2)}};
  return c;
}

std::vector<CheckConfig> default_configs() { return {parameter_set_1(), parameter_set_2()}; }

void Comparator::fail(Witness w) {
  if (!witness_)
    witness_ = std::move(w);
}

void Comparator::equal(const std::string &what, const Polynomial &lhs, const Polynomial &rhs) {
  ++count_;
  if (lhs == rhs)
    return;
  const Polynomial diff = lhs - rhs;
  // Smallest monomial in grlex order where the two sides differ.
  const Monomial &m = diff.terms().begin()->first;
  fail({what, m.to_string(), lhs.coeff(m).to_string(), rhs.coeff(m).to_string()});
}

void Comparator::equal(const std::string &what, const TruncatedSeries &lhs, const TruncatedSeries &rhs) {
  const Caps common = min_caps(lhs.caps(), rhs.caps());
  equal(what, lhs.truncated(common).body(), rhs.truncated(common).body());
}

void Comparator::equal(const std::string &what, const std::string &at, const Rational &lhs, const Rational &rhs) {
  ++count_;
  if (lhs != rhs)
    fail({what, at, lhs.to_string(), rhs.to_string()});
}

void Comparator::agree(const std::string &what, const numeric::CertifiedValue &lhs,
                       const numeric::CertifiedValue &rhs) {
  ++count_;
  if (!numeric::agree(lhs, rhs))
    fail({what, "value", lhs.to_string(), rhs.to_string()});
}

void Comparator::require(const std::string &what, const std::string &at, bool ok) {
  ++count_;
  if (!ok)
    fail({what, at, "true", "false"});
}

const std::vector<CheckEntry> &registry() {
  static const std::vector<CheckEntry> entries = [] {
    std::vector<CheckEntry> out;
    detail::add_formal_checks(out);
    detail::add_family_checks(out);
    detail::add_numeric_checks(out);
    return out;
  }();
  return entries;
}

namespace {

const CheckEntry &find_entry(const std::string &name) {
  for (const auto &e : registry())
    if (e.name == name)
      return e;
  throw UnknownCheck("unknown check '" + name + "'");
}

void check_preconditions(Mode mode, const CheckConfig &c) {
  if (c.cap_t < 0 || c.cap_s < 0 || c.max_n < 0 || c.max_shift < 0)
    throw DomainError("caps and index bounds must be nonnegative");
  if (mode == Mode::numeric) {
    if (!(Rational(0) < c.q && c.q < Rational(1)))
      throw DomainError("numeric mode needs 0 < q < 1, got q = " + c.q.to_string());
    return;
  }
  const long bound = c.cap_t + c.cap_s + c.max_n + c.max_shift + 1;
  if (c.q.is_zero() || !qkernel::q_generic_up_to(c.q, bound))
    throw DomainError("exact mode needs q != 0 and q^k != 1 for k <= " + std::to_string(bound) +
                      ", got q = " + c.q.to_string());
}

CheckResult execute(const CheckEntry &entry, const CheckConfig &config) {
  CheckResult result;
  result.name = entry.name;
  result.config = config;
  const auto start = std::chrono::steady_clock::now();
  try {
    check_preconditions(entry.mode, config);
    Comparator cmp;
    entry.run(config, cmp);
    if (cmp.witness()) {
      result.status = Status::fail;
      result.witness = cmp.witness();
    }
  } catch (const std::exception &e) {
    result.status = Status::error;
    result.diagnostic = e.what();
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

} // namespace

CheckResult run_check(const std::string &name, const CheckConfig &config) {
  return execute(find_entry(name), config);
}

bool matches(std::string_view pattern, std::string_view name) {
  // Iterative wildcard match with single-star backtracking.
  std::size_t p = 0, n = 0, star = std::string_view::npos, mark = 0;
  while (n < name.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == name[n])) {
      ++p;
      ++n;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = n;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      n = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*')
    ++p;
  return p == pattern.size();
}

std::vector<CheckResult> run_suite(const std::vector<CheckConfig> &configs, const std::optional<std::string> &filter,
                                   unsigned threads) {
  std::vector<std::pair<const CheckEntry *, const CheckConfig *>> jobs;
  for (const auto &config : configs)
    for (const auto &entry : registry()) {
      if (filter && !matches(*filter, entry.name))
        continue;
      if (config.mode && *config.mode != entry.mode)
        continue;
      jobs.emplace_back(&entry, &config);
    }

  std::vector<CheckResult> results(jobs.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i)
      results[i] = execute(*jobs[i].first, *jobs[i].second);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < jobs.size(); i = next++)
        results[i] = execute(*jobs[i].first, *jobs[i].second);
    });
  pool.clear();
  return results;
}

} // namespace qhahn::verify
