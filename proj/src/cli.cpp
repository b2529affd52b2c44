#include "qhahn/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhahn/errors.hpp"
#include "qhahn/families.hpp"
#include "qhahn/numeric.hpp"
#include "qhahn/qkernel.hpp"
#include "qhahn/report.hpp"
#include "qhahn/verify.hpp"

namespace qhahn::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

Rational parse_rational(const std::string &text, const std::string &flag) {
  try {
    return Rational::parse(text);
  } catch (const Error &e) {
    throw UsageError(flag + ": " + e.what());
  }
}

// Accepts p/q or 1e-N.
Rational parse_tolerance(const std::string &text) {
  if (text.starts_with("1e-")) {
    const std::string digits = text.substr(3);
    if (!digits.empty() && digits.size() <= 4 &&
        std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
      return Rational(1) / Rational(10).pow(std::stol(digits));
  }
  return parse_rational(text, "--eps");
}

std::map<std::string, Rational> parse_params(const std::string &text) {
  std::map<std::string, Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty())
      continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw UsageError("--params: expected name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    out[name] = parse_rational(item.substr(eq + 1), "--params " + name);
  }
  return out;
}

std::vector<Rational> parse_list(const std::string &text, const std::string &flag) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty())
      out.push_back(parse_rational(item, flag));
  return out;
}

unsigned thread_budget() {
  const char *env = std::getenv("QHAHN_THREADS");
  if (env == nullptr || *env == '\0')
    return std::max(1u, std::thread::hardware_concurrency());
  char *end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n <= 0)
    throw UsageError(std::string("QHAHN_THREADS must be a positive integer, got '") + env + "'");
  return static_cast<unsigned>(n);
}

enum class Output { text, json, csv };

struct Options {
  std::string q = "1/2";
  bool q_given = false;
  std::string params;
  int n = 0;
  int k = 0;
  std::string a = "0";
  std::string z = "0";
  std::string num, den;
  std::string eps = "1e-30";
  int order_t = 8, order_s = 8, max_n = 8, max_shift = 3;
  std::uint64_t seed = 0;
  std::optional<std::string> check;
  std::string out_file;
  bool json = false;
  bool timings = false;
  std::string output = "text";
  std::string family, quantity;
};

Output output_of(const Options &o) {
  if (o.json)
    return Output::json;
  if (o.output == "json")
    return Output::json;
  if (o.output == "csv")
    return Output::csv;
  return Output::text;
}

std::vector<verify::CheckConfig> suite_configs(const Options &o) {
  std::vector<verify::CheckConfig> configs;
  if (o.q_given || !o.params.empty()) {
    verify::CheckConfig c = verify::parameter_set_1();
    c.label = "custom";
    if (o.q_given)
      c.q = parse_rational(o.q, "--q");
    for (const auto &[name, value] : parse_params(o.params))
      c.params[name] = value;
    configs.push_back(c);
  } else {
    configs = verify::default_configs();
  }
  for (auto &c : configs) {
    c.cap_t = o.order_t;
    c.cap_s = o.order_s;
    c.max_n = o.max_n;
    c.max_shift = o.max_shift;
    c.seed = o.seed;
  }
  return configs;
}

int cmd_poly(const Options &o, std::ostream &out) {
  const Rational q = parse_rational(o.q, "--q");
  const auto params = parse_params(o.params);
  const auto get = [&](const char *name, Rational fallback) {
    auto it = params.find(name);
    return it == params.end() ? fallback : it->second;
  };
  if (o.n < 0)
    throw UsageError("--n must be nonnegative");
  Polynomial p;
  const std::string &f = o.family;
  if (f == "cauchy")
    p = families::cauchy_p(o.n, q);
  else if (f == "pgen")
    p = families::cauchy_p_general(o.n, {q, get("a", 0), Rational(1)});
  else if (f == "hahn")
    p = families::hahn_h(o.n, {q, get("a", 0), get("b", 1)});
  else if (f == "F")
    p = families::trivariate_F(o.n, q, get("z", 1));
  else if (f == "psi1")
    p = families::hahn_psi(families::PsiVariant::one, o.n, get("a", 1), q);
  else if (f == "psi2")
    p = families::hahn_psi(families::PsiVariant::two, o.n, get("a", 1), q);
  else
    throw UsageError("unknown family '" + f + "' (cauchy, pgen, hahn, F, psi1, psi2)");

  if (output_of(o) == Output::json) {
    nlohmann::json params_json = nlohmann::json::object();
    for (const auto &[name, value] : params)
      params_json[name] = value.to_string();
    const nlohmann::json doc = {
        {"family", f}, {"n", o.n}, {"q", q.to_string()}, {"params", params_json}, {"polynomial", p.to_string()}};
    out << doc.dump(2) << '\n';
  } else {
    out << p.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_eval(const Options &o, std::ostream &out) {
  const Rational q = parse_rational(o.q, "--q");
  const std::string &what = o.quantity;
  std::optional<numeric::CertifiedValue> certified;
  std::optional<Rational> exact;
  if (what == "qpochinf") {
    certified = numeric::qpochhammer_inf(parse_rational(o.a, "--a"), q, parse_tolerance(o.eps));
  } else if (what == "phi") {
    certified = numeric::phi_numeric(parse_list(o.num, "--num"), parse_list(o.den, "--den"), q,
                                     parse_rational(o.z, "--z"), parse_tolerance(o.eps));
  } else if (what == "qpoch") {
    exact = qkernel::q_pochhammer(parse_rational(o.a, "--a"), q, o.n);
  } else if (what == "qbinom") {
    exact = qkernel::q_binomial(o.n, o.k, q);
  } else if (what == "qnumber") {
    exact = qkernel::q_number(o.n, q);
  } else if (what == "qfactorial") {
    exact = qkernel::q_factorial(o.n, q);
  } else {
    throw UsageError("unknown quantity '" + what + "' (qpochinf, phi, qpoch, qbinom, qnumber, qfactorial)");
  }

  if (output_of(o) == Output::json) {
    const nlohmann::json doc = certified ? nlohmann::json{{"approx", certified->approx.to_string()},
                                                          {"bound", certified->error_bound.to_string()}}
                                         : nlohmann::json{{"value", exact->to_string()}};
    out << doc.dump(2) << '\n';
  } else {
    out << (certified ? certified->to_string() : exact->to_string()) << '\n';
  }
  return kExitOk;
}

int cmd_list(std::ostream &out) {
  for (const auto &e : verify::registry())
    out << e.name << "  (" << verify::mode_name(e.mode) << ")  " << e.description << '\n';
  return kExitOk;
}

int cmd_verify(const Options &o, std::ostream &out, bool to_file) {
  const auto configs = suite_configs(o);
  const auto results = verify::run_suite(configs, o.check, thread_budget());
  if (o.check && results.empty())
    throw UsageError("no check matches '" + *o.check + "'");
  const report::ReportOptions options{o.check, o.timings};
  if (to_file) {
    std::ofstream file(o.out_file, std::ios::binary);
    if (!file)
      throw UsageError("cannot open '" + o.out_file + "' for writing");
    file << report::to_json(results, configs, options);
    out << "wrote " << o.out_file << '\n';
  } else {
    switch (output_of(o)) {
    case Output::json:
      out << report::to_json(results, configs, options);
      break;
    case Output::csv:
      out << report::to_csv(results);
      break;
    case Output::text:
      out << report::to_text(results);
      break;
    }
  }
  return report::all_pass(results) ? kExitOk : kExitCheckFailed;
}

void add_suite_flags(CLI::App *cmd, Options &o) {
  cmd->add_option("--check", o.check, "check name or pattern with * and ?");
  cmd->add_option("--order-t", o.order_t, "truncation order in t")->check(CLI::NonNegativeNumber);
  cmd->add_option("--order-s", o.order_s, "truncation order in s")->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-n", o.max_n, "largest family index")->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-shift", o.max_shift, "largest extended-generating-function shift")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", o.seed, "seed for randomized checks");
  cmd->add_flag("--timings", o.timings, "include elapsed_ms in JSON results");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"Exact q-series, Cauchy and Hahn polynomial toolkit", "qhahn"};
  app.require_subcommand(1);
  const auto common = [&](CLI::App *cmd) {
    cmd->add_option("--q", o.q, "base q as p/q")->each([&](const std::string &) { o.q_given = true; });
    cmd->add_option("--params", o.params, "parameters as name=p/q,...");
    cmd->add_flag("--json", o.json, "JSON output");
    cmd->add_option("--output", o.output, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto *poly = app.add_subcommand("poly", "print a polynomial family member");
  poly->add_option("family", o.family, "cauchy, pgen, hahn, F, psi1 or psi2")->required();
  poly->add_option("--n", o.n, "index")->required();
  common(poly);

  auto *eval = app.add_subcommand("eval", "evaluate a q-quantity exactly or with a certified bound");
  eval->add_option("quantity", o.quantity, "qpochinf, phi, qpoch, qbinom, qnumber or qfactorial")->required();
  eval->add_option("--a", o.a, "parameter a");
  eval->add_option("--n", o.n, "index n");
  eval->add_option("--k", o.k, "index k");
  eval->add_option("--z", o.z, "argument z");
  eval->add_option("--num", o.num, "numerator parameters, comma separated");
  eval->add_option("--den", o.den, "denominator parameters, comma separated");
  eval->add_option("--eps", o.eps, "error tolerance, p/q or 1e-N");
  common(eval);

  auto *verify_cmd = app.add_subcommand("verify", "run the identity checks");
  common(verify_cmd);
  add_suite_flags(verify_cmd, o);

  auto *list = app.add_subcommand("list", "list the registered checks");

  auto *report_cmd = app.add_subcommand("report", "write the JSON report to a file");
  report_cmd->add_option("--out", o.out_file, "output file")->required();
  common(report_cmd);
  add_suite_flags(report_cmd, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (poly->parsed())
      return cmd_poly(o, out);
    if (eval->parsed())
      return cmd_eval(o, out);
    if (list->parsed())
      return cmd_list(out);
    if (verify_cmd->parsed())
      return cmd_verify(o, out, false);
    return cmd_verify(o, out, true);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

} // namespace qhahn::cli
