// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "qhahn/cli.hpp"
#include "qhahn/families.hpp"
#include "qhahn/operators.hpp"
#include "qhahn/qkernel.hpp"
#include "qhahn/verify.hpp"

using namespace qhahn;
using namespace qhahn::verify;

namespace {

using Clock = std::chrono::steady_clock;

double seconds(std::chrono::nanoseconds d) { return std::chrono::duration<double>(d).count(); }

int failures = 0;

void report(int id, bool ok, const std::string &what, const std::string &detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << what;
  if (!detail.empty())
    std::cout << " -- " << detail;
  std::cout << '\n';
  failures += !ok;
}

std::string describe(const CheckResult &r) {
  std::ostringstream s;
  s << r.name << " [" << r.config.label << "] " << status_name(r.status);
  if (r.witness)
    s << " (" << r.witness->comparison << " at " << r.witness->monomial << ": lhs " << r.witness->lhs << ", rhs "
      << r.witness->rhs << ")";
  if (!r.diagnostic.empty())
    s << " (" << r.diagnostic << ")";
  return s.str();
}

void criterion_1() {
  std::vector<CheckConfig> configs = default_configs();
  for (auto &c : configs)
    c.mode = Mode::exact;
  const auto start = Clock::now();
  const auto results = run_suite(configs, std::nullopt, 1);
  const double total = seconds(Clock::now() - start);

  bool ok = total < 60.0;
  std::ostringstream detail;
  int passed = 0;
  double heaviest_c10 = 0, heaviest_c14d = 0;
  for (const auto &r : results) {
    if (r.status == Status::pass)
      ++passed;
    else {
      ok = false;
      detail << describe(r) << "; ";
    }
    if (r.name == "C10.E_triple_sum")
      heaviest_c10 = std::max(heaviest_c10, seconds(r.elapsed));
    if (r.name == "C14d.h_mehler")
      heaviest_c14d = std::max(heaviest_c14d, seconds(r.elapsed));
  }
  ok = ok && heaviest_c10 < 20.0 && heaviest_c14d < 20.0 && results.size() == 48;
  detail << passed << "/" << results.size() << " pass, total " << total << " s, C10 max " << heaviest_c10
         << " s, C14d max " << heaviest_c14d << " s";
  report(1, ok, "exact identity suite C1-C14d, both parameter sets, caps 8, n <= 8, shift <= 3", detail.str());
}

void criterion_2() {
  bool ok = true;
  std::string detail;
  for (const auto &c : default_configs()) {
    const families::FamilyParams p{c.q, c.param("a"), c.param("b")};
    const auto E = ops::OperatorSpec::e_tilde(p.a, ScaledMonomial::of(Var::y), c.q);
    const auto L = ops::OperatorSpec::l_tilde(p.a, p.b, c.q);
    for (int n = 0; n <= 8; ++n) {
      if (ops::apply_operator(E, Polynomial::variable(Var::x, 1, n)) != families::cauchy_p_general(n, p)) {
        ok = false;
        detail += "E on x^" + std::to_string(n) + " [" + c.label + "]; ";
      }
      if (ops::apply_operator(L, families::cauchy_p(n, c.q, Var::y, Var::x)) != families::hahn_h(n, p)) {
        ok = false;
        detail += "L on p_" + std::to_string(n) + "(y,x) [" + c.label + "]; ";
      }
    }
  }
  report(2, ok, "E(a,y;D_q) x^n = p_n(x,y,a) and L(a,b;theta) p_n(y,x) = h_n, n <= 8", detail);
}

void criterion_3() {
  bool ok = true;
  std::string detail;
  for (const auto &c : default_configs()) {
    const Rational &q = c.q;
    for (int n = 0; n <= 6; ++n) {
      Polynomial current = families::cauchy_p(n, q, Var::y, Var::x);
      for (int k = 0; k <= n; ++k) {
        if (ops::theta_power_on_cauchy(n, k, q) != current) {
          ok = false;
          detail += "theta n=" + std::to_string(n) + " k=" + std::to_string(k) + "; ";
        }
        current = ops::theta(current, q);
      }
    }
    for (int n = 0; n <= 12; ++n)
      for (int k = 0; k <= n; ++k)
        if (qkernel::q_binomial(n, k, q) !=
            qkernel::q_pochhammer(q, q, n) / (qkernel::q_pochhammer(q, q, k) * qkernel::q_pochhammer(q, q, n - k))) {
          ok = false;
          detail += "q_binomial n=" + std::to_string(n) + "; ";
        }
    for (int k = 0; k <= 6; ++k) {
      Polynomial iterated = Polynomial::variable(Var::x, 1, k);
      for (int n = 0; n <= k; ++n) {
        if (ops::dq_power(Polynomial::variable(Var::x, 1, k), Var::x, q, n) != iterated) {
          ok = false;
          detail += "dq n=" + std::to_string(n) + " k=" + std::to_string(k) + "; ";
        }
        iterated = ops::dq(iterated, Var::x, q);
      }
    }
  }
  report(3, ok, "theta^k on p_n(y,x), q-binomial and D_q^n x^k oracle equivalences", detail);
}

void criterion_4() {
  bool ok = true;
  std::string detail;
  for (const auto &c : default_configs())
    for (const char *name : {"C5.leibniz", "C5b.vandermonde_aux"}) {
      const auto r = run_check(name, c);
      if (r.status != Status::pass) {
        ok = false;
        detail += describe(r) + "; ";
      }
    }
  report(4, ok, "randomized Leibniz rule (100 seeded pairs) and the auxiliary sum, n,m,k <= 5", detail);
}

void criterion_5() {
  const CheckConfig c = parameter_set_1();
  const auto start = Clock::now();
  const auto r = run_check("C15.numeric_spot", c);
  const double elapsed = seconds(Clock::now() - start);
  const bool ok = r.status == Status::pass && elapsed < 5.0;
  std::ostringstream detail;
  if (r.status != Status::pass)
    detail << describe(r) << "; ";
  detail << "elapsed " << elapsed << " s";
  report(5, ok, "certified numeric generating functions at q=1/2, x=1/3, y=1/5, a=1/7, t=1/2, eps=1e-30",
         detail.str());
}

void criterion_6() {
  bool ok = true;
  std::string detail;
  for (CheckConfig c : default_configs()) {
    c.perturb_h_b = Rational(1, 1000);
    const auto r = run_check("C14a.h_gf", c);
    if (r.status != Status::fail || !r.witness)
      ok = false;
    detail += describe(r) + "; ";
  }
  report(6, ok, "perturbing b on one side makes C14a fail with a witness", detail);
}

void criterion_7() {
  auto verify_json = [](const char *threads) {
    ::setenv("QHAHN_THREADS", threads, 1);
    std::ostringstream out, err;
    cli::run({"verify", "--json"}, out, err);
    return out.str();
  };
  const std::string a = verify_json("1"), b = verify_json("1"), c = verify_json("8");
  ::unsetenv("QHAHN_THREADS");
  const bool ok = !a.empty() && a == b && a == c;
  report(7, ok, "verify --json is byte-identical across runs and QHAHN_THREADS=1 vs 8",
         std::to_string(a.size()) + " bytes");
}

} // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  std::cout << (7 - failures) << "/7 acceptance criteria pass\n";
  return failures == 0 ? 0 : 1;
}
