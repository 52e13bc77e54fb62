// Runs every acceptance criterion once and prints one PASS/FAIL line each.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "../unit/oracles.hpp"

#include "core/bigreal.hpp"
#include "core/checks.hpp"
#include "core/index.hpp"
#include "core/tvalues.hpp"

using namespace mtv;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome from_report(const Report& r) {
  std::size_t bad = 0;
  for (const auto& c : r.cases) bad += c.ok ? 0 : 1;
  std::string detail = std::to_string(r.cases.size()) + " cases, " + std::to_string(bad) + " failing";
  if (!r.reason.empty()) detail += ", " + r.reason;
  for (const auto& c : r.cases)
    if (!c.ok) {
      detail += "; first: " + c.desc;
      break;
    }
  return {r.status == CheckStatus::kPass, detail};
}

Outcome check(const char* id, const Json& params) { return from_report(run_check(id, params)); }

const Json kAllLevels = Json::array({{1, 1}, {2, 1}, {2, 2}, {3, 2}, {4, 3}});
const Json kThreeR = Json::array({"0", "1", "1/2"});

// Depth-one values against a separate Euler-Maclaurin evaluation of the
// Hurwitz-type sums, on top of the library check that compares with MPFR.
Outcome sanity() {
  Outcome lib = check("sanity-reductions", Json{{"weights", {2, 3, 4}}, {"N", 3}, {"tol", "1e-20"}, {"precision", 30}});
  WorkingPrecision wp(40);
  TValueEngine engine(30, Real("1e-25"));
  const Real tol("1e-20");
  int bad = 0;
  for (int k = 2; k <= 4; ++k) {
    const Index idx = Index::parse(std::to_string(k));
    const Real zeta = oracle::progression_zeta(k, 1, 1);
    const Real two = boost::multiprecision::pow(Real(2), -k);
    const Real three = boost::multiprecision::pow(Real(3), -k);
    if (boost::multiprecision::abs(engine.t(Level(1, 1), idx).value - zeta) >= tol) ++bad;
    if (boost::multiprecision::abs(engine.t(Level(2, 1), idx).value - (1 - two) * zeta) >= tol) ++bad;
    if (boost::multiprecision::abs(engine.t(Level(3, 3), idx).value - three * zeta) >= tol) ++bad;
    if (boost::multiprecision::abs(oracle::progression_zeta(k, 2, 1) - (1 - two) * zeta) >= tol) ++bad;
  }
  lib.detail += ", " + std::to_string(bad) + " Euler-Maclaurin mismatches";
  return {lib.ok && bad == 0, lib.detail};
}

Outcome properties() {
  const Report special = run_check("specialization", Json{{"count", 50}});
  const Report neg = run_check("negative-controls", Json::object());
  const Report sound = run_check("error-bound-soundness", Json::object());
  const bool ok = special.status == CheckStatus::kPass && neg.status == CheckStatus::kPass &&
                  sound.status == CheckStatus::kPass;
  std::string detail = std::string("specialization ") + status_name(special.status) + " (" +
                       std::to_string(special.cases.size()) + " cases), negative controls " + status_name(neg.status) +
                       " (" + std::to_string(neg.cases.size()) + " mutants), error bounds " +
                       status_name(sound.status) + " (" + std::to_string(sound.cases.size()) + " samples)";
  return {ok, detail};
}

struct Criterion {
  int number;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exact main theorem", 180,
       [] { return check("thm-main-exact", Json{{"levels", kAllLevels}, {"max_order", 60}, {"max_weight", 7}}); }},
      {2, "ODE residual", 30,
       [] { return check("ode-residual", Json{{"levels", kAllLevels}, {"max_order", 41}, {"max_weight", 7}}); }},
      {3, "recurrence relations", 60,
       [] {
         return check("recurrence-relations",
                      Json{{"levels", Json::array({{1, 1}, {2, 1}})}, {"max_weight", 6}, {"max_order", 20}});
       }},
      {4, "weight-3 example", 60, [] { return check("example-k3", Json{{"precision", 30}, {"tol", "1e-10"}}); }},
      {5, "weight-4 example", 180, [] { return check("example-k4", Json{{"precision", 30}, {"tol", "1e-10"}}); }},
      {6, "weighted sum", 300,
       [] {
         return check("weighted-sum",
                      Json{{"weights", {3, 4, 5}}, {"residues", {1, 2}}, {"r", kThreeR}, {"tol", "1e-8"}});
       }},
      {7, "maximal height", 300,
       [] {
         return check("max-height",
                      Json{{"level", {2, 1}}, {"r", kThreeR}, {"max_weight", 8}, {"tol", "1e-8"}});
       }},
      {8, "twos generating function", 60,
       [] {
         return check("twos-genfun", Json{{"levels", Json::array({{1, 1}, {2, 1}})},
                                          {"r", kThreeR},
                                          {"max_n", 5},
                                          {"tol", "1e-10"}});
       }},
      {9, "height one", 300,
       [] {
         return check("height-one",
                      Json{{"level", {2, 1}}, {"m", {2, 3}}, {"r", {"0", "1"}}, {"max_n", 6}, {"tol", "1e-6"}});
       }},
      {10, "sanity reductions", 10, sanity},
      {11, "property suites", 600, properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = s < c.budget_s;
    const bool ok = o.ok && in_time;
    failures += ok ? 0 : 1;
    std::printf("%s criterion %d: %s (%s; %.2f s of %.0f s)\n", ok ? "PASS" : "FAIL", c.number, c.name,
                o.detail.c_str(), s, c.budget_s);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
