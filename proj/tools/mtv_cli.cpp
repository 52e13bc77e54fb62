#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mtv/mtv.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSkipped = 3;

struct Text {
  mtv_text* p = nullptr;
  ~Text() { mtv_text_destroy(p); }
  std::string str() const { return std::string(mtv_text_data(p), mtv_text_size(p)); }
};

struct Context {
  mtv_context* p = nullptr;
  Context() {
    if (mtv_context_create(&p) != MTV_OK) {
      std::cerr << "error: cannot create context\n";
      std::exit(kExitFail);
    }
  }
  ~Context() { mtv_context_destroy(p); }
};

int report_error(const Context& ctx, mtv_status st) {
  std::cerr << "error: " << mtv_context_last_error(ctx.p) << " (" << mtv_status_string(st) << ")\n";
  const bool usage = st == MTV_ERR_INVALID_ARGUMENT || st == MTV_ERR_PARSE || st == MTV_ERR_UNKNOWN_CHECK ||
                     st == MTV_ERR_DIVERGENT;
  if (!usage) return kExitFail;
  std::cerr << "Run with --help for more information.\n";
  return kExitUsage;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiple t-values of level N: evaluation, expansion and identity verification"};
  app.set_version_flag("--version", std::string(mtv_version()));
  app.set_config("--config", "", "TOML/INI file with option defaults; command-line flags win");
  app.require_subcommand(1);

  std::string cache_dir;
  app.add_option("--cache-dir", cache_dir, "Directory of the value cache (default: $MTV_CACHE_DIR)");

  // eval
  auto* eval = app.add_subcommand("eval", "Compute one interpolated value t^r_{N,a}(k)");
  int level = 1, residue = 1, precision = 30;
  std::string index, r = "0", tol;
  bool eval_json = false;
  eval->add_option("--level", level, "Level N")->required();
  eval->add_option("--residue", residue, "Residue a with 1 <= a <= N")->required();
  eval->add_option("--index", index, "Admissible index, e.g. 2,1 or {2}^3")->required();
  eval->add_option("--r", r, "Interpolation parameter: 0 strict, 1 star, or any rational")->capture_default_str();
  eval->add_option("--precision", precision, "Decimal digits")->capture_default_str()->check(CLI::Range(10, 2000));
  eval->add_option("--tol", tol, "Target error (default 10^-(precision-5))");
  eval->add_flag("--json", eval_json, "Print a JSON object");

  // expand
  auto* expand = app.add_subcommand("expand", "Interpolation expansion of an index, or Phi_0^r coefficients");
  std::string expand_index;
  int orders = 0, max_weight = 4;
  bool oracle = false;
  auto* idx_opt = expand->add_option("--index", expand_index, "Index to expand into comma/plus terms");
  auto* ord_opt = expand->add_option("--orders", orders, "Highest z-order of Phi_0^r to print");
  expand->add_option("--level", level, "Level N")->capture_default_str();
  expand->add_option("--residue", residue, "Residue a")->capture_default_str();
  expand->add_option("--max-weight", max_weight, "Weights covered by the (u, v, w) box")->capture_default_str();
  expand->add_flag("--oracle", oracle, "Print the comparison against brute-force sums instead");
  idx_opt->excludes(ord_opt);
  expand->callback([&] {
    if (!*idx_opt && !*ord_opt) throw CLI::RequiredError("--index or --orders");
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Run identity checks");
  std::vector<std::string> check_ids;
  bool all = false, list = false;
  std::string json_out, params, params_file;
  int jobs = 1;
  auto* check_opt = verify->add_option("--check", check_ids, "Check id (repeatable)");
  auto* all_opt = verify->add_flag("--all", all, "Run every registered check");
  verify->add_flag("--list", list, "List the registered checks");
  verify->add_option("--json", json_out, "Write the JSON report to a file, or - for stdout");
  verify->add_option("--jobs", jobs, "Checks run concurrently")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--params", params, "JSON object of parameter overrides");
  verify->add_option("--params-file", params_file, "File holding the JSON overrides");
  check_opt->excludes(all_opt);

  // cache
  auto* cache = app.add_subcommand("cache", "Inspect or clear the value cache");
  cache->require_subcommand(1);
  auto* inspect = cache->add_subcommand("inspect", "Print the cache records as JSON");
  auto* clear = cache->add_subcommand("clear", "Remove every record");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Context ctx;
  if (!cache_dir.empty()) {
    const std::string path = cache_dir + "/values.cache";
    if (auto st = mtv_context_set_cache_path(ctx.p, path.c_str()); st != MTV_OK) return report_error(ctx, st);
  }

  if (*eval) {
    if (tol.empty()) tol = "1e-" + std::to_string(precision - 5);
    Text value, err;
    const mtv_status st =
        mtv_eval(ctx.p, level, residue, index.c_str(), r.c_str(), precision, tol.c_str(), &value.p, &err.p);
    if (st != MTV_OK) return report_error(ctx, st);
    Text norm;
    mtv_index_normalize(ctx.p, index.c_str(), &norm.p);
    if (eval_json) {
      nlohmann::ordered_json j{{"level", {level, residue}}, {"index", norm.str()}, {"r", r},
                               {"precision", precision}, {"value", value.str()}, {"err", err.str()}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "t^" << r << "_{" << level << "," << residue << "}(" << norm.str() << ")\n"
                << "value " << value.str() << "\n"
                << "err   " << err.str() << "\n";
    }
    return kExitOk;
  }

  if (*expand) {
    Text out;
    mtv_status st;
    if (*idx_opt) {
      st = mtv_expand_index(ctx.p, expand_index.c_str(), &out.p);
      if (st != MTV_OK) return report_error(ctx, st);
      for (const auto& t : nlohmann::json::parse(out.str())) {
        const int e = t["r_exponent"].get<int>();
        std::cout << (e == 0 ? std::string("1") : e == 1 ? std::string("r") : "r^" + std::to_string(e)) << "\t("
                  << t["index"].get<std::string>() << ")\n";
      }
      return kExitOk;
    }
    st = oracle ? mtv_oracle_table(ctx.p, level, residue, orders, max_weight, &out.p)
                : mtv_phi0_coefficients(ctx.p, level, residue, orders, max_weight, &out.p);
    if (st != MTV_OK) return report_error(ctx, st);
    std::cout << nlohmann::ordered_json::parse(out.str()).dump(2) << "\n";
    return kExitOk;
  }

  if (*verify) {
    if (list) {
      Text out;
      if (auto st = mtv_list_checks(ctx.p, &out.p); st != MTV_OK) return report_error(ctx, st);
      for (const auto& c : nlohmann::json::parse(out.str())) {
        std::printf("%-24s %-8s %s\n", c["id"].get<std::string>().c_str(), c["kind"].get<std::string>().c_str(),
                    c["summary"].get<std::string>().c_str());
      }
      return kExitOk;
    }
    if (check_ids.empty() && !all) {
      std::cerr << "error: verify needs --check ID or --all\n" << verify->help();
      return kExitUsage;
    }
    if (!params_file.empty()) {
      try {
        params = read_file(params_file);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
    }
    std::string joined;
    for (const auto& id : check_ids) joined += (joined.empty() ? "" : ",") + id;
    if (auto st = mtv_context_set_jobs(ctx.p, jobs); st != MTV_OK) return report_error(ctx, st);
    Text report;
    int np = 0, nf = 0, ns = 0;
    const mtv_status st = mtv_verify(ctx.p, all ? nullptr : joined.c_str(), params.empty() ? nullptr : params.c_str(), 1,
                                     &report.p, &np, &nf, &ns);
    if (st != MTV_OK) return report_error(ctx, st);

    const bool to_stdout = json_out == "-";
    std::ostream& human = to_stdout ? std::cerr : std::cout;
    const auto doc = nlohmann::json::parse(report.str());
    for (const auto& c : doc["checks"]) {
      std::string status = c["status"].get<std::string>();
      for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      human << status << "\t" << c["id"].get<std::string>() << "\t" << c["ms"].get<long long>() << " ms";
      if (c.contains("reason")) human << "\t" << c["reason"].get<std::string>();
      human << "\n";
      if (c["status"] == "fail") {
        int shown = 0;
        for (const auto& k : c["cases"]) {
          if (k["ok"].get<bool>() || shown++ >= 5) continue;
          human << "    " << k["desc"].get<std::string>() << ": " << k["lhs"].get<std::string>() << " vs "
                << k["rhs"].get<std::string>() << "\n";
        }
      }
    }
    human << np << " passed, " << nf << " failed, " << ns << " skipped\n";
    if (to_stdout) {
      std::cout << report.str() << "\n";
    } else if (!json_out.empty()) {
      std::ofstream out(json_out);
      if (!(out << report.str() << "\n")) {
        std::cerr << "error: cannot write " << json_out << "\n";
        return kExitFail;
      }
    }
    if (nf > 0) return kExitFail;
    if (np == 0 && ns > 0) return kExitSkipped;
    return kExitOk;
  }

  if (*cache) {
    if (*inspect) {
      Text out;
      if (auto st = mtv_cache_describe(ctx.p, &out.p); st != MTV_OK) return report_error(ctx, st);
      std::cout << out.str() << "\n";
      return kExitOk;
    }
    if (*clear) {
      if (auto st = mtv_cache_clear(ctx.p); st != MTV_OK) return report_error(ctx, st);
      std::cout << "cache cleared\n";
      return kExitOk;
    }
  }
  return kExitUsage;
}
