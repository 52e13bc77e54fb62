#include "mtv/mtv.h"

#include <cstdlib>
#include <memory>
#include <optional>
#include <sstream>

#include "core/checks.hpp"
#include "core/error.hpp"
#include "core/genfun.hpp"
#include "core/index.hpp"
#include "core/tvalues.hpp"
#include "core/value_cache.hpp"

struct mtv_context {
  std::string last_error;
  std::unique_ptr<mtv::ValueCache> cache;
  int jobs = 1;
};

struct mtv_text {
  std::string data;
};

namespace {

mtv_status status_of(mtv::ErrorKind kind) {
  using mtv::ErrorKind;
  switch (kind) {
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kBoundMismatch:
    case ErrorKind::kNotInvertible: return MTV_ERR_INVALID_ARGUMENT;
    case ErrorKind::kParse: return MTV_ERR_PARSE;
    case ErrorKind::kDivergent: return MTV_ERR_DIVERGENT;
    case ErrorKind::kToleranceUnreachable: return MTV_ERR_UNREACHABLE;
    case ErrorKind::kUnknownCheck: return MTV_ERR_UNKNOWN_CHECK;
    case ErrorKind::kIo: return MTV_ERR_IO;
  }
  return MTV_ERR_INTERNAL;
}

// Runs `f`, translating exceptions into a status and the context's last error.
template <class F>
mtv_status guarded(mtv_context* ctx, F&& f) {
  if (!ctx) return MTV_ERR_INVALID_ARGUMENT;
  try {
    ctx->last_error.clear();
    f();
    return MTV_OK;
  } catch (const mtv::Error& e) {
    ctx->last_error = e.what();
    return status_of(e.kind());
  } catch (const nlohmann::json::exception& e) {
    ctx->last_error = e.what();
    return MTV_ERR_PARSE;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return MTV_ERR_INTERNAL;
  } catch (...) {
    ctx->last_error = "unknown error";
    return MTV_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) mtv::fail(mtv::ErrorKind::kInvalidArgument, std::string(what) + " must not be NULL");
}

mtv_text* make_text(std::string s) { return new mtv_text{std::move(s)}; }

std::vector<std::string> split_ids(const char* csv) {
  std::vector<std::string> ids;
  std::stringstream ss(csv);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) ids.push_back(item.substr(b, e - b + 1));
  }
  return ids;
}

}  // namespace

extern "C" {

const char* mtv_version(void) { return MTV_VERSION_STRING; }

const char* mtv_status_string(mtv_status status) {
  switch (status) {
    case MTV_OK: return "ok";
    case MTV_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MTV_ERR_PARSE: return "parse error";
    case MTV_ERR_UNREACHABLE: return "tolerance unreachable";
    case MTV_ERR_DIVERGENT: return "divergent";
    case MTV_ERR_UNKNOWN_CHECK: return "unknown check";
    case MTV_ERR_IO: return "i/o error";
    case MTV_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

mtv_status mtv_context_create(mtv_context** out) {
  if (!out) return MTV_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  auto ctx = std::make_unique<mtv_context>();
  const mtv_status st = guarded(ctx.get(), [&] {
    if (auto p = mtv::ValueCache::default_path()) ctx->cache = std::make_unique<mtv::ValueCache>(*p);
  });
  if (st != MTV_OK) return st;
  *out = ctx.release();
  return MTV_OK;
}

void mtv_context_destroy(mtv_context* ctx) { delete ctx; }

const char* mtv_context_last_error(const mtv_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

mtv_status mtv_context_set_cache_path(mtv_context* ctx, const char* path) {
  return guarded(ctx, [&] {
    if (!path || !*path) {
      ctx->cache.reset();
      return;
    }
    ctx->cache = std::make_unique<mtv::ValueCache>(path);
  });
}

mtv_status mtv_context_set_jobs(mtv_context* ctx, int jobs) {
  return guarded(ctx, [&] {
    if (jobs < 1) mtv::fail(mtv::ErrorKind::kInvalidArgument, "jobs must be at least 1");
    ctx->jobs = jobs;
  });
}

const char* mtv_text_data(const mtv_text* text) { return text ? text->data.c_str() : ""; }
size_t mtv_text_size(const mtv_text* text) { return text ? text->data.size() : 0; }
void mtv_text_destroy(mtv_text* text) { delete text; }

mtv_status mtv_index_stats_of(mtv_context* ctx, const char* index, mtv_index_stats* out) {
  return guarded(ctx, [&] {
    require(index, "index");
    require(out, "out");
    const mtv::Index k = mtv::Index::parse(index);
    *out = {k.weight(), k.depth(), k.height(), k.admissible() ? 1 : 0};
  });
}

mtv_status mtv_index_normalize(mtv_context* ctx, const char* index, mtv_text** out) {
  return guarded(ctx, [&] {
    require(index, "index");
    require(out, "out");
    *out = make_text(mtv::Index::parse(index).to_string());
  });
}

mtv_status mtv_expand_index(mtv_context* ctx, const char* index, mtv_text** out) {
  return guarded(ctx, [&] {
    require(index, "index");
    require(out, "out");
    mtv::Json terms = mtv::Json::array();
    for (const auto& t : mtv::interpolation_expansion(mtv::Index::parse(index))) {
      terms.push_back(mtv::Json{{"index", t.index.to_string()}, {"r_exponent", t.r_exponent}});
    }
    *out = make_text(terms.dump());
  });
}

mtv_status mtv_phi0_coefficients(mtv_context* ctx, int N, int a, int max_order, int max_weight, mtv_text** out) {
  return guarded(ctx, [&] {
    require(out, "out");
    if (max_weight < 2) mtv::fail(mtv::ErrorKind::kInvalidArgument, "max_weight must be at least 2");
    const mtv::Level level(N, a);
    if (max_order < a) mtv::fail(mtv::ErrorKind::kInvalidArgument, "max_order must be at least the residue");
    const auto bounds = mtv::phi0_bounds_for_weight(max_weight);
    const auto sol = mtv::solve_phi0(level, max_order, bounds);
    mtv::Json coeffs = mtv::Json::array();
    for (int m = 0; m <= max_order; ++m) {
      mtv::Json terms = mtv::series_json(sol.p(m));
      if (!terms.empty()) coeffs.push_back(mtv::Json{{"m", m}, {"terms", std::move(terms)}});
    }
    mtv::Json doc{{"level", {N, a}},
                  {"max_order", max_order},
                  {"bounds", {{"du", bounds.du}, {"dv", bounds.dv}, {"dw", bounds.dw}}},
                  {"coefficients", std::move(coeffs)}};
    *out = make_text(doc.dump());
  });
}

mtv_status mtv_oracle_table(mtv_context* ctx, int N, int a, int max_order, int max_weight, mtv_text** out) {
  return guarded(ctx, [&] {
    require(out, "out");
    if (max_weight < 2) mtv::fail(mtv::ErrorKind::kInvalidArgument, "max_weight must be at least 2");
    const mtv::Level level(N, a);
    if (max_order < a) mtv::fail(mtv::ErrorKind::kInvalidArgument, "max_order must be at least the residue");
    const auto sol = mtv::solve_phi0(level, max_order, mtv::phi0_bounds_for_weight(max_weight));
    mtv::ZCoeffOracle oracle(level, max_order);
    *out = make_text(mtv::oracle_rows_json(mtv::compare_phi0_with_oracle(sol, oracle, max_weight)).dump());
  });
}

mtv_status mtv_eval(mtv_context* ctx, int N, int a, const char* index, const char* r, int precision, const char* tol,
                    mtv_text** value, mtv_text** err) {
  return guarded(ctx, [&] {
    require(index, "index");
    require(tol, "tol");
    require(value, "value");
    require(err, "err");
    if (precision < 10) mtv::fail(mtv::ErrorKind::kInvalidArgument, "precision must be at least 10 digits");
    const mtv::Level level(N, a);
    const mtv::Index k = mtv::Index::parse(index);
    const mtv::Rational rv = r ? mtv::parse_rational(r) : mtv::Rational(0);
    mtv::WorkingPrecision wp(precision + mtv::kGuardDigits);
    mtv::TValueEngine engine(precision, mtv::to_real(mtv::parse_rational(tol)), ctx->cache.get());
    const mtv::BigReal v = engine.t_interp(level, k, rv);
    *value = make_text(v.value_string(precision));
    *err = make_text(v.err_string());
  });
}

mtv_status mtv_list_checks(mtv_context* ctx, mtv_text** out) {
  return guarded(ctx, [&] {
    require(out, "out");
    mtv::Json list = mtv::Json::array();
    for (const auto& c : mtv::check_catalogue()) {
      list.push_back(mtv::Json{{"id", c.id},
                               {"kind", mtv::kind_name(c.kind)},
                               {"anchor", c.anchor},
                               {"summary", c.summary},
                               {"defaults", c.defaults}});
    }
    *out = make_text(list.dump());
  });
}

mtv_status mtv_verify(mtv_context* ctx, const char* checks, const char* params_json, int with_timing, mtv_text** report,
                      int* passed, int* failed, int* skipped) {
  return guarded(ctx, [&] {
    require(report, "report");
    std::vector<std::string> ids;
    if (checks) {
      ids = split_ids(checks);
      if (ids.empty()) mtv::fail(mtv::ErrorKind::kInvalidArgument, "no check selected");
    } else {
      for (const auto& c : mtv::check_catalogue()) ids.push_back(c.id);
    }
    std::map<std::string, mtv::Json> overrides;
    if (params_json && *params_json) {
      const mtv::Json p = mtv::Json::parse(params_json);
      if (!p.is_object()) mtv::fail(mtv::ErrorKind::kParse, "parameters must be a JSON object");
      bool keyed = !p.empty();
      for (auto it = p.begin(); it != p.end(); ++it) {
        bool known = false;
        for (const auto& c : mtv::check_catalogue()) known = known || c.id == it.key();
        keyed = keyed && known;
      }
      if (keyed) {
        for (auto it = p.begin(); it != p.end(); ++it) overrides[it.key()] = it.value();
      } else {
        for (const auto& id : ids) overrides[id] = p;
      }
    }
    const auto reports = mtv::run_checks(ids, overrides, ctx->jobs, {ctx->cache.get()});
    int np = 0, nf = 0, ns = 0;
    for (const auto& r : reports) {
      if (r.status == mtv::CheckStatus::kPass) ++np;
      else if (r.status == mtv::CheckStatus::kFail) ++nf;
      else ++ns;
    }
    if (passed) *passed = np;
    if (failed) *failed = nf;
    if (skipped) *skipped = ns;
    *report = make_text(mtv::report_json(reports, with_timing != 0).dump(2));
  });
}

mtv_status mtv_cache_describe(mtv_context* ctx, mtv_text** out) {
  return guarded(ctx, [&] {
    require(out, "out");
    mtv::Json doc;
    if (!ctx->cache) {
      doc = mtv::Json{{"path", nullptr}, {"entries", 0}, {"skipped_lines", 0}, {"records", mtv::Json::array()}};
    } else {
      mtv::Json records = mtv::Json::array();
      for (const auto& [key, v] : ctx->cache->entries()) {
        records.push_back(mtv::Json{{"key", key.to_string()}, {"value", v.value}, {"err", v.err}});
      }
      doc = mtv::Json{{"path", ctx->cache->path().string()},
                      {"entries", ctx->cache->size()},
                      {"skipped_lines", ctx->cache->skipped_lines()},
                      {"records", std::move(records)}};
    }
    *out = make_text(doc.dump(2));
  });
}

mtv_status mtv_cache_clear(mtv_context* ctx) {
  return guarded(ctx, [&] {
    if (!ctx->cache) mtv::fail(mtv::ErrorKind::kInvalidArgument, "no cache configured");
    ctx->cache->clear();
  });
}

}  // extern "C"
