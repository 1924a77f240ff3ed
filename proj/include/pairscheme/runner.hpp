#pragma once

#include <atomic>
#include <chrono>
#include <future>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pairscheme/gdd.hpp"
#include "pairscheme/intro.hpp"
#include "pairscheme/report.hpp"
#include "pairscheme/twin.hpp"

namespace pairscheme {

struct RunRequest {
  std::string family;  // twin | gdd | intro
  long q = 0;
  bool do_axioms = false;
  bool do_designs = false;
  bool do_props = false;
  bool do_eigen = false;
  bool do_selfdual = false;
  bool timings = false;
  bool approx = false;  // decimal column in eigen output
  std::optional<std::vector<AuxLabel>> varphi;

  void default_actions() {
    if (!do_axioms && !do_designs && !do_props && !do_eigen && !do_selfdual)
      do_axioms = do_designs = do_props = do_eigen = do_selfdual = true;
  }
};

struct RunResult {
  bool ok = true;
  Json report;
};

namespace detail {

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

template <typename Ctx>
inline Json phi_json(const Ctx& ctx) {
  Json j = Json::object();
  for (long b = 0; b < ctx.r(); ++b) j[ctx.fr->label(b)] = ctx.phi_str(b);
  return j;
}

struct EigenSection {
  Json json;
  bool ok = true;
};

/// Shared eigen/self-duality reporting for the two incidence families.
inline EigenSection eigen_section(const SchemeBuild& build, const Eigenmatrix& closed_form, const RunRequest& req) {
  EigenSection out;
  auto ce = eigenmatrix_from_characters(build.data);
  bool closed_match = same_up_to_labels(ce.p, closed_form);
  bool mult_ok = multiplicities_check(ce.p, build.scheme.v);
  // carry the matched construction labels into the report when possible
  Eigenmatrix labeled = ce.p;
  if (auto rowmap = match_eigen_rows(closed_form, ce.p)) {
    for (std::size_t i = 0; i < rowmap->size(); ++i)
      labeled.rows[static_cast<std::size_t>((*rowmap)[i])].label = closed_form.rows[i].label;
  }
  out.json["matrix"] = eigenmatrix_to_json(labeled, req.approx);
  out.json["closed_form_match"] = closed_match;
  out.json["multiplicities_ok"] = mult_ok;
  out.ok = closed_match && mult_ok;
  if (req.do_selfdual) {
    auto q2 = second_eigenmatrix(ce.p, build.scheme.v);  // verifies P Q = v I
    auto witness = check_self_dual(ce.p, q2);
    Json sd;
    sd["found"] = witness.has_value();
    if (witness) {
      sd["row_perm"] = witness->first;
      sd["col_perm"] = witness->second;
    }
    out.json["self_dual"] = std::move(sd);
    out.ok = out.ok && witness.has_value();
  }
  return out;
}

}  // namespace detail

inline RunResult run(RunRequest req) {
  req.default_actions();
  auto start = std::chrono::steady_clock::now();
  RunResult res;
  Json& j = res.report;
  j["family"] = req.family;
  j["q"] = req.q;

  auto add_axioms = [&](const SchemeInstance& scheme) {
    auto ax = verify_axioms(scheme);
    j["axioms"] = check_report_to_json(ax.checks);
    j["symmetric"] = is_symmetric_scheme(scheme);
    if (ax.tensor) j["intersection_numbers"] = tensor_to_json(*ax.tensor);
    res.ok = res.ok && ax.all_ok();
  };

  if (req.family == "twin") {
    auto ctx = req.varphi ? make_twin_context(req.q, req.varphi) : make_twin_context(req.q);
    j["fields"] = Json{{"q", field_spec_to_json(*ctx.fq)}, {"r", field_spec_to_json(*ctx.fr)}};
    j["phi"] = detail::phi_json(ctx);
    j["vertices"] = ctx.dimension();
    j["classes"] = ctx.r() + 2;
    if (req.do_props) {
      auto rep = check_incidence_identities(ctx);
      j["incidence_identities"] = check_report_to_json(rep);
      res.ok = res.ok && rep.all_ok();
    }
    if (req.do_designs) {
      Json arr = Json::array();
      const long d = ctx.dimension();
      bool all = true;
      for (long beta = 1; beta < ctx.r(); ++beta) {
        bool ok = verify_symmetric_design(incidence_matrix(ctx, beta), d, ctx.q() * (ctx.q() + 1), ctx.q());
        arr.push_back(Json{{"beta", ctx.fr->label(beta)},
                           {"params", Json::array({d, ctx.q() * (ctx.q() + 1), ctx.q()})},
                           {"ok", ok}});
        all = all && ok;
      }
      j["designs"] = std::move(arr);
      res.ok = res.ok && all;
    }
    if (req.do_axioms || req.do_eigen || req.do_selfdual) {
      auto build = build_twin_scheme(ctx);
      if (req.do_axioms) add_axioms(build.scheme);
      if (req.do_eigen || req.do_selfdual) {
        auto section = detail::eigen_section(build, closed_form_eigenmatrix_twin(ctx), req);
        j["eigen"] = std::move(section.json);
        res.ok = res.ok && section.ok;
      }
    }
  } else if (req.family == "gdd") {
    auto ctx = req.varphi ? make_gdd_context(req.q, req.varphi) : make_gdd_context(req.q);
    j["fields"] = Json{{"q", field_spec_to_json(*ctx.fq)}, {"r", field_spec_to_json(*ctx.fr)}};
    j["phi"] = detail::phi_json(ctx);
    j["vertices"] = ctx.dimension();
    j["classes"] = ctx.r() + 4;  // five fixed classes plus the beta family, identity included
    if (req.do_props) {
      auto rep = check_incidence_identities(ctx);
      j["incidence_identities"] = check_report_to_json(rep);
      res.ok = res.ok && rep.all_ok();
    }
    if (req.do_designs) {
      auto rep = check_augmented_design(ctx);
      j["designs"] = check_report_to_json(rep);
      res.ok = res.ok && rep.all_ok();
    }
    if (req.do_axioms || req.do_eigen || req.do_selfdual) {
      auto build = build_gdd_scheme(ctx);
      if (req.do_axioms) add_axioms(build.scheme);
      if (req.do_eigen || req.do_selfdual) {
        auto section = detail::eigen_section(build, closed_form_eigenmatrix_gdd(ctx), req);
        j["eigen"] = std::move(section.json);
        res.ok = res.ok && section.ok;
      }
    }
  } else if (req.family == "intro") {
    auto data = build_intro_relations(req.q);
    j["fields"] = Json{{"q", field_spec_to_json(*data.factors[0])}, {"r", field_spec_to_json(*data.factors[1])}};
    j["vertices"] = data.vertex_count();
    j["classes"] = 5;
    SchemeInstance scheme;
    if (req.do_axioms || req.do_eigen || req.do_selfdual) {
      scheme = intro_scheme(req.q);
      if (req.do_axioms) add_axioms(scheme);
    }
    if (req.do_designs) {
      auto ds = verify_difference_set(intro_difference_set(data), data);
      Json hist = Json::object();
      for (auto& [count, howmany] : ds.histogram) hist[std::to_string(count)] = howmany;
      j["difference_set"] = Json{{"v", ds.v}, {"k", ds.k}, {"lambda", ds.lambda}, {"verified", ds.verified},
                                 {"histogram", std::move(hist)}};
      res.ok = res.ok && ds.verified;
    }
    if (req.do_eigen || req.do_selfdual) {
      auto ce = eigenmatrix_from_characters(data);
      Json eig;
      eig["matrix"] = eigenmatrix_to_json(ce.p, req.approx);
      eig["multiplicities_ok"] = multiplicities_check(ce.p, data.vertex_count());
      res.ok = res.ok && multiplicities_check(ce.p, data.vertex_count());
      if (req.do_selfdual) {
        auto q2 = second_eigenmatrix(ce.p, data.vertex_count());
        auto witness = check_self_dual(ce.p, q2);
        Json sd;
        sd["found"] = witness.has_value();
        if (witness) {
          sd["row_perm"] = witness->first;
          sd["col_perm"] = witness->second;
        }
        eig["self_dual"] = std::move(sd);
      }
      j["eigen"] = std::move(eig);
    }
  } else {
    throw std::invalid_argument("unknown family '" + req.family + "'");
  }

  j["ok"] = res.ok;
  if (req.timings) j["elapsed_ms"] = detail::elapsed_ms(start);
  return res;
}

/// Valid q values for a family, ascending.
inline std::vector<long> family_q_values(const std::string& family, long q_max) {
  std::vector<long> qs;
  for (long q = 2; q <= q_max; ++q) {
    if (!is_prime_power(q)) continue;
    if (family == "twin" && is_prime_power(q + 2)) qs.push_back(q);
    if (family == "gdd" && is_prime_power(q + 1)) qs.push_back(q);
    if (family == "intro" && q % 2 == 1 && is_prime_power(q + 2)) qs.push_back(q);
  }
  return qs;
}

/// Full verification for every valid q up to q_max; rows ordered by q.
/// Work is distributed over a small worker pool; report assembly is
/// deterministic apart from the timing column.
inline Json sweep(const std::string& family, long q_max, unsigned workers = 2) {
  auto qs = family_q_values(family, q_max);
  std::vector<Json> rows(qs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= qs.size()) return;
      RunRequest req;
      req.family = family;
      req.q = qs[i];
      auto start = std::chrono::steady_clock::now();
      auto res = run(req);
      rows[i] = Json{{"q", qs[i]},
                     {"vertices", res.report.value("vertices", 0L)},
                     {"classes", res.report.value("classes", 0L)},
                     {"ok", res.ok},
                     {"elapsed_ms", detail::elapsed_ms(start)}};
    }
  };
  std::vector<std::future<void>> pool;
  for (unsigned w = 1; w < workers && w < qs.size(); ++w) pool.push_back(std::async(std::launch::async, work));
  work();
  for (auto& f : pool) f.get();
  Json out;
  out["family"] = family;
  out["max_q"] = q_max;
  out["rows"] = rows;
  bool all = true;
  for (const auto& r : rows) all = all && r.at("ok").get<bool>();
  out["ok"] = all;
  return out;
}

}  // namespace pairscheme
