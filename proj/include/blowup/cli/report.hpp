#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "blowup/cli/session.hpp"
#include "blowup/rees.hpp"
#include "blowup/ulrich.hpp"

namespace blowup::cli {

using json = nlohmann::ordered_json;

namespace detail {

inline json number(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline json number(const Rational& q) {
  if (q.get_den() == 1) return number(Integer(q.get_num()));
  return q.get_str();
}

inline json gens(const Ideal& I) {
  json a = json::array();
  for (const auto& g : I.generators()) a.push_back(to_string(g, I.ring()->variables()));
  return a;
}

inline json status_name(Status s) { return s == Status::certified ? "certified" : "horizon-verified"; }

inline json strings(const std::vector<std::string>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

/// What a handler returns; the report adds op, inputs and the status envelope.
struct Outcome {
  json result;
  Status status = Status::certified;
  std::optional<unsigned> horizon;
  json witnesses = json::object();
};

/// Resolved command arguments.
struct Bound {
  Ring ring;
  std::vector<Ideal> ideals;
  std::optional<CyclicModule> module;
  std::vector<long> ints;
  std::vector<Polynomial> polys;

  const Ideal& I(std::size_t k = 0) const { return ideals.at(k); }
  CyclicModule M() const { return module ? *module : CyclicModule::whole(ring); }
  std::optional<Ideal> second_ideal() const {
    return ideals.size() > 1 ? std::optional<Ideal>(ideals[1]) : std::nullopt;
  }
  unsigned nat(std::size_t k, unsigned fallback) const {
    return k < ints.size() ? static_cast<unsigned>(ints[k]) : fallback;
  }
};

using Handler = std::function<Outcome(Context&, const Bound&)>;

inline Outcome exact(json result, json witnesses = json::object()) {
  return {std::move(result), Status::certified, std::nullopt, std::move(witnesses)};
}

inline json route_json(const RouteOutcome& o) {
  json r;
  r["name"] = o.name;
  r["applicable"] = o.applicable;
  if (o.applicable) {
    r["value"] = o.result.value;
    r["status"] = status_name(o.result.status);
    r["horizon"] = o.result.horizon;
  } else {
    r["reason"] = o.reason;
  }
  return r;
}

inline Outcome route(const RouteValue& v, const ReductionResult& red) {
  json w;
  w["r_J"] = red.r;
  w["reduction"] = gens(red.J);
  w["notes"] = strings(v.notes);
  return {v.value, v.status, v.horizon, std::move(w)};
}

inline const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"dim", [](Context&, const Bound& b) { return exact(b.ring->dimension()); }},
      {"colength", [](Context&, const Bound& b) { return exact(colength(b.I())); }},
      {"member",
       [](Context& ctx, const Bound& b) {
         const unsigned n = b.nat(0, 1);
         return exact(member(b.polys.at(0), ctx.power(b.I(), n)), json{{"power", n}});
       }},
      {"equals", [](Context&, const Bound& b) { return exact(equals(b.I(0), b.I(1))); }},
      {"is_m_primary", [](Context&, const Bound& b) { return exact(is_m_primary(b.I())); }},
      {"mingens",
       [](Context&, const Bound& b) {
         const auto m = minimal_generators(b.I());
         json w;
         w["generators"] = gens(Ideal(b.ring, m.generators));
         w["exact"] = m.exact;
         return exact(m.nu, std::move(w));
       }},
      {"power", [](Context& ctx, const Bound& b) { return exact(gens(ctx.power(b.I(), b.nat(0, 1)))); }},
      {"product", [](Context&, const Bound& b) { return exact(gens(product(b.I(0), b.I(1)))); }},
      {"colon", [](Context&, const Bound& b) { return exact(gens(colon(b.I(0), b.I(1)))); }},
      {"intersect", [](Context&, const Bound& b) { return exact(gens(intersect(b.I(0), b.I(1)))); }},

      {"rr",
       [](Context& ctx, const Bound& b) {
         const unsigned n = b.nat(0, 1);
         const RRResult rr = ratliff_rush(ctx, b.I(), b.M(), n, ctx.options.horizon);
         const Ideal& In = ctx.power(b.I(), b.M(), n);
         json extra = json::array();
         std::size_t count = 0;
         for (const auto& g : minimal_generators(rr.closure).generators)
           if (!member(g, In)) {
             if (++count <= 8) extra.push_back(to_string(g, b.ring->variables()));
           }
         json r;
         r["closed"] = count == 0;
         r["new_generators"] = std::move(extra);
         r["new_count"] = count;
         json w;
         w["power"] = n;
         w["stabilization_index"] = rr.stabilization_index;
         w["notes"] = strings(rr.notes);
         return Outcome{std::move(r), rr.status, rr.horizon, std::move(w)};
       }},
      {"sstar",
       [](Context& ctx, const Bound& b) {
         const SStarResult s = sstar(ctx, b.I(), b.M(), ctx.options.horizon);
         json w;
         w["method"] = s.method;
         w["failure_witnesses"] = s.failure_witnesses;
         w["notes"] = strings(s.notes);
         return Outcome{s.value, s.status, s.horizon, std::move(w)};
       }},
      {"reduction",
       [](Context& ctx, const Bound& b) {
         const auto red = find_minimal_reduction(ctx, b.I(), b.M());
         json w;
         w["J"] = gens(red.J);
         w["minimal"] = red.minimal;
         w["seed"] = ctx.options.seed;
         w["notes"] = strings(red.notes);
         return exact(red.r, std::move(w));
       }},
      {"reduction_number",
       [](Context& ctx, const Bound& b) {
         const auto red = reduction_number(ctx, b.I(0), b.I(1), b.M(), ctx.options.horizon);
         json w;
         w["witness"] = red.witness;
         w["minimal"] = red.minimal;
         return exact(red.r, std::move(w));
       }},
      {"superficial",
       [](Context& ctx, const Bound& b) {
         const auto s = check_superficial(ctx, b.polys.at(0), b.I(), b.M(), ctx.options.horizon);
         return Outcome{s.superficial, Status::horizon_verified, s.horizon, json{{"from", s.from}}};
       }},
      {"independence",
       [](Context& ctx, const Bound& b) {
         const auto rs = independence_probe(ctx, b.I(), b.M(), b.nat(0, 5));
         json r;
         r["independent"] = std::adjacent_find(rs.begin(), rs.end(), std::not_equal_to<>()) == rs.end();
         r["r_values"] = rs;
         return exact(std::move(r), json{{"first_seed", ctx.options.seed}});
       }},

      {"reg",
       [](Context& ctx, const Bound& b) {
         const auto rep = regularity(ctx, b.I(), b.M());
         json w;
         w["r_J"] = rep.r_J;
         w["reduction"] = rep.reduction;
         w["consistent"] = rep.consistent;
         json routes = json::array();
         for (const auto& o : rep.routes) routes.push_back(route_json(o));
         w["routes"] = std::move(routes);
         return Outcome{*rep.reg, report_status(rep), report_horizon(rep), std::move(w)};
       }},
      {"reg_max",
       [](Context& ctx, const Bound& b) {
         const auto red = certificate_reduction(ctx, b.I(), b.M());
         return route(reg_via_max_formula(ctx, red), red);
       }},
      {"reg_mafigene",
       [](Context& ctx, const Bound& b) {
         const auto red = certificate_reduction(ctx, b.I(), b.M());
         return route(reg_via_mafigene(ctx, red), red);
       }},
      {"reg_colon",
       [](Context& ctx, const Bound& b) {
         const auto red = certificate_reduction(ctx, b.I(), b.M());
         return route(reg_via_colon_criterion(ctx, red, ctx.options.horizon), red);
       }},
      {"reg_postulation",
       [](Context& ctx, const Bound& b) {
         const auto red = certificate_reduction(ctx, b.I(), b.M());
         return route(reg_via_postulation(ctx, red), red);
       }},
      {"rtt",
       [](Context& ctx, const Bound& b) {
         const auto p = rtt_probe(ctx, preferred_reduction(ctx, b.I(), b.M()), ctx.options.horizon);
         json r;
         r["r_J"] = p.r_J;
         r["sstar"] = p.sstar;
         r["reg_max"] = p.reg_max;
         r["min_colon"] = p.min_colon;
         r["values_agree"] = p.values_agree;
         r["evidence"] = p.evidence;
         json w;
         w["sstar_at_most_r_plus_1"] = p.sstar_at_most_r_plus_1;
         w["cm_and_rth_power_closed"] = p.cm_and_rth_power_closed;
         return Outcome{std::move(r), p.status, p.horizon, std::move(w)};
       }},
      {"section",
       [](Context& ctx, const Bound& b) {
         const auto c = section_compare(ctx, b.I(), b.polys.at(0), b.M());
         json w;
         w["r_M"] = c.r_M;
         w["r_section"] = c.r_section;
         w["reg_M"] = c.reg_M ? json(*c.reg_M) : json(nullptr);
         w["reg_section"] = c.reg_section;
         w["label"] = c.label;
         return exact(c.agree, std::move(w));
       }},

      {"hilbert",
       [](Context& ctx, const Bound& b) {
         return exact(hilbert_function(ctx, b.I(), b.ints.at(0), b.M()), json{{"n", b.ints.at(0)}});
       }},
      {"hilbert_fit",
       [](Context& ctx, const Bound& b) {
         const auto s = fit_hilbert_polynomial(ctx, b.I(), b.M(), ctx.options.window);
         json e = json::array();
         for (const auto& x : s.e) e.push_back(number(x));
         json r;
         r["e"] = std::move(e);
         r["rho"] = s.rho;
         json values = json::array();
         for (const auto& [n, h] : s.values) values.push_back(h);
         json w;
         w["d"] = s.d;
         w["values"] = std::move(values);
         w["verified_points"] = s.verified_points;
         w["notes"] = strings(s.notes);
         return Outcome{std::move(r), s.status, s.window, std::move(w)};
       }},
      {"postulation",
       [](Context& ctx, const Bound& b) {
         const auto p = postulation_number(ctx, b.I(), b.M(), ctx.options.window);
         return Outcome{p.rho, p.status, p.window, json::object()};
       }},
      {"marley",
       [](Context& ctx, const Bound& b) {
         const auto m = marley_check(ctx, b.I(), b.M());
         json w;
         w["r"] = m.r;
         w["rho"] = m.rho;
         w["d"] = m.d;
         w["grade_reason"] = m.grade_reason;
         return exact(m.holds, std::move(w));
       }},

      {"ulrich",
       [](Context& ctx, const Bound& b) {
         const auto u = is_ulrich(ctx, b.I(), b.second_ideal());
         json w;
         if (u.J) w["J"] = gens(*u.J);
         w["r"] = u.r;
         w["nu"] = u.nu;
         w["colength"] = u.colength;
         w["is_parameter"] = u.is_parameter;
         w["length_I_mod_I2"] = u.free_check.length_I_mod_I2;
         w["nu_times_colength"] = u.free_check.nu_times_colength;
         if (!u.ulrich) w["reason"] = u.reason;
         return exact(u.ulrich ? "ulrich" : "not-ulrich", std::move(w));
       }},
      {"ulrich_reg",
       [](Context& ctx, const Bound& b) {
         const auto u = ulrich_regularity(ctx, b.I());
         return exact(u.value, json{{"parameter", u.parameter}});
       }},
      {"ulrich_closed_form",
       [](Context&, const Bound& b) {
         const auto f = ulrich_hilbert_closed_form(b.nat(0, 0), b.nat(1, 0), b.nat(2, 0));
         json e = json::array();
         for (const auto& x : f.e) e.push_back(number(x));
         json r;
         r["e"] = std::move(e);
         r["rho"] = f.rho;
         json P = json::array();
         for (long n = 1; n <= 6; ++n) P.push_back(number(f.P(n)));
         return exact(std::move(r), json{{"P_1_to_6", std::move(P)}});
       }},
      {"gorenstein_form",
       [](Context&, const Bound& b) {
         return exact(number(ulrich_gorenstein_form(b.nat(0, 0), b.nat(1, 0), b.ints.at(2))));
       }},
      {"genitoh",
       [](Context& ctx, const Bound& b) {
         const auto g = genitoh_check(ctx, b.I(), b.second_ideal());
         json r;
         r["a"] = g.a;
         r["b"] = g.b;
         r["c"] = g.c;
         r["constant"] = g.constant();
         json w;
         w["r_J"] = g.r_J;
         w["rho"] = g.rho;
         w["grade_gate"] = g.grade_gate ? json(*g.grade_gate) : json(nullptr);
         return exact(std::move(r), std::move(w));
       }},

      {"rees",
       [](Context&, const Bound& b) {
         const auto p = rees_presentation(b.I());
         json w;
         w["variables"] = p.S->variables();
         w["t_degrees"] = p.t_degrees;
         w["linear_part"] = gens(p.linear_part);
         return exact(gens(p.defining), std::move(w));
       }},
      {"linear_type", [](Context&, const Bound& b) { return exact(linear_type_test(b.I())); }},
      {"lintype_rednum",
       [](Context& ctx, const Bound& b) {
         const auto l = lintype_from_rednum(ctx, b.I());
         json w;
         w["r"] = l.r;
         w["implication_holds"] = l.implication_holds;
         w["independent"] = l.independent;
         return exact(l.linear_type, std::move(w));
       }},
  };
  return table;
}

inline const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::input: return "input";
    case ErrorKind::hypothesis: return "hypothesis";
    case ErrorKind::horizon: return "horizon";
  }
  return "hypothesis";
}

}  // namespace detail

/// One command, one report. Library errors become a failed report; the
/// matching exit code is in reason.exit_code.
inline json run(Session& s, const Command& c, const Defaults& defaults = {}) {
  const unsigned horizon = static_cast<unsigned>(c.horizon.value_or(defaults.horizon.value_or(0)));
  const std::uint64_t seed = c.seed.value_or(defaults.seed.value_or(0));
  const unsigned window = static_cast<unsigned>(c.window.value_or(defaults.window.value_or(0)));

  detail::Bound b;
  json args = json::array();
  for (const auto& a : c.args) {
    json e;
    switch (a.kind) {
      case Arg::Kind::ring:
        b.ring = s.rings.at(a.text);
        e["ring"] = a.text;
        e["model"] = b.ring->describe();
        break;
      case Arg::Kind::ideal: {
        const Ideal& I = s.ideals.at(a.text);
        b.ideals.push_back(I);
        b.ring = I.ring();
        e["ideal"] = a.text;
        e["generators"] = detail::gens(I);
        break;
      }
      case Arg::Kind::module: {
        const CyclicModule& M = s.modules.at(a.text);
        b.module = M;
        b.ring = M.ring();
        e["module"] = a.text;
        e["K"] = detail::gens(M.defining_ideal());
        break;
      }
      case Arg::Kind::integer:
        b.ints.push_back(std::stol(a.text));
        e["integer"] = b.ints.back();
        break;
      case Arg::Kind::polynomial:
        e["polynomial"] = a.text;
        break;
    }
    args.push_back(std::move(e));
  }
  for (const auto& a : c.args)
    if (a.kind == Arg::Kind::polynomial) b.polys.push_back(parse_polynomial(a.text, b.ring->variables()));

  json rep;
  rep["op"] = c.op;
  rep["inputs"] = {{"args", std::move(args)},
                   {"options",
                    {{"horizon", horizon ? json(horizon) : json(nullptr)},
                     {"seed", seed},
                     {"window", window ? json(window) : json(nullptr)}}}};
  Context& ctx = s.context(horizon, seed, window);
  try {
    detail::Outcome o = detail::handlers().at(c.op)(ctx, b);
    rep["result"] = std::move(o.result);
    rep["status"] = detail::status_name(o.status);
    rep["horizon"] = o.horizon ? json(*o.horizon) : json(nullptr);
    rep["witnesses"] = std::move(o.witnesses);
  } catch (const Error& e) {
    rep["result"] = nullptr;
    rep["status"] = "failed";
    rep["reason"] = {{"kind", detail::kind_name(e.kind())}, {"exit_code", exit_code(e.kind())}, {"message", e.what()}};
    rep["horizon"] = horizon ? json(horizon) : json(nullptr);
    rep["witnesses"] = json::object();
  }
  rep["paper_checks"] = json::array();
  return rep;
}

/// Exit code carried by a report: 0, or the code of its failure.
inline int report_exit_code(const json& rep) {
  if (rep.value("status", "") != "failed") return 0;
  return rep["reason"]["exit_code"].get<int>();
}

/// Every command of the session in order; the exit code is that of the first failure.
inline int run_session(Session& s, const Defaults& defaults, const std::function<void(const json&)>& emit) {
  int code = 0;
  for (const Command* c : s.commands()) {
    const json rep = run(s, *c, defaults);
    emit(rep);
    if (!code) code = report_exit_code(rep);
  }
  return code;
}

/// Human-readable rendering of one report.
inline std::string render(const json& rep) {
  std::string out = rep["op"].get<std::string>() + "(";
  bool first = true;
  for (const auto& a : rep["inputs"]["args"]) {
    out += first ? "" : ", ";
    first = false;
    for (const char* k : {"ring", "ideal", "module"})
      if (a.contains(k)) out += a[k].get<std::string>();
    if (a.contains("integer")) out += a["integer"].dump();
    if (a.contains("polynomial")) out += a["polynomial"].get<std::string>();
  }
  out += ")\n";
  auto row = [&](const std::string& key, const std::string& value) {
    out += "  " + key + std::string(key.size() < 18 ? 18 - key.size() : 1, ' ') + value + "\n";
  };
  row("result", rep["result"].dump());
  std::string status = rep["status"].get<std::string>();
  if (status == "horizon-verified") status += "(" + rep["horizon"].dump() + ")";
  row("status", status);
  if (rep.contains("reason")) row("reason", rep["reason"]["message"].get<std::string>());
  for (const auto& [k, v] : rep["witnesses"].items()) row(k, v.dump());
  for (const auto& c : rep["paper_checks"])
    row(c["pass"].get<bool>() ? "check ok" : "check FAIL",
        c["name"].get<std::string>() + " expected " + c["expected"].dump() + " got " + c["actual"].dump());
  return out;
}

}  // namespace blowup::cli
