#pragma once

#include <functional>
#include <string>
#include <vector>

#include "blowup/cli/report.hpp"

namespace blowup::cli {

struct Check {
  std::string pointer;  // JSON pointer into the report
  json expected;
  /// Custom comparison; plain equality when empty.
  std::function<bool(const json& expected, const json& actual)> same = nullptr;
};

struct CorpusEntry {
  std::string name;
  std::string command;  // one compute statement
  std::vector<Check> checks;
};

/// Declarations shared by every entry.
inline const char* corpus_declarations() {
  return R"(ring R = poly(x, y);
ideal H = x^6, x^4*y^2, x^3*y^3, y^6;
ideal DT = x^157, x^35*y^122, x^98*y^59, y^157;
ideal DJ = x^157, y^157;
ideal F = x^4, x^3*y, x*y^3, y^4;
ideal SIX = x^6, x^4*y^2, x^3*y^3, x^2*y^4, x*y^5, y^6;
ideal M2 = x^2, x*y, y^2;
ideal PP = x^2, y^3;
ring S = semigroup(4, 6, 7);
ideal U = t^4, t^6;
ring T = semigroup(3, 10, 11);
ideal N = t^9, t^10, t^14;
ring E = quotient(x, y, z; x^3 + y^5 + z^2) [gorenstein];
ideal EI = x, y^2, z;
ring P = quotient(x, y, z, t; x*y - t^4, x*z - t^4 + z*t^2, y*z - y*t^2 + z*t^2) [cm];
ideal TP1 = x, y, z, t;
ideal TP2 = x, y, z, t^2;
ring D = quotient(a, b, c; a^2 + b^2 + c^2) [gorenstein];
ideal DM = a, b, c;
)";
}

namespace detail {

/// Two generator lists span the same ideal of k[vars].
inline bool same_ideal(const std::vector<std::string>& vars, const json& a, const json& b) {
  if (!a.is_array() || !b.is_array()) return false;
  const Ring r = RingSpec::polynomial(vars);
  auto build = [&](const json& list) {
    std::vector<Polynomial> g;
    for (const auto& s : list) g.push_back(parse_polynomial(s.get<std::string>(), r->variables()));
    return Ideal(r, std::move(g));
  };
  return equals(build(a), build(b));
}

}  // namespace detail

inline std::vector<CorpusEntry> golden_entries() {
  const json F = false, T = true;
  auto one = [](std::string name, std::string cmd, json expected, std::string ptr = "/result") {
    return CorpusEntry{std::move(name), std::move(cmd), {Check{std::move(ptr), std::move(expected)}}};
  };
  std::vector<CorpusEntry> e;
  e.push_back(one("triple-point-dim", "compute dim(P)", 2));
  e.push_back(one("x2y2-not-in-I", "compute member(x^2*y^2, F)", F));
  e.push_back(one("e8-x3z2-not-in-I5", "compute member(x^3 + z^2, EI, 5)", F));
  e.push_back(one("s467-m-primary", "compute is_m_primary(U)", T));
  e.push_back(one("e8-colength", "compute colength(EI)", 2));
  e.push_back(one("e8-nu", "compute mingens(EI)", 3));
  e.push_back({"x2y2-in-closure",
               "compute rr(F)",
               {{"/result/closed", F}, {"/result/new_generators", json::array({"x^2*y^2"})}}});
  e.push_back({"t11-in-closure",
               "compute rr(N)",
               {{"/result/closed", F}, {"/result/new_generators", json::array({"t^11"})}}});
  e.push_back(one("huckaba-sstar", "compute sstar(H)", 1));
  e.push_back(one("dtrung-sstar", "compute sstar(DT) horizon 30", 21));
  e.push_back(one("dtrung-rJ", "compute reduction_number(DJ, DT)", 20));
  e.push_back(one("huckaba-r", "compute reduction(H)", 3));
  e.push_back({"s467-independence",
               "compute independence(U)",
               {{"/result/independent", T}, {"/result/r_values", json::array({1, 1, 1, 1, 1})}}});
  e.push_back({"huckaba-independence",
               "compute independence(H)",
               {{"/result/independent", T}, {"/result/r_values", json::array({3, 3, 3, 3, 3})}}});
  e.push_back(one("huckaba-reg-max", "compute reg_max(H)", 3));
  e.push_back(one("dtrung-reg-max", "compute reg_max(DT)", 21));
  e.push_back(one("huckaba-mafigene", "compute reg_mafigene(H)", 3));
  e.push_back(one("s467-mafigene", "compute reg_mafigene(U)", 1));
  e.push_back(one("dtrung-colon", "compute reg_colon(DT)", 21));
  e.push_back({"huckaba-postulation-route-inapplicable",
               "compute reg_postulation(H)",
               {{"/status", "failed"}, {"/reason/kind", "hypothesis"}}});
  e.push_back({"huckaba-reg", "compute reg(H)", {{"/result", 3}, {"/status", "certified"}}});
  e.push_back(one("s467-reg", "compute reg(U)", 1));
  e.push_back(one("dtrung-reg", "compute reg(DT)", 21));
  e.push_back({"dtrung-rtt",
               "compute rtt(DT)",
               {{"/result/r_J", 20},
                {"/result/sstar", 21},
                {"/result/min_colon", 21},
                {"/result/evidence", "equality attained"}}});
  e.push_back({"huckaba-rtt",
               "compute rtt(H)",
               {{"/result/r_J", 3}, {"/result/sstar", 1}, {"/result/min_colon", 3}}});
  e.push_back({"dtrung-rr20", "compute rr(DT, 20)", {{"/result/closed", F}}});
  e.push_back(one("e8-hilbert-1", "compute hilbert(EI, 1)", 2));
  e.push_back(one("s467-hilbert-2", "compute hilbert(U, 2)", 6));
  e.push_back(one("e8-e", "compute hilbert_fit(EI)", json::array({4, 2, 0}), "/result/e"));
  e.push_back(one("s467-e", "compute hilbert_fit(U)", json::array({4, 2}), "/result/e"));
  e.push_back(one("s467-rho", "compute postulation(U)", 0));
  e.push_back(one("e8-rho", "compute postulation(EI)", -1));
  e.push_back({"s467-marley", "compute marley(U)", {{"/result", T}, {"/witnesses/r", 1}, {"/witnesses/rho", 0}}});
  e.push_back(one("s467-ulrich", "compute ulrich(U)", "ulrich"));
  e.push_back({"t31011-not-ulrich",
               "compute ulrich(N)",
               {{"/result", "not-ulrich"}, {"/witnesses/reason", "I is not Ratliff-Rush closed"}}});
  e.push_back(one("quartic-not-ulrich", "compute ulrich(F)", "not-ulrich"));
  e.push_back(one("six-not-ulrich", "compute ulrich(SIX)", "not-ulrich"));
  e.push_back(one("six-powers-closed", "compute sstar(SIX)", 1));
  e.push_back({"s467-ulrich-reg", "compute ulrich_reg(U)", {{"/result", 1}, {"/witnesses/parameter", F}}});
  e.push_back({"e8-ulrich-reg", "compute ulrich_reg(EI)", {{"/result", 1}, {"/witnesses/parameter", F}}});
  e.push_back({"e8-ulrich", "compute ulrich(EI)", {{"/result", "ulrich"}, {"/witnesses/nu", 3}, {"/witnesses/colength", 2}}});
  e.push_back({"closed-form-1-2-2",
               "compute ulrich_closed_form(1, 2, 2)",
               {{"/result/rho", 0}, {"/witnesses/P_1_to_6", json::array({2, 6, 10, 14, 18, 22})}}});
  e.push_back({"closed-form-2-2-3",
               "compute ulrich_closed_form(2, 2, 3)",
               {{"/result/rho", -1}, {"/witnesses/P_1_to_6", json::array({2, 8, 18, 32, 50, 72})}}});
  e.push_back({"closed-form-2-1-4",
               "compute ulrich_closed_form(2, 1, 4)",
               {{"/result/rho", -1}, {"/witnesses/P_1_to_6", json::array({1, 5, 12, 22, 35, 51})}}});
  e.push_back({"closed-form-2-2-4",
               "compute ulrich_closed_form(2, 2, 4)",
               {{"/result/rho", -1}, {"/witnesses/P_1_to_6", json::array({2, 10, 24, 44, 70, 102})}}});
  e.push_back(one("gorenstein-2-2-at-3", "compute gorenstein_form(2, 2, 3)", 18));
  e.push_back(one("gorenstein-3-6-at-1", "compute gorenstein_form(3, 6, 1)", 6));
  e.push_back(one("gorenstein-3-1-at-minus-1", "compute gorenstein_form(3, 1, -1)", 0));
  e.push_back({"e8-genitoh",
               "compute genitoh(EI)",
               {{"/result/a", T}, {"/result/b", T}, {"/result/c", T}, {"/witnesses/r_J", 1}}});
  e.push_back({"triple-point-1-ulrich",
               "compute ulrich(TP1)",
               {{"/result", "ulrich"}, {"/witnesses/nu", 4}, {"/witnesses/colength", 1}}});
  e.push_back({"triple-point-2-ulrich",
               "compute ulrich(TP2)",
               {{"/result", "ulrich"}, {"/witnesses/nu", 4}, {"/witnesses/colength", 2}}});
  e.push_back(one("triple-point-1-e", "compute hilbert_fit(TP1)", json::array({3, 2, 0}), "/result/e"));
  e.push_back(one("triple-point-2-e", "compute hilbert_fit(TP2)", json::array({6, 4, 0}), "/result/e"));
  e.push_back(one("diagonal-quadric-ulrich", "compute ulrich(DM)", "ulrich"));
  {
    const std::vector<std::string> vars{"x", "y", "T1", "T2", "T3", "T4"};
    // (Z, W, T, U) = (T1, T2, T3, T4)
    const json expected = json::array({"T3^2 - T1*T4", "y*T2 - x*T3", "T2^3 - T1^2*T4", "y^2*T1 - x^2*T2",
                                       "x*T2^2 - y*T1*T3", "y^3*T3 - x^3*T4"});
    e.push_back({"huckaba-rees",
                 "compute rees(H)",
                 {Check{"/result", expected,
                        [vars](const json& a, const json& b) { return detail::same_ideal(vars, a, b); }}}});
  }
  e.push_back(one("huckaba-not-linear-type", "compute linear_type(H)", F));
  e.push_back({"m2-not-linear-type", "compute lintype_rednum(M2)", {{"/result", F}, {"/witnesses/r", 1}}});
  e.push_back({"pure-powers-linear-type", "compute lintype_rednum(PP)", {{"/result", T}, {"/witnesses/r", 0}}});
  return e;
}

/// Run every golden entry in one session; each report carries its checks.
/// Returns the number of failed checks.
inline int golden_corpus(const Defaults& defaults, const std::function<void(const json&)>& emit) {
  const auto entries = golden_entries();
  std::string src = corpus_declarations();
  for (const auto& e : entries) src += e.command + ";\n";
  Session s = parse_session(src);
  const auto cmds = s.commands();
  int failed = 0;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    json rep = run(s, *cmds[k], defaults);
    json checks = json::array();
    for (const auto& c : entries[k].checks) {
      const json::json_pointer ptr(c.pointer);
      const json actual = rep.contains(ptr) ? rep.at(ptr) : json(nullptr);
      const bool pass = c.same ? c.same(c.expected, actual) : actual == c.expected;
      if (!pass) ++failed;
      checks.push_back({{"name", entries[k].name}, {"at", c.pointer}, {"expected", c.expected}, {"actual", actual}, {"pass", pass}});
    }
    rep["paper_checks"] = std::move(checks);
    emit(rep);
  }
  return failed;
}

}  // namespace blowup::cli
