#include "fitkit_cli/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace fitkit::cli {

using json = nlohmann::ordered_json;

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; }));
}

std::string describe(const FiniteGroup& H) {
  std::string s = "order " + std::to_string(H.order());
  if (H.is_trivial()) return s;
  s += ":";
  const char* sep = " ";
  for (const auto& g : H.generators()) {
    if (g.is_identity()) continue;
    s += sep + g.to_string();
    sep = ", ";
  }
  return s;
}

std::string describe_pair(const char* lhs_name, const FiniteGroup& lhs, const char* rhs_name,
                          const FiniteGroup& rhs) {
  return std::string(lhs_name) + " " + describe(lhs) + " vs " + rhs_name + " " + describe(rhs);
}

namespace {

json group_json(const FiniteGroup& H) {
  json gens = json::array();
  for (const auto& g : H.generators())
    if (!g.is_identity()) gens.push_back(g.to_string());
  return {{"order", H.order()}, {"generators", std::move(gens)}};
}

}  // namespace

std::string render_analysis(const FittingReport& r, Format f) {
  const bool theorem_b = r.centralizer_of_fstar == r.center_of_fitting;
  if (f == Format::Json) {
    json comps = json::array();
    for (const auto& Q : r.components) comps.push_back(group_json(Q));
    json doc{{"schema", 1},
             {"degree", r.group.degree()},
             {"order", r.group.order()},
             {"fitting", group_json(r.fitting)},
             {"components", std::move(comps)},
             {"layer", group_json(r.layer)},
             {"fstar", group_json(r.fstar)},
             {"center_of_fitting", group_json(r.center_of_fitting)},
             {"centralizer_of_fstar", group_json(r.centralizer_of_fstar)},
             {"theorem_b", {{"equal", theorem_b}}}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream o;
  o << "group      degree " << r.group.degree() << ", order " << r.group.order() << "\n";
  o << "F(G)       " << describe(r.fitting) << "\n";
  if (r.components.empty()) o << "components none\n";
  for (std::size_t k = 0; k < r.components.size(); ++k)
    o << "component  " << k + 1 << ": " << describe(r.components[k]) << "\n";
  o << "E(G)       " << describe(r.layer) << "\n";
  o << "F*(G)      " << describe(r.fstar) << "\n";
  o << "Z(F(G))    " << describe(r.center_of_fitting) << "\n";
  o << "C_G(F*(G)) " << describe(r.centralizer_of_fstar) << "\n";
  o << "C_G(F*(G)) = Z(F(G)): " << (theorem_b ? "true" : "false") << "\n";
  return o.str();
}

std::string render_suite(const SuiteReport& r, Format f) {
  if (f == Format::Json) {
    json cases = json::array();
    for (const auto& c : r.cases) {
      json e{{"name", c.name}, {"pass", c.pass}};
      if (!c.detail.empty()) e["detail"] = c.detail;
      cases.push_back(std::move(e));
    }
    json doc{{"schema", 1},
             {"suite", r.suite},
             {"seed", r.seed},
             {"totals", {{"cases", r.cases.size()}, {"passed", r.passed()}, {"failed", r.failed()}}},
             {"cases", std::move(cases)},
             {"notes", r.notes}};
    if (r.seconds >= 0) doc["seconds"] = r.seconds;
    return doc.dump(2) + "\n";
  }
  std::ostringstream o;
  o << "suite " << r.suite << " (seed " << r.seed << "): " << r.cases.size() << " cases, " << r.passed()
    << " passed, " << r.failed() << " failed\n";
  for (const auto& c : r.cases) {
    o << (c.pass ? "  pass " : "  FAIL ") << c.name;
    if (!c.detail.empty()) o << "  " << c.detail;
    o << "\n";
  }
  for (const auto& n : r.notes) o << "note: " << n << "\n";
  if (r.seconds >= 0) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", r.seconds);
    o << "wall clock " << buf << " s\n";
  }
  return o.str();
}

}  // namespace fitkit::cli
