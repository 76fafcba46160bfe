#include "avoid/report.hpp"

#include <sstream>

namespace avoid {

using nlohmann::json;

json to_json(const AvoidanceTable& t) {
  json counts = json::object();
  for (const auto& [len, n] : t.counts) counts[std::to_string(len)] = n;
  json out{{"counts", counts},
           {"total", t.total()},
           {"exhausted", t.exhausted},
           {"budget_exhausted", t.budget_exhausted},
           {"nodes_visited", t.nodes_visited},
           {"convention", convention_name()}};
  if (t.max_length) out["max_length"] = *t.max_length;
  if (t.witness_longest) out["witness_longest"] = t.witness_longest->str();
  return out;
}

json to_json(const GrowthVerdict& v) {
  const char* name = v.growth == Growth::exponential    ? "exponential"
                     : v.growth == Growth::polynomial   ? "polynomial"
                                                        : "inconclusive";
  return json{{"growth", name},
              {"mean_ratio", v.mean_ratio},
              {"max_difference", v.max_difference},
              {"table", to_json(v.table)}};
}

json to_json(const CertificateSection& s) {
  json checks = json::array();
  for (const CheckResult& c : s.checks) {
    json e{{"name", c.name}, {"detail", c.detail}, {"pass", c.pass}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    checks.push_back(e);
  }
  return json{{"title", s.title}, {"verdict", verdict_name(s.verdict)}, {"checks", checks}};
}

json to_json(const EssentialReport& r) {
  auto words = [](const std::set<Word>& ws) {
    json a = json::array();
    for (const Word& w : ws) a.push_back(w.str());
    return a;
  };
  return json{{"pass", r.pass},
              {"length", r.n},
              {"margin", r.margin},
              {"generators", r.generators},
              {"only_search", words(r.only_search)},
              {"only_generators", words(r.only_generators)},
              {"generator_violations", r.generator_violations}};
}

std::string table_csv(const AvoidanceTable& t) {
  std::ostringstream out;
  out << "length,count\n";
  for (const auto& [len, n] : t.counts) out << len << ',' << n << '\n';
  out << "# total," << t.total() << '\n';
  if (t.max_length) out << "# max_length," << *t.max_length << '\n';
  out << "# exhausted," << (t.exhausted ? "yes" : "no") << '\n';
  return out.str();
}

json report_envelope(const std::string& command, json result, double wall_ms) {
  return json{{"command", command},
              {"version", "0.1.0"},
              {"convention", convention_name()},
              {"wall_ms", wall_ms},
              {"result", std::move(result)}};
}

}  // namespace avoid
