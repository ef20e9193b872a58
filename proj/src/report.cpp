#include "pww/audit.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace pww::audit {

namespace {

using nlohmann::ordered_json;

ordered_json witness_json(const Witness &w) {
  ordered_json j;
  j["n"] = w.n;
  j["graph6"] = w.graph6;
  if (!w.factors.empty())
    j["factors"] = w.factors;
  j["observed"] = w.observed;
  j["expected"] = w.expected;
  return j;
}

ordered_json result_json(const ClaimResult &r) {
  ordered_json j;
  j["id"] = r.id;
  j["description"] = r.description;
  j["anchor"] = r.anchor;
  j["status"] = to_string(r.status);
  j["expected_status"] = to_string(r.expected);
  j["matches_registration"] = r.matches_registration();
  j["instances_tested"] = r.instances_tested;
  j["violations"] = r.violations;
  j["witnesses"] = ordered_json::array();
  for (const auto &w : r.witnesses)
    j["witnesses"].push_back(witness_json(w));
  if (!r.note.empty())
    j["note"] = r.note;
  if (!r.diagnostic.empty())
    j["diagnostic"] = r.diagnostic;
  return j;
}

} // namespace

std::string report_json(const Report &report) {
  ordered_json j;
  j["schema_version"] = 1;
  j["seed"] = report.seed;
  const Budget &b = report.budget;
  j["budget"] = {{"max_n", b.max_n},
                 {"max_tree_n", b.max_tree_n},
                 {"max_factor_n", b.max_factor_n},
                 {"trials", b.trials},
                 {"max_random_tree_n", b.max_random_tree_n},
                 {"max_random_graph_n", b.max_random_graph_n}};
  j["claims"] = ordered_json::array();
  for (const auto &r : report.claims)
    j["claims"].push_back(result_json(r));
  j["shadow_claims"] = ordered_json::array();
  for (const auto &r : report.shadow_claims)
    j["shadow_claims"].push_back(result_json(r));

  std::size_t holds = 0, violated = 0, skipped = 0;
  for (const auto *list : {&report.claims, &report.shadow_claims})
    for (const auto &r : *list) {
      holds += r.status == Status::Holds;
      violated += r.status == Status::Violated;
      skipped += r.status == Status::Skipped;
    }
  j["summary"] = {{"claims", report.claims.size()},
                  {"shadow_claims", report.shadow_claims.size()},
                  {"holds", holds},
                  {"violated", violated},
                  {"skipped", skipped},
                  {"mismatches", report.mismatches()},
                  {"ok", report.ok()}};
  return j.dump(2) + "\n";
}

std::string report_table(const Report &report) {
  std::size_t width = 2;
  for (const auto *list : {&report.claims, &report.shadow_claims})
    for (const auto &r : *list)
      width = std::max(width, r.id.size());

  std::ostringstream out;
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };
  auto rows = [&](const std::vector<ClaimResult> &list) {
    for (const auto &r : list) {
      out << pad(r.id, width) << "  " << pad(std::string(to_string(r.status)), 8) << "  "
          << pad(std::string(to_string(r.expected)), 11) << "  " << (r.matches_registration() ? "ok      " : "MISMATCH")
          << "  " << pad(std::to_string(r.instances_tested), 9) << "  " << r.violations;
      if (!r.witnesses.empty()) {
        const auto &w = r.witnesses.front();
        out << "  " << w.graph6 << ": " << w.observed << " vs " << w.expected;
      }
      if (!r.diagnostic.empty())
        out << "  (" << r.diagnostic << ")";
      out << "\n";
    }
  };
  out << pad("id", width) << "  status    expected     match     tested     violations  first witness\n";
  rows(report.claims);
  if (!report.shadow_claims.empty()) {
    out << "-- shadow claims\n";
    rows(report.shadow_claims);
  }
  out << report.claims.size() << " claims, " << report.shadow_claims.size() << " shadow, " << report.mismatches()
      << " mismatches\n";
  return out.str();
}

} // namespace pww::audit
