#ifndef ELECTIONS_SCENARIO_HPP
#define ELECTIONS_SCENARIO_HPP

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "elections/dataset.hpp"
#include "elections/montecarlo.hpp"
#include "elections/tally.hpp"

namespace elections {

// Three-state toy map: populations 300/100/100, House seats 3/1/1.
inline Apportionment toy_apportionment() { return Apportionment{{300.0, 100.0, 100.0}, {3, 1, 1}, 2}; }

struct Scenario {
  std::string name;
  std::string caption;
  std::vector<double> shares;  // candidate A's share per state
};

inline std::vector<Scenario> toy_scenarios() {
  return {
      {"LW", "unpopular election caused by Senate electors", {0.53, 0.47, 0.47}},
      {"LL", "unpopular election using either method", {0.49, 0.49, 0.65}},
      {"WL", "unpopular election only when using only House electors", {0.49, 0.53, 0.53}},
  };
}

struct ScenarioResult {
  Scenario scenario;
  TallyResult full;
  TallyResult house;
  OutcomeRecord outcome;
};

inline ScenarioResult evaluate(const Scenario& s, const Apportionment& a = toy_apportionment()) {
  ScenarioResult r{s, electoral_totals(s.shares, a, ElectorRule::full()),
                   electoral_totals(s.shares, a, ElectorRule::house_only()), {}};
  r.outcome = classify(r.full);
  return r;
}

/// Prints one scenario as a per-state table. Candidate A is the Democratic
/// side of the tally.
inline void print_scenario(const ScenarioResult& r, const Apportionment& a, std::ostream& out) {
  auto cell = [](bool show, long v) { return show ? std::to_string(v) : std::string(); };
  char line[160];
  out << r.scenario.name << ", " << r.scenario.caption << "\n";
  std::snprintf(line, sizeof line, "%-6s %5s %6s %6s %6s %6s %6s %6s\n", "State", "A%", "PopA", "PopB", "H+S A",
                "H+S B", "H A", "H B");
  out << line;
  for (std::size_t s = 0; s < a.size(); ++s) {
    const bool a_wins = r.full.carried[s] == Party::Democrat;
    const double pa = r.scenario.shares[s] * a.turnout[s];
    const double pb = (1.0 - r.scenario.shares[s]) * a.turnout[s];
    const long full = a.house_electors[s] + a.senate_electors_base;
    std::snprintf(line, sizeof line, "%-6zu %4.0f%% %6.0f %6.0f %6s %6s %6s %6s\n", s + 1,
                  std::round(r.scenario.shares[s] * 100.0), pa, pb, cell(a_wins, full).c_str(),
                  cell(!a_wins, full).c_str(), cell(a_wins, a.house_electors[s]).c_str(),
                  cell(!a_wins, a.house_electors[s]).c_str());
    out << line;
  }
  std::snprintf(line, sizeof line, "%-6s %5s %6.0f %6.0f %6lld %6lld %6lld %6lld\n", "Total", "", r.full.dem_pop,
                r.full.rep_pop, static_cast<long long>(r.full.dem_electors),
                static_cast<long long>(r.full.rep_electors), static_cast<long long>(r.house.dem_electors),
                static_cast<long long>(r.house.rep_electors));
  out << line << "code: " << to_string(r.outcome.code) << "\n";
}

}  // namespace elections

#endif
