#ifndef ELECTIONS_JSON_IO_HPP
#define ELECTIONS_JSON_IO_HPP

#include <vector>

#include "json.hpp"

#include "elections/figures.hpp"
#include "elections/montecarlo.hpp"
#include "elections/pca.hpp"
#include "elections/states.hpp"

namespace elections {

using Json = nlohmann::ordered_json;

inline Json to_json(const PcaModel& model, const std::vector<int>& years = {}) {
  Json j;
  j["n"] = model.n;
  if (!years.empty()) j["years"] = years;
  if (model.dimension() == kStateCount) {
    Json names = Json::array();
    for (auto name : kStateNames) names.push_back(name);
    j["states"] = names;
  }
  j["mean"] = model.mean;
  j["eigenvalues"] = model.eigenvalues;
  j["eigenvectors"] = model.eigenvectors;
  Json table = Json::array();
  for (std::size_t k = 1; k <= model.components(); ++k) {
    table.push_back({{"k", k}, {"fraction", variance_explained(model, k)}});
  }
  j["variance_explained"] = table;
  return j;
}

inline Json to_json(const RunSummary& s, int bin_width = 20) {
  Json j;
  j["trials"] = s.trials;
  j["seed"] = s.seed;
  Json freq;
  for (Outcome o : kOutcomes) freq[std::string(to_string(o))] = s.freq(o);
  freq["DEGENERATE"] = s.fraction(s.degenerate());
  j["freq"] = freq;
  j["counts"] = {{"WW", s.count(Outcome::WW)},
                 {"WL", s.count(Outcome::WL)},
                 {"LW", s.count(Outcome::LW)},
                 {"LL", s.count(Outcome::LL)}};
  j["ties"] = {{"full", s.ties_full}, {"house", s.ties_house}};
  j["degenerate"] = {{"tied_state", s.degenerate_tied_state}, {"popular_tie", s.degenerate_popular_tie}};
  j["unpopular_full"] = s.unpopular_full();
  j["unpopular_house"] = s.unpopular_house();
  j["dem_win_rate"] = s.dem_win_rate();
  j["states_won_unpopular"] = s.states_won_rate();

  Json bins = Json::array();
  std::uint64_t positive = 0, negative = 0;
  for (const auto& [diff, c] : s.unpopular_diffs) {
    if (diff > 0) positive += c;
    if (diff < 0) negative += c;
  }
  for (const auto& b : bin_counts(s.unpopular_diffs, bin_width)) {
    bins.push_back({{"lo", b.lo}, {"hi", b.hi}, {"count", b.count}});
  }
  j["diff_histogram"] = {{"bin_width", bin_width}, {"positive", positive}, {"negative", negative}, {"bins", bins}};

  Json ca;
  const char* parties[] = {"D", "R"};
  for (std::size_t p = 0; p < 2; ++p) {
    ca[parties[p]] = {{"carried", s.california[p][1]},
                      {"not_carried", s.california[p][0]},
                      {"unpopular_carried", s.california_unpopular[p][1]},
                      {"unpopular_not_carried", s.california_unpopular[p][0]}};
  }
  j["california_crosstab"] = ca;
  return j;
}

inline Json to_json(const SweepResult& s) {
  Json j;
  j["trials"] = s.trials;
  j["seed"] = s.seed;
  j["degenerate"] = s.degenerate;
  Json entries = Json::array();
  for (const auto& e : s.entries) {
    entries.push_back({{"k", e.k}, {"unpopular", s.fraction(e.unpopular)}, {"count", e.unpopular}});
  }
  j["senate_k"] = entries;
  j["states_won"] = {{"unpopular", s.states_won_frequency()}, {"count", s.states_won_unpopular}};
  return j;
}

}  // namespace elections

#endif
