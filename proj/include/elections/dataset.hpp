#ifndef ELECTIONS_DATASET_HPP
#define ELECTIONS_DATASET_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "elections/csv.hpp"
#include "elections/error.hpp"
#include "elections/matrix.hpp"
#include "elections/states.hpp"

namespace elections {

inline constexpr int kFirstYear = 1964;
inline constexpr int kLastYear = 2008;
inline constexpr int kYearStep = 4;
inline constexpr std::size_t kElectionCount = 12;
inline constexpr int kHouseElectors = 436;
inline constexpr int kSenateElectorsPerState = 2;
inline constexpr int kTotalElectors = 538;

/// Per-state weights used to turn shares into votes and electors. Holds any
/// number of states so small hand-built maps can exercise the tally rules.
struct Apportionment {
  std::vector<double> turnout;
  std::vector<int> house_electors;
  int senate_electors_base = kSenateElectorsPerState;

  std::size_t size() const noexcept { return turnout.size(); }

  int house_total() const {
    int total = 0;
    for (int h : house_electors) total += h;
    return total;
  }

  double turnout_total() const {
    double total = 0.0;
    for (double t : turnout) total += t;
    return total;
  }
};

/// Democratic share of the two-party vote. Throws DegenerateVote when either
/// side has no votes.
inline double two_party_share(std::int64_t dem_votes, std::int64_t rep_votes) {
  if (dem_votes <= 0 || rep_votes <= 0) {
    throw Error(ErrorKind::DegenerateVote, "two-party share needs positive votes on both sides (dem=" +
                                               std::to_string(dem_votes) +
                                               ", rep=" + std::to_string(rep_votes) + ")");
  }
  return static_cast<double>(dem_votes) / (static_cast<double>(dem_votes) + static_cast<double>(rep_votes));
}

/// Historical two-party shares (rows = election years, columns = states in
/// canonical order) plus the 2008 structure used to tally simulated elections.
struct ElectionDataset {
  std::vector<int> years;
  Matrix shares;
  std::vector<std::int64_t> turnout;
  std::vector<int> house_electors;
  int senate_electors_base = kSenateElectorsPerState;

  std::size_t election_count() const noexcept { return years.size(); }

  Apportionment apportionment() const {
    Apportionment a;
    a.turnout.assign(turnout.begin(), turnout.end());
    a.house_electors = house_electors;
    a.senate_electors_base = senate_electors_base;
    return a;
  }

  /// Copy holding only the elections from `start_year` on.
  ElectionDataset restrict_from(int start_year) const {
    const auto it = std::find(years.begin(), years.end(), start_year);
    if (it == years.end()) {
      throw Error(ErrorKind::IndexOutOfRange, "start year " + std::to_string(start_year) + " not in dataset");
    }
    const auto first = static_cast<std::size_t>(it - years.begin());
    ElectionDataset out = *this;
    out.years.assign(it, years.end());
    out.shares = Matrix(years.size() - first, shares.cols());
    for (std::size_t t = first; t < years.size(); ++t) {
      for (std::size_t s = 0; s < shares.cols(); ++s) out.shares(t - first, s) = shares(t, s);
    }
    return out;
  }

  friend bool operator==(const ElectionDataset&, const ElectionDataset&) = default;
};

inline void validate(const ElectionDataset& d) {
  if (d.shares.cols() != kStateCount || d.turnout.size() != kStateCount || d.house_electors.size() != kStateCount) {
    throw Error(ErrorKind::MissingState, "dataset must cover all 51 states");
  }
  if (d.shares.rows() != d.years.size() || d.years.size() < 2) {
    throw Error(ErrorKind::MissingState, "dataset needs at least two election years with shares");
  }
  for (std::size_t t = 1; t < d.years.size(); ++t) {
    if (d.years[t] != d.years[t - 1] + kYearStep) {
      throw Error(ErrorKind::MalformedRow, "election years must increase in steps of 4");
    }
  }
  for (std::size_t t = 0; t < d.shares.rows(); ++t) {
    for (std::size_t s = 0; s < kStateCount; ++s) {
      const double v = d.shares(t, s);
      if (!(v > 0.0 && v < 1.0)) {
        throw Error(ErrorKind::ShareOutOfRange, std::string(kStateNames[s]) + " " + std::to_string(d.years[t]) +
                                                    ": share " + csv::format_double(v) + " not in (0,1)");
      }
    }
  }
  int house = 0;
  for (std::size_t s = 0; s < kStateCount; ++s) {
    if (d.turnout[s] <= 0) {
      throw Error(ErrorKind::MalformedRow, std::string(kStateNames[s]) + ": turnout must be positive");
    }
    if (d.house_electors[s] < 1) {
      throw Error(ErrorKind::ElectorSumMismatch, std::string(kStateNames[s]) + ": needs at least one House elector");
    }
    house += d.house_electors[s];
  }
  if (house != kHouseElectors) {
    throw Error(ErrorKind::ElectorSumMismatch,
                "House electors sum to " + std::to_string(house) + ", expected " + std::to_string(kHouseElectors));
  }
  if (d.house_electors[state_of("District of Columbia").index] != 1) {
    throw Error(ErrorKind::ElectorSumMismatch, "District of Columbia must have exactly one House elector");
  }
}

namespace detail {

inline StateId parse_state(const csv::Table& table, std::size_t row, std::size_t col) {
  const auto id = find_state(table.rows[row][col]);
  if (!id) {
    throw Error(ErrorKind::MalformedRow,
                "line " + std::to_string(table.line_numbers[row]) + ": unknown state '" + table.rows[row][col] + "'");
  }
  return *id;
}

template <class T>
T parse_field(const csv::Table& table, std::size_t row, std::size_t col) {
  const auto v = csv::parse_number<T>(table.rows[row][col]);
  if (!v) {
    throw Error(ErrorKind::MalformedRow, "line " + std::to_string(table.line_numbers[row]) + ": bad value '" +
                                             table.rows[row][col] + "' in column " + table.header[col]);
  }
  return *v;
}

inline std::size_t require_column(const csv::Table& table, std::string_view name) {
  const auto c = table.column(name);
  if (!c) throw Error(ErrorKind::MalformedRow, "missing column '" + std::string(name) + "'");
  return *c;
}

}  // namespace detail

/// Reads `state,year,dem_votes,rep_votes` or `state,year,dem_share` rows into
/// a years × 51 share matrix.
inline std::pair<std::vector<int>, Matrix> load_shares(const csv::Table& table) {
  const auto state_col = detail::require_column(table, "state");
  const auto year_col = detail::require_column(table, "year");
  const auto share_col = table.column("dem_share");
  const auto dem_col = table.column("dem_votes");
  const auto rep_col = table.column("rep_votes");
  if (!share_col && !(dem_col && rep_col)) {
    throw Error(ErrorKind::MalformedRow, "shares file needs dem_share or dem_votes,rep_votes columns");
  }

  std::map<int, std::map<std::size_t, double>> by_year;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const StateId state = detail::parse_state(table, r, state_col);
    const int year = detail::parse_field<int>(table, r, year_col);
    if (year < kFirstYear || year > kLastYear || (year - kFirstYear) % kYearStep != 0) {
      throw Error(ErrorKind::MalformedRow,
                  "line " + std::to_string(table.line_numbers[r]) + ": year " + std::to_string(year) +
                      " outside 1964-2008 presidential years");
    }
    double share = 0.0;
    if (share_col) {
      share = detail::parse_field<double>(table, r, *share_col);
    } else {
      const auto dem = detail::parse_field<std::int64_t>(table, r, *dem_col);
      const auto rep = detail::parse_field<std::int64_t>(table, r, *rep_col);
      if (dem < 0 || rep < 0) {
        throw Error(ErrorKind::MalformedRow, "line " + std::to_string(table.line_numbers[r]) + ": negative vote count");
      }
      share = two_party_share(dem, rep);
    }
    if (!by_year[year].emplace(state.index, share).second) {
      throw Error(ErrorKind::MalformedRow, "line " + std::to_string(table.line_numbers[r]) + ": duplicate " +
                                               std::string(state.name()) + " " + std::to_string(year));
    }
  }

  if (by_year.size() < kElectionCount) {
    throw Error(ErrorKind::MissingState, "found " + std::to_string(by_year.size()) + " election years, expected " +
                                             std::to_string(kElectionCount));
  }
  std::vector<int> years;
  Matrix shares(by_year.size(), kStateCount);
  std::size_t t = 0;
  for (const auto& [year, states] : by_year) {
    for (std::size_t s = 0; s < kStateCount; ++s) {
      const auto it = states.find(s);
      if (it == states.end()) {
        throw Error(ErrorKind::MissingState, std::string(kStateNames[s]) + " missing for " + std::to_string(year));
      }
      shares(t, s) = it->second;
    }
    years.push_back(year);
    ++t;
  }
  return {std::move(years), std::move(shares)};
}

inline void load_structure(const csv::Table& table, ElectionDataset& out) {
  const auto state_col = detail::require_column(table, "state");
  const auto turnout_col = detail::require_column(table, "turnout_two_party_2008");
  const auto house_col = detail::require_column(table, "house_electors");

  std::vector<bool> seen(kStateCount, false);
  out.turnout.assign(kStateCount, 0);
  out.house_electors.assign(kStateCount, 0);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const StateId state = detail::parse_state(table, r, state_col);
    if (seen[state.index]) {
      throw Error(ErrorKind::MalformedRow,
                  "line " + std::to_string(table.line_numbers[r]) + ": duplicate " + std::string(state.name()));
    }
    seen[state.index] = true;
    out.turnout[state.index] = detail::parse_field<std::int64_t>(table, r, turnout_col);
    out.house_electors[state.index] = detail::parse_field<int>(table, r, house_col);
  }
  for (std::size_t s = 0; s < kStateCount; ++s) {
    if (!seen[s]) throw Error(ErrorKind::MissingState, std::string(kStateNames[s]) + " missing from structure file");
  }
}

inline ElectionDataset load_dataset(const std::string& shares_path, const std::string& structure_path) {
  ElectionDataset d;
  auto [years, shares] = load_shares(csv::read_file(shares_path));
  d.years = std::move(years);
  d.shares = std::move(shares);
  load_structure(csv::read_file(structure_path), d);
  validate(d);
  return d;
}

inline void write_shares_csv(const ElectionDataset& d, std::ostream& out) {
  out << "state,year,dem_share\n";
  for (std::size_t t = 0; t < d.years.size(); ++t) {
    for (std::size_t s = 0; s < d.shares.cols(); ++s) {
      out << kStateNames[s] << ',' << d.years[t] << ',' << csv::format_double(d.shares(t, s)) << '\n';
    }
  }
}

inline void write_structure_csv(const ElectionDataset& d, std::ostream& out) {
  out << "state,turnout_two_party_2008,house_electors\n";
  for (std::size_t s = 0; s < d.turnout.size(); ++s) {
    out << kStateNames[s] << ',' << d.turnout[s] << ',' << d.house_electors[s] << '\n';
  }
}

/// Pearson correlation of every state pair's share column, upper triangle in
/// row-major order (51·50/2 entries).
inline std::vector<double> pairwise_correlations(const Matrix& shares) {
  const std::size_t n = shares.rows();
  const std::size_t m = shares.cols();
  std::vector<double> mean(m, 0.0), sd(m, 0.0);
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < n; ++t) mean[s] += shares(t, s);
    mean[s] /= static_cast<double>(n);
    for (std::size_t t = 0; t < n; ++t) sd[s] += (shares(t, s) - mean[s]) * (shares(t, s) - mean[s]);
    sd[s] = std::sqrt(sd[s]);
  }
  std::vector<double> out;
  out.reserve(m * (m - 1) / 2);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      double c = 0.0;
      for (std::size_t t = 0; t < n; ++t) c += (shares(t, i) - mean[i]) * (shares(t, j) - mean[j]);
      out.push_back(c / (sd[i] * sd[j]));
    }
  }
  return out;
}

}  // namespace elections

#endif
