#ifndef ELECTIONS_FIGURES_HPP
#define ELECTIONS_FIGURES_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <vector>

#include "elections/csv.hpp"
#include "elections/error.hpp"
#include "elections/montecarlo.hpp"

namespace elections {

enum class FigureKind { ScatterHS, DiffHistogram, CaliforniaScatter };

struct HistogramBin {
  int lo = 0;  // inclusive
  int hi = 0;  // exclusive
  std::uint64_t count = 0;

  friend bool operator==(const HistogramBin&, const HistogramBin&) = default;
};

constexpr int floor_div(int a, int b) noexcept { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

/// Fixed-width bins aligned at zero, contiguous from the lowest to the
/// highest occupied bin.
inline std::vector<HistogramBin> bin_counts(const std::map<int, std::uint64_t>& values, int width) {
  if (width < 1) throw Error(ErrorKind::IndexOutOfRange, "bin width must be positive");
  std::vector<HistogramBin> bins;
  if (values.empty()) return bins;
  const int first = floor_div(values.begin()->first, width);
  const int last = floor_div(values.rbegin()->first, width);
  for (int b = first; b <= last; ++b) bins.push_back({b * width, (b + 1) * width, 0});
  for (const auto& [v, c] : values) bins[static_cast<std::size_t>(floor_div(v, width) - first)].count += c;
  return bins;
}

inline void emit_figure_data(std::span<const OutcomeRecord> records, FigureKind which, std::ostream& out,
                             int bin_width = 20) {
  if (records.empty()) throw Error(ErrorKind::EmptyInput, "no trial records to emit");
  switch (which) {
    case FigureKind::ScatterHS:
      out << "H,S,code\n";
      for (const auto& r : records) out << r.popular_winner_H << ',' << r.popular_winner_S << ',' << to_string(r.code) << '\n';
      break;
    case FigureKind::DiffHistogram: {
      std::map<int, std::uint64_t> diffs;
      for (const auto& r : records) {
        if (loses_full(r.code)) ++diffs[r.signed_electoral_diff];
      }
      out << "bin_lo,bin_hi,count\n";
      for (const auto& b : bin_counts(diffs, bin_width)) out << b.lo << ',' << b.hi << ',' << b.count << '\n';
      break;
    }
    case FigureKind::CaliforniaScatter:
      out << "H,S,popular_winner,carried_california\n";
      for (const auto& r : records) {
        out << r.popular_winner_H << ',' << r.popular_winner_S << ',' << party_letter(r.popular_winner) << ','
            << (r.carried_california ? 1 : 0) << '\n';
      }
      break;
  }
}

inline void write_trials_csv(std::span<const OutcomeRecord> records, std::ostream& out) {
  out << "trial,code,dem_pop,rep_pop,H,S,diff,california\n";
  for (const auto& r : records) {
    out << r.trial << ',' << to_string(r.code) << ',' << csv::format_double(r.dem_pop) << ','
        << csv::format_double(r.rep_pop) << ',' << r.popular_winner_H << ',' << r.popular_winner_S << ','
        << r.signed_electoral_diff << ',' << (r.carried_california ? 1 : 0) << '\n';
  }
}

}  // namespace elections

#endif
