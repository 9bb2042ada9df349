#ifndef ELECTIONS_MONTECARLO_HPP
#define ELECTIONS_MONTECARLO_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

#include "elections/dataset.hpp"
#include "elections/error.hpp"
#include "elections/generator.hpp"
#include "elections/pca.hpp"
#include "elections/states.hpp"
#include "elections/tally.hpp"

namespace elections {

/// First letter: popular winner's result with House + Senate electors.
/// Second letter: with House electors only. Failing to reach a strict
/// majority (an exact split included) is a loss.
enum class Outcome { WW, WL, LW, LL };

inline constexpr std::array<Outcome, 4> kOutcomes = {Outcome::WW, Outcome::WL, Outcome::LW, Outcome::LL};

constexpr std::string_view to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::WW: return "WW";
    case Outcome::WL: return "WL";
    case Outcome::LW: return "LW";
    case Outcome::LL: return "LL";
  }
  return "??";
}

constexpr bool loses_full(Outcome o) noexcept { return o == Outcome::LW || o == Outcome::LL; }
constexpr bool loses_house(Outcome o) noexcept { return o == Outcome::WL || o == Outcome::LL; }

struct OutcomeRecord {
  std::uint64_t trial = 0;
  Outcome code = Outcome::WW;
  bool tie_full = false;   // exact split of the full elector pool
  bool tie_house = false;  // exact split of the House pool
  Party popular_winner = Party::Democrat;
  std::optional<Party> electoral_winner_full;  // nullopt on an exact split
  int signed_electoral_diff = 0;               // Democratic − Republican, full rule
  int popular_winner_H = 0;
  int popular_winner_S = 0;
  int popular_winner_states = 0;
  int state_count = 0;
  int house_pool = 0;
  bool carried_california = false;
  double dem_pop = 0.0;
  double rep_pop = 0.0;
};

/// Classifies one tallied election. Throws ExactPopularTie when the popular
/// vote is split exactly.
inline OutcomeRecord classify(const TallyResult& t, std::optional<std::size_t> california = std::nullopt) {
  if (t.dem_pop == t.rep_pop) throw Error(ErrorKind::ExactPopularTie, "popular vote split exactly");
  OutcomeRecord r;
  r.popular_winner = t.dem_pop > t.rep_pop ? Party::Democrat : Party::Republican;
  const bool dem = r.popular_winner == Party::Democrat;
  r.popular_winner_H = dem ? t.dem_house : t.rep_house;
  r.popular_winner_S = dem ? t.dem_senate : t.rep_senate;
  r.popular_winner_states = dem ? t.dem_states : t.rep_states;
  r.state_count = t.dem_states + t.rep_states;
  r.house_pool = t.house_pool();
  r.dem_pop = t.dem_pop;
  r.rep_pop = t.rep_pop;

  const int full_twice = 2 * (r.popular_winner_H + r.popular_winner_S);
  const int house_twice = 2 * r.popular_winner_H;
  r.tie_full = full_twice == t.full_pool();
  r.tie_house = house_twice == t.house_pool();
  const bool wins_full = full_twice > t.full_pool();
  const bool wins_house = house_twice > t.house_pool();
  r.code = wins_full ? (wins_house ? Outcome::WW : Outcome::WL) : (wins_house ? Outcome::LW : Outcome::LL);

  const int dem_full = t.dem_house + t.dem_senate;
  const int rep_full = t.rep_house + t.rep_senate;
  r.signed_electoral_diff = dem_full - rep_full;
  if (dem_full != rep_full) r.electoral_winner_full = dem_full > rep_full ? Party::Democrat : Party::Republican;

  if (california) r.carried_california = t.carried.at(*california) == r.popular_winner;
  return r;
}

/// Counts accumulated over a range of trials. Every field is an integer
/// count, so merging partial summaries is exact and order-independent.
struct RunSummary {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::array<std::uint64_t, 4> code_counts{};
  std::uint64_t ties_full = 0;
  std::uint64_t ties_house = 0;
  std::uint64_t degenerate_tied_state = 0;
  std::uint64_t degenerate_popular_tie = 0;
  std::uint64_t dem_wins_full = 0;
  std::uint64_t states_won_unpopular = 0;
  std::map<int, std::uint64_t> unpopular_diffs;  // signed electoral difference → count
  // [popular winner: 0 = D, 1 = R][carried California: 0 = no, 1 = yes]
  std::array<std::array<std::uint64_t, 2>, 2> california{};
  std::array<std::array<std::uint64_t, 2>, 2> california_unpopular{};

  std::uint64_t count(Outcome o) const { return code_counts[static_cast<std::size_t>(o)]; }
  std::uint64_t degenerate() const { return degenerate_tied_state + degenerate_popular_tie; }

  double fraction(std::uint64_t c) const {
    return trials == 0 ? 0.0 : static_cast<double>(c) / static_cast<double>(trials);
  }
  double freq(Outcome o) const { return fraction(count(o)); }
  double unpopular_full() const { return fraction(count(Outcome::LW) + count(Outcome::LL)); }
  double unpopular_house() const { return fraction(count(Outcome::WL) + count(Outcome::LL)); }
  double dem_win_rate() const { return fraction(dem_wins_full); }
  double states_won_rate() const { return fraction(states_won_unpopular); }

  void add(const OutcomeRecord& r) {
    ++trials;
    ++code_counts[static_cast<std::size_t>(r.code)];
    ties_full += r.tie_full;
    ties_house += r.tie_house;
    if (r.electoral_winner_full == Party::Democrat) ++dem_wins_full;
    if (2 * r.popular_winner_states <= r.state_count) ++states_won_unpopular;
    const std::size_t party = r.popular_winner == Party::Democrat ? 0 : 1;
    ++california[party][r.carried_california];
    if (loses_full(r.code)) {
      ++unpopular_diffs[r.signed_electoral_diff];
      ++california_unpopular[party][r.carried_california];
    }
  }

  void add_degenerate(ErrorKind kind) {
    ++trials;
    if (kind == ErrorKind::TiedState) {
      ++degenerate_tied_state;
    } else {
      ++degenerate_popular_tie;
    }
  }

  void merge(const RunSummary& o) {
    trials += o.trials;
    for (std::size_t i = 0; i < code_counts.size(); ++i) code_counts[i] += o.code_counts[i];
    ties_full += o.ties_full;
    ties_house += o.ties_house;
    degenerate_tied_state += o.degenerate_tied_state;
    degenerate_popular_tie += o.degenerate_popular_tie;
    dem_wins_full += o.dem_wins_full;
    states_won_unpopular += o.states_won_unpopular;
    for (const auto& [diff, c] : o.unpopular_diffs) unpopular_diffs[diff] += c;
    for (std::size_t p = 0; p < 2; ++p) {
      for (std::size_t c = 0; c < 2; ++c) {
        california[p][c] += o.california[p][c];
        california_unpopular[p][c] += o.california_unpopular[p][c];
      }
    }
  }

  friend bool operator==(const RunSummary&, const RunSummary&) = default;
};

using TrialResult = std::variant<OutcomeRecord, ErrorKind>;

/// One full trial: noise, shares, full-rule tally, classification.
/// Degenerate trials come back as the ErrorKind that stopped them.
inline TrialResult simulate_trial(const PcaModel& model, const Apportionment& a, std::uint64_t seed,
                                  std::uint64_t trial, std::optional<std::size_t> california) {
  try {
    const NoiseVector noise = draw_noise(seed, trial, model.components());
    const SimulatedShares shares = generate_shares(model, noise);
    OutcomeRecord r = classify(electoral_totals(shares, a, ElectorRule::full()), california);
    r.trial = trial;
    return r;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::TiedState || e.kind() == ErrorKind::ExactPopularTie) return e.kind();
    throw;
  }
}

struct BatchOptions {
  unsigned threads = 1;
  bool keep_records = false;
};

struct BatchResult {
  RunSummary summary;
  std::vector<OutcomeRecord> records;  // ordered by trial; degenerate trials omitted
};

namespace detail {

// Runs fn(begin, end, part) over contiguous chunks of [0, trials) and returns
// the per-chunk partials in chunk order.
template <class Partial, class Fn>
std::vector<Partial> for_chunks(std::uint64_t trials, unsigned threads, Fn fn) {
  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, trials));
  std::vector<Partial> parts(workers);
  auto bounds = [&](std::uint64_t w) { return trials * w / workers; };
  if (workers == 1) {
    fn(0, trials, parts[0]);
    return parts;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] { fn(bounds(w), bounds(w + 1), parts[w]); });
  }
  pool.clear();  // joins
  return parts;
}

}  // namespace detail

inline BatchResult run_batch(const PcaModel& model, const Apportionment& a, std::uint64_t trials, std::uint64_t seed,
                             std::optional<std::size_t> california, const BatchOptions& options = {}) {
  if (trials < 1) throw Error(ErrorKind::IndexOutOfRange, "trials must be at least 1");
  struct Part {
    RunSummary summary;
    std::vector<OutcomeRecord> records;
  };
  auto parts = detail::for_chunks<Part>(trials, options.threads, [&](std::uint64_t begin, std::uint64_t end, Part& p) {
    p.summary.seed = seed;
    for (std::uint64_t t = begin; t < end; ++t) {
      const TrialResult res = simulate_trial(model, a, seed, t, california);
      if (const auto* rec = std::get_if<OutcomeRecord>(&res)) {
        p.summary.add(*rec);
        if (options.keep_records) p.records.push_back(*rec);
      } else {
        p.summary.add_degenerate(std::get<ErrorKind>(res));
      }
    }
  });

  BatchResult out;
  out.summary.seed = seed;
  for (auto& p : parts) {
    out.summary.merge(p.summary);
    out.records.insert(out.records.end(), p.records.begin(), p.records.end());
  }
  return out;
}

inline BatchResult run_batch(const PcaModel& model, const ElectionDataset& dataset, std::uint64_t trials,
                             std::uint64_t seed, const BatchOptions& options = {}) {
  return run_batch(model, dataset.apportionment(), trials, seed, state_of("California").index, options);
}

/// Popular winner fails to reach a strict majority with k Senate electors
/// per state.
inline bool unpopular_with_k(const OutcomeRecord& r, std::int64_t k) {
  const std::int64_t total = r.popular_winner_H + k * r.popular_winner_states;
  const std::int64_t pool = r.house_pool + k * r.state_count;
  return 2 * total <= pool;
}

struct SweepEntry {
  int k = 0;
  std::uint64_t unpopular = 0;

  friend bool operator==(const SweepEntry&, const SweepEntry&) = default;
};

struct SweepResult {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t degenerate = 0;
  std::vector<SweepEntry> entries;
  std::uint64_t states_won_unpopular = 0;

  double fraction(std::uint64_t c) const {
    return trials == 0 ? 0.0 : static_cast<double>(c) / static_cast<double>(trials);
  }
  double frequency(int k) const {
    for (const auto& e : entries) {
      if (e.k == k) return fraction(e.unpopular);
    }
    throw Error(ErrorKind::IndexOutOfRange, "k=" + std::to_string(k) + " not in sweep");
  }
  double states_won_frequency() const { return fraction(states_won_unpopular); }

  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

/// Unpopular frequency for each k on the trial stream run_batch uses for the
/// same seed, plus the states-won limit.
inline SweepResult senate_sweep(const PcaModel& model, const Apportionment& a, std::uint64_t trials,
                                std::uint64_t seed, const std::vector<int>& k_values, unsigned threads = 1) {
  if (trials < 1) throw Error(ErrorKind::IndexOutOfRange, "trials must be at least 1");
  for (int k : k_values) {
    if (k < 0) throw Error(ErrorKind::IndexOutOfRange, "Senate elector count must be nonnegative");
  }
  auto parts = detail::for_chunks<SweepResult>(trials, threads, [&](std::uint64_t begin, std::uint64_t end,
                                                                    SweepResult& p) {
    for (int k : k_values) p.entries.push_back({k, 0});
    for (std::uint64_t t = begin; t < end; ++t) {
      ++p.trials;
      const TrialResult res = simulate_trial(model, a, seed, t, std::nullopt);
      const auto* rec = std::get_if<OutcomeRecord>(&res);
      if (!rec) {
        ++p.degenerate;
        continue;
      }
      for (auto& e : p.entries) e.unpopular += unpopular_with_k(*rec, e.k);
      if (2 * rec->popular_winner_states <= rec->state_count) ++p.states_won_unpopular;
    }
  });

  SweepResult out;
  out.seed = seed;
  for (int k : k_values) out.entries.push_back({k, 0});
  for (const auto& p : parts) {
    out.trials += p.trials;
    out.degenerate += p.degenerate;
    out.states_won_unpopular += p.states_won_unpopular;
    for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i].unpopular += p.entries[i].unpopular;
  }
  return out;
}

inline SweepResult senate_sweep(const PcaModel& model, const ElectionDataset& dataset, std::uint64_t trials,
                                std::uint64_t seed, const std::vector<int>& k_values, unsigned threads = 1) {
  return senate_sweep(model, dataset.apportionment(), trials, seed, k_values, threads);
}

}  // namespace elections

#endif
