#ifndef ELECTIONS_TALLY_HPP
#define ELECTIONS_TALLY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "elections/dataset.hpp"
#include "elections/error.hpp"
#include "elections/generator.hpp"

namespace elections {

enum class Party { Democrat, Republican };

constexpr char party_letter(Party p) noexcept { return p == Party::Democrat ? 'D' : 'R'; }
constexpr Party other(Party p) noexcept { return p == Party::Democrat ? Party::Republican : Party::Democrat; }

/// How a carried state's electors are counted.
struct ElectorRule {
  enum class Variant { Full, HouseOnly, SenateK, StatesWon };

  Variant variant = Variant::Full;
  int k = 2;  // Senate electors per state; meaningful for SenateK only

  static constexpr ElectorRule full() noexcept { return {Variant::Full, 2}; }
  static constexpr ElectorRule house_only() noexcept { return {Variant::HouseOnly, 0}; }
  static constexpr ElectorRule senate_k(int k) noexcept { return {Variant::SenateK, k}; }
  static constexpr ElectorRule states_won() noexcept { return {Variant::StatesWon, 0}; }

  /// Senate electors per carried state; FULL uses the apportionment's base.
  int senate_per_state(const Apportionment& a) const noexcept {
    switch (variant) {
      case Variant::Full: return a.senate_electors_base;
      case Variant::HouseOnly: return 0;
      case Variant::SenateK: return k;
      case Variant::StatesWon: return 0;
    }
    return 0;
  }
};

struct PopularVote {
  double dem = 0.0;
  double rep = 0.0;
};

struct TallyResult {
  double dem_pop = 0.0;
  double rep_pop = 0.0;
  int dem_house = 0;
  int rep_house = 0;
  int dem_senate = 0;  // at the apportionment's base Senate count per state
  int rep_senate = 0;
  int dem_states = 0;
  int rep_states = 0;
  std::vector<Party> carried;

  // Totals under the rule that produced this tally. For STATES_WON these are
  // state counts.
  std::int64_t dem_electors = 0;
  std::int64_t rep_electors = 0;

  int house_pool() const noexcept { return dem_house + rep_house; }
  int full_pool() const noexcept { return dem_house + rep_house + dem_senate + rep_senate; }
};

/// Real-valued vote totals: clamped share × turnout, summed over states.
inline PopularVote popular_totals(std::span<const double> clamped, const Apportionment& a) {
  if (clamped.size() != a.size()) throw Error(ErrorKind::DimensionMismatch, "shares and turnout differ in length");
  PopularVote v;
  for (std::size_t s = 0; s < clamped.size(); ++s) {
    v.dem += clamped[s] * a.turnout[s];
    v.rep += (1.0 - clamped[s]) * a.turnout[s];
  }
  return v;
}

inline PopularVote popular_totals(const SimulatedShares& shares, const Apportionment& a) {
  return popular_totals(shares.clamped, a);
}

/// Winner-take-all per state. An exact 0.5 share raises TiedState.
inline std::vector<Party> state_winners(std::span<const double> clamped) {
  std::vector<Party> out(clamped.size());
  for (std::size_t s = 0; s < clamped.size(); ++s) {
    if (clamped[s] > 0.5) {
      out[s] = Party::Democrat;
    } else if (clamped[s] < 0.5) {
      out[s] = Party::Republican;
    } else {
      throw Error(ErrorKind::TiedState, "state " + std::to_string(s) + " split exactly 50/50");
    }
  }
  return out;
}

inline std::vector<Party> state_winners(const SimulatedShares& shares) { return state_winners(shares.clamped); }

inline TallyResult electoral_totals(std::span<const double> clamped, const Apportionment& a, ElectorRule rule) {
  if (clamped.size() != a.size() || a.house_electors.size() != a.size()) {
    throw Error(ErrorKind::DimensionMismatch, "shares and apportionment differ in length");
  }
  TallyResult r;
  const PopularVote pop = popular_totals(clamped, a);
  r.dem_pop = pop.dem;
  r.rep_pop = pop.rep;
  r.carried = state_winners(clamped);

  const std::int64_t per_state = rule.senate_per_state(a);
  for (std::size_t s = 0; s < a.size(); ++s) {
    const int house = a.house_electors[s];
    if (r.carried[s] == Party::Democrat) {
      r.dem_house += house;
      r.dem_senate += a.senate_electors_base;
      ++r.dem_states;
      r.dem_electors += house + per_state;
    } else {
      r.rep_house += house;
      r.rep_senate += a.senate_electors_base;
      ++r.rep_states;
      r.rep_electors += house + per_state;
    }
  }
  if (rule.variant == ElectorRule::Variant::StatesWon) {
    r.dem_electors = r.dem_states;
    r.rep_electors = r.rep_states;
  }
  return r;
}

inline TallyResult electoral_totals(const SimulatedShares& shares, const Apportionment& a, ElectorRule rule) {
  return electoral_totals(shares.clamped, a, rule);
}

}  // namespace elections

#endif
