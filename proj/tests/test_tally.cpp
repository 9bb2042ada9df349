#include <gtest/gtest.h>

#include <random>

#include "elections/scenario.hpp"
#include "elections/tally.hpp"
#include "oracles.hpp"

using namespace elections;

namespace {

const Apportionment& bundled_map() {
  static const Apportionment a = oracle::bundled().apportionment();
  return a;
}

std::vector<double> random_shares(std::mt19937_64& rng, std::size_t n = 51) {
  std::uniform_real_distribution<double> u(0.2, 0.8);
  std::vector<double> v(n);
  for (auto& x : v) {
    do x = u(rng);
    while (x == 0.5);
  }
  return v;
}

}  // namespace

TEST(PopularTotals, Table3Scenarios) {
  const Apportionment toy = toy_apportionment();
  const auto lw = popular_totals(std::vector<double>{0.53, 0.47, 0.47}, toy);
  EXPECT_NEAR(lw.dem, 253.0, 1e-9);
  EXPECT_NEAR(lw.rep, 247.0, 1e-9);
  const auto ll = popular_totals(std::vector<double>{0.49, 0.49, 0.65}, toy);
  EXPECT_NEAR(ll.dem, 261.0, 1e-9);
  EXPECT_NEAR(ll.rep, 239.0, 1e-9);
}

TEST(PopularTotals, EvenSplitHalvesTurnout) {
  const auto v = popular_totals(std::vector<double>(51, 0.5), bundled_map());
  EXPECT_DOUBLE_EQ(v.dem, bundled_map().turnout_total() / 2);
  EXPECT_DOUBLE_EQ(v.rep, bundled_map().turnout_total() / 2);
}

TEST(StateWinners, Examples) {
  const auto w = state_winners(std::vector<double>{0.53, 0.47, 0.47});
  EXPECT_EQ(w, (std::vector<Party>{Party::Democrat, Party::Republican, Party::Republican}));
  const auto sweep = state_winners(std::vector<double>(51, 0.9));
  EXPECT_EQ(std::count(sweep.begin(), sweep.end(), Party::Democrat), 51);
}

TEST(StateWinners, ExactTieRaises) {
  try {
    state_winners(std::vector<double>{0.6, 0.5, 0.4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TiedState);
  }
}

TEST(ElectoralTotals, Table3) {
  const Apportionment toy = toy_apportionment();
  struct Row {
    std::vector<double> shares;
    int full_a, full_b, house_a, house_b;
  };
  const Row rows[] = {{{0.53, 0.47, 0.47}, 5, 6, 3, 2}, {{0.49, 0.49, 0.65}, 3, 8, 1, 4}, {{0.49, 0.53, 0.53}, 6, 5, 2, 3}};
  for (const auto& r : rows) {
    const auto full = electoral_totals(r.shares, toy, ElectorRule::full());
    const auto house = electoral_totals(r.shares, toy, ElectorRule::house_only());
    EXPECT_EQ(full.dem_electors, r.full_a);
    EXPECT_EQ(full.rep_electors, r.full_b);
    EXPECT_EQ(house.dem_electors, r.house_a);
    EXPECT_EQ(house.rep_electors, r.house_b);
  }
}

TEST(ElectoralTotals, RuleEquivalences) {
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 200; ++rep) {
    const auto s = random_shares(rng);
    const auto h = electoral_totals(s, bundled_map(), ElectorRule::house_only());
    const auto k0 = electoral_totals(s, bundled_map(), ElectorRule::senate_k(0));
    const auto f = electoral_totals(s, bundled_map(), ElectorRule::full());
    const auto k2 = electoral_totals(s, bundled_map(), ElectorRule::senate_k(2));
    EXPECT_EQ(h.dem_electors, k0.dem_electors);
    EXPECT_EQ(h.rep_electors, k0.rep_electors);
    EXPECT_EQ(f.dem_electors, k2.dem_electors);
    EXPECT_EQ(f.rep_electors, k2.rep_electors);
  }
}

TEST(ElectoralTotals, InvariantsAndConservation) {
  std::mt19937_64 rng(2);
  const double turnout = bundled_map().turnout_total();
  for (int rep = 0; rep < 200; ++rep) {
    const auto s = random_shares(rng);
    for (int k : {0, 1, 2, 3, 10, 100}) {
      const auto t = electoral_totals(s, bundled_map(), ElectorRule::senate_k(k));
      EXPECT_EQ(t.dem_electors + t.rep_electors, 436 + 51 * k);
      EXPECT_EQ(t.dem_house + t.rep_house, 436);
      EXPECT_EQ(t.dem_senate + t.rep_senate, 102);
      EXPECT_EQ(t.dem_states + t.rep_states, 51);
      EXPECT_EQ(t.dem_senate, 2 * t.dem_states);
      EXPECT_NEAR(t.dem_pop + t.rep_pop, turnout, 1e-6 * turnout);
    }
    const auto w = electoral_totals(s, bundled_map(), ElectorRule::states_won());
    EXPECT_NE(w.dem_electors, w.rep_electors);
    EXPECT_EQ(w.dem_electors + w.rep_electors, 51);
  }
}

TEST(ElectoralTotals, MonotoneInOneStateShare) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, 50);
  std::uniform_real_distribution<double> bump(0.0, 0.3);
  const ElectorRule rules[] = {ElectorRule::full(), ElectorRule::house_only(), ElectorRule::senate_k(7),
                               ElectorRule::states_won()};
  for (int rep = 0; rep < 300; ++rep) {
    auto s = random_shares(rng);
    auto raised = s;
    const auto i = pick(rng);
    raised[i] = std::min(0.99, raised[i] + bump(rng));
    if (raised[i] == 0.5) continue;
    for (const auto& rule : rules) {
      EXPECT_GE(electoral_totals(raised, bundled_map(), rule).dem_electors,
                electoral_totals(s, bundled_map(), rule).dem_electors);
    }
    EXPECT_GE(popular_totals(raised, bundled_map()).dem, popular_totals(s, bundled_map()).dem);
  }
}

TEST(ElectoralTotals, TiePropagates) {
  std::vector<double> s(51, 0.6);
  s[10] = 0.5;
  EXPECT_THROW(electoral_totals(s, bundled_map(), ElectorRule::full()), Error);
}

TEST(ElectoralTotals, DimensionMismatch) {
  EXPECT_THROW(electoral_totals(std::vector<double>{0.6, 0.4}, bundled_map(), ElectorRule::full()), Error);
}
