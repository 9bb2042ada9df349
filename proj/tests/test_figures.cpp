#include <gtest/gtest.h>

#include <sstream>

#include "elections/figures.hpp"

using namespace elections;

namespace {

OutcomeRecord bush_gore() {
  OutcomeRecord r;
  r.code = Outcome::LW;
  r.popular_winner = Party::Democrat;
  r.popular_winner_H = 225;
  r.popular_winner_S = 42;
  r.popular_winner_states = 21;
  r.signed_electoral_diff = -4;
  r.carried_california = true;
  return r;
}

std::string emit(const std::vector<OutcomeRecord>& recs, FigureKind kind, int width = 20) {
  std::ostringstream os;
  emit_figure_data(recs, kind, os, width);
  return os.str();
}

}  // namespace

TEST(Figures, ScatterRowForBushGorePoint) {
  EXPECT_EQ(emit({bush_gore()}, FigureKind::ScatterHS), "H,S,code\n225,42,LW\n");
  EXPECT_EQ(emit({bush_gore()}, FigureKind::CaliforniaScatter), "H,S,popular_winner,carried_california\n225,42,D,1\n");
}

TEST(Figures, HistogramEmptyWhenNoUnpopularTrials) {
  OutcomeRecord ww;
  ww.code = Outcome::WW;
  ww.signed_electoral_diff = 300;
  EXPECT_EQ(emit({ww, ww}, FigureKind::DiffHistogram), "bin_lo,bin_hi,count\n");
}

TEST(Figures, HistogramBinsUnpopularDifferences) {
  auto a = bush_gore();  // diff −4 → [−20, 0)
  auto b = bush_gore();
  b.signed_electoral_diff = 46;  // → [40, 60)
  auto c = bush_gore();
  c.code = Outcome::WL;  // popular winner wins the full vote: excluded
  c.signed_electoral_diff = 400;
  EXPECT_EQ(emit({a, b, c}, FigureKind::DiffHistogram),
            "bin_lo,bin_hi,count\n-20,0,1\n0,20,0\n20,40,0\n40,60,1\n");
}

TEST(Figures, EmptyInputRaises) {
  try {
    emit({}, FigureKind::ScatterHS);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyInput);
  }
}

TEST(Figures, BinCountsFloorsNegatives) {
  const std::map<int, std::uint64_t> v = {{-40, 2}, {-21, 1}, {-20, 1}, {-1, 3}, {0, 4}, {19, 1}};
  const auto bins = bin_counts(v, 20);
  const std::vector<HistogramBin> expected = {{-40, -20, 3}, {-20, 0, 4}, {0, 20, 5}};
  EXPECT_EQ(bins, expected);
  EXPECT_THROW(bin_counts(v, 0), Error);
}

TEST(Figures, TrialCsv) {
  auto r = bush_gore();
  r.trial = 7;
  r.dem_pop = 50.5;
  r.rep_pop = 49.5;
  std::ostringstream os;
  write_trials_csv(std::vector<OutcomeRecord>{r}, os);
  EXPECT_EQ(os.str(), "trial,code,dem_pop,rep_pop,H,S,diff,california\n7,LW,50.5,49.5,225,42,-4,1\n");
}
