#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "elections/dataset.hpp"
#include "elections/figures.hpp"
#include "elections/json_io.hpp"
#include "elections/montecarlo.hpp"
#include "elections/pca.hpp"
#include "elections/scenario.hpp"

#ifndef ELECTIONS_DATA_DIR
#define ELECTIONS_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using namespace elections;

namespace {

struct RunConfig {
  std::string shares_path = std::string(ELECTIONS_DATA_DIR) + "/elections_1964_2008.csv";
  std::string structure_path = std::string(ELECTIONS_DATA_DIR) + "/structure_2008.csv";
  int start_year = kFirstYear;
  std::uint64_t trials = 20000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::vector<int> k_values = {0, 1, 2, 3, 5, 10, 100};
  std::string out_dir = "out";
  bool emit_trials = false;
  int bin_width = 20;
  std::size_t loadings = 0;
  std::string report_path;
};

// At least three elections must remain after filtering.
const CLI::Validator kStartYear(
    [](std::string& in) -> std::string {
      int year = 0;
      try {
        year = std::stoi(in);
      } catch (...) {
        return "start year must be an integer";
      }
      if (year < kFirstYear || year > kLastYear - 2 * kYearStep || (year - kFirstYear) % kYearStep != 0) {
        return "start year must be one of 1964, 1968, ..., 2000";
      }
      return {};
    },
    "YEAR");

void add_data_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--shares", cfg.shares_path, "State-year share CSV")->capture_default_str();
  cmd->add_option("--structure", cfg.structure_path, "2008 turnout and House elector CSV")->capture_default_str();
  cmd->add_option("--start-year", cfg.start_year, "First election year to fit on")
      ->check(kStartYear)
      ->capture_default_str();
}

ElectionDataset load(const RunConfig& cfg) {
  ElectionDataset d = load_dataset(cfg.shares_path, cfg.structure_path);
  if (cfg.start_year != kFirstYear) d = d.restrict_from(cfg.start_year);
  if (d.election_count() < 8) {
    std::cerr << "warning: fitting on only " << d.election_count() << " elections\n";
  }
  return d;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << content;
}

int run_pca(const RunConfig& cfg) {
  const ElectionDataset d = load(cfg);
  const PcaModel model = fit_pca(d, FitOptions{.expected_rank = d.election_count() - 1});
  if (cfg.loadings > 0) {
    std::cout << "rank,state,coefficient\n";
    std::size_t rank = 1;
    for (const auto& l : loadings_report(model, cfg.loadings)) {
      std::cout << rank++ << ',' << l.state.name() << ',' << csv::format_double(l.coefficient) << '\n';
    }
    return 0;
  }
  std::cout << to_json(model, d.years).dump(2) << '\n';
  return 0;
}

int run_simulate(const RunConfig& cfg) {
  const ElectionDataset d = load(cfg);
  const PcaModel model = fit_pca(d);
  const BatchResult batch = run_batch(model, d, cfg.trials, cfg.seed, {cfg.threads, true});
  const SweepResult sweep = senate_sweep(model, d, cfg.trials, cfg.seed, cfg.k_values, cfg.threads);

  const fs::path out(cfg.out_dir);
  fs::create_directories(out);
  write_file(out / "summary.json", to_json(batch.summary, cfg.bin_width).dump(2) + "\n");
  write_file(out / "sweep.json", to_json(sweep).dump(2) + "\n");
  if (!batch.records.empty()) {
    const std::pair<FigureKind, const char*> figures[] = {{FigureKind::ScatterHS, "scatter_hs.csv"},
                                                          {FigureKind::DiffHistogram, "diff_histogram.csv"},
                                                          {FigureKind::CaliforniaScatter, "california_scatter.csv"}};
    for (const auto& [kind, name] : figures) {
      std::ostringstream os;
      emit_figure_data(batch.records, kind, os, cfg.bin_width);
      write_file(out / name, os.str());
    }
  }
  if (cfg.emit_trials) {
    std::ostringstream os;
    write_trials_csv(batch.records, os);
    write_file(out / "trials.csv", os.str());
  }

  const RunSummary& s = batch.summary;
  std::cout << std::fixed << std::setprecision(4) << "trials " << s.trials << " seed " << s.seed << '\n'
            << "unpopular (House + Senate) " << s.unpopular_full() << '\n'
            << "unpopular (House only)     " << s.unpopular_house() << '\n'
            << "unpopular (states won)     " << sweep.states_won_frequency() << '\n'
            << "Democratic win rate        " << s.dem_win_rate() << '\n'
            << "wrote " << out.string() << '\n';
  return 0;
}

int run_scenario() {
  const Apportionment a = toy_apportionment();
  for (const auto& sc : toy_scenarios()) {
    const ScenarioResult r = evaluate(sc, a);
    print_scenario(r, a, std::cout);
    std::cout << '\n';
  }
  return 0;
}

int run_report(const RunConfig& cfg) {
  std::ifstream in(cfg.report_path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + cfg.report_path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::MalformedRow, cfg.report_path + ": " + e.what());
  }
  std::cout << std::fixed << std::setprecision(2);
  auto pct = [](const Json& v) { return 100.0 * v.get<double>(); };
  std::cout << "Simulated elections: " << j.at("trials").get<std::uint64_t>() << " (seed "
            << j.at("seed").get<std::uint64_t>() << ")\n\n"
            << "Outcome codes (popular winner under House+Senate, House only)\n";
  for (const char* code : {"WW", "WL", "LW", "LL", "DEGENERATE"}) {
    std::cout << "  " << std::left << std::setw(11) << code << std::right << std::setw(7)
              << pct(j.at("freq").at(code)) << "%\n";
  }
  std::cout << "\nUnpopular elections\n"
            << "  House + Senate electors " << std::setw(7) << pct(j.at("unpopular_full")) << "%\n"
            << "  House electors only     " << std::setw(7) << pct(j.at("unpopular_house")) << "%\n"
            << "  states won              " << std::setw(7) << pct(j.at("states_won_unpopular")) << "%\n"
            << "  exact elector splits: full " << j.at("ties").at("full") << ", House " << j.at("ties").at("house")
            << "\n\nDemocratic win rate " << pct(j.at("dem_win_rate")) << "%\n";

  const Json& h = j.at("diff_histogram");
  std::cout << "\nSigned electoral difference in unpopular elections (D - R), bin width " << h.at("bin_width")
            << "\n  positive " << h.at("positive") << ", negative " << h.at("negative") << '\n';
  for (const auto& b : h.at("bins")) {
    std::cout << "  [" << std::setw(5) << b.at("lo").get<int>() << ", " << std::setw(5) << b.at("hi").get<int>()
              << ") " << b.at("count") << '\n';
  }
  const Json& ca = j.at("california_crosstab");
  std::cout << "\nPopular winner vs California (all / unpopular)\n";
  for (const char* p : {"D", "R"}) {
    std::cout << "  " << p << " carried " << ca.at(p).at("carried") << " / " << ca.at(p).at("unpopular_carried")
              << ", lost " << ca.at(p).at("not_carried") << " / " << ca.at(p).at("unpopular_not_carried") << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo simulation of Electoral College outcomes", "elections"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* pca = app.add_subcommand("pca", "Fit the principal-components model and print it as JSON");
  add_data_options(pca, cfg);
  pca->add_option("--loadings", cfg.loadings, "Print sorted coefficients of component J as CSV")
      ->check(CLI::Range(1, 51));

  auto* sim = app.add_subcommand("simulate", "Run a batch of simulated elections");
  add_data_options(sim, cfg);
  sim->add_option("--trials", cfg.trials, "Number of simulated elections")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40))
      ->capture_default_str();
  sim->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
  sim->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();
  sim->add_option("--k", cfg.k_values, "Senate electors per state for the rule sweep")
      ->check(CLI::NonNegativeNumber)
      ->delimiter(',');
  sim->add_option("--out", cfg.out_dir, "Output directory")->capture_default_str();
  sim->add_flag("--emit-trials", cfg.emit_trials, "Also write per-trial CSV");
  sim->add_option("--bins", cfg.bin_width, "Histogram bin width in electors")
      ->check(CLI::Range(1, 1076))
      ->capture_default_str();

  auto* scen = app.add_subcommand("scenario", "Tally the three-state toy scenarios");

  auto* rep = app.add_subcommand("report", "Summarize a simulate run's summary.json");
  rep->add_option("summary", cfg.report_path, "Path to summary.json")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*pca) return run_pca(cfg);
    if (*sim) return run_simulate(cfg);
    if (*scen) return run_scenario();
    if (*rep) return run_report(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
