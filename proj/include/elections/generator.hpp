#ifndef ELECTIONS_GENERATOR_HPP
#define ELECTIONS_GENERATOR_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "elections/error.hpp"
#include "elections/pca.hpp"
#include "elections/random.hpp"

namespace elections {

struct NoiseVector {
  std::vector<double> z;
  std::uint64_t trial_index = 0;
  std::uint64_t seed = 0;
};

struct SimulatedShares {
  std::vector<double> raw;      // may leave [0, 1]
  std::vector<double> clamped;  // raw clipped into [0, 1]
};

/// `count` standard normals for one trial, fixed by (seed, trial_index).
inline NoiseVector draw_noise(std::uint64_t seed, std::uint64_t trial_index, std::size_t count = 11) {
  NoiseVector out{std::vector<double>(count), trial_index, seed};
  NormalSource normal(substream(seed, trial_index));
  for (double& z : out.z) z = normal();
  return out;
}

/// μ + Σⱼ zⱼ·√λⱼ·Eⱼ.
inline SimulatedShares generate_shares(const PcaModel& model, std::span<const double> z) {
  if (model.components() == 0) throw Error(ErrorKind::DimensionMismatch, "model has no components");
  if (z.size() != model.components()) {
    throw Error(ErrorKind::DimensionMismatch, "noise has " + std::to_string(z.size()) + " entries, model has " +
                                                  std::to_string(model.components()) + " components");
  }
  SimulatedShares out{model.mean, {}};
  for (std::size_t j = 0; j < model.components(); ++j) {
    const double weight = z[j] * std::sqrt(model.eigenvalues[j]);
    const auto& e = model.eigenvectors[j];
    for (std::size_t s = 0; s < out.raw.size(); ++s) out.raw[s] += weight * e[s];
  }
  out.clamped.resize(out.raw.size());
  std::transform(out.raw.begin(), out.raw.end(), out.clamped.begin(),
                 [](double v) { return std::clamp(v, 0.0, 1.0); });
  return out;
}

inline SimulatedShares generate_shares(const PcaModel& model, const NoiseVector& noise) {
  return generate_shares(model, std::span<const double>(noise.z));
}

}  // namespace elections

#endif
