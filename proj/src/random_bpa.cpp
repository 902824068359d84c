#include "dst/random_bpa.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>
#include <vector>

namespace dst {

namespace {

double next_unit(std::mt19937_64& rng) {
  // 53 random bits; uniform on [0, 1)
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, bound) by rejection.
std::uint64_t next_index(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t zone = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= zone);
  return x % bound;
}

// k distinct values from [0, universe), uniform without replacement.
// Fisher-Yates over a virtual identity array, storing only touched slots.
std::vector<std::uint64_t> sample_without_replacement(std::mt19937_64& rng,
                                                      std::uint64_t universe,
                                                      int k) {
  std::unordered_map<std::uint64_t, std::uint64_t> moved;
  std::vector<std::uint64_t> picked;
  picked.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    std::uint64_t offset = static_cast<std::uint64_t>(i);
    std::uint64_t j = offset + next_index(rng, universe - offset);
    auto value_at = [&](std::uint64_t index) {
      auto it = moved.find(index);
      return it == moved.end() ? index : it->second;
    };
    std::uint64_t chosen = value_at(j);
    moved[j] = value_at(offset);
    picked.push_back(chosen);
  }
  return picked;
}

}  // namespace

MassFunction random_bpa(const Frame& frame, int focal_count,
                        std::uint64_t seed) {
  std::uint64_t universe = (std::uint64_t{1} << frame.size()) - 1;
  if (focal_count < 1 ||
      static_cast<std::uint64_t>(focal_count) > universe) {
    throw ValidationError(errc::invalid_argument,
                          "focal count must be between 1 and 2^n - 1");
  }
  std::mt19937_64 rng(seed);

  std::vector<std::uint64_t> picked =
      sample_without_replacement(rng, universe, focal_count);
  // indices 0..universe-1 name the non-empty subsets 1..universe
  std::vector<std::uint32_t> sets;
  sets.reserve(picked.size());
  for (std::uint64_t index : picked) {
    sets.push_back(static_cast<std::uint32_t>(index + 1));
  }
  std::sort(sets.begin(), sets.end());

  // uniform spacings: gaps between sorted uniforms are a flat simplex sample
  std::vector<double> masses;
  for (;;) {
    std::vector<double> cuts;
    cuts.reserve(static_cast<std::size_t>(focal_count) + 1);
    cuts.push_back(0.0);
    for (int i = 0; i + 1 < focal_count; ++i) {
      double u;
      do {
        u = next_unit(rng);
      } while (u == 0.0);
      cuts.push_back(u);
    }
    cuts.push_back(1.0);
    std::sort(cuts.begin(), cuts.end());
    masses.clear();
    bool degenerate = false;
    double sum = 0.0;
    for (std::size_t i = 1; i < cuts.size(); ++i) {
      double gap = cuts[i] - cuts[i - 1];
      if (gap <= 0.0) {
        degenerate = true;
        break;
      }
      masses.push_back(gap);
      sum += gap;
    }
    if (degenerate) continue;  // coincident draws; try again
    for (double& mass : masses) mass /= sum;
    break;
  }

  std::vector<MassEntry> entries;
  entries.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    entries.push_back({FocalSet(sets[i]), masses[i]});
  }
  return make_mass(frame, std::move(entries));
}

}  // namespace dst
