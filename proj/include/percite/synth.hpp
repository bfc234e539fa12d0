#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "percite/corpus.hpp"
#include "percite/journal_metrics.hpp"

namespace percite {

struct EffectSizes {
  double jif = 0.0;
  double ln_authors = 0.0;
  double ln_refs = 0.0;
  double ln_pages = 0.0;
};

// Generator knobs beyond the spec-level fields (doc_type_weights,
// multi_category_prob, quality_baseline) are documented in the README.
struct SynthConfig {
  std::uint64_t seed = 1;
  std::size_t n_papers = 10000;
  std::size_t n_journals = 40;
  std::size_t n_categories = 15;
  int horizon = 31;
  double zero_year1_fraction = 0.3;
  EffectSizes effect_sizes{3.0, 2.0, 2.0, 2.0};
  // Empty -> default early-peaked curve t*exp(-t/3), normalized.
  std::vector<double> aging_profile;
  double noise_sd = 4.0;

  double quality_baseline = 2.0;
  std::array<double, 3> doc_type_weights{0.80, 0.12, 0.08};
  double multi_category_prob = 0.15;
  int publication_year = 1980;
};

// Normalized profile for t = 1..horizon, proportional to t*exp(-t/3).
std::vector<double> default_aging_profile(int horizon);

// Validates invariants and fills the default aging profile when empty.
// Throws std::invalid_argument on violations.
SynthConfig resolve(const SynthConfig& config);

struct GroundTruth {
  SynthConfig config;  // resolved
  // Per journal index: the exact JIF the pipeline will compute, or NaN for
  // journals that carry no citable items.
  std::vector<double> journal_jif;
  std::vector<double> paper_quality;  // latent quality, before clamping
  std::vector<double> paper_noise;
  std::vector<std::uint8_t> forced_zero_year1;
};

struct SynthOutput {
  Corpus corpus;
  std::vector<JournalItem> items;
  std::vector<CitationEvent> events;
  GroundTruth truth;
};

// Pure function of the config: per-paper RNG substreams are derived from the
// seed, so parallel generation reproduces the sequential output exactly.
SynthOutput generate(const SynthConfig& config, int threads = 1);

// Reference implementation of the tie-averaged Hazen percentiles, kept
// deliberately plain (pair sort, positional ranks, tie-group means). Used by
// tests to cross-check the percentile engine; must match it exactly.
std::vector<double> oracle_percentile(std::span<const std::uint64_t> values);

}  // namespace percite
