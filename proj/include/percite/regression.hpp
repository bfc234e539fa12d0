#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "percite/journal_metrics.hpp"
#include "percite/percentile.hpp"

namespace percite {

enum class Covariate : std::uint8_t {
  percentile_t,
  jif,
  ln_authors,
  ln_refs,
  ln_pages
};

const char* to_string(Covariate c);

// Nested sequence: M1 = {percentile_t}, each further model adds one covariate
// in this order.
inline constexpr std::array<Covariate, 5> kNestedOrder{
    Covariate::percentile_t, Covariate::jif, Covariate::ln_authors,
    Covariate::ln_refs, Covariate::ln_pages};

struct FeatureRow {
  std::uint32_t paper = 0;  // corpus index
  double predictor_percentile = 0.0;
  double jif = 0.0;  // meaningful only when has_jif
  bool has_jif = false;
  double ln_authors = 0.0;
  double ln_refs = 0.0;
  double ln_pages = 0.0;
  double target_percentile = 0.0;
};

struct FeatureBuildReport {
  std::size_t rows = 0;
  std::size_t refs_zero = 0;    // papers hit by the ln(max(refs,1)) rule
  std::size_t missing_jif = 0;  // papers whose journal has no metric
};

struct FeatureSet {
  std::vector<FeatureRow> rows;
  FeatureBuildReport report;
};

// One row per paper included in the percentile table. ln fields are natural
// logs of the raw counts, with refs = 0 mapped to ln_refs = 0 and counted.
FeatureSet make_features(const Corpus& corpus, const PercentileTable& table,
                         const JifTable& jifs, int predictor_year,
                         int target_year);

struct ModelSpec {
  int predictor_year = 1;
  int model = 1;  // 1..5

  std::span<const Covariate> covariates() const {
    return {kNestedOrder.data(), static_cast<std::size_t>(model)};
  }
  bool uses_jif() const { return model >= 2; }
};

struct CoefficientStat {
  double estimate = 0.0;
  double se = 0.0;
  double p_value = 1.0;

  bool significant() const { return p_value < 0.01; }  // the "*" marker
};

struct RegressionResult {
  ModelSpec spec;
  std::size_t n = 0;
  CoefficientStat intercept;
  // Design order; names follow to_string(Covariate) or the form-selection
  // column labels.
  std::vector<std::pair<std::string, CoefficientStat>> coefficients;
  double r2 = 0.0;
  double adj_r2 = 0.0;
  double bic = 0.0;
  double condition = 1.0;      // Gram eigenvalue ratio
  double max_gradient = 0.0;   // max |X'y - X'X b| after the solve
  std::size_t dropped_missing_jif = 0;
};

// Least squares through a compensated cross-product accumulation and an
// orthogonal (symmetric eigen) solve. Throws std::invalid_argument when the
// usable row count is <= p+1 and std::runtime_error naming the offending
// covariate on rank deficiency.
RegressionResult ols_fit(std::span<const FeatureRow> rows,
                         const ModelSpec& spec, int threads = 1);

// 1 - (1-r2)(n-1)/(n-p-1); throws std::domain_error when n <= p+1.
double adjusted_r2(double r2, std::size_t n, std::size_t p);

enum class FunctionalForm : std::uint8_t { linear, log, quadratic };
const char* to_string(FunctionalForm f);

struct FormSelection {
  FunctionalForm winner = FunctionalForm::linear;
  double bic_linear = 0.0;
  double bic_log = 0.0;
  double bic_quadratic = 0.0;
};

// Fits y on raw x, on ln(max(x,1)), and on {x, x^2}; lowest BIC wins.
FormSelection functional_form_selection(std::span<const double> x_raw,
                                        std::span<const double> y);

struct SweepCell {
  RegressionResult fit;
  // Unadjusted R^2 of the same model on the JIF-complete row set, the basis
  // of the nested-monotonicity guarantee. Differs from fit.r2 only for M1.
  double r2_common = 0.0;
  std::size_t n_common = 0;
};

struct SweepGrid {
  std::vector<int> years;                     // requested predictor years
  std::vector<std::array<SweepCell, 5>> cells;  // cells[i] for years[i]

  const SweepCell& cell(std::size_t year_idx, int model) const {
    return cells[year_idx][static_cast<std::size_t>(model - 1)];
  }
};

// 5 nested fits per requested predictor year. M1 is fit on all rows; M2..M5
// share the JIF-complete row set. Errors from individual fits are annotated
// with (year, model).
SweepGrid model_sweep(const Corpus& corpus, const PercentileTable& table,
                      const JifTable& jifs, std::vector<int> years,
                      int target_year, int threads = 1);

}  // namespace percite
