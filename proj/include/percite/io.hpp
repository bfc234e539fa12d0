#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "percite/percentile.hpp"
#include "percite/regression.hpp"
#include "percite/synth.hpp"

namespace percite::io {

// Fixed-precision and shortest round-trip number formatting used by every
// writer, so identical data always serializes to identical bytes.
std::string format_fixed(double value, int decimals);
std::string format_shortest(double value);

// FNV-1a 64 over raw bytes, as a 16-char lowercase hex string.
std::string fnv1a64_hex(std::string_view bytes);
std::string digest_file(const std::filesystem::path& path);

// header `paper_id,year,percentile`, percentile with 6 decimals; papers in
// corpus order, years ascending.
void write_percentile_table(std::ostream& out, const Corpus& corpus,
                            const PercentileTable& table,
                            std::string_view manifest_id = {});

// Coefficient rows: `year,model,n,covariate,estimate,se,p,star` (the
// intercept uses covariate name "intercept").
void write_sweep_coefficients(std::ostream& out, const SweepGrid& grid,
                              std::string_view manifest_id = {});
// Per-model rows: `year,model,r2,adj_r2,bic,dropped_missing_jif`.
void write_sweep_models(std::ostream& out, const SweepGrid& grid,
                        std::string_view manifest_id = {});
// `year,model,adj_r2`, one row per grid cell.
void write_sweep_curve(std::ostream& out, const SweepGrid& grid,
                       std::string_view manifest_id = {});
// Polyline chart of adj_r2 vs predictor year, one series per model.
void write_sweep_chart_svg(std::ostream& out, const SweepGrid& grid);

struct DescribeRow {
  std::string variable;
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;  // sample (n-1) denominator
  double min = 0.0;
  double max = 0.0;
};

// Table-1-style descriptive statistics: target-year percentile, each
// requested predictor-year percentile, JIF, and the three ln covariates.
// Throws std::runtime_error when no paper is included in the table.
std::vector<DescribeRow> describe(const Corpus& corpus,
                                  const PercentileTable& table,
                                  const JifTable& jifs,
                                  const std::vector<int>& predictor_years,
                                  int target_year);
void write_describe(std::ostream& out, const std::vector<DescribeRow>& rows,
                    std::string_view manifest_id = {});

// Ground truth as `key,value` rows (config echo, per-journal JIF, per-paper
// quality/noise/zero-year flags), values in shortest round-trip form.
void write_ground_truth(std::ostream& out, const GroundTruth& truth);

// Ingestion report as JSON.
void write_ingest_report(std::ostream& out, const IngestReport& report);

}  // namespace percite::io
