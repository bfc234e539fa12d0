#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "percite/corpus.hpp"

namespace percite {

struct RefSetKey {
  std::string category;
  DocType doc_type = DocType::article;

  bool operator==(const RefSetKey&) const = default;
  auto operator<=>(const RefSetKey&) const = default;
};

struct ReferenceSet {
  RefSetKey key;
  std::vector<std::uint32_t> members;  // corpus indices, corpus order
  bool eligible = false;               // size >= config.min_refset_size

  std::size_t size() const { return members.size(); }
};

struct RefSetReport {
  std::size_t sets_total = 0;
  std::size_t sets_dropped = 0;     // below the size threshold
  std::size_t papers_excluded = 0;  // no eligible set at all
};

struct ReferenceSetIndex {
  std::vector<ReferenceSet> sets;  // sorted by key
  // Per corpus paper, indices into `sets` of its eligible sets, ascending.
  std::vector<std::vector<std::uint32_t>> paper_sets;
  RefSetReport report;

  bool included(std::size_t paper_idx) const {
    return !paper_sets[paper_idx].empty();
  }
};

// One set per (subject category, doc type) pair present in the corpus.
ReferenceSetIndex build_reference_sets(const Corpus& corpus);

// Ascending ranks starting at 1, in input order; tied values share the
// arithmetic mean of the positions they span, so the rank sum is exactly
// n(n+1)/2. Throws std::domain_error on an empty input.
std::vector<double> rank_with_ties(std::span<const std::uint64_t> values);

// 100 * (rank - 0.5) / n. Throws std::domain_error unless n >= 1 and
// 1 <= rank <= n (fractional ranks from tie averaging are fine).
double hazen_percentile(double rank, std::size_t set_size);

// rank_with_ties + hazen_percentile over one value list.
std::vector<double> hazen_percentiles(std::span<const std::uint64_t> values);

// Percentile of each member of an eligible set at the given window year,
// aligned with set.members. The mean of the result is exactly 50.
std::vector<double> set_percentiles(const ReferenceSet& set, int window_year,
                                    const Corpus& corpus);

// Averaged Hazen percentiles per included paper and requested window year.
class PercentileTable {
 public:
  const std::vector<int>& years() const { return years_; }
  std::size_t included_count() const { return included_count_; }
  std::size_t corpus_size() const { return rows_.size(); }

  bool included(std::size_t paper_idx) const;
  bool has_year(int year) const;

  // Unweighted mean of the paper's within-set percentiles. Throws
  // std::out_of_range naming the paper when it is excluded, unknown, or the
  // year was not requested.
  double at(std::size_t paper_idx, int year) const;
  double at(const Corpus& corpus, std::string_view paper_id, int year) const;

 private:
  friend PercentileTable percentile_table(const Corpus&,
                                          const ReferenceSetIndex&,
                                          std::vector<int>, int);
  std::vector<int> years_;                 // sorted ascending
  std::vector<std::uint32_t> rows_;        // corpus idx -> row or kExcluded
  std::vector<double> values_;             // row-major [row][year_idx]
  std::size_t included_count_ = 0;
  static constexpr std::uint32_t kExcluded = 0xffffffffu;

  std::size_t year_index(int year) const;  // throws when absent
};

// Deterministic for any thread count: per-set results are merged in set-key
// order, never accumulation order.
PercentileTable percentile_table(const Corpus& corpus,
                                 const ReferenceSetIndex& index,
                                 std::vector<int> years, int threads = 1);
PercentileTable percentile_table(const Corpus& corpus, std::vector<int> years,
                                 int threads = 1);

}  // namespace percite
