#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "percite/corpus.hpp"

namespace percite {

// Journal item document types. Only article/review/note count as citable.
enum class ItemType : std::uint8_t { article, review, note, other };

const char* to_string(ItemType t);
// Unrecognized strings map to `other` (non-citable).
ItemType parse_item_type(std::string_view s);

struct JournalItem {
  std::string item_id;
  std::string journal_id;
  int pub_year = 0;
  ItemType doc_type = ItemType::other;

  bool citable() const { return doc_type != ItemType::other; }
  bool operator==(const JournalItem&) const = default;
};

struct JournalMetric {
  std::string journal_id;
  int jif_year = 0;
  double jif = 0.0;  // >= 0 always
  std::uint64_t citable_count = 0;
};

class JournalItemStore {
 public:
  // Throws std::runtime_error naming the id on duplicates.
  void add(JournalItem item);

  std::size_t size() const { return items_.size(); }
  const std::vector<JournalItem>& items() const { return items_; }
  const JournalItem* find(std::string_view item_id) const;

 private:
  std::vector<JournalItem> items_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

class CitationEventStore {
 public:
  // Every cited_paper_id must resolve in `items`; otherwise throws.
  void add(CitationEvent event, const JournalItemStore& items);

  std::size_t size() const { return events_.size(); }
  const std::vector<CitationEvent>& events() const { return events_; }

 private:
  std::vector<CitationEvent> events_;
};

// Citations in target_year to the journal's citable items published in
// target_year-1 or target_year-2, divided by the count of those items.
// Throws std::runtime_error ("no citable items") when the denominator is 0.
JournalMetric compute_jif(std::string_view journal_id, int target_year,
                          const JournalItemStore& items,
                          const CitationEventStore& events);

struct JifTable {
  std::map<std::string, JournalMetric, std::less<>> metrics;
  // Journals present in the item store that have no citable items in the
  // window; they carry no metric.
  std::vector<std::string> skipped_journals;

  const JournalMetric* find(std::string_view journal_id) const;
};

// One pass over items and events; equivalent to compute_jif per journal.
JifTable compute_all_jifs(int target_year, const JournalItemStore& items,
                          const CitationEventStore& events);

// --- file formats ---------------------------------------------------------

// header `item_id,journal_id,pub_year,doc_type`
JournalItemStore read_journal_items(std::istream& in);
JournalItemStore read_journal_items_file(const std::filesystem::path& path);
void write_journal_items(std::ostream& out,
                         const std::vector<JournalItem>& items);

// header `citing_year,cited_paper_id`
CitationEventStore read_citation_events(std::istream& in,
                                        const JournalItemStore& items);
CitationEventStore read_citation_events_file(const std::filesystem::path& path,
                                             const JournalItemStore& items);
void write_citation_events(std::ostream& out,
                           const std::vector<CitationEvent>& events);

// header `journal_id,jif`; duplicate journal -> std::runtime_error naming it,
// negative jif -> std::invalid_argument.
JifTable ingest_jif_table(std::istream& in);
JifTable ingest_jif_table_file(const std::filesystem::path& path);
// Values are written with shortest round-trip formatting, so
// ingest(export(t)) reproduces the jif map exactly.
void write_jif_table(std::ostream& out, const JifTable& table,
                     std::string_view manifest_id = {});

}  // namespace percite
