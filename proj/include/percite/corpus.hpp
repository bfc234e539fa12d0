#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace percite {

// Document types retained for analysis. Anything else is filtered out at
// ingestion and counted in the report.
enum class DocType : std::uint8_t { article, review, note };

const char* to_string(DocType t);
std::optional<DocType> parse_doc_type(std::string_view s);

struct PaperRecord {
  std::string paper_id;
  std::string journal_id;
  int pub_year = 0;
  DocType doc_type = DocType::article;
  // Deduplicated, first-appearance order, never empty.
  std::vector<std::string> subject_categories;
  std::uint32_t n_authors = 1;
  std::uint32_t n_cited_refs = 0;
  std::uint32_t n_pages = 1;
  // Exactly config.horizon entries; index 0 is year 1, the publication
  // calendar year itself.
  std::vector<std::uint32_t> annual_citations;

  bool operator==(const PaperRecord&) const = default;
};

struct CitationEvent {
  int citing_year = 0;
  std::string cited_paper_id;  // refers to a journal item id

  bool operator==(const CitationEvent&) const = default;
};

struct CorpusConfig {
  int horizon = 31;           // number of citation years, year 1 = pub year
  int min_refset_size = 100;  // eligibility threshold for reference sets
  int publication_year = 1980;
};

// Throws std::invalid_argument when horizon < 2 or min_refset_size < 1.
void validate(const CorpusConfig& config);

struct MalformedRecord {
  std::size_t line = 0;  // 1-based physical line in the source
  std::string reason;
};

struct IngestReport {
  std::size_t accepted = 0;
  std::size_t rejected_doctype = 0;
  std::size_t rejected_year = 0;
  std::size_t malformed = 0;
  std::vector<MalformedRecord> malformed_lines;

  std::size_t total() const {
    return accepted + rejected_doctype + rejected_year + malformed;
  }
};

// Immutable after ingestion; safe to share across reader threads.
class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(CorpusConfig config);

  const CorpusConfig& config() const { return config_; }
  std::size_t size() const { return papers_.size(); }
  bool empty() const { return papers_.empty(); }
  const std::vector<PaperRecord>& papers() const { return papers_; }
  const PaperRecord& paper(std::size_t idx) const { return papers_[idx]; }

  bool contains(std::string_view paper_id) const;
  // Throws std::out_of_range naming the id when unknown.
  std::size_t index_of(std::string_view paper_id) const;

  // Appends a validated record. Throws std::runtime_error naming the id on a
  // duplicate paper_id.
  void add(PaperRecord record);

  bool operator==(const Corpus& other) const {
    return papers_ == other.papers_;
  }

 private:
  CorpusConfig config_;
  std::vector<PaperRecord> papers_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

// Citations received from year 1 through window_year inclusive.
// Throws std::out_of_range unless 1 <= window_year <= horizon.
std::uint64_t cumulative_citations(const PaperRecord& paper, int window_year);

enum class PaperFormat : std::uint8_t { jsonl, csv };

// jsonl for .jsonl/.ndjson/.json, csv for .csv/.tsv; defaults to jsonl.
PaperFormat paper_format_for_path(const std::filesystem::path& path);

struct IngestResult {
  Corpus corpus;
  IngestReport report;
};

// Reads one record per line, keeping only records with an analysis doc type
// and pub_year == config.publication_year. Malformed lines are recorded with
// their line number. Duplicate paper ids among accepted records throw.
IngestResult ingest_papers(std::istream& source, PaperFormat format,
                           const CorpusConfig& config);
IngestResult ingest_papers_file(const std::filesystem::path& path,
                                const CorpusConfig& config);

// Inverse of ingest_papers for an already validated corpus.
void emit_papers(std::ostream& out, const Corpus& corpus, PaperFormat format);
void emit_papers_file(const std::filesystem::path& path, const Corpus& corpus);

}  // namespace percite
