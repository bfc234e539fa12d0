#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace percite {

// Provenance record emitted next to every command's outputs. The manifest id
// hashes tool version + command + config + input digests (never timestamps),
// and every output file carries `# manifest: <id>` as its first line.
class RunManifest {
 public:
  RunManifest(std::string command);

  void set_config(std::string key, std::string value);
  void set_config(std::string key, std::int64_t value);
  void set_config(std::string key, double value);
  void add_input(const std::filesystem::path& path);  // digests the file
  void add_output(std::string name);
  void add_stage(std::string name, std::int64_t rows_in, std::int64_t rows_out);
  void add_warning(std::string message);

  // Stable once config and inputs are set.
  std::string id() const;

  // Timestamp honors SOURCE_DATE_EPOCH (seconds) when set, for reproducible
  // reruns; otherwise the current UTC time.
  void write(const std::filesystem::path& path) const;
  std::string to_json() const;

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> config_;
  std::vector<std::pair<std::string, std::string>> inputs_;  // path, digest
  std::vector<std::string> outputs_;
  struct Stage {
    std::string name;
    std::int64_t rows_in;
    std::int64_t rows_out;
  };
  std::vector<Stage> stages_;
  std::vector<std::string> warnings_;
};

}  // namespace percite
