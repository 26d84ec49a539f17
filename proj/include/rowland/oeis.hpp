#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rowland::oeis {

struct BFileEntry {
  std::int64_t index = 0;
  std::int64_t value = 0;

  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

// One parsed b-file: `index value` lines with consecutive indices.
struct BFile {
  std::string id;  // "A" + 6 digits
  std::vector<BFileEntry> entries;

  friend bool operator==(const BFile&, const BFile&) = default;
};

struct ParseError : std::runtime_error {
  std::size_t line;
  ParseError(std::size_t line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

/// Indices must step by exactly 1 from the first entry.
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FetchError : std::runtime_error {
  enum class Kind { BadId, Network, HttpStatus, OfflineMiss, Io };
  Kind kind;
  int http_status = 0;
  FetchError(Kind kind_, const std::string& what, int status = 0)
      : std::runtime_error(what), kind(kind_), http_status(status) {}
};

bool is_valid_id(const std::string& id);

/// Accepts '#' comment lines, blank lines, LF or CRLF. Throws ParseError
/// (malformed line) or StructureError (index gap).
BFile parse_bfile(const std::string& text, std::string id = "");

/// Lines of "index value" separated by one space, LF endings, no comments.
std::string render_bfile(const BFile& bfile);

struct FetchOptions {
  std::string cache_dir;  // empty: $ROWLAND_OEIS_CACHE, else ./oeis-cache
  std::string base_url = "https://oeis.org";
  bool offline = false;
  bool rate_limit = true;  // at most one request per second, process-wide
};

std::string cache_path(const std::string& id, const FetchOptions& opt = {});

/// Cache-first byte fetch of the b-file for `id`. Only 200 responses are
/// cached; cached bytes are returned verbatim on later calls.
std::string fetch_bfile(const std::string& id, const FetchOptions& opt = {});

struct Divergence {
  std::size_t position = 0;  // 0-based position into both value lists
  std::int64_t generated = 0;
  std::int64_t reference = 0;
  std::int64_t reference_index = 0;  // b-file index at that position

  friend bool operator==(const Divergence&, const Divergence&) = default;
};

// Positional value comparison; offsets are aligned by each side's first entry.
struct CompareReport {
  std::size_t prefix_len = 0;
  std::size_t generated_len = 0;
  std::size_t reference_len = 0;
  std::optional<Divergence> divergence;

  friend bool operator==(const CompareReport&, const CompareReport&) = default;
};

CompareReport compare_sequences(std::span<const std::int64_t> generated, const BFile& reference);

std::string to_json(const CompareReport& report, const std::string& id);

}  // namespace rowland::oeis
