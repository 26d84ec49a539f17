#include "rowland/oeis.hpp"

#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include <httplib.h>
#include <json.hpp>

namespace rowland::oeis {

namespace fs = std::filesystem;

bool is_valid_id(const std::string& id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (std::size_t i = 1; i < id.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  return true;
}

namespace {

const char* skip_spaces(const char* p, const char* end) {
  while (p != end && (*p == ' ' || *p == '\t')) ++p;
  return p;
}

std::int64_t parse_int(const char*& p, const char* end, std::size_t line, const char* what) {
  std::int64_t value = 0;
  auto [next, ec] = std::from_chars(p, end, value);
  if (ec == std::errc::result_out_of_range) throw ParseError(line, std::string(what) + " out of range");
  if (ec != std::errc() || next == p) throw ParseError(line, std::string("expected ") + what);
  p = next;
  return value;
}

}  // namespace

BFile parse_bfile(const std::string& text, std::string id) {
  BFile out;
  out.id = std::move(id);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::size_t len = (eol == std::string::npos ? text.size() : eol) - pos;
    if (eol == std::string::npos && len == 0) break;
    ++line_no;
    std::string_view line(text.data() + pos, len);
    pos = (eol == std::string::npos) ? text.size() + 1 : eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const char* p = line.data();
    const char* end = line.data() + line.size();
    p = skip_spaces(p, end);
    if (p == end || *p == '#') continue;

    BFileEntry entry;
    entry.index = parse_int(p, end, line_no, "index");
    if (p == end || (*p != ' ' && *p != '\t')) throw ParseError(line_no, "expected space after index");
    p = skip_spaces(p, end);
    entry.value = parse_int(p, end, line_no, "value");
    p = skip_spaces(p, end);
    if (p != end) throw ParseError(line_no, "trailing characters after value");

    if (!out.entries.empty() && entry.index != out.entries.back().index + 1)
      throw StructureError("index gap: " + std::to_string(out.entries.back().index) + " followed by " +
                           std::to_string(entry.index));
    out.entries.push_back(entry);
  }
  return out;
}

std::string render_bfile(const BFile& b) {
  std::string out;
  for (const auto& e : b.entries) {
    out += std::to_string(e.index);
    out += ' ';
    out += std::to_string(e.value);
    out += '\n';
  }
  return out;
}

namespace {

std::string default_cache_dir() {
  if (const char* env = std::getenv("ROWLAND_OEIS_CACHE"); env && *env) return env;
  return "oeis-cache";
}

std::mutex g_rate_mutex;
std::chrono::steady_clock::time_point g_last_request{};

void rate_limit_tick() {
  std::lock_guard<std::mutex> lock(g_rate_mutex);
  auto now = std::chrono::steady_clock::now();
  auto earliest = g_last_request + std::chrono::seconds(1);
  if (g_last_request.time_since_epoch().count() != 0 && now < earliest) {
    std::this_thread::sleep_until(earliest);
    now = earliest;
  }
  g_last_request = now;
}

}  // namespace

std::string cache_path(const std::string& id, const FetchOptions& opt) {
  fs::path dir = opt.cache_dir.empty() ? default_cache_dir() : opt.cache_dir;
  return (dir / (id + ".txt")).string();
}

std::string fetch_bfile(const std::string& id, const FetchOptions& opt) {
  if (!is_valid_id(id))
    throw FetchError(FetchError::Kind::BadId, "invalid OEIS identifier: " + id);

  fs::path path = cache_path(id, opt);
  if (fs::exists(path)) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FetchError(FetchError::Kind::Io, "cannot read cache file " + path.string());
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  if (opt.offline)
    throw FetchError(FetchError::Kind::OfflineMiss, "offline mode and no cached copy of " + id);

  if (opt.rate_limit) rate_limit_tick();
  httplib::Client client(opt.base_url);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  client.set_follow_location(true);
  std::string resource = "/" + id + "/b" + id.substr(1) + ".txt";
  auto res = client.Get(resource);
  if (!res)
    throw FetchError(FetchError::Kind::Network,
                     "network failure fetching " + id + ": " + httplib::to_string(res.error()));
  if (res->status != 200)
    throw FetchError(FetchError::Kind::HttpStatus,
                     "HTTP " + std::to_string(res->status) + " fetching " + id, res->status);

  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FetchError(FetchError::Kind::Io, "cannot write cache file " + tmp.string());
    out.write(res->body.data(), static_cast<std::streamsize>(res->body.size()));
  }
  fs::rename(tmp, path, ec);
  if (ec) throw FetchError(FetchError::Kind::Io, "cannot store cache file " + path.string());
  return res->body;
}

CompareReport compare_sequences(std::span<const std::int64_t> generated, const BFile& ref) {
  CompareReport r;
  r.generated_len = generated.size();
  r.reference_len = ref.entries.size();
  std::size_t overlap = std::min(r.generated_len, r.reference_len);
  for (std::size_t i = 0; i < overlap; ++i) {
    if (generated[i] != ref.entries[i].value) {
      r.prefix_len = i;
      r.divergence = Divergence{i, generated[i], ref.entries[i].value, ref.entries[i].index};
      return r;
    }
  }
  r.prefix_len = overlap;
  return r;
}

std::string to_json(const CompareReport& r, const std::string& id) {
  nlohmann::ordered_json j;
  j["id"] = id;
  j["prefix_len"] = r.prefix_len;
  j["generated_len"] = r.generated_len;
  j["reference_len"] = r.reference_len;
  if (r.divergence) {
    j["divergence"] = {{"position", r.divergence->position},
                       {"generated", r.divergence->generated},
                       {"reference", r.divergence->reference},
                       {"reference_index", r.divergence->reference_index}};
  } else {
    j["divergence"] = nullptr;
  }
  return j.dump();
}

}  // namespace rowland::oeis
