#pragma once

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "poincare/assembler.hpp"
#include "poincare/int_polynomial.hpp"

namespace poincare::cli {

#ifndef POINCARE_VERSION
#define POINCARE_VERSION "1.0.0"
#endif

inline constexpr const char* tool_version = POINCARE_VERSION;

using json = nlohmann::ordered_json;

/// Failure to read or write a result file.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One computed n, as persisted.
struct TableEntry {
  CoefficientTable table;
  int s = 0;
  Parity parity = Parity::Odd;
  std::vector<DenominatorFactor> factors;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> primes;
  double wall_seconds = 0;

  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

struct TableFile {
  std::string version = tool_version;
  std::uint64_t seed = 0;
  std::string prime_policy = "paper";
  std::map<int, TableEntry> entries;
};

/// Integers beyond 2^53 in magnitude go out as decimal strings.
inline json encode_int(const BigInt& v) {
  static const BigInt limit = BigInt(1) << 53;
  const BigInt mag = v < 0 ? BigInt(-v) : v;
  if (mag > limit) return v.str();
  return static_cast<std::int64_t>(v);
}

inline BigInt decode_int(const json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  throw IoError("expected an integer, got " + j.dump());
}

inline std::string text_line(const CoefficientTable& t) {
  return "A[" + std::to_string(t.n) + "] = " + format_list(t.half);
}

inline json entry_to_json(const TableEntry& e) {
  json j;
  j["n"] = e.table.n;
  j["s"] = e.s;
  j["delta"] = e.table.delta;
  json half = json::array();
  for (const auto& c : e.table.half) half.push_back(encode_int(c));
  j["half"] = std::move(half);
  json factors = json::array();
  for (const auto& f : e.factors) {
    factors.push_back({{"sign", f.sign}, {"exponent", f.exponent}, {"power", f.power}});
  }
  j["denominator"] = {{"kind", std::string(to_string(e.parity))}, {"factors", std::move(factors)}};
  j["seed"] = e.seed;
  j["primes"] = e.primes;
  return j;
}

inline Parity parse_parity(const std::string& s) {
  if (s == "odd") return Parity::Odd;
  if (s == "even2") return Parity::Even2;
  if (s == "even4") return Parity::Even4;
  throw IoError("unknown denominator kind '" + s + "'");
}

inline TableEntry entry_from_json(const json& j) {
  try {
    TableEntry e;
    e.table.n = j.at("n").get<int>();
    e.s = j.at("s").get<int>();
    e.table.delta = j.at("delta").get<int>();
    for (const auto& c : j.at("half")) e.table.half.push_back(decode_int(c));
    const auto& den = j.at("denominator");
    e.parity = parse_parity(den.at("kind").get<std::string>());
    for (const auto& f : den.at("factors")) {
      e.factors.push_back({f.at("sign").get<int>(), f.at("exponent").get<int>(), f.at("power").get<int>()});
    }
    e.seed = j.at("seed").get<std::uint64_t>();
    e.primes = j.at("primes").get<std::vector<std::uint64_t>>();
    return e;
  } catch (const json::exception& ex) {
    throw IoError(std::string("malformed table entry: ") + ex.what());
  }
}

inline json table_to_json(const TableFile& file) {
  json j;
  j["tool"] = "poincare";
  j["version"] = file.version;
  j["seed"] = file.seed;
  j["prime_policy"] = file.prime_policy;
  json entries = json::array();
  json timing = json::object();
  for (const auto& [n, e] : file.entries) {
    entries.push_back(entry_to_json(e));
    timing[std::to_string(n)] = e.wall_seconds;
  }
  j["entries"] = std::move(entries);
  j["wall_seconds"] = std::move(timing);
  return j;
}

inline std::string table_to_text(const TableFile& file) {
  std::string out;
  for (const auto& [n, e] : file.entries) out += text_line(e.table) + "\n";
  return out;
}

/// Parses one "A[n] = [c0,c1,...]" line; whitespace anywhere is ignored.
inline std::optional<CoefficientTable> parse_text_line(const std::string& line) {
  std::string s;
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) return std::nullopt;
  if (s.rfind("A[", 0) != 0) throw IoError("unrecognised line: " + line);
  const auto close = s.find("]=[");
  if (close == std::string::npos || s.back() != ']') throw IoError("unrecognised line: " + line);
  CoefficientTable t;
  try {
    t.n = std::stoi(s.substr(2, close - 2));
    std::stringstream body(s.substr(close + 3, s.size() - close - 4));
    std::string item;
    while (std::getline(body, item, ',')) t.half.emplace_back(item);
  } catch (const std::exception&) {
    throw IoError("bad number in line: " + line);
  }
  t.delta = static_cast<int>(t.half.size()) - 1;
  return t;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << contents;
  if (!out.flush()) throw IoError("write failed for " + path.string());
}

/// Half tables keyed by n from either format (JSON if it starts with '{').
inline std::map<int, CoefficientTable> load_tables(const std::filesystem::path& path) {
  const std::string contents = read_file(path);
  std::map<int, CoefficientTable> out;
  const auto first = contents.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && contents[first] == '{') {
    json j;
    try {
      j = json::parse(contents);
    } catch (const json::exception& ex) {
      throw IoError(path.string() + ": " + ex.what());
    }
    if (!j.contains("entries")) throw IoError(path.string() + ": no entries");
    for (const auto& e : j["entries"]) {
      auto entry = entry_from_json(e);
      out[entry.table.n] = std::move(entry.table);
    }
  } else {
    std::istringstream lines(contents);
    std::string line;
    while (std::getline(lines, line)) {
      if (auto t = parse_text_line(line)) out[t->n] = std::move(*t);
    }
  }
  return out;
}

/// Per-n result cache keyed by (n, tool version).
class ResultCache {
public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// Cache rooted at $POINCARE_CACHE_DIR, if set and nonempty.
  static std::optional<ResultCache> from_environment() {
    const char* dir = std::getenv("POINCARE_CACHE_DIR");
    if (!dir || !*dir) return std::nullopt;
    return ResultCache(dir);
  }

  [[nodiscard]] std::filesystem::path path_for(int n) const {
    return dir_ / ("A" + std::to_string(n) + ".v" + tool_version + ".json");
  }

  [[nodiscard]] std::optional<TableEntry> load(int n) const {
    const auto path = path_for(n);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return std::nullopt;
    try {
      auto j = json::parse(read_file(path));
      auto e = entry_from_json(j);
      e.wall_seconds = j.value("wall_seconds", 0.0);
      if (e.table.n != n) return std::nullopt;
      return e;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  void store(const TableEntry& e) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw IoError("cannot create cache directory " + dir_.string() + ": " + ec.message());
    auto j = entry_to_json(e);
    j["wall_seconds"] = e.wall_seconds;
    write_file(path_for(e.table.n), j.dump(2) + "\n");
  }

private:
  std::filesystem::path dir_;
};

}  // namespace poincare::cli
