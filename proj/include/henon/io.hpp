#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "henon/dist.hpp"
#include "henon/escape.hpp"

namespace henon {

using json = nlohmann::json;

/// Schema violation; `pointer` is the JSON pointer of the offending field.
class ConfigError : public LabError {
 public:
  ConfigError(const std::string& pointer, const std::string& what)
      : LabError(ErrorCode::config_error, pointer + ": " + what), pointer_(pointer) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

/// Reads one config object and mirrors every value it hands out (defaults
/// included) into a resolved copy, so outputs can embed what actually ran.
class ConfigReader {
 public:
  ConfigReader(const json& src, json& resolved, std::string pointer = "");

  const std::string& pointer() const { return ptr_; }
  bool has(const std::string& key) const;
  std::string at(const std::string& key) const { return ptr_ + "/" + key; }
  const json& raw(const std::string& key) const;
  /// Raw value with a fallback; the returned value is recorded as resolved.
  json value(const std::string& key, const json& fallback) const;

  double number(const std::string& key) const;
  double number(const std::string& key, double fallback) const;
  long integer(const std::string& key, long fallback) const;
  std::uint64_t u64(const std::string& key, std::uint64_t fallback) const;
  bool flag(const std::string& key, bool fallback) const;
  std::string text(const std::string& key, const std::string& fallback) const;
  /// Nested object; an absent key reads as an empty object.
  ConfigReader child(const std::string& key) const;

 private:
  const json& src_;
  json& dst_;
  std::string ptr_;
};

Complex parse_complex(const json& j, const std::string& ptr);
C2Point parse_point(const json& j, const std::string& ptr);
std::vector<C2Point> parse_points(const json& j, const std::string& ptr);
HenonMap parse_map(const json& j, const std::string& ptr);
/// Reads the distribution fields ("kind", "maps"/"weights" or "base"/"radius")
/// of the object at `ptr`.
MapDistribution parse_distribution(const json& j, const std::string& ptr);
NoiseFamily parse_family(const json& j, const std::string& ptr);
SliceSpec parse_slice(const ConfigReader& r);

json complex_json(Complex c);
json point_json(const C2Point& z);
json map_json(const HenonMap& f);

/// Decimal with enough digits to round-trip.
std::string fmt(double v);

/// RFC-4180 table with LF line ends.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  CsvWriter& cell(const std::string& s);
  CsvWriter& cell(double v) { return cell(fmt(v)); }
  CsvWriter& cell(long v) { return cell(std::to_string(v)); }
  CsvWriter& cell(int v) { return cell(std::to_string(v)); }
  void end_row();
  const std::string& str() const { return out_; }

 private:
  std::string out_;
  bool row_open_ = false;
};

/// Binary PGM (P5) with 16-bit big-endian samples.
std::string pgm_bytes(int width, int height, const std::vector<std::uint16_t>& pixels);

/// Writes to a sibling temp file then renames over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& bytes);

std::string sha256_hex(const std::string& bytes);

}  // namespace henon
