#include "henon/io.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <charconv>
#include <cmath>
#include <fstream>

namespace henon {

ConfigReader::ConfigReader(const json& src, json& resolved, std::string pointer)
    : src_(src), dst_(resolved), ptr_(std::move(pointer)) {
  if (!src_.is_object()) throw ConfigError(ptr_.empty() ? "/" : ptr_, "expected an object");
  if (!dst_.is_object()) dst_ = json::object();
}

bool ConfigReader::has(const std::string& key) const { return src_.contains(key); }

const json& ConfigReader::raw(const std::string& key) const {
  if (!src_.contains(key)) throw ConfigError(at(key), "missing required field");
  dst_[key] = src_.at(key);
  return src_.at(key);
}

json ConfigReader::value(const std::string& key, const json& fallback) const {
  const json v = src_.contains(key) ? src_.at(key) : fallback;
  dst_[key] = v;
  return v;
}

double ConfigReader::number(const std::string& key) const {
  const json& v = raw(key);
  if (!v.is_number()) throw ConfigError(at(key), "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError(at(key), "expected a finite number");
  return d;
}

double ConfigReader::number(const std::string& key, double fallback) const {
  if (!has(key)) {
    dst_[key] = fallback;
    return fallback;
  }
  return number(key);
}

long ConfigReader::integer(const std::string& key, long fallback) const {
  if (!has(key)) {
    dst_[key] = fallback;
    return fallback;
  }
  const json& v = raw(key);
  if (!v.is_number_integer()) throw ConfigError(at(key), "expected an integer");
  return v.get<long>();
}

std::uint64_t ConfigReader::u64(const std::string& key, std::uint64_t fallback) const {
  if (!has(key)) {
    dst_[key] = fallback;
    return fallback;
  }
  const json& v = raw(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ConfigError(at(key), "expected an unsigned integer");
  }
  return v.get<std::uint64_t>();
}

bool ConfigReader::flag(const std::string& key, bool fallback) const {
  if (!has(key)) {
    dst_[key] = fallback;
    return fallback;
  }
  const json& v = raw(key);
  if (!v.is_boolean()) throw ConfigError(at(key), "expected true or false");
  return v.get<bool>();
}

std::string ConfigReader::text(const std::string& key, const std::string& fallback) const {
  if (!has(key)) {
    dst_[key] = fallback;
    return fallback;
  }
  const json& v = raw(key);
  if (!v.is_string()) throw ConfigError(at(key), "expected a string");
  return v.get<std::string>();
}

ConfigReader ConfigReader::child(const std::string& key) const {
  static const json kEmpty = json::object();
  if (!dst_.contains(key) || !dst_[key].is_object()) dst_[key] = json::object();
  return ConfigReader(has(key) ? src_.at(key) : kEmpty, dst_[key], at(key));
}

Complex parse_complex(const json& j, const std::string& ptr) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ConfigError(ptr, "expected [re, im]");
  }
  const Complex c(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw ConfigError(ptr, "expected finite numbers");
  return c;
}

C2Point parse_point(const json& j, const std::string& ptr) {
  if (!j.is_array() || j.size() != 2) throw ConfigError(ptr, "expected a point [x, y]");
  return {parse_complex(j[0], ptr + "/0"), parse_complex(j[1], ptr + "/1")};
}

std::vector<C2Point> parse_points(const json& j, const std::string& ptr) {
  if (!j.is_array()) throw ConfigError(ptr, "expected a list of points");
  std::vector<C2Point> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(parse_point(j[k], ptr + "/" + std::to_string(k)));
  return out;
}

HenonMap parse_map(const json& j, const std::string& ptr) {
  if (!j.is_object()) throw ConfigError(ptr, "expected a map object");
  for (const char* key : {"alpha", "delta", "poly"}) {
    if (!j.contains(key)) throw ConfigError(ptr + "/" + key, "missing required field");
  }
  const Complex alpha = parse_complex(j["alpha"], ptr + "/alpha");
  const Complex delta = parse_complex(j["delta"], ptr + "/delta");
  if (std::abs(delta) == 0.0) throw ConfigError(ptr + "/delta", "delta must be nonzero");
  const json& pj = j["poly"];
  if (!pj.is_array()) throw ConfigError(ptr + "/poly", "expected a coefficient list");
  if (pj.size() < 3) throw ConfigError(ptr + "/poly", "polynomial degree must be >= 2");
  if (pj.size() > Polynomial::kMaxDegree + 1) throw ConfigError(ptr + "/poly", "polynomial degree must be <= 16");
  std::vector<Complex> c;
  for (std::size_t k = 0; k < pj.size(); ++k) c.push_back(parse_complex(pj[k], ptr + "/poly/" + std::to_string(k)));
  if (std::abs(c[0]) == 0.0) throw ConfigError(ptr + "/poly/0", "leading coefficient must be nonzero");
  return HenonMap(alpha, delta, Polynomial(c));
}

MapDistribution parse_distribution(const json& j, const std::string& ptr) {
  if (!j.is_object()) throw ConfigError(ptr.empty() ? "/" : ptr, "expected an object");
  const std::string kind = j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "finite";
  if (kind == "finite") {
    if (!j.contains("maps")) throw ConfigError(ptr + "/maps", "missing required field");
    const json& mj = j["maps"];
    if (!mj.is_array() || mj.empty()) throw ConfigError(ptr + "/maps", "expected a nonempty list of maps");
    std::vector<HenonMap> maps;
    for (std::size_t k = 0; k < mj.size(); ++k) maps.push_back(parse_map(mj[k], ptr + "/maps/" + std::to_string(k)));
    std::vector<double> weights(maps.size(), 1.0 / maps.size());
    if (j.contains("weights")) {
      const json& wj = j["weights"];
      if (!wj.is_array() || wj.size() != maps.size()) throw ConfigError(ptr + "/weights", "expected one weight per map");
      double total = 0.0;
      for (std::size_t k = 0; k < wj.size(); ++k) {
        if (!wj[k].is_number() || !(wj[k].get<double>() > 0.0)) {
          throw ConfigError(ptr + "/weights/" + std::to_string(k), "weight must be a positive number");
        }
        weights[k] = wj[k].get<double>();
        total += weights[k];
      }
      if (std::abs(total - 1.0) > 1e-12) throw ConfigError(ptr + "/weights", "weights must sum to 1");
    }
    return MapDistribution::finite(std::move(maps), std::move(weights));
  }
  if (kind == "ball") {
    if (!j.contains("base")) throw ConfigError(ptr + "/base", "missing required field");
    const HenonMap base = parse_map(j["base"], ptr + "/base");
    if (!j.contains("radius")) throw ConfigError(ptr + "/radius", "missing required field");
    if (!j["radius"].is_number() || !(j["radius"].get<double>() > 0.0)) {
      throw ConfigError(ptr + "/radius", "radius must be a positive number");
    }
    return MapDistribution::ball(base, j["radius"].get<double>());
  }
  throw ConfigError(ptr + "/kind", "kind must be \"finite\" or \"ball\"");
}

NoiseFamily parse_family(const json& j, const std::string& ptr) {
  if (!j.is_object()) throw ConfigError(ptr, "expected a family object");
  if (!j.contains("base")) throw ConfigError(ptr + "/base", "missing required field");
  const HenonMap base = parse_map(j["base"], ptr + "/base");
  for (const char* key : {"v", "u"}) {
    if (!j.contains(key) || !j[key].is_number()) throw ConfigError(ptr + "/" + key, "expected a number");
  }
  const double v = j["v"].get<double>(), u = j["u"].get<double>();
  if (!(v > 0.0)) throw ConfigError(ptr + "/v", "v must be positive");
  if (!(u >= v)) throw ConfigError(ptr + "/u", "u must be >= v");
  return NoiseFamily(base, v, u);
}

SliceSpec parse_slice(const ConfigReader& r) {
  SliceSpec s;
  s.anchor = parse_point(r.value("anchor", point_json(s.anchor)), r.at("anchor"));
  s.dir1 = parse_point(r.value("dir1", point_json(s.dir1)), r.at("dir1"));
  s.dir2 = parse_point(r.value("dir2", point_json(s.dir2)), r.at("dir2"));
  s.extent = r.number("extent", 2.0);
  s.resolution = static_cast<int>(r.integer("resolution", 256));
  try {
    s.validate();
  } catch (const LabError& e) {
    throw ConfigError(r.pointer(), e.what());
  }
  return s;
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

json point_json(const C2Point& z) { return json::array({complex_json(z.x), complex_json(z.y)}); }

json map_json(const HenonMap& f) {
  json poly = json::array();
  for (const auto& c : f.poly().coeffs()) poly.push_back(complex_json(c));
  return {{"alpha", complex_json(f.alpha())}, {"delta", complex_json(f.delta())}, {"poly", poly}};
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::vector<std::string> header) {
  for (const auto& h : header) cell(h);
  end_row();
}

CsvWriter& CsvWriter::cell(const std::string& s) {
  if (row_open_) out_ += ',';
  row_open_ = true;
  if (s.find_first_of(",\"\n\r") == std::string::npos) {
    out_ += s;
  } else {
    out_ += '"';
    for (char c : s) {
      if (c == '"') out_ += '"';
      out_ += c;
    }
    out_ += '"';
  }
  return *this;
}

void CsvWriter::end_row() {
  out_ += '\n';
  row_open_ = false;
}

std::string pgm_bytes(int width, int height, const std::vector<std::uint16_t>& pixels) {
  if (pixels.size() != static_cast<size_t>(width) * height) {
    throw LabError(ErrorCode::invalid_argument, "pixel count does not match the image size");
  }
  std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n65535\n";
  out.reserve(out.size() + 2 * pixels.size());
  for (std::uint16_t v : pixels) {
    out += static_cast<char>(v >> 8);
    out += static_cast<char>(v & 0xFF);
  }
  return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& bytes) {
  const auto tmp = path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    f.flush();
    if (!f) throw std::runtime_error("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[md[k] >> 4];
    out += hex[md[k] & 15];
  }
  return out;
}

}  // namespace henon
