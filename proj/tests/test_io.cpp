#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "henon/io.hpp"

using namespace henon;

TEST_CASE("csv rows end with LF and quote special cells") {
  CsvWriter w({"a", "b"});
  w.cell(1).cell("x,y").end_row();
  w.cell(0.5).cell("say \"hi\"").end_row();
  CHECK(w.str() == "a,b\n1,\"x,y\"\n0.5,\"say \"\"hi\"\"\"\n");
  CHECK(w.str().find('\r') == std::string::npos);
}

TEST_CASE("number formatting round-trips") {
  for (double v : {0.1, -1.1512925464970227, 1e-300, 123456789.0}) CHECK(std::stod(fmt(v)) == v);
  CHECK(fmt(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("pgm is P5 with big-endian 16-bit samples") {
  const std::string b = pgm_bytes(2, 1, {0x0102, 0xFFFE});
  CHECK(b == std::string("P5\n2 1\n65535\n\x01\x02\xFF\xFE", 17));
  CHECK_THROWS_AS(pgm_bytes(2, 2, {1}), LabError);
}

TEST_CASE("atomic write leaves only the target") {
  const auto dir = std::filesystem::temp_directory_path() / "henonlab_io_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  write_atomic(dir / "out.txt", "first");
  write_atomic(dir / "out.txt", "second");
  std::ifstream f(dir / "out.txt");
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == "second");
  CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator()) == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("sha256 known answers") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("config errors carry the JSON pointer") {
  const json bad_delta = json::parse(R"({"kind": "finite", "maps": [{"alpha": 0, "delta": 0, "poly": [1, 0, 0]}]})");
  try {
    parse_distribution(bad_delta, "");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.pointer() == "/maps/0/delta");
  }
  const json bad_weight = json::parse(
      R"({"kind": "finite", "maps": [{"alpha": 0, "delta": 1, "poly": [1, 0, 0]},
                                     {"alpha": 0, "delta": 1, "poly": [1, 0, 1]}], "weights": [1.5, -0.5]})");
  CHECK_THROWS_AS(parse_distribution(bad_weight, ""), ConfigError);
  try {
    parse_map(json::parse(R"({"alpha": 0, "delta": 1, "poly": [1, 0]})"), "/base");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.pointer() == "/base/poly");
  }
  CHECK_THROWS_AS(parse_distribution(json::parse(R"({"kind": "gaussian"})"), ""), ConfigError);
}

TEST_CASE("config reader records resolved values") {
  const json src = json::parse(R"({"n": 5, "sub": {"x": 1.5}})");
  json resolved = json::object();
  const ConfigReader r(src, resolved);
  CHECK(r.integer("n", 1) == 5);
  CHECK(r.integer("m", 7) == 7);
  CHECK(r.child("sub").number("x") == 1.5);
  CHECK(resolved["n"] == 5);
  CHECK(resolved["m"] == 7);
  CHECK(resolved["sub"]["x"] == 1.5);
  try {
    r.child("sub").number("y");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.pointer() == "/sub/y");
  }
  CHECK_THROWS_AS(r.text("n", ""), ConfigError);
}

TEST_CASE("complex values and points") {
  CHECK(parse_complex(json(2.0), "") == Complex(2.0));
  CHECK(parse_complex(json::array({1.0, -2.0}), "") == Complex(1.0, -2.0));
  CHECK_THROWS_AS(parse_complex(json("x"), "/p"), ConfigError);
  const C2Point z = parse_point(json::parse("[[1, 2], 3]"), "");
  CHECK(z.x == Complex(1.0, 2.0));
  CHECK(z.y == Complex(3.0));
}
