#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "golden.hpp"
#include "gfderiv/report.hpp"
#include "gfderiv/spec_parse.hpp"
#include "oracle.hpp"

using namespace gfderiv;

namespace {

std::vector<Deformation> gf16_deformations(const FieldCtx& f) {
  return {parse_deformation("q=x", f), parse_deformation("q=x^3", f), parse_deformation("q=x^7", f)};
}

/// (n, element, D_x, D_x^3, D_x^7) rows in element order, from schoolbook arithmetic.
std::vector<std::vector<std::string>> oracle_gf16_rows() {
  const oracle::PolyField ref(2, {1, 0, 0, 1, 1});
  auto digits = [](std::uint32_t v) {
    std::string out;
    for (int b = 3; b >= 0; --b) out += ((v >> b) & 1) ? '1' : '0';
    return out;
  };
  std::vector<std::vector<std::string>> rows;
  for (std::uint32_t v = 0; v < 16; ++v) {
    std::string n = "-inf";
    for (std::uint32_t e = 0; v != 0 && e < 15; ++e) {
      if (ref.pow(ref.theta(), e) == v) n = std::to_string(e);
    }
    rows.push_back({n, digits(v), digits(ref.derivative(v, 2)), digits(ref.derivative(v, 4)), digits(ref.derivative(v, 8))});
  }
  return rows;
}

}  // namespace

TEST_CASE("GF(16) table agrees with polynomial arithmetic") {
  const auto f = parse_field("p=2,k=4,poly=x^4+x+1");
  const auto rows = derivative_table(f, gf16_deformations(f));
  REQUIRE(rows.size() == 16);
  CHECK(golden::gf16_rows(rows) == oracle_gf16_rows());

  const auto& row5 = rows[6];
  CHECK(row5.n == DiscreteLog(5));
  CHECK(row5.element == "0110");
  CHECK(row5.derivs == std::vector<std::pair<std::string, std::string>>{{"D_x", "0111"}, {"D_x^3", "0000"}, {"D_x^7", "0110"}});

  const auto text = render_table(rows);
  CHECK(text.find("n    | theta^n | D_x  | D_x^3 | D_x^7\n") == 0);
  CHECK(text.find("5    | 0110    | 0111 | 0000  | 0110\n") != std::string::npos);
  CHECK(text.find("-inf | 0000    | 0000 | 0000  | 0000\n") != std::string::npos);
  CHECK(text.find("3    | 1000    | 1111 | 0111  | 1100\n") != std::string::npos);
}

TEST_CASE("GF(16) table: cells that differ from the hand transcription") {
  // The transcription swaps the exponents of 1101 and 1111, and its D_x^7
  // column uses 0101 for D(1000) instead of 1100, which shifts every row
  // with the top bit set. All other cells agree.
  const auto f = parse_field("p=2,k=4,poly=x^4+x+1");
  const auto got = golden::gf16_rows(derivative_table(f, gf16_deformations(f)));
  const auto transcribed = golden::normalize(golden::read_file(GOLDEN_DIR "/gf16_table.txt"));
  REQUIRE(transcribed.size() == 16);
  std::vector<std::pair<std::string, std::size_t>> differing;
  for (std::size_t r = 0; r < 16; ++r) {
    REQUIRE(transcribed[r].size() == 5);
    CHECK(transcribed[r][1] == got[r][1]);
    for (std::size_t c = 0; c < 5; ++c) {
      if (transcribed[r][c] != got[r][c]) differing.emplace_back(got[r][1], c);
    }
  }
  const std::vector<std::pair<std::string, std::size_t>> expected = {
      {"1000", 4}, {"1001", 4}, {"1010", 4}, {"1011", 4}, {"1100", 4}, {"1101", 0}, {"1101", 4}, {"1110", 4}, {"1111", 0}, {"1111", 4}};
  CHECK(differing == expected);

  // Adding 1000 to the transcribed D(1000) explains the whole top half.
  const oracle::PolyField ref(2, {1, 0, 0, 1, 1});
  for (std::uint32_t v = 8; v < 16; ++v) {
    const auto low = ref.derivative(v - 8, 8);
    CHECK(std::stoul(transcribed[v][4], nullptr, 2) == (low ^ 0b0101u));
  }
}

TEST_CASE("table JSON rows") {
  const auto f = fixtures::gf16();
  const auto j = to_json(derivative_table(f, gf16_deformations(f)));
  REQUIRE(j.size() == 16);
  CHECK(j[0]["n"] == "-inf");
  CHECK(j[6].dump() == R"({"n":5,"element":"0110","derivs":{"D_x":"0111","D_x^3":"0000","D_x^7":"0110"}})");
}

TEST_CASE("GF(8), s = 2 table matches the brute-force oracle") {
  const auto f = parse_field("p=2,k=3");
  const auto rows = derivative_table(f, {parse_deformation("s=2", f)});
  // (n, element, derivative) from (theta^{2n} - theta^n) / (theta^2 - theta) by polynomial arithmetic
  const std::vector<std::vector<std::string>> expected = {
      {"-inf", "000", "000"}, {"0", "001", "000"}, {"1", "010", "001"}, {"3", "011", "001"},
      {"2", "100", "110"},    {"6", "101", "110"}, {"4", "110", "111"}, {"5", "111", "111"}};
  auto got = golden::normalize(render_table(rows));
  got.erase(got.begin());
  CHECK(got == expected);
}

TEST_CASE("GF(2) admits no deformation") {
  const auto f = parse_field("p=2,k=1");
  CHECK_THROWS_WITH_AS(parse_deformation("s=2", f), doctest::Contains("DegenerateDeformation"), Error);
}

TEST_CASE("classification reports") {
  const auto f = fixtures::gf16();
  const auto e7 = classify(parse_deformation("q=x^7", f));
  CHECK(e7.field == "p=2,k=4,poly=x^4+x+1");
  CHECK(e7.deformation == "q=x^7");
  CHECK(e7.constants == std::vector<DiscreteLog>{DiscreteLog::neg_infinity(), DiscreteLog(0)});
  CHECK(e7.exp_solutions == std::vector<std::uint32_t>{5});
  CHECK(e7.nilpotent_basis == std::vector<std::uint32_t>{0, 1});
  CHECK(e7.kernel_dim == 1);
  CHECK(e7.image_size == 8);
  CHECK(e7.trig_periods == std::vector<TrigPeriod>{{5, 1}, {7, 2}, {13, 2}});

  const auto e3 = classify(parse_deformation("q=x^3", f));
  CHECK(e3.exp_solutions.empty());
  CHECK(e3.constants == std::vector<DiscreteLog>{DiscreteLog::neg_infinity(), DiscreteLog(0), DiscreteLog(5), DiscreteLog(10)});
  CHECK(e3.generalized_kernel_dim == 4);

  const auto e1 = classify(parse_deformation("q=x", f));
  CHECK(e1.trig_periods == std::vector<TrigPeriod>{{3, 2}, {10, 1}, {12, 2}});

  const auto text = render_report(e7);
  CHECK(text.find("constants: {0, theta^0}") != std::string::npos);
  CHECK(text.find("exp solutions: {theta^5}") != std::string::npos);
  CHECK(text.find("nilpotent basis: {theta^0, theta^1}") != std::string::npos);

  const auto g9 = parse_field("p=3,k=2");
  const auto e9 = classify(parse_deformation("s=3", g9));
  CHECK(e9.constants == std::vector<DiscreteLog>{DiscreteLog::neg_infinity(), DiscreteLog(0), DiscreteLog(4)});
  CHECK(e9.exp_solutions.empty());
  CHECK(e9.nilpotent_basis == std::vector<std::uint32_t>{0, 1});
  CHECK(e9.image_size == 3);

  CHECK_THROWS_WITH_AS(classify(parse_deformation("s=3", f)), doctest::Contains("NotFrobenius"), Error);
}

TEST_CASE("atlas enumeration") {
  const auto a16 = build_atlas(16);
  std::vector<std::string> fields;
  for (const auto& e : a16) {
    if (fields.empty() || fields.back() != e.field) fields.push_back(e.field);
  }
  CHECK(fields == std::vector<std::string>{"p=2,k=2,poly=x^2+x+1", "p=2,k=3,poly=x^3+x+1", "p=2,k=4,poly=x^4+x+1", "p=3,k=2,poly=x^2+x+2"});
  CHECK(a16.size() == 1 + 2 + 3 + 1);
  CHECK(a16[3].deformation == "q=x");
  CHECK(a16[4].deformation == "q=x^3");
  CHECK(a16[5].deformation == "q=x^7");
  CHECK(build_atlas(3).empty());
}

TEST_CASE("atlas JSON round trip") {
  for (const auto& entry : build_atlas(128)) {
    const auto text = to_json(entry).dump();
    REQUIRE(atlas_entry_from_json(nlohmann::ordered_json::parse(text)) == entry);
  }
  CHECK_THROWS_WITH_AS(atlas_entry_from_json(nlohmann::ordered_json::parse(R"({"schema":2})")), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(atlas_entry_from_json(nlohmann::ordered_json::parse(R"({"schema":1})")), doctest::Contains("ParseError"), Error);
}

TEST_CASE("write_atlas output and failure cleanup") {
  const auto dir = std::filesystem::temp_directory_path() / "gfderiv_atlas_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "atlas.ndjson";
  const auto entries = write_atlas(16, path);
  std::ifstream in(path);
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    REQUIRE(atlas_entry_from_json(nlohmann::ordered_json::parse(line)) == entries[count]);
    ++count;
  }
  CHECK(count == 7);
  std::filesystem::remove_all(dir);

  CHECK_THROWS_WITH_AS(write_atlas(16, dir / "missing" / "atlas.ndjson"), doctest::Contains("IoError"), Error);
  CHECK_FALSE(std::filesystem::exists(dir / "missing" / "atlas.ndjson"));
}

TEST_CASE("integer derivative table") {
  const auto rows = golden::normalize(render_intderiv_table(2, 10));
  REQUIRE(rows.size() == 10);
  CHECK(rows[0] == std::vector<std::string>{"n", "D(n)"});
  CHECK(rows[5] == std::vector<std::string>{"6", "5"});
  CHECK(rows[7] == std::vector<std::string>{"8", "12"});
  CHECK(rows[8] == std::vector<std::string>{"9", "6"});
  CHECK_THROWS_AS(render_intderiv_table(5, 4), Error);
}
