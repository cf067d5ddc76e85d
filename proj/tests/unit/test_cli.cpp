#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "orthogrid/cli/cli.hpp"

using namespace orthogrid;
using namespace orthogrid::cli;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "orthogrid");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

std::size_t data_rows(const std::string& csv) {
  std::size_t n = 0;
  bool header = false;
  for (const auto& l : lines(csv)) {
    if (l.empty() || l[0] == '#') continue;
    if (!header) {
      header = true;
      continue;
    }
    ++n;
  }
  return n;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "orthogrid_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void verify_csv_seal(const std::string& csv) {
  const auto pos = csv.rfind("# sha256: ");
  REQUIRE(pos != std::string::npos);
  CHECK(csv.substr(pos + 10, 64) == sha256_hex(csv.substr(0, pos)));
}

void verify_json_seal(const std::string& text) {
  json j = json::parse(text);
  const std::string hash = j.at("sha256");
  j.erase("sha256");
  CHECK(hash == sha256_hex(j.dump()));
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("sha256 known answers") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  }

  TEST_CASE("D lists") {
    CHECK(parse_d_list("3,5,7").size() == 3);
    CHECK(parse_d_list("10:14").size() == 5);
    CHECK_THROWS_AS(parse_d_list("5:1"), DomainError);
    CHECK_THROWS_AS(parse_d_list("a,b"), DomainError);
    CHECK(parse_prime_list("3,5") == std::vector<std::int64_t>{3, 5});
    CHECK_THROWS_AS(parse_prime_list("2"), DomainError);
    CHECK_THROWS_AS(parse_prime_list("9"), DomainError);
  }

  TEST_CASE("enumerate examples") {
    const Result a = run_cli({"enumerate", "--d", "3", "--D", "2"});
    CHECK(a.code == kOk);
    CHECK(data_rows(a.out) == 12);
    verify_csv_seal(a.out);
    CHECK(lines(a.out)[0] == "# orthogrid enumerate");
    CHECK(lines(a.out)[2] == "d,D,x1,x2,x3,orbit_id,stab_size");

    const Result b = run_cli({"enumerate", "--d", "3", "--D", "7"});
    CHECK(b.code == kOk);
    CHECK(data_rows(b.out) == 0);
    CHECK(b.out.find("# warning: D=7 inadmissible") != std::string::npos);
    CHECK(b.err.find("inadmissible") != std::string::npos);

    const Result c = run_cli({"enumerate", "--d", "4", "--D", "8"});
    CHECK(c.code == kOk);
    CHECK(c.out.find("# admissible: false (D=8)") != std::string::npos);
    // Four odd squares sum to 4 mod 8, so D = 24 has no primitive points.
    const Result e = run_cli({"enumerate", "--d", "4", "--D", "24"});
    CHECK(data_rows(e.out) == 0);
    CHECK(e.out.find("# admissible: false (D=24)") != std::string::npos);
  }

  TEST_CASE("exit codes") {
    CHECK(run_cli({"enumerate", "--d", "2", "--D", "5"}).code == kConfigError);
    CHECK(run_cli({"enumerate", "--d", "9", "--D", "5"}).code == kConfigError);
    CHECK(run_cli({"enumerate", "--d", "3"}).code == kConfigError);
    CHECK(run_cli({"enumerate", "--d", "3", "--D", "2", "--D-seq", "3,4"}).code == kConfigError);
    CHECK(run_cli({"enumerate", "--d", "3", "--D", "x"}).code == kConfigError);
    CHECK(run_cli({"enumerate", "--d", "3", "--D", "0"}).code == kConfigError);
    CHECK(run_cli({"stats", "--d", "3", "--D", "101", "--format", "csv"}).code == kConfigError);
    CHECK(run_cli({"genus-check", "--d", "4", "--D", "5"}).code == kConfigError);
    CHECK(run_cli({"stats", "--d", "3", "--D", "101", "--mode", "both"}).code == kConfigError);
    CHECK(run_cli({"frobnicate"}).code == kConfigError);
    CHECK(run_cli({"enumerate", "--d", "3", "--D", "1000000000000", "--budget", "10"}).code == kBudgetExceeded);
    CHECK(run_cli({"enumerate", "--d", "7", "--D", "100000"}).code == kBudgetExceeded);
    // Fewer than the minimum number of points for the torus statistics.
    CHECK(run_cli({"stats", "--d", "3", "--D", "3"}).code == kConfigError);
    CHECK(run_cli({"shapes", "--d", "3", "--in", scratch("missing.csv").string()}).code == kConfigError);
  }

  TEST_CASE("shapes and grids") {
    const Result s = run_cli({"shapes", "--d", "3", "--D", "3"});
    REQUIRE(s.code == kOk);
    verify_csv_seal(s.out);
    const auto ls = lines(s.out);
    CHECK(ls[2] == "d,D,x1,x2,x3,weight,canonical,g11,g12,g22,modular_x,modular_y2");
    CHECK(data_rows(s.out) == 1);
    CHECK(ls[3] == "3,3,1,1,1,8,1,2,1,2,1/2,3/4");

    const Result g = run_cli({"grids", "--d", "4", "--D", "6", "--mode", "raw"});
    REQUIRE(g.code == kOk);
    CHECK(lines(g.out)[2] == "d,D,x1,x2,x3,x4,weight,canonical,g11,g12,g13,g22,g23,g33,t1,t2,t3");
    CHECK(data_rows(g.out) == enumerate_sphere(4, Integer(6)).size());
  }

  TEST_CASE("empty input gives a header-only artifact") {
    const Result e = run_cli({"enumerate", "--d", "3", "--D", "7"});
    const auto path = scratch("empty.csv");
    std::ofstream(path, std::ios::binary) << e.out;
    const Result s = run_cli({"shapes", "--d", "3", "--in", path.string()});
    CHECK(s.code == kOk);
    CHECK(data_rows(s.out) == 0);
    CHECK(s.out.find("d,D,x1,x2,x3,weight") != std::string::npos);
  }

  TEST_CASE("determinism: reruns are byte-identical") {
    const std::vector<std::vector<std::string>> cmds = {
        {"enumerate", "--d", "4", "--D-seq", "30:40"},
        {"shapes", "--d", "3", "--D", "1009"},
        {"grids", "--d", "5", "--D", "77"},
        {"genus-check", "--d", "4", "--D-seq", "1:60", "--p", "3,5"},
        {"stats", "--d", "3", "--D", "1009", "--caps", "512"},
        {"report", "--d", "3", "--D-seq", "101,1009", "--caps", "512"},
    };
    for (const auto& c : cmds) {
      const Result a = run_cli(c);
      const Result b = run_cli(c);
      CHECK(a.code == kOk);
      CHECK(a.out == b.out);
    }
  }

  TEST_CASE("--out writes the same artifact") {
    const auto path = scratch("grids.csv");
    const Result a = run_cli({"grids", "--d", "3", "--D", "101", "--out", path.string()});
    CHECK(a.code == kOk);
    CHECK(a.out.empty());
    CHECK(slurp(path) == run_cli({"grids", "--d", "3", "--D", "101"}).out);
  }

  TEST_CASE("stages compose") {
    for (const char* mode : {"orbit", "raw"}) {
      const auto grids = scratch(std::string("grids_") + mode + ".csv");
      const auto enumd = scratch(std::string("enum_") + mode + ".csv");
      REQUIRE(run_cli({"grids", "--d", "3", "--D-seq", "1009,10009", "--mode", mode, "--out", grids.string()}).code == kOk);
      REQUIRE(run_cli({"enumerate", "--d", "3", "--D-seq", "1009,10009", "--out", enumd.string()}).code == kOk);
      const Result fused = run_cli({"stats", "--d", "3", "--D-seq", "1009,10009", "--mode", mode, "--caps", "512"});
      const Result from_grids = run_cli({"stats", "--d", "3", "--in", grids.string(), "--mode", mode, "--caps", "512"});
      const Result from_enum = run_cli({"stats", "--d", "3", "--in", enumd.string(), "--mode", mode, "--caps", "512"});
      REQUIRE(fused.code == kOk);
      REQUIRE(from_grids.code == kOk);
      REQUIRE(from_enum.code == kOk);
      const json f = json::parse(fused.out);
      CHECK(json::parse(from_grids.out).at("reports") == f.at("reports"));
      CHECK(json::parse(from_enum.out).at("reports") == f.at("reports"));
    }
    // A grids artifact in one mode cannot be read in the other.
    const auto grids = scratch("grids_orbit.csv");
    CHECK(run_cli({"stats", "--d", "3", "--in", grids.string(), "--mode", "raw"}).code == kConfigError);
    CHECK(run_cli({"stats", "--d", "4", "--in", grids.string()}).code == kConfigError);
  }

  TEST_CASE("tampered marked points are caught") {
    const Result g = run_cli({"grids", "--d", "3", "--D", "1009"});
    std::string text = g.out;
    // Replace the t1 value of the first data row.
    auto ls = lines(text);
    auto cells = ls[3];
    const auto comma = [&](std::size_t k) {
      std::size_t pos = 0;
      for (std::size_t i = 0; i < k; ++i) pos = cells.find(',', pos) + 1;
      return pos;
    };
    // d,D,x1,x2,x3,weight,canonical,g11,g12,g22,t1 -> t1 is column 10.
    const std::size_t start = comma(10), end = cells.find(',', start);
    cells.replace(start, end - start, "1/7");
    ls[3] = cells;
    std::string tampered;
    for (const auto& l : ls) tampered += l + "\n";
    const auto path = scratch("tampered.csv");
    std::ofstream(path, std::ios::binary) << tampered;
    CHECK(run_cli({"stats", "--d", "3", "--in", path.string()}).code == kInvariantViolation);
  }

  TEST_CASE("genus-check report") {
    const Result r = run_cli({"genus-check", "--d", "4", "--D-seq", "1:200", "--p", "3"});
    REQUIRE(r.code == kOk);
    verify_json_seal(r.out);
    const json j = json::parse(r.out);
    CHECK(j.at("violations") == 0);
    CHECK(j.at("claims").at("hasse_is_one") == true);
    for (const auto& row : j.at("rows")) {
      CHECK(row.at("hasse_minus_one") == 0);
      CHECK(row.at("anisotropic") == 0);
      CHECK(row.at("violating_orbits").empty());
    }
    bool anisotropic_control = false;
    for (const auto& c : j.at("controls")) anisotropic_control |= c.at("isotropic") == false;
    CHECK(anisotropic_control);

    const Result five = run_cli({"genus-check", "--d", "5", "--D-seq", "1:30", "--p", "5"});
    REQUIRE(five.code == kOk);
    const json k = json::parse(five.out);
    CHECK(k.at("skipped").size() == 6);
    for (const auto& s : k.at("skipped")) CHECK(std::stoi(s.at("D").get<std::string>()) % 5 == 0);
  }

  TEST_CASE("report trend") {
    const Result r = run_cli({"report", "--d", "3", "--D-seq", "101,1009,10009", "--caps", "1024"});
    REQUIRE(r.code == kOk);
    verify_json_seal(r.out);
    const json j = json::parse(r.out);
    CHECK(j.at("reports").size() == 3);
    REQUIRE(j.contains("trend"));
    for (const auto& t : j.at("trend")) {
      CHECK(t.contains("first_to_last_decrease"));
      CHECK(t.contains("strictly_monotone"));
    }
  }

  TEST_CASE("orbit and raw stats agree") {
    const json a = json::parse(run_cli({"stats", "--d", "3", "--D", "1009", "--caps", "512"}).out);
    const json b = json::parse(run_cli({"stats", "--d", "3", "--D", "1009", "--caps", "512", "--mode", "raw"}).out);
    auto ra = a.at("reports")[0], rb = b.at("reports")[0];
    ra.erase("mode");
    rb.erase("mode");
    ra.erase("n_records");
    rb.erase("n_records");
    CHECK(ra == rb);
  }
}
