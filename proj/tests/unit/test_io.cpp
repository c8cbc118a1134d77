#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "monocorr/audit/bound_audit.hpp"
#include "monocorr/error.hpp"
#include "monocorr/io/json_io.hpp"
#include "monocorr/io/report_io.hpp"

using namespace monocorr;
using namespace monocorr::io;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "monocorr_test_io";
  fs::create_directories(dir);
  return dir / name;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::vector<audit::AuditReport> sample_reports() {
  const auto m = cube::generate(cube::Majority{3});
  const auto d = cube::generate(cube::Dictator{3, 0});
  return {audit::kkm_report(m, d, "maj|dict"), audit::talagrand_report(m, m, "maj|maj"),
          audit::talagrand_report(d, m, "dict|maj")};
}

}  // namespace

TEST_CASE("descriptor round trip") {
  const std::vector<cube::FamilyDescriptor> all{cube::Dictator{5, 2}, cube::Majority{7}, cube::Tribes{12, 3},
                                                cube::Ltf{{0.5, 1.25}, 0.75}, cube::Threshold{6, 2},
                                                cube::RandomMonotone{9, 123456789012345ULL}};
  for (const auto& d : all) {
    const auto back = descriptor_from_json(to_json(d));
    CHECK(cube::label(back) == cube::label(d));
  }
  CHECK(to_json(cube::Tribes{12, 3}) == json::parse(R"({"kind":"tribes","n":12,"r":3})"));
  CHECK_THROWS_AS(descriptor_from_json(json::parse(R"({"kind":"tribez","n":4})")), ParseError);
  CHECK_THROWS_AS(descriptor_from_json(json::parse(R"({"kind":"majority"})")), ParseError);
  CHECK_THROWS_AS(descriptor_from_json(json::parse(R"({"kind":"majority","n":3.5})")), ParseError);
}

TEST_CASE("catalog files") {
  const auto plain = scratch("plain.json");
  write_text(plain, R"([{"kind":"majority","n":5},{"kind":"dictator","n":5,"i":1}])");
  CHECK(load_catalog(plain).size() == 2u);
  const auto wrapped = scratch("wrapped.json");
  write_text(wrapped, R"({"families":[{"kind":"tribes","n":6,"r":2}]})");
  CHECK(load_catalog(wrapped).size() == 1u);
  const auto bad = scratch("bad.json");
  write_text(bad, R"([{"kind":"tribes","n":10,"r":3}])");
  CHECK_THROWS_WITH_AS(load_catalog(bad), doctest::Contains("tribes(10,3)"), ParseError);
  const auto broken = scratch("broken.json");
  write_text(broken, "[{");
  CHECK_THROWS_AS(load_catalog(broken), ParseError);
  CHECK_THROWS_AS(load_catalog(scratch("missing.json")), IoError);
}

TEST_CASE("step functions and instances") {
  const auto f = step_from_json(json::parse(R"({"base":0.1,"atoms":[[-1,0.3],[0.5,0.4]]})"));
  CHECK(f.atoms() == 2u);
  CHECK(f.base() == 0.1);
  CHECK(to_json(f) == json::parse(R"({"base":0.1,"atoms":[[-1.0,0.3],[0.5,0.4]]})"));
  CHECK_THROWS_AS(step_from_json(json::parse(R"({"atoms":[[1,0.7],[0,0.2]]})")), PreconditionError);
  const auto inst = step_instance_from_json(
      json::parse(R"({"label":"x","f":{"atoms":[[0,1]]},"g":{"atoms":[[1,0.5]]},"w":[1,0],"v":[0.6,0.8]})"));
  CHECK(inst.g.jumps()[0] == 0.5);
  CHECK(step_instance_from_json(to_json(inst)).v == inst.v);
}

TEST_CASE("pins round trip exactly") {
  const auto path = scratch("pins.json");
  fs::remove(path);
  CHECK(load_pins(path).empty());
  Pins pins{{"gamma_grid_min", 4.0000666696668459}, {"kkl", 0.1 + 0.2}};
  save_pins(path, pins);
  CHECK(load_pins(path) == pins);
  write_text(path, R"({"a":"text"})");
  CHECK_THROWS_AS(load_pins(path), ParseError);
}

TEST_CASE("report csv") {
  const std::string csv = reports_csv(sample_reports());
  CHECK(first_line(csv) == "label,n,inequality,cov_num,cov_den,rhs_core,ratio");
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  std::getline(lines, line);
  CHECK(line.rfind("dict|maj,3,talagrand,1,8,", 0) == 0);
  std::getline(lines, line);
  CHECK(line.rfind("maj|dict,3,kkm,", 0) == 0);
  std::getline(lines, line);
  CHECK(line.rfind("maj|maj,3,talagrand,1,4,0.58244190553339", 0) == 0);

  const Pins pins{{"talagrand", 0.5}};
  const std::string pinned = reports_csv(sample_reports(), &pins);
  CHECK(first_line(pinned) == "label,n,inequality,cov_num,cov_den,rhs_core,ratio,pass");
  CHECK(pinned.find(",fail\n") != std::string::npos);
  CHECK_FALSE(write_reports(scratch("r.csv"), sample_reports(), &pins));
  CHECK(write_reports(scratch("r.csv"), sample_reports()));
  CHECK_THROWS_AS(reports_csv({}), PreconditionError);
}

TEST_CASE("real covariances and extra columns") {
  audit::AuditReport r;
  r.label = "g";
  r.n = 2;
  r.inequality = "gauss_kkm";
  r.cov = 0.1;
  r.rhs_core = 0.3;
  r.ratio = audit::Ratio::of(0.1, 0.3);
  r.extra = {{"rho", 0.5}, {"a", 1.0}};
  const std::string csv = reports_csv({r});
  CHECK(first_line(csv) == "label,n,inequality,cov_num,cov_den,rhs_core,ratio,a,rho");
  CHECK(csv.find("\ng,2,gauss_kkm,0.10000000000000001,,0.29999999999999999,0.33333333333333337,1,0.5\n") !=
        std::string::npos);
  const auto j = reports_json({r});
  CHECK(j.at("reports").at(0).at("extra").at("rho") == 0.5);
}

TEST_CASE("grid csv and number formatting") {
  gauss::GridRow row;
  row.at = {0.0, -1.0, 0.5};
  row.gamma = 4.5;
  row.cov = 0.01;
  row.rhs_core = 0.02;
  row.ratio = audit::Ratio::of(0.01, 0.02);
  const auto csv = grid_csv({row});
  CHECK(first_line(csv) == "t,s,rho,gamma,cov,rhs_core,ratio");
  const Pins pins{{"gamma_grid_min", 5.0}};
  CHECK(grid_csv({row}, &pins).find(",fail\n") != std::string::npos);
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(-INFINITY) == "-inf");
}
