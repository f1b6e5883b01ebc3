#include <doctest.h>

#include <filesystem>

#include "mtk/catalog.hpp"
#include "mtk/cli.hpp"
#include "mtk/io.hpp"

using namespace mtk;
namespace fs = std::filesystem;

namespace {

std::string scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "mtk_cli_tests";
  fs::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("verify") {
    const auto r = run({"verify", "ising"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("modular: yes (3/3 criteria)") != std::string::npos);
    const auto p = run({"verify", "rep_z2_ising"});
    CHECK(p.exit_code == 0);
    CHECK(p.out.find("modular: no") != std::string::npos);
  }

  TEST_CASE("condense") {
    const auto r = run({"condense", "su2_4", "--currents", "4"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("rank 3") != std::string::npos);
    CHECK(r.out.find("Z3") != std::string::npos);
    CHECK(run({"condense", "ising", "--currents", "psi"}).exit_code == 1);
  }

  TEST_CASE("double then verlinde") {
    const std::string f0 = scratch("dz2p0.mtc.json");
    REQUIRE(run({"--out", f0, "double", "--group", "Z2", "--p", "0"}).exit_code == 0);
    const auto v0 = run({"verlinde", f0});
    CHECK(v0.exit_code == 0);
    CHECK(v0.out.find("fusion group: Z2xZ2") != std::string::npos);

    const std::string f1 = scratch("dz2p1.mtc.json");
    REQUIRE(run({"--out", f1, "double", "--group", "Z2", "--p", "1"}).exit_code == 0);
    const auto v1 = run({"verlinde", f1});
    CHECK(v1.exit_code == 0);
    CHECK(v1.out.find("fusion group: Z4") != std::string::npos);
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run({}).exit_code == 2);
    CHECK(run({"frobnicate"}).exit_code == 2);
    CHECK(run({"verify"}).exit_code == 2);
    CHECK(run({"verify", "ising", "--bogus"}).exit_code == 2);
    CHECK(run({"verify", "/nonexistent.mtc.json"}).exit_code == 2);
    CHECK(run({"catalog", "get", "nope"}).exit_code == 2);
  }

  TEST_CASE("json output re-loads") {
    const auto r = run({"--json", "catalog", "get", "su2_4"});
    REQUIRE(r.exit_code == 0);
    CHECK(std::get<PreModularData>(parse_document(Json::parse(r.out))) == catalog_get("su2_4"));

    const auto c = run({"--json", "closure", "rep_z2_ising"});
    REQUIRE(c.exit_code == 0);
    const Json j = Json::parse(c.out);
    CHECK(is_modular(std::get<PreModularData>(parse_document(j.at("condensed")))).modular);

    const auto p = run({"--json", "product", "ising", "fib"});
    REQUIRE(p.exit_code == 0);
    CHECK(std::get<PreModularData>(parse_document(Json::parse(p.out))).rank() == 6);
  }

  TEST_CASE("other verbs") {
    CHECK(run({"center", "rep_z2_ising"}).exit_code == 0);
    CHECK(run({"commutant", "ising", "--sub", "psi"}).exit_code == 0);
    CHECK(run({"grading", "su2_4", "--currents", "4"}).exit_code == 0);
    CHECK(run({"repcat", "--group", "S3"}).exit_code == 0);
    CHECK(run({"factor", "ising"}).out.find("prime") != std::string::npos);
    CHECK(run({"dct", "toric"}).exit_code == 0);
    CHECK(run({"gauss", "fib"}).exit_code == 0);
    CHECK(run({"catalog", "list"}).out.find("d_s3") != std::string::npos);
  }
}
