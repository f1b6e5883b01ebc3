#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mtk/catalog.hpp"
#include "mtk/doubles.hpp"
#include "mtk/error.hpp"
#include "mtk/io.hpp"

using namespace mtk;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "mtk_io_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("catalog entries round-trip bit-exactly") {
    for (const auto& e : catalog_list()) {
      CAPTURE(e.name);
      const auto d = catalog_get(e.name);
      const fs::path a = scratch(e.name + ".mtc.json");
      const fs::path b = scratch(e.name + ".again.mtc.json");
      save(d, a.string());
      const auto back = load_premodular(a.string());
      CHECK(back == d);
      save(back, b.string());
      CHECK(slurp(a) == slurp(b));
    }
  }

  TEST_CASE("canonicalization is idempotent") {
    const Json doc = to_document(catalog_get("su2_4"));
    const std::string once = canonical_dump(doc);
    CHECK(canonical_dump(Json::parse(once)) == once);
  }

  TEST_CASE("golden file") {
    const fs::path golden = fs::path(MTK_GOLDEN_DIR) / "fib.mtc.json";
    REQUIRE(fs::exists(golden));
    CHECK(canonical_dump(to_document(catalog_get("fib"))) == slurp(golden));
    CHECK(load_premodular(golden.string()) == catalog_get("fib"));
  }

  TEST_CASE("non-symmetric S' names the entry") {
    Json doc = to_document(catalog_get("fib"));
    doc["payload"]["sprime"][0][1] = cyclo_to_json(CycloNum(2));
    CHECK_THROWS_WITH_AS(parse_document(doc), doctest::Contains("(0,1)"), InvariantError);
  }

  TEST_CASE("perturbed twist breaks the balancing identity") {
    Json doc = to_document(catalog_get("su2_4"));
    doc["payload"]["twist"][1] = Json::array({1, 3});
    CHECK_THROWS_AS(parse_document(doc), InvariantError);
  }

  TEST_CASE("schema errors carry a path") {
    Json doc = to_document(catalog_get("fib"));
    doc["payload"]["extra"] = 1;
    CHECK_THROWS_WITH_AS(parse_document(doc), doctest::Contains("$.payload.extra"), SchemaError);
    Json v = to_document(catalog_get("fib"));
    v["format_version"] = 7;
    CHECK_THROWS_AS(parse_document(v), SchemaError);
    Json r = to_document(catalog_get("fib"));
    r["payload"]["twist"][1] = Json::array({4, 10});
    CHECK_THROWS_AS(parse_document(r), SchemaError);
  }

  TEST_CASE("empty rank is rejected before writing") {
    const fs::path p = scratch("empty.mtc.json");
    fs::remove(p);
    CHECK_THROWS(save(PreModularData{}, p.string()));
    CHECK_FALSE(fs::exists(p));
  }

  TEST_CASE("missing files are I/O errors") {
    CHECK_THROWS(load("/nonexistent/dir/x.mtc.json"));
  }

  TEST_CASE("groups round-trip") {
    const auto s3 = symmetric_group_3();
    const fs::path p = scratch("s3.grp.json");
    save(s3, p.string());
    const auto back = load_group(p.string());
    CHECK(back.mult == s3.mult);
    CHECK(back.classes == s3.classes);
    CHECK(back.name == "S3");
    CHECK(untwisted_double(back) == untwisted_double(s3));
  }

  TEST_CASE("large rationals are encoded exactly") {
    Rational big("123456789012345678901234567891/7");
    big.canonicalize();
    const Json j = rational_to_json(big);
    CHECK(rational_from_json(j, "$") == big);
    const CycloNum x = CycloNum(big, 1) * CycloNum::zeta(5);
    CHECK(cyclo_from_json(cyclo_to_json(x), "$") == x);
  }

  TEST_CASE("condensation output round-trips") {
    const auto su = catalog_get("su2_4");
    const auto r = condense(su, check_symmetric_subcategory(su, {0, 4}));
    const fs::path p = scratch("su2_4_cond.mtc.json");
    save(r.condensed, p.string());
    CHECK(load_premodular(p.string()) == r.condensed);
    const Json fp = fixed_point_matrices_to_json(r.fixed_point_matrices, su);
    const auto opts = condense_options_from_json(Json{{"sz_matrices", fp}}, su);
    REQUIRE(opts.fixed_point_matrices.has_value());
    CHECK(*opts.fixed_point_matrices == r.fixed_point_matrices);
  }
}
