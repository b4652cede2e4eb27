#include "nccr/bundle_spec.hpp"

#include <doctest.h>

using namespace nccr;

TEST_CASE("bundle specs parse to bundle expressions") {
  CHECK(parse_bundle_spec("omega(1,0)", 3) == bwb::omega(3, 1, 0));
  CHECK(parse_bundle_spec("O(2)", 4) == bwb::BundleExpr(bwb::line_bundle(4, 2)));
  CHECK(parse_bundle_spec(" wedgeT( 1 , -1 ) ", 3) == bwb::wedge_tangent(3, 1, -1));
  CHECK(parse_bundle_spec("hom(1,2,0)", 3) == bwb::hom_bundle(1, 2, 0, 3));
  const bwb::BundleExpr e = parse_bundle_spec("2*O(1) - O(0)\n + omega(2,3)", 3);
  bwb::BundleExpr expected = Integer(2) * bwb::BundleExpr(bwb::line_bundle(3, 1));
  expected -= bwb::BundleExpr(bwb::line_bundle(3, 0));
  expected += bwb::omega(3, 2, 3);
  CHECK(e == expected);
}

TEST_CASE("malformed specs report line and column") {
  auto where = [](const std::string& text) -> std::pair<int, int> {
    try {
      parse_bundle_spec(text, 3);
    } catch (const SpecError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(where("O(1) +\n  foo(2)") == std::pair{2, 3});
  CHECK(where("omega(1 0)") == std::pair{1, 9});
  CHECK(where("") == std::pair{1, 1});
  CHECK(where("O(1) O(2)") == std::pair{1, 6});
}

TEST_CASE("out-of-range parameters name the valid range") {
  try {
    parse_bundle_spec("omega(5,0)", 3);
    FAIL("expected SpecError");
  } catch (const SpecError& e) {
    CHECK(std::string(e.what()).find("[0, 2]") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_bundle_spec("hom(4,1,0)", 3), SpecError);
}
