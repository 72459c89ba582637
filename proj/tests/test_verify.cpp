#include "doctest.h"

#include <set>

#include "fourvec/verify.hpp"

using namespace fourvec;

TEST_CASE("default seed passes") {
  const VerifyReport r = verify_suite(1000, 42, kDefaultTolerance);
  for (const auto& id : r.identities) {
    CAPTURE(id.name);
    CAPTURE(id.worst_residual);
    CHECK(id.passed);
  }
  CHECK(r.all_passed());
}

TEST_CASE("zero tolerance keeps only exact identities green") {
  const VerifyReport r = verify_suite(50, 42, 0.0);
  CHECK_FALSE(r.all_passed());
  std::size_t tolerance_failures = 0;
  for (const auto& id : r.identities) {
    CAPTURE(id.name);
    if (id.kind == IdentityKind::Exact) CHECK(id.passed);
    if (id.kind == IdentityKind::Tolerance && !id.passed) ++tolerance_failures;
  }
  CHECK(tolerance_failures > 0);
  REQUIRE(r.find("basis_table") != nullptr);
  CHECK(r.find("basis_table")->passed);
}

TEST_CASE("one sample still runs every identity") {
  const VerifyReport one = verify_suite(1, 42, kDefaultTolerance);
  const VerifyReport many = verify_suite(200, 42, kDefaultTolerance);
  REQUIRE(one.identities.size() == many.identities.size());
  std::set<std::string> names;
  for (std::size_t i = 0; i < one.identities.size(); ++i) {
    CHECK(one.identities[i].name == many.identities[i].name);
    CHECK(one.identities[i].checks >= 1);
    names.insert(one.identities[i].name);
  }
  CHECK(names.size() == one.identities.size());
  CHECK(one.all_passed());
}

TEST_CASE("reports are reproducible") {
  const VerifyReport a = verify_suite(100, 9, kDefaultTolerance);
  const VerifyReport b = verify_suite(100, 9, kDefaultTolerance);
  CHECK(format_verify_report(a) == format_verify_report(b));
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(format_verify_report(a) != format_verify_report(verify_suite(100, 10, kDefaultTolerance)));
}

TEST_CASE("sampler ranges") {
  Sampler s(1);
  for (int n = 0; n < 10000; ++n) {
    const long long k = s.integer();
    REQUIRE(k >= -9);
    REQUIRE(k <= 9);
    const double x = s.real();
    REQUIRE(x >= -1.0);
    REQUIRE(x <= 1.0);
    REQUIRE(std::abs(s.unit_axis().norm() - 1.0) <= 1e-15);
    REQUIRE(s.pure_real_fourvector().t() == Complex(0));
  }
}
