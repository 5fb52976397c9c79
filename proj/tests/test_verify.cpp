#include "powertower/verify.hpp"

#include <doctest.h>

#include <set>
#include <string>

using namespace powertower;

namespace {

void check_suite(const Suite& suite) {
  REQUIRE_FALSE(suite.empty());
  for (const CheckResult& r : suite) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.pass);
    CHECK_FALSE(r.name.empty());
    CHECK_FALSE(r.detail.empty());
  }
}

}  // namespace

TEST_CASE("omega suite passes") { check_suite(verify_omega()); }
TEST_CASE("sums suite passes") { check_suite(verify_sums()); }
TEST_CASE("rencontres suite passes") { check_suite(verify_rencontres()); }
TEST_CASE("poly suite passes") { check_suite(verify_poly()); }
TEST_CASE("delta suite passes") { check_suite(verify_delta()); }
TEST_CASE("derivative suite passes") { check_suite(verify_derivative()); }
TEST_CASE("series suite passes") { check_suite(verify_series()); }

TEST_CASE("combined run has unique check names and all_passed agrees") {
  const Suite all = verify_all();
  REQUIRE_FALSE(all.empty());
  std::set<std::string> names;
  for (const CheckResult& r : all) names.insert(r.name);
  CHECK(names.size() == all.size());
  CHECK(all_passed(all));

  Suite broken = all;
  broken.push_back({"synthetic-failure", false, "forced"});
  CHECK_FALSE(all_passed(broken));
  CHECK(all_passed(Suite{}));
}
