#include <doctest.h>

#include <cmath>
#include <limits>

#include "lfam/config.hpp"
#include "lfam/errors.hpp"
#include "lfam/runner.hpp"

using namespace lfam;
using namespace lfam::runner;

namespace {

const char* kSmall = R"(
# small recipe
[experiment]
sigma = 0.5
primes = 1500
threads = 2

[family quad]
kind = quadratic
d_min = 1
d_max = 3000
expect_c = 1

[family ecF]
kind = elliptic
A = T
B = 1
N = 200

[family ecG]
kind = elliptic
A = T
B = 2
N = 200

[family FxG]
kind = convolve
left = ecF
right = ecG

[family stub]
kind = zero
members = 5
degree = 2
log_conductor = 8
)";

std::string message_of(const std::string& text) {
  try {
    parse_config_text(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("text config parsing") {
  const auto cfg = parse_config_text(kSmall);
  CHECK(cfg.sigma == 0.5);
  CHECK(cfg.primes == 1500);
  CHECK(cfg.threads == 2);
  REQUIRE(cfg.families.size() == 5);
  CHECK(cfg.families[0].id == "quad");
  CHECK(cfg.find("ecF").text("A") == "T");
  CHECK(cfg.find("quad").integer("d_max") == 3000);
  CHECK(cfg.find("FxG").kind == "convolve");
  CHECK(convolution_ids(cfg).count("FxG") == 1);
  CHECK_THROWS_AS(cfg.find("nope"), ConfigError);
}

TEST_CASE("config errors name the offending family") {
  CHECK(message_of("[family a]\nkind = quadratic\nd_min = 1\nd_max = 9\ncolour = red\n").find("'a'") != std::string::npos);
  CHECK(message_of("[family a]\nkind = wibble\n").find("'a'") != std::string::npos);
  CHECK(message_of("[family x]\nkind = convolve\nleft = x\nright = y\n").find("'x'") != std::string::npos);
  CHECK(message_of("[family a]\nkind = zero\nmembers=1\ndegree=1\nlog_conductor=1\n[family a]\nkind = zero\nmembers=1\ndegree=1\nlog_conductor=1\n")
            .find("duplicate") != std::string::npos);
  CHECK(message_of("sigma = abc\n").find("line 1") != std::string::npos);
  CHECK(message_of("bogus = 1\n") != "");
  CHECK(message_of("[family a\n") != "");
  CHECK_THROWS_AS(parse_config_json("{\"families\": 3}"), ConfigError);
  CHECK_THROWS_AS(parse_config_json("{not json"), ConfigError);

  // errors while building a family are reported with its id
  const auto cfg = parse_config_text("[family e]\nkind = quadratic\nd_min = 25\nd_max = 27\n");
  FamilyRegistry reg(cfg);
  try {
    reg.get("e");
    FAIL("expected an error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("'e'") != std::string::npos);
  }
}

TEST_CASE("reference cycles are rejected") {
  const auto cfg = parse_config_text(
      "[family a]\nkind = convolve\nleft = b\nright = b\n[family b]\nkind = sym_lift\nbase = a\nM = 2\n");
  FamilyRegistry reg(cfg);
  CHECK_THROWS_AS(reg.get("a"), ConfigError);
}

TEST_CASE("JSON config mirrors the text format") {
  const auto j = parse_config_json(R"({
    "sigma": 0.5, "primes": 1500, "threads": 2,
    "families": [
      {"id": "quad", "kind": "quadratic", "d_min": 1, "d_max": 3000, "expect_c": 1},
      {"id": "ecF", "kind": "elliptic", "A": "T", "B": "1", "N": 200},
      {"id": "ecG", "kind": "elliptic", "A": "T", "B": "2", "N": 200},
      {"id": "FxG", "kind": "convolve", "left": "ecF", "right": "ecG"},
      {"id": "stub", "kind": "zero", "members": 5, "degree": 2, "log_conductor": 8}
    ]})");
  const auto t = parse_config_text(kSmall);
  CHECK(constants_csv(run_families(j)) == constants_csv(run_families(t)));
}

TEST_CASE("family runs: expectations, products and determinism") {
  const auto cfg = parse_config_text(kSmall);
  const auto rows = run_families(cfg);
  REQUIRE(rows.size() == 5);
  CHECK(rows_finite(rows));
  CHECK(rows[0].constant.c_class == 1);
  CHECK(rows[1].constant.c_class == -1);
  CHECK(rows[3].product_expected == 1);
  CHECK(rows[3].product_check == "ok");
  CHECK(constant_violations(rows).empty());
  CHECK(rows[4].density.empirical == rows[4].density.phi_hat0);

  const auto csv = constants_csv(rows);
  CHECK(csv.rfind("family_id,sigma,P,c_est,c_class,r_est,eps,D1_emp,D1_pred,nu3_tail,bad_mass", 0) == 0);
  RunOptions one_thread;
  one_thread.threads = 1;
  CHECK(constants_csv(run_families(cfg, one_thread)) == csv);
  CHECK(density_csv(rows, 0.1) == density_csv(run_families(cfg), 0.1));
  CHECK(constants_json(rows).size() == 5);

  RunOptions only;
  only.only = {"quad"};
  CHECK(run_families(cfg, only).size() == 1);

  ExperimentConfig empty;
  CHECK(run_families(empty).empty());
  CHECK(constants_json(run_families(empty)).empty());
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0 / 3) == "0.333333333333");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(format_number(12345678.0) == "12345678");
}

TEST_CASE("tables") {
  const auto t = rmt_table_csv({0.5, 0.8}, {0, 1});
  CHECK(t.rfind("group,test_function,sigma,rank,prediction,quadrature", 0) == 0);
  CHECK(std::count(t.begin(), t.end(), '\n') == 1 + 5 * 2 * 2);
  const auto s = ec_scan_csv({ec::Polynomial::parse("T"), ec::Polynomial::parse("1"), 1, 0}, 5, 50);
  CHECK(s.find("\n5,") != std::string::npos);
}
