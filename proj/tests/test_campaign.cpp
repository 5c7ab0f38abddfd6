#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "superbethe/campaign.hpp"
#include "superbethe/error.hpp"

using namespace superbethe;

namespace {

std::size_t count_verdict(const Report& r, Verdict v) {
  std::size_t n = 0;
  for (const auto& e : r.entries) n += e.verdict == v ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("config parsing") {
  const CampaignConfig cfg = parse_config(
      "# smoke\n"
      "preset = distinguished-covariant\n"
      "r = 1\n"
      "s = 1   # trailing comment\n"
      "q = 5/3\n"
      "sector = 2,1,1\n"
      "shapes = 3,2/1; 2,2\n"
      "checks = jt, hirota\n"
      "tol = 1e-9\n");
  CHECK(cfg.r == 1);
  CHECK(cfg.s == 1);
  CHECK(cfg.q == BigRational(5, 3));
  CHECK(cfg.sector == std::vector<int>{2, 1, 1});
  REQUIRE(cfg.shapes.size() == 2);
  CHECK(cfg.shapes[0] == SkewShape(Partition{1}, Partition{3, 2}));
  CHECK(cfg.checks == std::vector<std::string>{"jt", "hirota"});
  CHECK(cfg.tol == doctest::Approx(1e-9));

  CHECK(parse_config("checks = all\n").checks == known_checks());
}

TEST_CASE("config errors name the line and field") {
  auto message = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::config_error);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("r = 1\nq = 1\n").find("line 2") != std::string::npos);
  CHECK(message("r = x\n").find("field 'r'") != std::string::npos);
  CHECK(message("colour = 3\n").find("unknown key") != std::string::npos);
  CHECK(message("checks = jt, nope\n").find("unknown check") != std::string::npos);
  CHECK(message("tol = -1\n").find("tol") != std::string::npos);
  CHECK(message("r = 1\njust text\n").find("line 2") != std::string::npos);
  CHECK(message("r = 1\ns = 0\nsector = 1,1,1\n").find("sector") != std::string::npos);
  CHECK(message("preset = nope\n").find("preset") != std::string::npos);
  CHECK(message("shapes = 2,3\n").find("shapes") != std::string::npos);
  CHECK_THROWS_AS(load_config("/nonexistent/campaign.cfg"), Error);
}

TEST_CASE("minimal jt campaign") {
  const Report r = run_campaign(parse_config("r = 1\ns = 0\nchecks = jt\n"));
  CHECK(r.entries.size() == 20);
  CHECK(r.passed());
  CHECK(count_verdict(r, Verdict::pass) == 20);
  CHECK(r.render().find("check=jt params=\"preset=distinguished-covariant r=1 s=0 shape=") == 0);
}

TEST_CASE("empty check list") {
  const Report r = run_campaign(parse_config("checks =\n"));
  CHECK(r.entries.empty());
  CHECK(r.passed());
  CHECK(r.render().empty());
}

TEST_CASE("corrupted root fails the pole audit") {
  const Report good = run_campaign(parse_config("r = 1\ns = 1\nchecks = pole-audit\n"));
  CHECK(good.passed());
  const Report bad = run_campaign(parse_config("r = 1\ns = 1\nchecks = pole-audit\ncorrupt_root = true\n"));
  CHECK_FALSE(bad.passed());
  CHECK(bad.render().find("enforced\" verdict=FAIL") != std::string::npos);
}

TEST_CASE("reports are deterministic and sorted") {
  const CampaignConfig cfg = parse_config("r = 0\ns = 1\nseed = 9\nchecks = top-term, jt, mixed, crossing\n");
  const std::string a = run_campaign(cfg).render();
  const std::string b = run_campaign(cfg).render();
  CHECK(a == b);
  CHECK(a.find("check=crossing") < a.find("check=jt"));
  CHECK(a.find("check=jt") < a.find("check=mixed"));
  CHECK(a.find("check=mixed") < a.find("check=top-term"));
  const std::string c = run_campaign(parse_config("r = 0\ns = 1\nseed = 10\nchecks = top-term, jt, mixed, crossing\n")).render();
  CHECK(a != c);
}

TEST_CASE("every check runs for r=s=1") {
  const Report r = run_campaign(parse_config("r = 1\ns = 1\nchecks = all\nrandom_shapes = 4\n"));
  for (const auto& name : known_checks()) {
    bool seen = false;
    for (const auto& e : r.entries) seen = seen || e.check == name;
    CAPTURE(name);
    CHECK(seen);
  }
  CHECK(r.passed());
  // r = s takes the rejection path of the mixed identity
  CHECK(r.render().find("check=mixed params=\"r=1 s=1\" verdict=PASS witness=\"rejected: equal_rank\"") != std::string::npos);
}

TEST_CASE("reductions under a non-distinguished preset") {
  const Report r = run_campaign(parse_config("preset = sl12-appC\nchecks = reductions\n"));
  CHECK(r.passed());
  CHECK(count_verdict(r, Verdict::skip) > 0);
  for (const auto& e : r.entries) {
    if (e.verdict == Verdict::skip) CHECK((e.params.find("red1") != std::string::npos || e.params.find("red2") != std::string::npos));
  }
}
