#include <catch2/catch_amalgamated.hpp>

#include <polynet/verify.hpp>

#include <set>
#include <string>

using namespace polynet;

TEST_CASE("every identity suite passes on a fresh build") {
  for (const auto& r : run_verification()) {
    INFO(r.name << ": " << r.first_fail);
    CHECK(r.passed);
    CHECK(r.checks > 0);
  }
}

TEST_CASE("the registry is well formed") {
  std::set<std::string> names;
  for (const auto& suite : verification_suites()) {
    REQUIRE(suite.name != nullptr);
    REQUIRE(suite.run != nullptr);
    REQUIRE(std::string(suite.summary).size() > 0);
    // stable kebab-case handles, usable as CLI selectors
    for (const char* p = suite.name; *p; ++p)
      REQUIRE((std::islower(static_cast<unsigned char>(*p)) ||
               std::isdigit(static_cast<unsigned char>(*p)) || *p == '-'));
    names.insert(suite.name);
  }
  REQUIRE(names.size() == verification_suites().size());
  REQUIRE(names.count("gamma-golden-table") == 1);
  REQUIRE(names.count("brownian-network-reduction") == 1);
}

TEST_CASE("the random-network suites are deterministic and sized") {
  auto first = run_verification();
  auto second = run_verification();
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    REQUIRE(first[i].name == second[i].name);
    REQUIRE(first[i].passed == second[i].passed);
    REQUIRE(first[i].checks == second[i].checks);
    if (first[i].name == "brownian-network-reduction")
      REQUIRE(first[i].checks > 1000);  // the advertised thousand-network sweep
  }
}
