#include <catch2/catch_amalgamated.hpp>

#include "delpezzo/selftest.hpp"

#include <iostream>

using namespace delpezzo;

TEST_CASE("acceptance suite") {
  auto results = run_acceptance_suite();
  REQUIRE(results.size() == 11);
  for (auto& r : results) {
    std::cout << "criterion " << r.number << " (" << r.name << "): "
              << (r.pass ? "PASS" : "FAIL");
    if (!r.detail.empty()) std::cout << " - " << r.detail;
    std::cout << "\n";
  }
  for (auto& r : results) {
    INFO("criterion " << r.number << " (" << r.name << "): " << r.detail);
    CHECK(r.pass);
  }
}
