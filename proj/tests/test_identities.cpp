#include <catch2/catch_amalgamated.hpp>

#include "chebyperm/identities.hpp"

using namespace chebyperm;

TEST_CASE("report plumbing") {
  const IdentityReport good{"x", {{"n", 1}}, BigInt(3), BigInt(3)};
  const IdentityReport bad{"x", {{"n", 2}}, BigInt(3), BigInt(4)};
  CHECK(good.holds());
  CHECK_FALSE(bad.holds());
  CHECK(all_hold({good, good}));
  CHECK_FALSE(all_hold({good, bad}));
  CHECK(all_hold({}));
}

TEST_CASE("chain sum, hand-checked values") {
  CHECK(chain_sum(0, 3) == 9);
  CHECK(chain_sum(1, 1) == 1);
  CHECK(chain_sum(1, 2) == 8);
  CHECK(chain_sum(2, 2) == 24);
  CHECK(chain_sum_closed_form(1, 2) == 8);
  CHECK(chain_sum_closed_form(2, 2) == 24);
}

TEST_CASE("chain sum equals its closed form") {
  for (long long m = 0; m <= 4; ++m)
    for (long long n = 1; n <= 7; ++n) {
      const IdentityReport r = check_chain_sum(m, n);
      INFO("m=" << m << " n=" << n);
      CHECK(r.holds());
      CHECK(r.name == "chain_sum");
      CHECK(r.params.at("m") == m);
      CHECK(r.params.at("n") == n);
    }
}

TEST_CASE("chain sum domain and budget") {
  CHECK_THROWS_AS(chain_sum(-1, 3), std::domain_error);
  CHECK_THROWS_AS(chain_sum(1, 0), std::domain_error);
  CHECK_THROWS_AS(chain_sum(5, 20, 100), CapacityError);
  CHECK(chain_sum(2, 3, 6) == chain_sum_closed_form(2, 3));
}

TEST_CASE("telescoping step, hand-checked value") {
  CHECK(telescoping_lhs(0, 2, 1) == 8);
  CHECK(telescoping_rhs(0, 2, 1) == 8);
}

TEST_CASE("telescoping step holds across the sweep") {
  for (long long i = 0; i <= 3; ++i)
    for (long long n = 1; n <= 6; ++n)
      for (long long c = 1; c <= n; ++c) {
        const IdentityReport r = check_telescoping_step(i, n, c);
        INFO("i=" << i << " n=" << n << " c=" << c);
        CHECK(r.holds());
        CHECK(r.name == "telescoping_step");
      }
}

TEST_CASE("telescoping step domain") {
  CHECK_THROWS_AS(telescoping_lhs(-1, 3, 1), std::domain_error);
  CHECK_THROWS_AS(telescoping_lhs(0, 3, 0), std::domain_error);
  CHECK_THROWS_AS(telescoping_lhs(0, 3, 4), std::domain_error);
}

TEST_CASE("shifted coefficient count, hand-checked values") {
  CHECK(shifted_coeff_count(2, 0) == 9);
  CHECK(shifted_coeff_count(2, 1) == 8);
  CHECK(shifted_coeff_count(2, 2) == 1);
  CHECK(shifted_coeff_count(3, 0) == 64);
}

TEST_CASE("shifted coefficient count equals binomial form and chain sum") {
  for (long long d = 1; d <= 8; ++d)
    for (long long m = 0; m <= d; ++m) {
      const BigInt counted = shifted_coeff_count(d, m);
      INFO("d=" << d << " m=" << m);
      CHECK(counted == binomial(d, m) * ipow(BigInt(d - m + 1), d));
      CHECK(counted == chain_sum(m, d - m + 1));
    }
  CHECK_THROWS_AS(shifted_coeff_count(0, 0), std::domain_error);
  CHECK_THROWS_AS(shifted_coeff_count(3, 4), std::domain_error);
}

TEST_CASE("coefficientwise verification across routes") {
  for (long long d = 1; d <= 4; ++d) {
    const auto reports = verify_omega_closed_form(d);
    CHECK(reports.size() == static_cast<std::size_t>(3 * (d + 1)));
    CHECK(all_hold(reports));
  }
}
