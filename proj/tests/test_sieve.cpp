#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "coprime/sieve.hpp"
#include "oracle_helpers.hpp"

using namespace coprime;

TEST_CASE("build_sieve basic tables") {
  const auto s = build_sieve(10);
  CHECK(s.primes == std::vector<std::int64_t>{2, 3, 5, 7});
  CHECK(s.pi(10) == 4);

  const auto s25 = build_sieve(25);
  CHECK(s25.pi(25) == oracle::count_primes_up_to(25));

  const auto s2 = build_sieve(2);
  CHECK(s2.primes == std::vector<std::int64_t>{2});

  CHECK_THROWS_AS(build_sieve(1), std::domain_error);
}

TEST_CASE("sieve invariants against trial division") {
  const auto s = build_sieve(2000);
  for (std::int64_t k = 2; k <= 2000; ++k) {
    CAPTURE(k);
    CHECK(s.is_prime(k) == oracle::is_prime(k));
    // factorization recoverable by repeated spf division
    std::int64_t m = k, prod = 1;
    while (m > 1) {
      const std::int64_t p = s.spf[m];
      REQUIRE(s.is_prime(p));
      prod *= p;
      m /= p;
    }
    CHECK(prod == k);
  }
  for (std::int64_t x = 1; x < 2000; ++x)
    CHECK(s.pi_prefix[x] <= s.pi_prefix[x + 1]);
  CHECK(s.pi(2000) == static_cast<std::int64_t>(s.primes.size()));
  CHECK(s.nth_prime(1) == 2);
  CHECK(s.nth_prime(25) == 97);
}

TEST_CASE("factor_signature") {
  const auto s = build_sieve(2000);
  const auto sig36 = factor_signature(36, s);
  CHECK(sig36.distinct_primes == std::vector<std::int64_t>{2, 3});
  CHECK(sig36.radical == 6);
  CHECK(sig36.omega == 2);

  const auto sig49 = factor_signature(49, s);
  CHECK(sig49.distinct_primes == std::vector<std::int64_t>{7});
  CHECK(sig49.omega == 1);

  const auto sig1 = factor_signature(1, s);
  CHECK(sig1.distinct_primes.empty());
  CHECK(sig1.radical == 1);
  CHECK(sig1.omega == 0);

  CHECK_THROWS_AS(factor_signature(2001, s), std::domain_error);

  for (std::int64_t k = 1; k <= 500; ++k) {
    const auto sig = factor_signature(k, s);
    CHECK(sig.radical == oracle::radical(k));
    CHECK(sig.omega == oracle::omega(k));
    CHECK(k % sig.radical == 0);
  }
}

TEST_CASE("merge_signatures is the union of prime sets") {
  const auto s = build_sieve(200);
  const auto m = merge_signatures(factor_signature(12, s),
                                  factor_signature(45, s));
  CHECK(m.distinct_primes == std::vector<std::int64_t>{2, 3, 5});
  CHECK(m.radical == 30);
  CHECK(m.value == 540);
}

TEST_CASE("euler_phi exact values and brute-force agreement") {
  const auto s = build_sieve(2000);
  CHECK(euler_phi(12, s) == 4);
  CHECK(euler_phi(1, s) == 1);
  CHECK(euler_phi(49, s) == oracle::euler_phi(49));  // 42
  CHECK(euler_phi(49, s) == 42);
  CHECK_THROWS_AS(euler_phi(0, s), std::domain_error);

  for (std::int64_t k = 1; k <= 1000; ++k)
    CHECK(euler_phi(k, s) == oracle::euler_phi(k));
}

TEST_CASE("euler_phi multiplicativity on coprime pairs") {
  const auto s = build_sieve(10000);
  for (std::int64_t a = 2; a <= 60; ++a)
    for (std::int64_t b = a + 1; b <= 90; ++b) {
      if (std::gcd(a, b) != 1) continue;
      CHECK(euler_phi(a * b, s) == euler_phi(a, s) * euler_phi(b, s));
    }
}

TEST_CASE("partial_totient worked values") {
  const auto s = build_sieve(100);
  CHECK(partial_totient(25, 4, s) == oracle::partial_totient(25, 4));
  CHECK(partial_totient(25, 4, s) == 13);
  CHECK(partial_totient(25, 6, s) == 9);  // 25 - 12 - 8 + 4
  CHECK(partial_totient(10, 1, s) == 10);
}

TEST_CASE("partial_totient equals brute-force count on [1,500]^2") {
  const auto s = build_sieve(500);
  for (std::int64_t k = 1; k <= 500; ++k) {
    const auto sig = factor_signature(k, s);
    for (std::int64_t n = 1; n <= 500; ++n) {
      const std::int64_t got = partial_totient(n, sig);
      if (got != oracle::partial_totient(n, k)) {
        CAPTURE(n, k);
        REQUIRE(got == oracle::partial_totient(n, k));
      }
    }
  }
  SUCCEED("all pairs matched");
}

TEST_CASE("partial_totient with many distinct primes") {
  // pruned inclusion-exclusion must stay correct when omega(k) is large
  // relative to n (the regime merged codegree signatures live in)
  const auto s = build_sieve(700000);
  for (std::int64_t k :
       {std::int64_t{30030}, std::int64_t{510510}, std::int64_t{570570},
        std::int64_t{223092}}) {  // omega 6..7 radicals and a mixed case
    const auto sig = factor_signature(k, s);
    for (std::int64_t n : {50, 100, 784, 997, 1500, 5000}) {
      CAPTURE(k, n);
      CHECK(partial_totient(n, sig) == oracle::partial_totient(n, k));
    }
  }
  // regression: the merged signature of (770, 741) at n=784
  const auto merged = merge_signatures(factor_signature(770, s),
                                       factor_signature(741, s));
  CHECK(merged.omega == 7);
  CHECK(partial_totient(784, merged) == oracle::partial_totient(784, 570570));
  CHECK(partial_totient(784, merged) == 141);
}

TEST_CASE("partial_totient depends only on the radical") {
  const auto s = build_sieve(3000);
  for (std::int64_t k : {4, 8, 12, 36, 100, 1024, 2700}) {
    const std::int64_t rad = factor_signature(k, s).radical;
    for (std::int64_t n : {10, 77, 500}) {
      CHECK(partial_totient(n, k, s) == partial_totient(n, rad, s));
    }
  }
}

TEST_CASE("euler_phi equals partial_totient(k, k)") {
  const auto s = build_sieve(2000);
  for (std::int64_t k = 2; k <= 2000; ++k)
    CHECK(euler_phi(k, s) == partial_totient(k, k, s));
}

TEST_CASE("partial sums") {
  const auto s = build_sieve(10000);
  CHECK(sum_phi(5, s) == 10);  // 1+1+2+2+4
  std::int64_t brute = 0;
  for (std::int64_t k = 1; k <= 100; ++k) brute += oracle::euler_phi(k);
  CHECK(sum_phi(100, s) == brute);
  CHECK(sum_phi(100, s) == 3044);

  CHECK(sum_omega(10, s) == 11);
  std::int64_t brute_omega2 = 0;
  for (std::int64_t k = 2; k <= 200; ++k)
    brute_omega2 += oracle::omega(k) * oracle::omega(k);
  CHECK(sum_omega_sq(200, s) == brute_omega2);

  CHECK(sum_pi(10, s) == 27);         // 1+2+2+3+3+4+4+4+4
  CHECK(sum_pi_strict(10, s) == 23);  // 0+1+2+2+3+3+4+4+4
  CHECK(sum_primes(2, s) == 2);
  CHECK(sum_primes(10, s) == 17);

  // residual of the totient-sum main term stays finite and small
  const double resid =
      std::abs(static_cast<double>(sum_phi(10000, s)) -
               sum_phi_main_term(10000)) /
      (10000.0 * std::log(10000.0));
  CHECK(resid < 1.0);
}
