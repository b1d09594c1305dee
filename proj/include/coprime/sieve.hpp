#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coprime/common.hpp"

namespace coprime {

// Precomputed prime data up to a fixed limit: smallest prime factors,
// the ascending prime list and the prime-counting prefix pi(x).
struct SieveTable {
  std::int64_t limit = 0;
  std::vector<std::int32_t> spf;        // spf[k], 2 <= k <= limit; spf[p] = p
  std::vector<std::int64_t> primes;     // ascending primes <= limit
  std::vector<std::int32_t> pi_prefix;  // pi_prefix[x] = pi(x), 0 <= x <= limit

  bool is_prime(std::int64_t k) const {
    return k >= 2 && spf[static_cast<std::size_t>(k)] == k;
  }
  bool is_composite(std::int64_t k) const { return k >= 4 && !is_prime(k); }
  std::int64_t pi(std::int64_t x) const {
    return pi_prefix[static_cast<std::size_t>(x)];
  }
  // i-th prime, 1-indexed as in p_1 = 2, p_2 = 3, ...
  std::int64_t nth_prime(std::int64_t i) const {
    if (i < 1 || i > static_cast<std::int64_t>(primes.size()))
      throw std::domain_error("nth_prime: index outside sieve coverage");
    return primes[static_cast<std::size_t>(i - 1)];
  }
  void require(std::int64_t k, const char* who) const {
    if (k < 1 || k > limit)
      throw std::domain_error(std::string(who) + ": argument outside sieve limit");
  }
};

inline SieveTable build_sieve(std::int64_t limit) {
  if (limit < 2) throw std::domain_error("build_sieve: limit must be >= 2");
  SieveTable t;
  t.limit = limit;
  t.spf.assign(static_cast<std::size_t>(limit) + 1, 0);
  t.pi_prefix.assign(static_cast<std::size_t>(limit) + 1, 0);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (t.spf[i] == 0) {
      t.primes.push_back(i);
      for (std::int64_t j = i; j <= limit; j += i)
        if (t.spf[j] == 0) t.spf[j] = static_cast<std::int32_t>(i);
    }
    t.pi_prefix[i] = static_cast<std::int32_t>(t.primes.size());
  }
  return t;
}

// Distinct prime divisors of one integer: the radical rad(k) and
// omega(k) = number of distinct primes, the w(k) of the counting formulas.
struct FactorSignature {
  std::int64_t value = 1;
  std::vector<std::int64_t> distinct_primes;  // ascending
  std::int64_t radical = 1;
  std::int64_t omega = 0;
};

inline FactorSignature factor_signature(std::int64_t k, const SieveTable& sieve) {
  sieve.require(k, "factor_signature");
  FactorSignature sig;
  sig.value = k;
  while (k > 1) {
    const std::int64_t p = sieve.spf[static_cast<std::size_t>(k)];
    sig.distinct_primes.push_back(p);
    sig.radical *= p;
    while (k % p == 0) k /= p;
  }
  sig.omega = static_cast<std::int64_t>(sig.distinct_primes.size());
  return sig;
}

// Signature of the product k*l without forming the product: the union of
// the two distinct-prime sets. Needed for codegree formulas where k*l can
// exceed the sieve limit.
inline FactorSignature merge_signatures(const FactorSignature& a,
                                        const FactorSignature& b) {
  FactorSignature sig;
  sig.value = checked_mul(a.value, b.value);
  std::set_union(a.distinct_primes.begin(), a.distinct_primes.end(),
                 b.distinct_primes.begin(), b.distinct_primes.end(),
                 std::back_inserter(sig.distinct_primes));
  for (std::int64_t p : sig.distinct_primes)
    sig.radical = checked_mul(sig.radical, p);
  sig.omega = static_cast<std::int64_t>(sig.distinct_primes.size());
  return sig;
}

inline std::int64_t euler_phi(std::int64_t k, const SieveTable& sieve) {
  sieve.require(k, "euler_phi");
  std::int64_t phi = k;
  while (k > 1) {
    const std::int64_t p = sieve.spf[static_cast<std::size_t>(k)];
    phi -= phi / p;  // exact: p | phi at this point
    while (k % p == 0) k /= p;
  }
  return phi;
}

// phi(n, k): integers in [1, n] coprime to k, by Moebius inclusion-exclusion
// over the distinct primes of k. Exact integer arithmetic. Each enumerated
// squarefree divisor carries its own sign; a branch whose product exceeds n
// is dropped outright, which is safe because every superset product exceeds
// n as well and contributes floor(n/d) = 0.
inline std::int64_t partial_totient(std::int64_t n, const FactorSignature& k_sig) {
  if (n < 0) throw std::domain_error("partial_totient: n must be >= 0");
  std::vector<std::pair<std::int64_t, std::int64_t>> terms{{1, 1}};
  terms.reserve(64);
  for (std::int64_t p : k_sig.distinct_primes) {
    const std::size_t cur = terms.size();
    for (std::size_t i = 0; i < cur; ++i) {
      if (terms[i].first <= n / p)
        terms.push_back({terms[i].first * p, -terms[i].second});
    }
  }
  std::int64_t total = 0;
  for (const auto& [d, sign] : terms) total += sign * (n / d);
  return total;
}

inline std::int64_t partial_totient(std::int64_t n, std::int64_t k,
                                    const SieveTable& sieve) {
  sieve.require(k, "partial_totient");
  return partial_totient(n, factor_signature(k, sieve));
}

// ---- exact partial sums used by the theorem/lemma checkers ----

inline std::int64_t sum_phi(std::int64_t x, const SieveTable& sieve) {
  sieve.require(x, "sum_phi");
  std::int64_t s = 0;
  for (std::int64_t k = 1; k <= x; ++k) s += euler_phi(k, sieve);
  return s;
}

// Main term 3x^2/pi^2 of the totient-sum asymptotic.
inline double sum_phi_main_term(std::int64_t x) {
  return 0.5 * kCoprimeDensity * static_cast<double>(x) * static_cast<double>(x);
}

inline std::int64_t sum_omega(std::int64_t x, const SieveTable& sieve) {
  sieve.require(x, "sum_omega");
  std::int64_t s = 0;
  for (std::int64_t k = 2; k <= x; ++k)
    s += factor_signature(k, sieve).omega;
  return s;
}

inline std::int64_t sum_omega_sq(std::int64_t x, const SieveTable& sieve) {
  sieve.require(x, "sum_omega_sq");
  std::int64_t s = 0;
  for (std::int64_t k = 2; k <= x; ++k) {
    const std::int64_t w = factor_signature(k, sieve).omega;
    s += w * w;
  }
  return s;
}

// Sum of pi(k) for k <= x, standard convention pi(k) = #{p <= k}.
inline std::int64_t sum_pi(std::int64_t x, const SieveTable& sieve) {
  sieve.require(x, "sum_pi");
  std::int64_t s = 0;
  for (std::int64_t k = 2; k <= x; ++k) s += sieve.pi(k);
  return s;
}

// Sum of pi(k-1) = #{p < k} for 2 <= k <= x. This is the convention under
// which the closed form x*pi(x) - sum(p) is an identity; see lemmas.hpp.
inline std::int64_t sum_pi_strict(std::int64_t x, const SieveTable& sieve) {
  sieve.require(x, "sum_pi_strict");
  std::int64_t s = 0;
  for (std::int64_t k = 2; k <= x; ++k) s += sieve.pi(k - 1);
  return s;
}

inline std::int64_t sum_primes(std::int64_t x, const SieveTable& sieve) {
  sieve.require(x, "sum_primes");
  std::int64_t s = 0;
  for (std::int64_t p : sieve.primes) {
    if (p > x) break;
    s += p;
  }
  return s;
}

}  // namespace coprime
