#include "qcrys/squarefree.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace qcrys {

namespace {

constexpr unsigned long kSieveLimit = 1UL << 16;
constexpr int kRhoAttempts = 40;
constexpr unsigned long kRhoIterations = 1UL << 22;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kSieveLimit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long p = 2; p <= kSieveLimit; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (unsigned long k = p * p; k <= kSieveLimit; k += p) composite[k] = true;
    }
    return out;
  }();
  return primes;
}

bool is_probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
Integer rho_factor(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (int attempt = 0; attempt < kRhoAttempts; ++attempt) {
    const Integer c = attempt + 1;
    Integer y = attempt + 2, x, ys, g = 1, prod = 1, diff;
    unsigned long r = 1, total = 0;
    constexpr unsigned long batch = 128;
    while (g == 1 && total < kRhoIterations) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long steps = std::min(batch, r - k);
        for (unsigned long i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          diff = abs(x - y);
          prod = (prod * diff) % n;
        }
        g = gcd(prod, n);
        k += steps;
        total += steps;
      }
      r *= 2;
    }
    if (g == n) {
      // batch overshot; backtrack one step at a time
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

void collect_factors(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    std::map<Integer, unsigned> half;
    collect_factors(r, half);
    for (const auto& [p, e] : half) out[p] += 2 * e;
    return;
  }
  if (is_probable_prime(n)) {
    out[n] += 1;
    return;
  }
  // Every prime factor exceeds the sieve limit here; below limit^3 a
  // composite that is not a square must be a product of two distinct
  // primes, which contributes nothing to the square part.
  const Integer cube = Integer(kSieveLimit) * kSieveLimit * kSieveLimit;
  if (n < cube) {
    out[n] += 1;  // squarefree cofactor, kept whole
    return;
  }
  const Integer f = rho_factor(n);
  if (f == 0) throw std::runtime_error("square_split: could not factor " + n.get_str() + " within budget");
  collect_factors(f, out);
  collect_factors(n / f, out);
}

SquareSplit compute_split(Integer n) {
  SquareSplit s{1, 1};
  for (unsigned long p : small_primes()) {
    if (n == 1) break;
    if (Integer(p) * p > n) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) s.root *= p;
    if (e % 2) s.kernel *= p;
  }
  if (n == 1) return s;
  if (n <= Integer(kSieveLimit) * kSieveLimit) {
    // n has no factor below the sieve limit and is below its square: prime.
    s.kernel *= n;
    return s;
  }
  std::map<Integer, unsigned> factors;
  collect_factors(n, factors);
  // Cofactors kept whole in collect_factors are squarefree but possibly
  // composite; distinct entries may still share a prime with one another.
  std::vector<Integer> parts;
  for (const auto& [p, e] : factors) {
    for (unsigned k = 0; k < e / 2; ++k) s.root *= p;
    if (e % 2) parts.push_back(p);
  }
  Integer kernel = 1;
  for (const auto& part : parts) {
    const Integer g = gcd(kernel, part);
    kernel = (kernel / g) * (part / g);
    s.root *= g;
  }
  s.kernel *= kernel;
  return s;
}

}  // namespace

SquareSplit square_split(const Integer& n) {
  if (n <= 0) throw std::domain_error("square_split: argument must be positive");
  static std::mutex mutex;
  static std::map<Integer, SquareSplit> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  SquareSplit s = compute_split(n);
  std::lock_guard lock(mutex);
  cache.emplace(n, s);
  return s;
}

}  // namespace qcrys
