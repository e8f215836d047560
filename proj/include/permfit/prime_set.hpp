#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace permfit {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// (prime, exponent) pairs, ascending by prime.
inline std::vector<std::pair<unsigned, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(static_cast<unsigned>(p), e);
  }
  if (n > 1) out.emplace_back(static_cast<unsigned>(n), 1u);
  return out;
}

inline std::vector<unsigned> prime_factors(std::uint64_t n) {
  std::vector<unsigned> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

/// Largest power of p dividing n.
inline std::uint64_t p_part(std::uint64_t n, unsigned p) {
  std::uint64_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

/// A finite or cofinite set of primes (pi and its complement pi').
class PrimeSet {
public:
  enum class Kind { Finite, Cofinite };

  PrimeSet() : kind_(Kind::Finite) {}

  static PrimeSet finite(std::vector<unsigned> primes) {
    return PrimeSet(Kind::Finite, std::move(primes));
  }

  /// All primes except the listed ones.
  static PrimeSet cofinite(std::vector<unsigned> primes) {
    return PrimeSet(Kind::Cofinite, std::move(primes));
  }

  static PrimeSet all_primes() { return cofinite({}); }

  Kind kind() const { return kind_; }
  const std::vector<unsigned>& listed() const { return primes_; }

  bool contains(unsigned p) const {
    bool in = std::binary_search(primes_.begin(), primes_.end(), p);
    return kind_ == Kind::Finite ? in : !in;
  }

  PrimeSet complement() const {
    PrimeSet c(*this);
    c.kind_ = (kind_ == Kind::Finite) ? Kind::Cofinite : Kind::Finite;
    return c;
  }

  bool is_finite() const { return kind_ == Kind::Finite; }

  /// The members of this set among `candidates` (e.g. sigma(G)); always finite.
  std::vector<unsigned> intersect(const std::vector<unsigned>& candidates) const {
    std::vector<unsigned> out;
    for (unsigned p : candidates)
      if (contains(p)) out.push_back(p);
    return out;
  }

  /// "{2,3}" or "~{2}"; "~{}" is the set of all primes.
  std::string to_string() const {
    std::string s = kind_ == Kind::Cofinite ? "~{" : "{";
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(primes_[i]);
    }
    s += '}';
    return s;
  }

  friend bool operator==(const PrimeSet& a, const PrimeSet& b) = default;

private:
  PrimeSet(Kind k, std::vector<unsigned> primes) : kind_(k), primes_(std::move(primes)) {
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
    for (unsigned p : primes_)
      if (!is_prime(p))
        throw std::invalid_argument("not a prime: " + std::to_string(p));
  }

  Kind kind_;
  std::vector<unsigned> primes_;
};

/// pi-part of n: product of p_part(n, p) over primes p of n lying in pi.
inline std::uint64_t pi_part(std::uint64_t n, const PrimeSet& pi) {
  std::uint64_t q = 1;
  for (auto [p, e] : factorize(n))
    if (pi.contains(p)) q *= p_part(n, p);
  return q;
}

}  // namespace permfit
