#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace skms {

// All arithmetic in this library is exact. Rat is a canonicalized
// arbitrary-precision rational, Int an arbitrary-precision integer.
using Int = mpz_class;
using Rat = mpq_class;

using QVec = std::vector<Rat>;
using ZVec = std::vector<Int>;

inline int sign(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }
inline int sign(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

/// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed input.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw std::invalid_argument("malformed rational literal: " + s);
  }
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const Rat& x) { return x.get_str(); }

inline Int rat_floor(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

inline Int rat_ceil(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

inline QVec qvec_from_ints(const ZVec& v) {
  QVec out;
  out.reserve(v.size());
  for (const Int& x : v) out.emplace_back(x);
  return out;
}

/// Deterministic splitmix64 stream; used for all seeded sampling so that
/// reports are reproducible across runs and thread counts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  /// Small random rational in [-bound, bound] with denominator <= max_den.
  Rat rational(long bound = 4, unsigned long max_den = 8) {
    long num = static_cast<long>(below(2 * static_cast<std::uint64_t>(bound) * max_den + 1)) -
               bound * static_cast<long>(max_den);
    unsigned long den = 1 + below(max_den);
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

  /// Deterministically derives an independent stream for a named sub-task.
  Rng fork(const std::string& label) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : label) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
    return Rng(state_ ^ h);
  }

 private:
  std::uint64_t state_;
};

}  // namespace skms
