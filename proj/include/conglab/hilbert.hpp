#pragma once

// Local Hilbert symbols over Q and the split/division decision for
// quaternion algebras. The symbol (a,b)_v records whether z^2 = ax^2 + by^2
// has a nontrivial solution over the completion at v; the algebra is
// division iff some place has symbol -1, and split verdicts carry an
// explicit isotropic vector of the norm form found by bounded search.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "conglab/numeric.hpp"
#include "conglab/quaternion.hpp"

namespace conglab {

struct Place {
  bool is_infinite = false;
  Int prime = 0;  // meaningful only for finite places

  static Place infinity() { return Place{true, 0}; }
  static Place at(Int p) { return Place{false, std::move(p)}; }

  friend bool operator==(const Place& x, const Place& y) {
    return x.is_infinite == y.is_infinite && (x.is_infinite || x.prime == y.prime);
  }
  friend bool operator<(const Place& x, const Place& y) {
    if (x.is_infinite != y.is_infinite) return !x.is_infinite;  // finite places first
    return !x.is_infinite && x.prime < y.prime;
  }

  std::string str() const { return is_infinite ? "inf" : prime.str(); }
};

/// (a,b)_v for nonzero rationals; returns +1 or -1.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// Places where (a,b)_v can be -1: infinity, 2, and odd primes dividing a
/// numerator or denominator of a or b. Sorted, deduplicated.
std::vector<Place> candidate_places(const Rational& a, const Rational& b);

/// Places with symbol -1; always an even-sized set (Hilbert reciprocity).
std::vector<Place> ramified_places(const Rational& a, const Rational& b);

enum class SplitVerdict { Split, Division };

struct SplittingCertificate {
  SplitVerdict verdict;
  /// Split case: a nonzero rational vector annihilating the norm form
  /// x0^2 - a x1^2 - b x2^2 + ab x3^2, re-verified exactly on construction.
  std::array<Rational, 4> witness{};
  /// Division case: the ramified places (even count, nonempty).
  std::vector<Place> ramified;
};

struct search_exhausted : std::runtime_error {
  explicit search_exhausted(std::int64_t bound)
      : std::runtime_error("isotropy search exhausted at height bound " + std::to_string(bound)),
        height_bound(bound) {}
  std::int64_t height_bound;
};

/// Decides split vs division via local symbols; in the split case searches
/// for an isotropic vector up to the given height and throws
/// search_exhausted if none is found within the bound.
SplittingCertificate is_division(const QuaternionAlgebra& alg, std::int64_t height_bound = 10000);

/// a = squarefree_part * (square); the returned integer is squarefree and
/// has a's sign and square class.
Int squarefree_part(const Rational& a);

}  // namespace conglab
