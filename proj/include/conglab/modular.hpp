#pragma once

// Conjugacy bookkeeping in SL2(Z) / PSL2(Z): trace classification,
// primitivity of hyperbolic elements, and exact per-trace class counts via
// form-cycle enumeration. Counting convention: classes are PSL2(Z) classes
// of elements with trace +-t, represented with positive trace; the SL2(Z)
// count pooled over both trace signs is exactly twice that.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

#include "conglab/forms.hpp"
#include "conglab/mat2.hpp"
#include "conglab/numeric.hpp"

namespace conglab {

enum class ElementKind { Elliptic, Parabolic, Hyperbolic };

std::string to_string(ElementKind k);

/// Trace trichotomy for determinant-one matrices; throws on det != 1.
ElementKind classify(const IntMat2& m);
ElementKind classify(const Mat2i& m);

struct ConjugacyClass {
  std::int64_t trace = 0;  // positive representative trace
  IntMat2 representative;  // trace(representative) == trace
  std::vector<BinaryQuadraticForm> canonical_cycle;
  bool primitive = false;
};

struct Mu0Row {
  std::int64_t trace = 0;
  std::int64_t mu0 = 0;         // primitive PSL2(Z) classes of trace +-t
  std::int64_t mu0_sl2 = 0;     // primitive SL2(Z) classes pooled over both signs (= 2*mu0)
  Int discriminant;             // t^2 - 4
  std::int64_t n_cycles = 0;    // all classes of trace +-t, primitive or not
};

/// Per-trace class store. Reads may run concurrently; insertion is
/// serialized behind a writer lock. Count rows can be persisted to / read
/// from the CSV cache format `trace,mu0,discriminant,n_cycles`.
class ClassTable {
 public:
  static constexpr const char* kCsvHeader = "trace,mu0,discriminant,n_cycles";

  /// All PSL2 conjugacy classes with |trace| = t (t >= 3), primitive flag
  /// included, in canonical (cycle-sorted) order.
  std::vector<ConjugacyClass> classes(std::int64_t t);

  Mu0Row mu0(std::int64_t t);

  /// Loads count rows; returns false (and leaves the table unchanged) on a
  /// missing file, bad header, or inconsistent row, so callers recompute
  /// instead of trusting a corrupt cache.
  bool load_csv_file(const std::string& path);
  bool load_csv(std::istream& in);

  /// Writes every cached count row, sorted by trace, under the fixed header.
  void save_csv(std::ostream& out) const;
  void save_csv_file(const std::string& path) const;

 private:
  std::vector<ConjugacyClass> compute_classes(std::int64_t t);

  mutable std::shared_mutex mutex_;
  std::map<std::int64_t, std::vector<ConjugacyClass>> classes_;
  std::map<std::int64_t, Mu0Row> counts_;
};

/// Traces of k-th powers: tr(beta^k) as a polynomial in s = tr(beta),
/// via t_0 = 2, t_1 = s, t_k = s t_{k-1} - t_{k-2}.
Int power_trace(const Int& s, int k);

/// True iff no beta in SL2(Z) and k >= 2 satisfy beta^k = +-m.
/// Requires m hyperbolic with det 1.
bool is_primitive(const IntMat2& m, ClassTable& table);
bool is_primitive(const IntMat2& m);

}  // namespace conglab
