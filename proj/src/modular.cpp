#include "conglab/modular.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace conglab {

std::string to_string(ElementKind k) {
  switch (k) {
    case ElementKind::Elliptic: return "elliptic";
    case ElementKind::Parabolic: return "parabolic";
    case ElementKind::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

ElementKind classify(const IntMat2& m) {
  if (m.det() != 1) throw std::domain_error("classify: determinant must be 1");
  Int t = abs(m.trace());
  if (t < 2) return ElementKind::Elliptic;
  if (t == 2) return ElementKind::Parabolic;
  return ElementKind::Hyperbolic;
}

ElementKind classify(const Mat2i& m) {
  if (m.det() != 1) throw std::domain_error("classify: determinant must be 1");
  std::int64_t t = m.trace();
  if (t < 0) t = -t;
  if (t < 2) return ElementKind::Elliptic;
  if (t == 2) return ElementKind::Parabolic;
  return ElementKind::Hyperbolic;
}

Int power_trace(const Int& s, int k) {
  if (k < 0) throw std::domain_error("power_trace: exponent must be nonnegative");
  Int prev = 2, cur = s;
  if (k == 0) return prev;
  for (int i = 1; i < k; ++i) {
    Int next = s * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

/// (k, s) pairs with k >= 2, s >= 3 and tr(beta^k) = t for tr(beta) = s.
std::vector<std::pair<int, std::int64_t>> power_trace_roots(std::int64_t t) {
  std::vector<std::pair<int, std::int64_t>> out;
  for (int k = 2;; ++k) {
    Int smallest = power_trace(3, k);
    if (smallest > t) break;
    for (std::int64_t s = 3;; ++s) {
      Int tk = power_trace(Int(s), k);
      if (tk > t) break;
      if (tk == t) out.emplace_back(k, s);
    }
  }
  return out;
}

}  // namespace

std::vector<ConjugacyClass> ClassTable::compute_classes(std::int64_t t) {
  if (t < 3) throw std::domain_error("classes: trace must be >= 3");
  Int D = Int(t) * t - 4;
  std::vector<BinaryQuadraticForm> forms = reduced_forms(D);

  std::vector<ConjugacyClass> out;
  std::set<BinaryQuadraticForm> seen;
  for (const auto& f : forms) {
    if (seen.count(f)) continue;
    ConjugacyClass cls;
    cls.trace = t;
    cls.canonical_cycle = reduce_cycle(f);
    for (const auto& g : cls.canonical_cycle) seen.insert(g);
    cls.representative = form_to_matrix(cls.canonical_cycle.front(), Int(t));
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const ConjugacyClass& x, const ConjugacyClass& y) {
    return x.canonical_cycle < y.canonical_cycle;
  });

  // Primitivity: a class is a k-th power iff its cycle appears among the
  // cycles of beta^k over classes beta of the root trace.
  std::set<std::vector<BinaryQuadraticForm>> power_cycles;
  for (const auto& [k, s] : power_trace_roots(t)) {
    for (const auto& root : classes(s)) {
      IntMat2 powered = mat_pow(root.representative, static_cast<unsigned>(k));
      power_cycles.insert(reduce_cycle(matrix_to_form(powered)));
    }
  }
  for (auto& cls : out) cls.primitive = !power_cycles.count(cls.canonical_cycle);
  return out;
}

std::vector<ConjugacyClass> ClassTable::classes(std::int64_t t) {
  {
    std::shared_lock lock(mutex_);
    auto it = classes_.find(t);
    if (it != classes_.end()) return it->second;
  }
  std::vector<ConjugacyClass> result = compute_classes(t);
  {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = classes_.emplace(t, std::move(result));
    return it->second;
  }
}

Mu0Row ClassTable::mu0(std::int64_t t) {
  if (t < 3) throw std::domain_error("mu0: trace must be >= 3");
  {
    std::shared_lock lock(mutex_);
    auto it = counts_.find(t);
    if (it != counts_.end()) return it->second;
  }
  std::vector<ConjugacyClass> cls = classes(t);
  Mu0Row row;
  row.trace = t;
  row.n_cycles = static_cast<std::int64_t>(cls.size());
  row.mu0 = static_cast<std::int64_t>(
      std::count_if(cls.begin(), cls.end(), [](const ConjugacyClass& c) { return c.primitive; }));
  row.mu0_sl2 = 2 * row.mu0;
  row.discriminant = Int(t) * t - 4;
  {
    std::unique_lock lock(mutex_);
    counts_.emplace(t, row);
  }
  return row;
}

bool ClassTable::load_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) return false;

  std::map<std::int64_t, Mu0Row> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string field;
    Mu0Row row;
    try {
      if (!std::getline(ss, field, ',')) return false;
      row.trace = std::stoll(field);
      if (!std::getline(ss, field, ',')) return false;
      row.mu0 = std::stoll(field);
      if (!std::getline(ss, field, ',')) return false;
      row.discriminant = Int(field);
      if (!std::getline(ss, field, ',')) return false;
      row.n_cycles = std::stoll(field);
    } catch (const std::exception&) {
      return false;
    }
    row.mu0_sl2 = 2 * row.mu0;
    // Consistency: a row that contradicts the trace is corruption.
    if (row.trace < 3 || row.mu0 < 1 || row.n_cycles < row.mu0 ||
        row.discriminant != Int(row.trace) * row.trace - 4) {
      return false;
    }
    rows[row.trace] = row;
  }
  std::unique_lock lock(mutex_);
  for (auto& [t, row] : rows) counts_.insert_or_assign(t, row);
  return true;
}

bool ClassTable::load_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return false;
  return load_csv(in);
}

void ClassTable::save_csv(std::ostream& out) const {
  std::shared_lock lock(mutex_);
  out << kCsvHeader << "\n";
  for (const auto& [t, row] : counts_) {
    out << row.trace << "," << row.mu0 << "," << row.discriminant.str() << "," << row.n_cycles
        << "\n";
  }
}

void ClassTable::save_csv_file(const std::string& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write cache file: " + path);
  save_csv(out);
}

bool is_primitive(const IntMat2& m, ClassTable& table) {
  if (classify(m) != ElementKind::Hyperbolic)
    throw std::domain_error("is_primitive: matrix must be hyperbolic");
  IntMat2 rep = m.trace() > 0 ? m : -m;  // positive-trace representative in PSL2
  Int t = rep.trace();
  if (t > Int(1) << 40)
    throw std::domain_error("is_primitive: trace out of supported range");
  std::int64_t ti = t.convert_to<std::int64_t>();
  std::vector<BinaryQuadraticForm> cycle = reduce_cycle(matrix_to_form(rep));
  for (const auto& [k, s] : power_trace_roots(ti)) {
    for (const auto& root : table.classes(s)) {
      IntMat2 powered = mat_pow(root.representative, static_cast<unsigned>(k));
      if (reduce_cycle(matrix_to_form(powered)) == cycle) return false;
    }
  }
  return true;
}

bool is_primitive(const IntMat2& m) {
  ClassTable table;
  return is_primitive(m, table);
}

}  // namespace conglab
