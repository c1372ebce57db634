#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "qcrys/radical.hpp"

namespace qcrys {

/// Sparse square operator over Radical, stored by columns: column s maps
/// target ordinals to coefficients.
///
/// Besides its entries an operator remembers which source states "leak":
/// some application on that source tried to leave a truncated carrier space
/// and was replaced by zero. Leaks propagate through sums and products, so
/// a relation residual on a state can be traced back to truncation.
class LinOp {
 public:
  using Column = std::map<std::size_t, Radical>;
  using Entry = std::tuple<std::size_t, std::size_t, Radical>;  // from, to, coeff

  LinOp() = default;
  explicit LinOp(std::size_t dim) : cols_(dim) {}

  static LinOp identity(std::size_t dim);
  static LinOp diagonal(const std::vector<Radical>& values);

  std::size_t dim() const { return cols_.size(); }
  const Column& column(std::size_t source) const { return cols_.at(source); }
  Radical entry(std::size_t source, std::size_t target) const;
  /// Adds c to entry (source -> target); entries that cancel are erased.
  void add(std::size_t source, std::size_t target, const Radical& c);
  std::size_t nonzeros() const;
  bool is_zero() const;
  /// All entries ordered by (from, to).
  std::vector<Entry> entries() const;

  const std::set<std::size_t>& leaks() const { return leaks_; }
  bool leaks_from(std::size_t source) const { return leaks_.count(source) > 0; }
  void mark_leak(std::size_t source) { leaks_.insert(source); }

  LinOp& operator+=(const LinOp& o);
  LinOp& operator-=(const LinOp& o);
  friend LinOp operator+(LinOp a, const LinOp& b) { return a += b; }
  friend LinOp operator-(LinOp a, const LinOp& b) { return a -= b; }
  friend LinOp operator*(const Radical& c, const LinOp& a);
  /// Composition: (a * b) applies b first.
  friend LinOp operator*(const LinOp& a, const LinOp& b);
  /// Entry equality; leak marks are bookkeeping and do not take part.
  friend bool operator==(const LinOp& a, const LinOp& b) { return a.cols_ == b.cols_; }

  /// The operator applied to one basis vector.
  Column apply(std::size_t source) const { return column(source); }
  /// Entrywise transpose (no conjugation).
  LinOp transpose() const;

 private:
  void require_same_dim(const LinOp& o, const char* what) const;
  std::vector<Column> cols_;
  std::set<std::size_t> leaks_;
};

LinOp commutator(const LinOp& a, const LinOp& b);

/// a^k for k >= 0.
LinOp power(const LinOp& a, int k);

}  // namespace qcrys
