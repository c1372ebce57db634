#include "qcrys/linop.hpp"

#include <stdexcept>
#include <string>

namespace qcrys {

LinOp LinOp::identity(std::size_t dim) {
  LinOp out(dim);
  for (std::size_t k = 0; k < dim; ++k) out.add(k, k, Radical(1));
  return out;
}

LinOp LinOp::diagonal(const std::vector<Radical>& values) {
  LinOp out(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) out.add(k, k, values[k]);
  return out;
}

Radical LinOp::entry(std::size_t source, std::size_t target) const {
  const Column& c = column(source);
  auto it = c.find(target);
  return it == c.end() ? Radical() : it->second;
}

void LinOp::add(std::size_t source, std::size_t target, const Radical& c) {
  if (target >= dim()) throw std::out_of_range("LinOp::add: target out of range");
  if (c.is_zero()) return;
  Column& col = cols_.at(source);
  auto [it, inserted] = col.emplace(target, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) col.erase(it);
  }
}

std::size_t LinOp::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

bool LinOp::is_zero() const { return nonzeros() == 0; }

std::vector<LinOp::Entry> LinOp::entries() const {
  std::vector<Entry> out;
  for (std::size_t s = 0; s < dim(); ++s)
    for (const auto& [t, c] : cols_[s]) out.emplace_back(s, t, c);
  return out;
}

void LinOp::require_same_dim(const LinOp& o, const char* what) const {
  if (dim() != o.dim())
    throw std::domain_error(std::string(what) + ": dimension mismatch " + std::to_string(dim()) + " vs " +
                            std::to_string(o.dim()));
}

LinOp& LinOp::operator+=(const LinOp& o) {
  require_same_dim(o, "LinOp +");
  for (std::size_t s = 0; s < dim(); ++s)
    for (const auto& [t, c] : o.cols_[s]) add(s, t, c);
  leaks_.insert(o.leaks_.begin(), o.leaks_.end());
  return *this;
}

LinOp& LinOp::operator-=(const LinOp& o) {
  require_same_dim(o, "LinOp -");
  for (std::size_t s = 0; s < dim(); ++s)
    for (const auto& [t, c] : o.cols_[s]) add(s, t, -c);
  leaks_.insert(o.leaks_.begin(), o.leaks_.end());
  return *this;
}

LinOp operator*(const Radical& c, const LinOp& a) {
  LinOp out(a.dim());
  out.leaks_ = a.leaks_;
  if (c.is_zero()) return out;
  for (std::size_t s = 0; s < a.dim(); ++s)
    for (const auto& [t, v] : a.cols_[s]) out.cols_[s].emplace(t, c * v);
  return out;
}

LinOp operator*(const LinOp& a, const LinOp& b) {
  a.require_same_dim(b, "LinOp compose");
  LinOp out(a.dim());
  for (std::size_t s = 0; s < b.dim(); ++s) {
    bool leaked = b.leaks_from(s);
    for (const auto& [mid, cb] : b.cols_[s]) {
      leaked = leaked || a.leaks_from(mid);
      for (const auto& [t, ca] : a.cols_[mid]) out.add(s, t, ca * cb);
    }
    if (leaked) out.leaks_.insert(s);
  }
  return out;
}

LinOp LinOp::transpose() const {
  LinOp out(dim());
  for (std::size_t s = 0; s < dim(); ++s)
    for (const auto& [t, c] : cols_[s]) out.cols_[t].emplace(s, c);
  return out;
}

LinOp commutator(const LinOp& a, const LinOp& b) { return a * b - b * a; }

LinOp power(const LinOp& a, int k) {
  if (k < 0) throw std::domain_error("power: negative exponent");
  LinOp out = LinOp::identity(a.dim());
  for (int j = 0; j < k; ++j) out = a * out;
  return out;
}

}  // namespace qcrys
