#include "extremal/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "extremal/errors.hpp"

namespace extremal {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_)
    if (e < 0) throw domain_error("negative exponent in monomial");
}

Monomial Monomial::unit(int n) {
  return Monomial(std::vector<int>(static_cast<std::size_t>(n), 0));
}

Monomial Monomial::variable(int n, int var, int exp) {
  if (var < 0 || var >= n) throw dimension_error("variable index out of range");
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(var)] = exp;
  return Monomial(std::move(e));
}

int Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_square_free() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

int Monomial::max_exponent() const {
  if (exps_.empty()) return 0;
  return *std::max_element(exps_.begin(), exps_.end());
}

Monomial Monomial::times(const Monomial& o) const {
  if (o.dimension() != dimension()) throw dimension_error("monomial product dimension mismatch");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::quotient(const Monomial& d) const {
  if (d.dimension() != dimension()) throw dimension_error("monomial quotient dimension mismatch");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] -= d.exps_[i];
    if (e[i] < 0) throw domain_error("monomial quotient is not exact");
  }
  return Monomial(std::move(e));
}

std::string Monomial::str() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

LexOrder::LexOrder(std::vector<int> priority) : priority_(std::move(priority)) {
  const int n = static_cast<int>(priority_.size());
  if (n == 0) throw dimension_error("empty lex order");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : priority_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw domain_error("lex order priority is not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

LexOrder LexOrder::standard(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return LexOrder(std::move(p));
}

LexOrder LexOrder::from_one_based(const std::vector<int>& priority) {
  std::vector<int> p;
  p.reserve(priority.size());
  for (int v : priority) p.push_back(v - 1);
  return LexOrder(std::move(p));
}

std::vector<int> LexOrder::one_based() const {
  std::vector<int> p;
  p.reserve(priority_.size());
  for (int v : priority_) p.push_back(v + 1);
  return p;
}

std::vector<LexOrder> LexOrder::all(int n, int guard) {
  if (n > guard)
    throw guard_error("lex order enumeration guard exceeded: n=" + std::to_string(n) +
                      " > " + std::to_string(guard));
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<LexOrder> orders;
  do {
    orders.push_back(LexOrder(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return orders;
}

std::string LexOrder::str() const {
  std::string out;
  for (std::size_t i = 0; i < priority_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(priority_[i] + 1);
  }
  return out;
}

Ordering compare(const Monomial& a, const Monomial& b, const LexOrder& ord) {
  if (a.dimension() != b.dimension() || a.dimension() != ord.dimension())
    throw dimension_error("compare dimension mismatch");
  for (int var : ord.priority()) {
    const int ea = a.exponent(var);
    const int eb = b.exponent(var);
    if (ea != eb) return ea < eb ? Ordering::less : Ordering::greater;
  }
  return Ordering::equal;
}

bool lex_less(const Monomial& a, const Monomial& b, const LexOrder& ord) {
  return compare(a, b, ord) == Ordering::less;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.dimension() != b.dimension()) throw dimension_error("divides dimension mismatch");
  for (int i = 0; i < a.dimension(); ++i)
    if (a.exponent(i) > b.exponent(i)) return false;
  return true;
}

}  // namespace extremal
