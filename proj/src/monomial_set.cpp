#include "extremal/monomial_set.hpp"

#include <algorithm>

#include "extremal/errors.hpp"

namespace extremal {

MonomialSet::MonomialSet(int n) : n_(n) {
  if (n < 1) throw dimension_error("monomial set dimension must be positive");
}

MonomialSet::MonomialSet(int n, std::set<Monomial> elements) : MonomialSet(n) {
  for (const Monomial& m : elements)
    if (m.dimension() != n) throw dimension_error("monomial set element dimension mismatch");
  elems_ = std::move(elements);
}

void MonomialSet::insert(const Monomial& m) {
  if (m.dimension() != n_) throw dimension_error("monomial set element dimension mismatch");
  elems_.insert(m);
}

bool MonomialSet::is_down_set() const {
  for (const Monomial& m : elems_) {
    std::vector<int> e = m.exponents();
    for (int i = 0; i < n_; ++i) {
      if (e[static_cast<std::size_t>(i)] == 0) continue;
      e[static_cast<std::size_t>(i)] -= 1;
      if (elems_.count(Monomial(e)) == 0) return false;
      e[static_cast<std::size_t>(i)] += 1;
    }
  }
  return true;
}

int MonomialSet::max_exponent() const {
  int best = 0;
  for (const Monomial& m : elems_) best = std::max(best, m.max_exponent());
  return best;
}

std::vector<std::string> MonomialSet::to_strings(const LexOrder& ord) const {
  std::vector<const Monomial*> sorted;
  sorted.reserve(elems_.size());
  for (const Monomial& m : elems_) sorted.push_back(&m);
  std::sort(sorted.begin(), sorted.end(),
            [&](const Monomial* a, const Monomial* b) { return lex_less(*a, *b, ord); });
  std::vector<std::string> out;
  out.reserve(sorted.size());
  for (const Monomial* m : sorted) out.push_back(m->str());
  return out;
}

}  // namespace extremal
