#include "extremal/polynomial.hpp"

#include <algorithm>

#include "extremal/errors.hpp"

namespace extremal {

Polynomial::Polynomial(int n) : n_(n) {
  if (n < 1) throw dimension_error("polynomial dimension must be positive");
}

Polynomial Polynomial::constant(int n, const Rational& c) {
  Polynomial p(n);
  p.add_term(Monomial::unit(n), c);
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.dimension());
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::variable(int n, int var) {
  return monomial(Monomial::variable(n, var));
}

Polynomial Polynomial::from_terms(int n, const std::vector<std::pair<Monomial, Rational>>& terms) {
  Polynomial p(n);
  for (const auto& [m, c] : terms) p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.dimension() != n_) throw dimension_error("term dimension mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.n_ != n_) throw dimension_error("polynomial sum dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.n_ != n_) throw dimension_error("polynomial difference dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(n_);
  if (c.is_zero()) return r;
  for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
  return r;
}

Polynomial Polynomial::operator*(const Monomial& m) const {
  Polynomial r(n_);
  for (const auto& [mono, coeff] : terms_) r.terms_.emplace(mono.times(m), coeff);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (o.n_ != n_) throw dimension_error("polynomial product dimension mismatch");
  Polynomial r(n_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

Rational Polynomial::evaluate(const Point& v) const {
  if (static_cast<int>(v.size()) != n_) throw dimension_error("evaluation point dimension mismatch");
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    mpz_class value(1);
    for (int i = 0; i < n_; ++i) {
      const int e = m.exponent(i);
      if (e == 0) continue;
      value *= int_pow(mpz_class(v[static_cast<std::size_t>(i)]), static_cast<unsigned long>(e));
    }
    sum += c * Rational(value);
  }
  return sum;
}

std::string Polynomial::str(const LexOrder& ord) const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, Rational>*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(), [&](const auto* a, const auto* b) {
    return lex_less(b->first, a->first, ord);  // descending
  });
  std::string out;
  bool first = true;
  for (const auto* t : sorted) {
    const Rational& c = t->second;
    const Rational a = c.abs();
    if (first) {
      out += (c.sign() < 0) ? "-" : "";
      first = false;
    } else {
      out += (c.sign() < 0) ? " - " : " + ";
    }
    if (t->first.is_unit()) {
      out += a.str();
    } else if (a.is_one()) {
      out += t->first.str();
    } else {
      out += a.str() + "*" + t->first.str();
    }
  }
  return out;
}

Monomial leading_monomial(const Polynomial& p, const LexOrder& ord) {
  if (p.is_zero()) throw domain_error("leading monomial of the zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms()) {
    if (!best || lex_less(*best, m, ord)) best = &m;
  }
  return *best;
}

std::optional<Monomial> dominating_term(const Polynomial& p) {
  if (p.is_zero()) throw domain_error("dominating term of the zero polynomial");
  for (const auto& [m, c] : p.terms()) {
    bool dominates = true;
    for (const auto& [other, c2] : p.terms()) {
      if (!divides(other, m)) {
        dominates = false;
        break;
      }
    }
    if (dominates) {
      if (!c.is_one()) return std::nullopt;
      return m;
    }
  }
  return std::nullopt;
}

}  // namespace extremal
