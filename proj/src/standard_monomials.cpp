#include "extremal/standard_monomials.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>

#include "extremal/errors.hpp"
#include "extremal/rational.hpp"

namespace extremal {

namespace {

// The sectioning recursion works on points reordered by significance
// (column 0 most significant) and sorted suffix-major, so that the sections
// of every recursion node are contiguous ranges. Monomials over the d most
// significant variables are hash-consed into dense ids per level, which keeps
// the merge step at O(1) per occurrence.
class SmBuilder {
 public:
  SmBuilder(std::vector<std::vector<int>> pts, int n, OpCounter* counter)
      : pts_(std::move(pts)), n_(n), counter_(counter) {
    pack_ = pts_.size() + 1;
    decode_.resize(static_cast<std::size_t>(n_) + 1);
    intern_.resize(static_cast<std::size_t>(n_) + 1);
  }

  std::vector<std::vector<int>> run() {
    std::sort(pts_.begin(), pts_.end(), [this](const auto& a, const auto& b) {
      for (int j = n_ - 1; j >= 0; --j) {
        if (a[static_cast<std::size_t>(j)] != b[static_cast<std::size_t>(j)])
          return a[static_cast<std::size_t>(j)] < b[static_cast<std::size_t>(j)];
      }
      return false;
    });
    std::vector<int> top = solve(0, pts_.size(), n_);
    std::vector<std::vector<int>> out;
    out.reserve(top.size());
    for (int id : top) {
      std::vector<int> exps(static_cast<std::size_t>(n_), 0);
      int cur = id;
      for (int d = n_; d >= 2; --d) {
        const auto& [child, w] = decode_[static_cast<std::size_t>(d)][static_cast<std::size_t>(cur)];
        exps[static_cast<std::size_t>(d - 1)] = w;
        cur = child;
      }
      exps[0] = cur;  // level-1 id is the exponent itself
      out.push_back(std::move(exps));
    }
    return out;
  }

 private:
  void count(std::uint64_t c) {
    if (counter_) counter_->steps += c;
  }

  // Standard monomial ids at level d for the points in [lo, hi).
  std::vector<int> solve(std::size_t lo, std::size_t hi, int d) {
    if (d == 1) {
      // Points in the range differ only in column 0, so all values are
      // distinct and the section contributes exponents 0..size-1.
      const std::size_t m = hi - lo;
      count(m);
      std::vector<int> ids(m);
      std::iota(ids.begin(), ids.end(), 0);
      return ids;
    }
    const std::size_t col = static_cast<std::size_t>(d - 1);
    std::unordered_map<int, int> multiplicity;
    std::size_t a = lo;
    while (a < hi) {
      std::size_t b = a;
      while (b < hi && pts_[b][col] == pts_[a][col]) ++b;
      count(b - a);
      std::vector<int> sub = solve(a, b, d - 1);
      for (int id : sub) {
        count(1);
        ++multiplicity[id];
      }
      a = b;
    }
    std::vector<int> out;
    auto& table = intern_[static_cast<std::size_t>(d)];
    auto& codes = decode_[static_cast<std::size_t>(d)];
    for (const auto& [id, mult] : multiplicity) {
      for (int w = 0; w < mult; ++w) {
        count(1);
        const std::uint64_t key = static_cast<std::uint64_t>(id) * pack_ +
                                  static_cast<std::uint64_t>(w);
        auto [it, inserted] = table.emplace(key, static_cast<int>(codes.size()));
        if (inserted) codes.emplace_back(id, w);
        out.push_back(it->second);
      }
    }
    return out;
  }

  std::vector<std::vector<int>> pts_;
  int n_;
  OpCounter* counter_;
  std::uint64_t pack_;
  std::vector<std::vector<std::pair<int, int>>> decode_;
  std::vector<std::unordered_map<std::uint64_t, int>> intern_;
};

}  // namespace

SmResult sm_lex(const PointSet& v, const LexOrder& ord, OpCounter* counter) {
  const int n = v.dimension();
  if (ord.dimension() != n) throw dimension_error("lex order dimension differs from point set");
  MonomialSet sm(n);
  if (v.empty()) return {ord, sm};

  // Reorder coordinates by priority: column j holds the j-th most significant
  // coordinate.
  std::vector<std::vector<int>> pts;
  pts.reserve(v.size());
  for (const Point& p : v.points()) {
    std::vector<int> y(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      y[static_cast<std::size_t>(j)] = p[static_cast<std::size_t>(ord.priority()[static_cast<std::size_t>(j)])];
    pts.push_back(std::move(y));
  }
  SmBuilder builder(std::move(pts), n, counter);
  for (std::vector<int>& yexps : builder.run()) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j)
      exps[static_cast<std::size_t>(ord.priority()[static_cast<std::size_t>(j)])] =
          yexps[static_cast<std::size_t>(j)];
    sm.insert(Monomial(std::move(exps)));
  }
  return {ord, sm};
}

namespace {

struct overflow_escape {};

// Exact rank maintenance over the integers. Rows are kept primitive (content
// divided out), pivots are the first nonzero entry in acceptance order.
// Scaling rows by positive rationals never changes linear independence, so
// the accept/reject answers agree with Gaussian elimination over Q.
template <typename Z>
class GreedyRank {
 public:
  // Reduces `vec` against the accepted rows; keeps it when independent.
  bool try_accept(std::vector<Z> vec) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Z& lead = vec[static_cast<std::size_t>(pivot_[i])];
      if (lead == 0) continue;
      eliminate(vec, rows_[i], pivot_[i]);
    }
    int p = -1;
    for (std::size_t j = 0; j < vec.size(); ++j) {
      if (vec[j] != 0) {
        p = static_cast<int>(j);
        break;
      }
    }
    if (p < 0) return false;
    normalize(vec);
    rows_.push_back(std::move(vec));
    pivot_.push_back(p);
    return true;
  }

 private:
  static void normalize(std::vector<Z>& vec);
  static void eliminate(std::vector<Z>& vec, const std::vector<Z>& row, int col);

  std::vector<std::vector<Z>> rows_;
  std::vector<int> pivot_;
};

std::int64_t checked_narrow(__int128 x) {
  constexpr __int128 kLimit = static_cast<__int128>(1) << 62;
  if (x >= kLimit || x <= -kLimit) throw overflow_escape{};
  return static_cast<std::int64_t>(x);
}

__int128 abs128(__int128 x) { return x < 0 ? -x : x; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

template <>
void GreedyRank<std::int64_t>::eliminate(std::vector<std::int64_t>& vec,
                                         const std::vector<std::int64_t>& row, int col) {
  const __int128 a = row[static_cast<std::size_t>(col)];
  const __int128 b = vec[static_cast<std::size_t>(col)];
  std::vector<__int128> tmp(vec.size());
  __int128 g = 0;
  for (std::size_t j = 0; j < vec.size(); ++j) {
    tmp[j] = a * vec[j] - b * row[j];
    if (tmp[j] != 0) g = (g == 0) ? abs128(tmp[j]) : gcd128(g, tmp[j]);
  }
  if (g == 0) g = 1;
  for (std::size_t j = 0; j < vec.size(); ++j) vec[j] = checked_narrow(tmp[j] / g);
}

template <>
void GreedyRank<std::int64_t>::normalize(std::vector<std::int64_t>& vec) {
  __int128 g = 0;
  for (std::int64_t x : vec)
    if (x != 0) g = (g == 0) ? abs128(x) : gcd128(g, x);
  if (g <= 1) return;
  for (std::int64_t& x : vec) x = static_cast<std::int64_t>(x / static_cast<std::int64_t>(g));
}

template <>
void GreedyRank<mpz_class>::eliminate(std::vector<mpz_class>& vec,
                                      const std::vector<mpz_class>& row, int col) {
  const mpz_class a = row[static_cast<std::size_t>(col)];
  const mpz_class b = vec[static_cast<std::size_t>(col)];
  mpz_class g = 0;
  for (std::size_t j = 0; j < vec.size(); ++j) {
    vec[j] = a * vec[j] - b * row[j];
    if (vec[j] != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), vec[j].get_mpz_t());
  }
  if (g > 1)
    for (std::size_t j = 0; j < vec.size(); ++j) vec[j] /= g;
}

template <>
void GreedyRank<mpz_class>::normalize(std::vector<mpz_class>& vec) {
  mpz_class g = 0;
  for (const mpz_class& x : vec)
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (mpz_class& x : vec) x /= g;
}

std::int64_t pow_checked(int base, int exp) {
  __int128 r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    (void)checked_narrow(r);
  }
  return static_cast<std::int64_t>(r);
}

template <typename Z>
std::vector<Z> evaluation_vector(const std::vector<int>& exps, const PointSet& v);

template <>
std::vector<std::int64_t> evaluation_vector(const std::vector<int>& exps, const PointSet& v) {
  std::vector<std::int64_t> vec;
  vec.reserve(v.size());
  for (const Point& p : v.points()) {
    __int128 val = 1;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      val *= pow_checked(p[i], exps[i]);
      (void)checked_narrow(val);
    }
    vec.push_back(static_cast<std::int64_t>(val));
  }
  return vec;
}

template <>
std::vector<mpz_class> evaluation_vector(const std::vector<int>& exps, const PointSet& v) {
  std::vector<mpz_class> vec;
  vec.reserve(v.size());
  for (const Point& p : v.points()) {
    mpz_class val = 1;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      val *= int_pow(mpz_class(p[i]), static_cast<unsigned long>(exps[i]));
    }
    vec.push_back(std::move(val));
  }
  return vec;
}

template <typename Z>
MonomialSet oracle_basis(const PointSet& v, const LexOrder& ord) {
  const int n = v.dimension();
  const int k = v.alphabet_size();
  MonomialSet accepted(n);
  if (v.empty()) return accepted;

  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(k);
    if (total > (1u << 24))
      throw guard_error("oracle grid too large: k^n exceeds 2^24");
  }

  GreedyRank<Z> rank;
  // Enumerate grid exponent vectors in increasing ord-lex: the least
  // significant variable cycles fastest.
  std::vector<int> yexps(static_cast<std::size_t>(n), 0);
  for (std::uint64_t t = 0;; ++t) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j)
      exps[static_cast<std::size_t>(ord.priority()[static_cast<std::size_t>(j)])] =
          yexps[static_cast<std::size_t>(j)];
    if (rank.try_accept(evaluation_vector<Z>(exps, v))) {
      accepted.insert(Monomial(std::move(exps)));
      if (accepted.size() == v.size()) break;
    }
    // increment odometer
    int j = n - 1;
    while (j >= 0 && yexps[static_cast<std::size_t>(j)] == k - 1) {
      yexps[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++yexps[static_cast<std::size_t>(j)];
  }
  if (accepted.size() != v.size())
    throw contract_error("oracle exhausted the grid before reaching |V| monomials");
  return accepted;
}

}  // namespace

SmResult sm_oracle(const PointSet& v, const LexOrder& ord) {
  if (ord.dimension() != v.dimension())
    throw dimension_error("lex order dimension differs from point set");
  try {
    return {ord, oracle_basis<std::int64_t>(v, ord)};
  } catch (const overflow_escape&) {
    return {ord, oracle_basis<mpz_class>(v, ord)};
  }
}

std::vector<SmResult> sm_all_lex(const PointSet& v, int guard) {
  std::vector<SmResult> out;
  for (const LexOrder& ord : LexOrder::all(v.dimension(), guard)) out.push_back(sm_lex(v, ord));
  return out;
}

PointSet relabel(const PointSet& v, const std::vector<std::vector<int>>& maps) {
  const int n = v.dimension();
  const int k = v.alphabet_size();
  if (static_cast<int>(maps.size()) != n)
    throw dimension_error("one relabeling map per coordinate required");
  int max_image = 0;
  for (const auto& map : maps) {
    if (static_cast<int>(map.size()) != k)
      throw domain_error("relabeling map must cover {0,...,k-1}");
    std::vector<int> sorted = map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw domain_error("relabeling map is not injective");
    if (sorted.front() < 0) throw domain_error("relabeling image must be nonnegative");
    max_image = std::max(max_image, sorted.back());
  }
  std::vector<Point> pts;
  pts.reserve(v.size());
  for (const Point& p : v.points()) {
    Point q(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      q[static_cast<std::size_t>(i)] =
          maps[static_cast<std::size_t>(i)][static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
    pts.push_back(std::move(q));
  }
  return PointSet(n, max_image + 1, std::move(pts));
}

}  // namespace extremal
