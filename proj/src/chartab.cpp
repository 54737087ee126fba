#include "charkit/chartab.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <string>
#include <tuple>

#include "charkit/errors.hpp"

namespace charkit {

namespace {

using u64 = std::uint64_t;
using Matrix = std::vector<std::vector<u64>>;

constexpr int kSplitAttempts = 64;

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

u64 primitive_root(u64 p) {
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    if (std::all_of(factors.begin(), factors.end(),
                    [&](u64 q) { return pow_mod(g, (p - 1) / q, p) != 1; })) {
      return g;
    }
  }
  return 1;  // p == 2
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& rows, u64 p) {
  std::vector<std::size_t> pivots;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const u64 inv = inv_mod(rows[r][c], p);
    for (auto& x : rows[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const u64 f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of {x : m x = 0}.
Matrix nullspace(Matrix m, u64 p) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  auto pivots = rref(m, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - m[r][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial via Hessenberg reduction; coefficients low to high.
std::vector<u64> char_poly(Matrix h, u64 p) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    const u64 inv = inv_mod(h[m][m - 1], p);
    for (std::size_t r = m + 1; r < n; ++r) {
      const u64 u = h[r][m - 1] * inv % p;
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[r][c] = (h[r][c] + (p - u) * h[m][c]) % p;
      for (std::size_t c = 0; c < n; ++c) h[c][m] = (h[c][m] + u * h[c][r]) % p;
    }
  }
  std::vector<std::vector<u64>> polys{{1}};
  for (std::size_t m = 1; m <= n; ++m) {
    // (x - h[m-1][m-1]) * p_{m-1}
    const auto& prev = polys[m - 1];
    std::vector<u64> next(m + 1, 0);
    for (std::size_t k = 0; k < prev.size(); ++k) {
      next[k + 1] = (next[k + 1] + prev[k]) % p;
      next[k] = (next[k] + (p - h[m - 1][m - 1]) * prev[k]) % p;
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = t * h[m - i][m - i - 1] % p;
      const u64 f = t * h[m - i - 1][m - 1] % p;
      if (f == 0) continue;
      const auto& older = polys[m - i - 1];
      for (std::size_t k = 0; k < older.size(); ++k) next[k] = (next[k] + (p - f) * older[k]) % p;
    }
    polys.push_back(std::move(next));
  }
  return polys.back();
}

struct Subspace {
  Matrix basis;  // rref rows
  std::vector<std::size_t> pivots;
};

Subspace make_subspace(Matrix rows, u64 p) {
  Subspace s;
  s.pivots = rref(rows, p);
  s.basis = std::move(rows);
  return s;
}

// Splits w into eigenspaces of a (acting on column vectors). Returns an
// empty vector if a acts as a scalar on w.
std::vector<Subspace> split(const Subspace& w, const Matrix& a, u64 p) {
  const std::size_t m = w.basis.size();
  const std::size_t n = a.size();
  // restricted matrix transposed: rt[s][r] = (a b_r)[pivot_s]
  Matrix rt(m, std::vector<u64>(m, 0));
  for (std::size_t r = 0; r < m; ++r) {
    const auto& b = w.basis[r];
    for (std::size_t s = 0; s < m; ++s) {
      const auto& row = a[w.pivots[s]];
      u64 sum = 0;
      for (std::size_t k = 0; k < n; ++k) sum = (sum + row[k] * b[k]) % p;
      rt[s][r] = sum;
    }
  }
  const auto poly = char_poly(rt, p);
  std::vector<Subspace> pieces;
  std::size_t total = 0;
  for (u64 lambda = 0; lambda < p && total < m; ++lambda) {
    u64 value = 0;
    for (std::size_t k = poly.size(); k-- > 0;) value = (value * lambda + poly[k]) % p;
    if (value != 0) continue;
    Matrix shifted = rt;
    for (std::size_t i = 0; i < m; ++i) shifted[i][i] = (shifted[i][i] + p - lambda) % p;
    const Matrix coords = nullspace(std::move(shifted), p);
    if (coords.size() == m) return {};
    Matrix vectors;
    for (const auto& c : coords) {
      std::vector<u64> v(n, 0);
      for (std::size_t r = 0; r < m; ++r) {
        if (c[r] == 0) continue;
        for (std::size_t k = 0; k < n; ++k) v[k] = (v[k] + c[r] * w.basis[r][k]) % p;
      }
      vectors.push_back(std::move(v));
    }
    total += vectors.size();
    pieces.push_back(make_subspace(std::move(vectors), p));
  }
  if (total != m) {
    throw TableError("class matrix is not diagonalizable over F_p (internal error)");
  }
  return pieces;
}

}  // namespace

std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t order) {
  for (u64 p = exponent + 1;; p += exponent) {
    if (p * p > 4 * order && is_prime(p)) return p;
  }
}

ClassMultTensor class_mult_coefficients(const PermGroup& g) {
  const auto& classes = g.classes();
  const std::size_t r = classes.size();
  ClassMultTensor a(r, std::vector<std::vector<u64>>(r, std::vector<u64>(r, 0)));
  for (std::size_t x = 0; x < g.order(); ++x) {
    const std::size_t i = g.class_of(x);
    const std::size_t xi = g.inv(x);
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t j = g.class_of(g.mul(xi, classes[k].rep_index));
      ++a[i][j][k];
    }
  }
  return a;
}

CharacterTable::CharacterTable(GroupPtr group, std::vector<ClassFunction> rows)
    : group_(std::move(group)), rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    if (row.group() != group_) throw DomainError("character table row on a different group");
    auto d = row.degree().as_rational();
    if (!d || d->get_den() != 1 || *d <= 0) throw TableError("row degree is not a positive integer");
    degrees_.push_back(d->get_num().get_ui());
  }
}

std::optional<std::size_t> CharacterTable::index_of(const ClassFunction& chi) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] == chi) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> CharacterTable::linear_rows() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (degrees_[i] == 1) out.push_back(i);
  }
  return out;
}

void CharacterTable::check() const {
  const auto& classes = group_->classes();
  const std::size_t r = classes.size();
  const u64 order = group_->order();
  if (rows_.size() != r) throw TableError("row count differs from class count");
  if (rows_.empty() || rows_[0] != ClassFunction::trivial(group_)) {
    throw TableError("first row is not the trivial character");
  }
  u64 sum_sq = 0;
  for (auto d : degrees_) {
    if (order % d != 0) throw TableError("degree " + std::to_string(d) + " does not divide |G|");
    sum_sq += d * d;
  }
  if (sum_sq != order) throw TableError("sum of squared degrees differs from |G|");
  const u64 e = group_->exponent();
  for (const auto& row : rows_) {
    for (const auto& v : row.values()) {
      if (e % v.conductor() != 0) throw TableError("value outside Q(z(exponent))");
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      const Cyclotomic ip = inner_product(rows_[i], rows_[j]);
      if (ip != Cyclotomic(i == j ? 1 : 0)) {
        throw TableError("row orthogonality fails for rows " + std::to_string(i) + ", " +
                         std::to_string(j));
      }
    }
  }
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a; b < r; ++b) {
      CyclotomicAccumulator acc(static_cast<std::uint32_t>(e));
      for (const auto& row : rows_) acc.add_product(row[a], row[b], Rational(1), true);
      const long expected = a == b ? static_cast<long>(classes[a].centralizer_order) : 0;
      if (acc.result() != Cyclotomic(expected)) {
        throw TableError("column orthogonality fails for classes " + std::to_string(a) + ", " +
                         std::to_string(b));
      }
    }
  }
}

CharacterTable character_table(const GroupPtr& group) {
  return character_table(group, group->config().seed);
}

CharacterTable character_table(const GroupPtr& group, std::uint64_t seed) {
  const auto& classes = group->classes();
  const std::size_t r = classes.size();
  const u64 order = group->order();
  const u64 e = group->exponent();
  const u64 p = dixon_prime(e, order);

  const auto coeffs = class_mult_coefficients(*group);
  // class matrices M_j[i][k] = a[j][i][k]; central characters are common
  // right eigenvectors
  std::vector<Matrix> mats(r, Matrix(r, std::vector<u64>(r, 0)));
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < r; ++k) mats[j][i][k] = coeffs[j][i][k] % p;
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> pick(0, p - 1);
  Matrix identity(r, std::vector<u64>(r, 0));
  for (std::size_t i = 0; i < r; ++i) identity[i][i] = 1;
  std::deque<Subspace> pending{make_subspace(identity, p)};
  std::vector<std::vector<u64>> central;
  while (!pending.empty()) {
    Subspace w = std::move(pending.front());
    pending.pop_front();
    if (w.basis.size() == 1) {
      central.push_back(w.basis[0]);
      continue;
    }
    bool done = false;
    for (int attempt = 0; attempt < kSplitAttempts && !done; ++attempt) {
      Matrix combo(r, std::vector<u64>(r, 0));
      for (std::size_t j = 1; j < r; ++j) {
        const u64 c = pick(rng);
        if (c == 0) continue;
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t k = 0; k < r; ++k) combo[i][k] = (combo[i][k] + c * mats[j][i][k]) % p;
        }
      }
      auto pieces = split(w, combo, p);
      if (pieces.empty()) continue;
      for (auto& piece : pieces) pending.push_back(std::move(piece));
      done = true;
    }
    if (!done) {
      throw TableError("eigenspace splitting failed after " + std::to_string(kSplitAttempts) +
                       " random class-matrix combinations");
    }
  }
  if (central.size() != r) throw TableError("wrong number of central characters");

  const u64 zeta_e = pow_mod(primitive_root(p), (p - 1) / e, p);
  std::vector<ClassFunction> rows;
  for (auto& omega : central) {
    if (omega[0] == 0) throw TableError("central character vanishes at the identity class");
    const u64 scale = inv_mod(omega[0], p);
    for (auto& x : omega) x = x * scale % p;

    u64 s = 0;
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t kinv = group->power_class(k, -1);
      s = (s + omega[k] * omega[kinv] % p * inv_mod(classes[k].size % p, p)) % p;
    }
    if (s == 0) throw TableError("degree equation degenerate mod p");
    const u64 target = order % p * inv_mod(s, p) % p;
    u64 degree = 0;
    for (u64 d = 1; d * d <= order; ++d) {
      if (d * d % p == target) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw TableError("no admissible degree for a central character");

    std::vector<u64> modular(r);
    for (std::size_t k = 0; k < r; ++k) {
      modular[k] = degree % p * omega[k] % p * inv_mod(classes[k].size % p, p) % p;
    }

    std::vector<Cyclotomic> values;
    for (std::size_t k = 0; k < r; ++k) {
      const u64 o = classes[k].element_order;
      const u64 zeta_o = pow_mod(zeta_e, e / o, p);
      const u64 inv_o = inv_mod(o % p, p);
      std::vector<Rational> multiplicities(o);
      for (u64 j = 0; j < o; ++j) {
        u64 sum = 0;
        for (u64 l = 0; l < o; ++l) {
          const u64 root = pow_mod(zeta_o, (o - (j * l) % o) % o, p);
          sum = (sum + modular[group->power_class(k, static_cast<std::int64_t>(l))] * root) % p;
        }
        const u64 m = sum * inv_o % p;
        if (m > degree) throw TableError("eigenvalue multiplicity exceeds the degree");
        multiplicities[j] = Rational(static_cast<unsigned long>(m));
      }
      values.push_back(Cyclotomic::from_cyclic(static_cast<std::uint32_t>(o), multiplicities));
    }
    rows.emplace_back(group, std::move(values));
  }

  // trivial first, then (degree, renderings)
  using Key = std::tuple<u64, bool, std::vector<std::string>>;
  std::vector<std::pair<Key, std::size_t>> keys;
  const ClassFunction trivial = ClassFunction::trivial(group);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::string> rendered;
    for (const auto& v : rows[i].values()) rendered.push_back(v.to_string());
    const u64 deg = rows[i].degree().as_rational()->get_num().get_ui();
    keys.emplace_back(Key{deg, !(rows[i] == trivial), std::move(rendered)}, i);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<ClassFunction> sorted;
  for (const auto& [key, i] : keys) sorted.push_back(std::move(rows[i]));

  CharacterTable table(group, std::move(sorted));
  table.check();
  return table;
}

}  // namespace charkit
