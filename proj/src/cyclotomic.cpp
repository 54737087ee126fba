#include "charkit/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

#include "charkit/errors.hpp"

namespace charkit {

namespace {

std::vector<std::uint32_t> prime_divisors(std::uint32_t n) {
  std::vector<std::uint32_t> primes;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

using IntPoly = std::vector<long>;  // coefficient of x^i at index i

// Exact division of integer polynomials; divisor must be monic.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

// Data for the field Q(z(n)) in the power basis modulo the n-th cyclotomic
// polynomial. power_table[k] holds x^k mod Phi_n for k in [0, n).
struct FieldData {
  std::uint32_t n = 1;
  std::uint32_t phi = 1;
  std::vector<std::vector<long>> power_table;
};

// Data for recognizing values of Q(z(n)) that lie in Q(z(n/p)). The columns
// of `embed` are the images of the subfield's power basis, z(n)^(p*j).
struct DescentData {
  std::uint32_t sub_phi = 1;
  std::vector<std::vector<long>> embed;       // phi(n) x sub_phi
  std::vector<std::size_t> pivot_rows;        // sub_phi rows of embed
  std::vector<std::vector<Rational>> inverse;  // inverse of embed[pivot_rows]
};

class FieldCache {
 public:
  static FieldCache& instance() {
    static FieldCache cache;
    return cache;
  }

  std::shared_ptr<const FieldData> field(std::uint32_t n) {
    std::lock_guard lock(mutex_);
    return field_locked(n);
  }

  std::shared_ptr<const DescentData> descent(std::uint32_t n, std::uint32_t p) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(n, p);
    if (auto it = descents_.find(key); it != descents_.end()) return it->second;
    auto data = build_descent(*field_locked(n), p);
    descents_.emplace(key, data);
    return data;
  }

 private:
  const IntPoly& cyclotomic_poly(std::uint32_t n) {
    if (auto it = polys_.find(n); it != polys_.end()) return it->second;
    IntPoly poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d) {
      if (n % d == 0) poly = divide_exact(poly, cyclotomic_poly(d));
    }
    return polys_.emplace(n, std::move(poly)).first->second;
  }

  std::shared_ptr<const FieldData> field_locked(std::uint32_t n) {
    if (auto it = fields_.find(n); it != fields_.end()) return it->second;
    const IntPoly& poly = cyclotomic_poly(n);
    auto data = std::make_shared<FieldData>();
    data->n = n;
    data->phi = static_cast<std::uint32_t>(poly.size() - 1);
    const std::uint32_t phi = data->phi;
    std::vector<long> current(phi, 0);
    current[0] = 1;
    data->power_table.reserve(n);
    for (std::uint32_t k = 0; k < n; ++k) {
      data->power_table.push_back(current);
      // multiply by x and fold x^phi = -sum poly[i] x^i
      const long top = current[phi - 1];
      for (std::uint32_t i = phi - 1; i > 0; --i) current[i] = current[i - 1];
      current[0] = 0;
      if (top != 0) {
        for (std::uint32_t i = 0; i < phi; ++i) current[i] -= top * poly[i];
      }
    }
    fields_.emplace(n, data);
    return data;
  }

  std::shared_ptr<const DescentData> build_descent(const FieldData& field,
                                                   std::uint32_t p) {
    const std::uint32_t m = field.n / p;
    auto sub = field_locked(m);
    auto data = std::make_shared<DescentData>();
    data->sub_phi = sub->phi;
    const std::size_t rows = field.phi;
    const std::size_t cols = sub->phi;
    data->embed.assign(rows, std::vector<long>(cols, 0));
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& image = field.power_table[(p * j) % field.n];
      for (std::size_t i = 0; i < rows; ++i) data->embed[i][j] = image[i];
    }

    // Greedily select independent rows.
    std::vector<std::vector<Rational>> echelon;
    std::vector<std::size_t> lead;
    for (std::size_t i = 0; i < rows && data->pivot_rows.size() < cols; ++i) {
      std::vector<Rational> row(cols);
      for (std::size_t j = 0; j < cols; ++j) row[j] = data->embed[i][j];
      for (std::size_t e = 0; e < echelon.size(); ++e) {
        if (row[lead[e]] == 0) continue;
        const Rational f = row[lead[e]] / echelon[e][lead[e]];
        for (std::size_t j = 0; j < cols; ++j) row[j] -= f * echelon[e][j];
      }
      std::size_t l = 0;
      while (l < cols && row[l] == 0) ++l;
      if (l == cols) continue;
      echelon.push_back(std::move(row));
      lead.push_back(l);
      data->pivot_rows.push_back(i);
    }
    if (data->pivot_rows.size() != cols) {
      throw Error("cyclotomic: subfield embedding is rank deficient");
    }

    // Gauss-Jordan inverse of the selected square block.
    std::vector<std::vector<Rational>> a(cols, std::vector<Rational>(2 * cols));
    for (std::size_t r = 0; r < cols; ++r) {
      for (std::size_t j = 0; j < cols; ++j) a[r][j] = data->embed[data->pivot_rows[r]][j];
      a[r][cols + r] = 1;
    }
    for (std::size_t c = 0; c < cols; ++c) {
      std::size_t piv = c;
      while (a[piv][c] == 0) ++piv;
      std::swap(a[piv], a[c]);
      const Rational inv = 1 / a[c][c];
      for (auto& x : a[c]) x *= inv;
      for (std::size_t r = 0; r < cols; ++r) {
        if (r == c || a[r][c] == 0) continue;
        const Rational f = a[r][c];
        for (std::size_t j = 0; j < 2 * cols; ++j) a[r][j] -= f * a[c][j];
      }
    }
    data->inverse.assign(cols, std::vector<Rational>(cols));
    for (std::size_t r = 0; r < cols; ++r) {
      for (std::size_t j = 0; j < cols; ++j) data->inverse[r][j] = a[r][cols + j];
    }
    return data;
  }

  std::mutex mutex_;
  std::map<std::uint32_t, IntPoly> polys_;
  std::map<std::uint32_t, std::shared_ptr<const FieldData>> fields_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const DescentData>>
      descents_;
};

// Attempts to express v (power basis of Q(z(n))) in Q(z(n/p)).
std::optional<std::vector<Rational>> try_descend(std::uint32_t n, std::uint32_t p,
                                                 const std::vector<Rational>& v) {
  auto data = FieldCache::instance().descent(n, p);
  const std::size_t cols = data->sub_phi;
  std::vector<Rational> y(cols);
  for (std::size_t r = 0; r < cols; ++r) {
    Rational sum = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      if (data->inverse[r][j] != 0) sum += data->inverse[r][j] * v[data->pivot_rows[j]];
    }
    y[r] = sum;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational check = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      if (data->embed[i][j] != 0 && y[j] != 0) check += data->embed[i][j] * y[j];
    }
    if (check != v[i]) return std::nullopt;
  }
  return y;
}

std::uint32_t lcm32(std::uint32_t a, std::uint32_t b) { return std::lcm(a, b); }

}  // namespace

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (auto p : prime_divisors(n)) result = result / p * (p - 1);
  return result;
}

Cyclotomic::Cyclotomic(long value) : coeffs_{Rational(value)} {}

Cyclotomic::Cyclotomic(Rational value) : coeffs_{std::move(value)} {
  coeffs_[0].canonicalize();
}

Cyclotomic Cyclotomic::root_of_unity(long e, long k) {
  if (e < 1) throw DomainError("root_of_unity: conductor must be positive");
  const auto n = static_cast<std::uint32_t>(e);
  std::vector<Rational> cyclic(n, Rational(0));
  long r = k % e;
  if (r < 0) r += e;
  cyclic[static_cast<std::size_t>(r)] = 1;
  return from_cyclic(n, cyclic);
}

Cyclotomic Cyclotomic::from_cyclic(std::uint32_t n, std::span<const Rational> coeffs) {
  if (n == 0 || coeffs.size() != n) {
    throw DomainError("from_cyclic: coefficient count must equal the conductor");
  }
  auto field = FieldCache::instance().field(n);
  std::vector<Rational> reduced(field->phi, Rational(0));
  for (std::uint32_t k = 0; k < n; ++k) {
    if (coeffs[k] == 0) continue;
    const auto& image = field->power_table[k];
    for (std::uint32_t i = 0; i < field->phi; ++i) {
      if (image[i] != 0) reduced[i] += coeffs[k] * image[i];
    }
  }

  bool changed = true;
  while (changed && n > 1) {
    changed = false;
    for (auto p : prime_divisors(n)) {
      if (auto lower = try_descend(n, p, reduced)) {
        reduced = std::move(*lower);
        n /= p;
        changed = true;
        break;
      }
    }
  }

  Cyclotomic out;
  out.conductor_ = n;
  out.coeffs_ = std::move(reduced);
  return out;
}

bool Cyclotomic::is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }

std::optional<Rational> Cyclotomic::as_rational() const {
  if (conductor_ != 1) return std::nullopt;
  return coeffs_[0];
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::galois(long k) const {
  if (conductor_ == 1) return *this;
  const long n = conductor_;
  long kk = k % n;
  if (kk < 0) kk += n;
  if (std::gcd(kk, n) != 1) throw DomainError("galois: exponent must be a unit");
  std::vector<Rational> cyclic(conductor_, Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) cyclic[(static_cast<long>(j) * kk) % n] += coeffs_[j];
  }
  return from_cyclic(conductor_, cyclic);
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> sum = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / conductor_;
    sum += coeffs_[k].get_d() * std::polar(1.0, angle);
  }
  return sum;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    std::string term;
    if (k == 0) {
      term = magnitude.get_str();
    } else {
      const std::string root = "z(" + std::to_string(conductor_) + ")^" + std::to_string(k);
      term = magnitude == 1 ? root : magnitude.get_str() + "*" + root;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out.empty() ? "0" : out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (conductor_ == other.conductor_) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    // sums can land in a subfield
    if (conductor_ == 1) return *this;
  }
  CyclotomicAccumulator acc(lcm32(conductor_, other.conductor_));
  if (conductor_ == other.conductor_) {
    acc.add(*this);
  } else {
    acc.add(*this);
    acc.add(other);
  }
  return *this = acc.result();
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  if (conductor_ == 1 && other.conductor_ == 1) {
    coeffs_[0] *= other.coeffs_[0];
    return *this;
  }
  if (other.conductor_ == 1) return *this *= other.coeffs_[0];
  if (conductor_ == 1) {
    const Rational s = coeffs_[0];
    *this = other;
    return *this *= s;
  }
  CyclotomicAccumulator acc(lcm32(conductor_, other.conductor_));
  acc.add_product(*this, other, Rational(1));
  return *this = acc.result();
}

Cyclotomic& Cyclotomic::operator*=(const Rational& scale) {
  if (scale == 0) return *this = Cyclotomic();
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

CyclotomicAccumulator::CyclotomicAccumulator(std::uint32_t n)
    : n_(n == 0 ? 1 : n), cyclic_(n_, Rational(0)) {}

void CyclotomicAccumulator::widen(std::uint32_t conductor) {
  if (n_ % conductor == 0) return;
  const std::uint32_t wider = lcm32(n_, conductor);
  const std::uint32_t step = wider / n_;
  std::vector<Rational> next(wider, Rational(0));
  for (std::uint32_t k = 0; k < n_; ++k) next[k * step] = std::move(cyclic_[k]);
  cyclic_ = std::move(next);
  n_ = wider;
}

void CyclotomicAccumulator::add(const Cyclotomic& a, const Rational& scale) {
  if (scale == 0) return;
  widen(a.conductor_);
  const std::uint32_t step = n_ / a.conductor_;
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
    if (a.coeffs_[k] != 0) cyclic_[k * step] += scale * a.coeffs_[k];
  }
}

void CyclotomicAccumulator::add_product(const Cyclotomic& a, const Cyclotomic& b,
                                        const Rational& scale, bool conj_b) {
  if (scale == 0) return;
  widen(a.conductor_);
  widen(b.conductor_);
  const std::uint64_t n = n_;
  const std::uint64_t sa = n_ / a.conductor_;
  const std::uint64_t sb = n_ / b.conductor_;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    const Rational left = scale * a.coeffs_[i];
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      const std::uint64_t bj = (j * sb) % n;
      const std::uint64_t idx = conj_b ? (i * sa + n - bj) % n : (i * sa + bj) % n;
      cyclic_[idx] += left * b.coeffs_[j];
    }
  }
}

Cyclotomic CyclotomicAccumulator::result() const {
  return Cyclotomic::from_cyclic(n_, cyclic_);
}

}  // namespace charkit
