#include "charkit/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "charkit/errors.hpp"

namespace charkit {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw DomainError("Perm: images are not a bijection");
    seen[x] = true;
  }
}

Perm Perm::parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos == text.size()) throw ParseError("empty cycle notation");
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw ParseError("expected '(' in cycle notation: " + std::string(text));
    }
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (pos == text.size()) throw ParseError("unterminated cycle: " + std::string(text));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError("unexpected character in cycle notation: " + std::string(text));
      }
      unsigned long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<unsigned long>(text[pos] - '0');
        if (value > 1'000'000) throw ParseError("point out of range: " + std::string(text));
        ++pos;
      }
      if (value == 0) throw ParseError("points are numbered from 1: " + std::string(text));
      const Point point = static_cast<Point>(value - 1);
      if (std::find(cycle.begin(), cycle.end(), point) != cycle.end()) {
        throw ParseError("repeated point in a cycle: " + std::string(text));
      }
      cycle.push_back(point);
      degree = std::max<std::size_t>(degree, value);
    }
    cycles.push_back(std::move(cycle));
    skip_space();
  }

  Perm result(degree);
  for (const auto& cycle : cycles) {
    Perm c(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      c.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    result = result * c;
  }
  return result;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  Perm out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

Perm Perm::extended(std::size_t degree) const {
  if (degree <= images_.size()) return *this;
  Perm out(degree);
  std::copy(images_.begin(), images_.end(), out.images_.begin());
  return out;
}

std::uint64_t Perm::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t length = 0;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

Perm Perm::pow(std::int64_t k) const {
  const auto ord = static_cast<std::int64_t>(order());
  std::int64_t e = k % ord;
  if (e < 0) e += ord;
  Perm result(images_.size());
  Perm base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::string Perm::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    bool first = true;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm operator*(const Perm& a, const Perm& b) {
  const std::size_t n = std::max(a.degree(), b.degree());
  Perm out(n);
  for (std::size_t i = 0; i < n; ++i) out.images_[i] = b[a[static_cast<Point>(i)]];
  return out;
}

Perm conjugate(const Perm& x, const Perm& g) { return g.inverse() * x * g; }

Perm commutator(const Perm& a, const Perm& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace charkit
