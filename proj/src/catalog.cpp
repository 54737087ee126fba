#include "charkit/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "charkit/errors.hpp"

namespace charkit {

namespace {

struct Factor {
  std::vector<Perm> generators;
  std::size_t degree = 1;
};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\n\r");
  return std::string(s.substr(b, e - b + 1));
}

Perm from_images(const std::vector<Point>& images) { return Perm(images); }

Perm cycle_on(std::size_t n) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>((i + 1) % n);
  return from_images(images);
}

// Right regular representation of a group on {0..n-1} given by its
// multiplication; element 0 must be the identity.
Factor regular(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
               const std::vector<std::size_t>& gens) {
  Factor f;
  f.degree = n;
  for (auto g : gens) {
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x) images[x] = static_cast<Point>(mul(x, g));
    f.generators.push_back(from_images(images));
  }
  return f;
}

Factor cyclic(std::size_t n) {
  if (n == 1) return {};
  return {{cycle_on(n)}, n};
}

Factor dihedral(std::size_t n) {
  if (n == 1) return {{Perm::parse_cycles("(1 2)")}, 2};
  if (n == 2) return {{Perm::parse_cycles("(1 2)"), Perm::parse_cycles("(3 4)")}, 4};
  std::vector<Point> reflection(n);
  for (std::size_t i = 0; i < n; ++i) reflection[i] = static_cast<Point>((n - i) % n);
  return {{cycle_on(n), from_images(reflection)}, n};
}

Factor symmetric(std::size_t n) {
  if (n == 1) return {};
  if (n == 2) return {{Perm::parse_cycles("(1 2)")}, 2};
  return {{Perm::parse_cycles("(1 2)", n), cycle_on(n)}, n};
}

Factor alternating(std::size_t n) {
  if (n <= 2) return {{}, std::max<std::size_t>(n, 1)};
  Factor f;
  f.degree = n;
  for (std::size_t k = 3; k <= n; ++k) {
    f.generators.push_back(Perm::parse_cycles("(1 2 " + std::to_string(k) + ")", n));
  }
  return f;
}

// Generalized quaternion group of order 4m: <a, b | a^2m, b^2 = a^m, b a b^-1 = a^-1>.
Factor quaternion(std::size_t m) {
  const std::size_t ord_a = 2 * m;
  auto encode = [ord_a](std::size_t i, std::size_t j) { return j * ord_a + i % ord_a; };
  auto mul = [=](std::size_t x, std::size_t y) {
    const std::size_t i1 = x % ord_a, j1 = x / ord_a, i2 = y % ord_a, j2 = y / ord_a;
    if (j1 == 0) return encode(i1 + i2, j2);
    const std::size_t i = i1 + ord_a - i2;
    return j2 == 1 ? encode(i + m, 0) : encode(i, 1);
  };
  return regular(2 * ord_a, mul, {encode(1, 0), encode(0, 1)});
}

// SL(2,3) acting on the 8 nonzero row vectors of F_3^2.
Factor sl23() {
  std::vector<std::pair<int, int>> points;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      if (x != 0 || y != 0) points.emplace_back(x, y);
    }
  }
  auto act = [&](int a, int b, int c, int d) {
    std::vector<Point> images(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      auto [x, y] = points[i];
      const std::pair<int, int> image{(x * a + y * c) % 3, (x * b + y * d) % 3};
      images[i] = static_cast<Point>(std::find(points.begin(), points.end(), image) - points.begin());
    }
    return from_images(images);
  };
  return {{act(1, 1, 0, 1), act(1, 0, 1, 1)}, points.size()};
}

// Affine maps x -> a x + b over F_p with a in the subgroup generated by `mult`.
Factor affine(std::size_t p, std::size_t mult) {
  std::vector<Point> scale(p);
  for (std::size_t x = 0; x < p; ++x) scale[x] = static_cast<Point>((x * mult) % p);
  return {{cycle_on(p), from_images(scale)}, p};
}

// Extraspecial group 3^(1+2) of exponent 3 (Heisenberg group over F_3).
Factor extraspecial27() {
  auto mul = [](std::size_t x, std::size_t y) {
    const std::size_t a1 = x % 3, b1 = (x / 3) % 3, c1 = x / 9;
    const std::size_t a2 = y % 3, b2 = (y / 3) % 3, c2 = y / 9;
    return (a1 + a2) % 3 + 3 * ((b1 + b2) % 3) + 9 * ((c1 + c2 + a1 * b2) % 3);
  };
  return regular(27, mul, {1, 3});
}

std::size_t parse_size(const std::string& digits, const std::string& name) {
  if (digits.empty() || digits.size() > 4 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError("unknown catalog name: " + name);
  }
  const auto n = static_cast<std::size_t>(std::stoul(digits));
  if (n == 0) throw ParseError("catalog index must be positive: " + name);
  return n;
}

Factor catalog_factor(const std::string& name) {
  if (name == "Q8") return quaternion(2);
  if (name == "Q16") return quaternion(4);
  if (name == "SL23") return sl23();
  if (name == "F20") return affine(5, 2);
  if (name == "F21") return affine(7, 2);
  if (name == "ES27") return extraspecial27();
  if (name.empty()) throw ParseError("empty catalog name");
  const std::string rest = name.substr(1);
  switch (name[0]) {
    case 'C': return cyclic(parse_size(rest, name));
    case 'D': return dihedral(parse_size(rest, name));
    case 'S': return symmetric(parse_size(rest, name));
    case 'A': return alternating(parse_size(rest, name));
    default: throw ParseError("unknown catalog name: " + name);
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    parts.push_back(trim(std::string_view(s).substr(start, pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Splits "(1 2),(1 2 3)" at top-level commas.
std::vector<std::string> split_generators(const std::string& s) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses: " + s);
    if (c == ',' && depth == 0) {
      parts.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses: " + s);
  parts.push_back(trim(current));
  return parts;
}

}  // namespace

GroupPtr parse_group(std::string_view raw, const Config& config) {
  const std::string spec = trim(raw);
  std::vector<Perm> generators;
  std::size_t degree = 1;
  if (spec.starts_with("name:")) {
    std::size_t offset = 0;
    for (const auto& name : split(spec.substr(5), 'x')) {
      Factor f = catalog_factor(name);
      for (const auto& g : f.generators) {
        std::vector<Point> images(offset + f.degree);
        for (std::size_t i = 0; i < offset; ++i) images[i] = static_cast<Point>(i);
        for (std::size_t i = 0; i < f.degree; ++i) {
          images[offset + i] = static_cast<Point>(offset + g[static_cast<Point>(i)]);
        }
        generators.push_back(Perm(std::move(images)));
      }
      offset += f.degree;
    }
    degree = offset;
  } else if (spec.starts_with("perm:")) {
    for (const auto& text : split_generators(spec.substr(5))) {
      if (text.empty()) throw ParseError("empty generator in: " + spec);
      generators.push_back(Perm::parse_cycles(text));
      degree = std::max(degree, generators.back().degree());
    }
  } else {
    throw ParseError("group spec must start with 'name:' or 'perm:': " + spec);
  }
  auto group = PermGroup::create(std::move(generators), degree, config, spec);
  if (group->order() > config.element_cap) {
    throw CapExceeded("group " + spec + " has order " + std::to_string(group->order()) +
                      ", above the element-enumeration cap " +
                      std::to_string(config.element_cap));
  }
  return group;
}

const std::vector<std::string>& default_catalog() {
  static const std::vector<std::string> catalog = {
      "name:C1",  "name:C2",   "name:C6",  "name:C2xC4", "name:S3",   "name:D4",
      "name:Q8",  "name:A4",   "name:D6",  "name:F21",   "name:SL23", "name:F20",
      "name:ES27", "name:S4",  "name:Q16", "name:A5",    "name:S5"};
  return catalog;
}

}  // namespace charkit
