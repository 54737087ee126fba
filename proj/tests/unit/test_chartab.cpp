#include <doctest.h>

#include <Eigen/Dense>
#include <chrono>
#include <complex>
#include <random>

#include "charkit/catalog.hpp"
#include "charkit/chartab.hpp"
#include "charkit/errors.hpp"

using namespace charkit;

namespace {

std::vector<long> rational_row(const ClassFunction& chi) {
  std::vector<long> out;
  for (const auto& v : chi.values()) {
    auto q = v.as_rational();
    REQUIRE(q);
    REQUIRE(q->get_den() == 1);
    out.push_back(q->get_num().get_si());
  }
  return out;
}

// Independent floating-point oracle: the central characters omega are the
// common eigenvectors of the class matrices, recovered here from a random
// real combination with a dense complex eigensolver.
std::vector<std::vector<std::complex<double>>> numeric_table(const PermGroup& g) {
  const auto a = class_mult_coefficients(g);
  const auto& classes = g.classes();
  const std::size_t r = classes.size();
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    const double c = coef(rng);
    for (std::size_t l = 0; l < r; ++l) {
      for (std::size_t k = 0; k < r; ++k) m(l, k) += c * static_cast<double>(a[j][l][k]);
    }
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m);
  std::vector<std::vector<std::complex<double>>> rows;
  const double order = static_cast<double>(g.order());
  for (std::size_t e = 0; e < r; ++e) {
    Eigen::VectorXcd v = solver.eigenvectors().col(e);
    v /= v(0);
    double s = 0;
    for (std::size_t k = 0; k < r; ++k) s += std::norm(v(k)) / static_cast<double>(classes[k].size);
    const double degree = std::sqrt(order / s);
    std::vector<std::complex<double>> row;
    for (std::size_t k = 0; k < r; ++k) {
      row.push_back(degree * v(k) / static_cast<double>(classes[k].size));
    }
    rows.push_back(row);
  }
  return rows;
}

bool rows_close(const std::vector<std::complex<double>>& a, const ClassFunction& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k] - b[k].to_complex()) > 1e-6) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("chartab") {
  TEST_CASE("class multiplication coefficients match direct enumeration") {
    for (const char* spec : {"name:S3", "name:C2", "name:Q8", "name:A4", "name:S4", "name:F20"}) {
      CAPTURE(spec);
      auto g = parse_group(spec);
      const auto a = class_mult_coefficients(*g);
      const auto& classes = g->classes();
      const std::size_t r = classes.size();
      std::vector<std::vector<std::vector<std::uint64_t>>> brute(
          r, std::vector<std::vector<std::uint64_t>>(r, std::vector<std::uint64_t>(r, 0)));
      for (std::size_t k = 0; k < r; ++k) {
        const std::size_t z = classes[k].rep_index;
        for (std::size_t x = 0; x < g->order(); ++x) {
          for (std::size_t y = 0; y < g->order(); ++y) {
            if (g->mul(x, y) == z) ++brute[g->class_of(x)][g->class_of(y)][k];
          }
        }
      }
      CHECK(a == brute);
      // The identity class acts as the identity.
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t k = 0; k < r; ++k) CHECK(a[0][j][k] == (j == k ? 1u : 0u));
      }
    }
  }

  TEST_CASE("S3 transposition class squared") {
    auto g = parse_group("name:S3");
    const auto a = class_mult_coefficients(*g);
    // classes: identity, transpositions, 3-cycles
    CHECK(a[1][1][0] == 3);
    CHECK(a[1][1][1] == 0);
    CHECK(a[1][1][2] == 3);
    auto c2 = parse_group("name:C2");
    CHECK(class_mult_coefficients(*c2)[1][1][0] == 1);
  }

  TEST_CASE("small tables") {
    auto c2 = character_table(parse_group("name:C2"));
    CHECK(rational_row(c2[0]) == std::vector<long>{1, 1});
    CHECK(rational_row(c2[1]) == std::vector<long>{1, -1});

    auto s3 = character_table(parse_group("name:S3"));
    CHECK(s3.degrees() == std::vector<std::size_t>{1, 1, 2});
    CHECK(rational_row(s3[2]) == std::vector<long>{2, 0, -1});
    CHECK(rational_row(s3[1]) == std::vector<long>{1, -1, 1});

    CHECK(character_table(parse_group("name:S4")).degrees() ==
          std::vector<std::size_t>{1, 1, 2, 3, 3});
    CHECK(character_table(parse_group("name:Q8")).degrees() ==
          std::vector<std::size_t>{1, 1, 1, 1, 2});
    CHECK(character_table(parse_group("name:A5")).degrees() ==
          std::vector<std::size_t>{1, 3, 3, 4, 5});
    CHECK(character_table(parse_group("name:SL23")).degrees() ==
          std::vector<std::size_t>{1, 1, 1, 2, 2, 2, 3});
    CHECK(character_table(parse_group("perm:()")).size() == 1);
  }

  TEST_CASE("tables agree with the numeric eigenvector oracle") {
    for (const auto& spec : default_catalog()) {
      CAPTURE(spec);
      auto g = parse_group(spec);
      auto table = character_table(g);
      auto numeric = numeric_table(*g);
      REQUIRE(numeric.size() == table.size());
      std::vector<bool> used(table.size(), false);
      for (const auto& row : numeric) {
        bool found = false;
        for (std::size_t i = 0; i < table.size() && !found; ++i) {
          if (!used[i] && rows_close(row, table[i])) {
            used[i] = true;
            found = true;
          }
        }
        CHECK(found);
      }
    }
  }

  TEST_CASE("exact invariants and speed over the catalog") {
    for (const auto& spec : default_catalog()) {
      CAPTURE(spec);
      auto g = parse_group(spec);
      const auto start = std::chrono::steady_clock::now();
      auto table = character_table(g);
      const auto elapsed = std::chrono::steady_clock::now() - start;
      CHECK(elapsed < std::chrono::seconds(10));
      CHECK_NOTHROW(table.check());
      CHECK(table[0] == ClassFunction::trivial(g));
      std::uint64_t squares = 0;
      for (auto d : table.degrees()) {
        squares += d * d;
        CHECK(g->order() % d == 0);
      }
      CHECK(squares == g->order());
      for (const auto& row : table.rows()) {
        for (const auto& v : row.values()) CHECK(g->exponent() % v.conductor() == 0);
      }
      CHECK(std::is_sorted(table.degrees().begin(), table.degrees().end()));
    }
  }

  TEST_CASE("symmetric groups have rational tables") {
    for (const char* spec : {"name:S3", "name:S4", "name:S5"}) {
      auto table = character_table(parse_group(spec));
      for (const auto& row : table.rows()) {
        for (const auto& v : row.values()) CHECK(v.as_rational().has_value());
      }
    }
  }

  TEST_CASE("tables do not depend on the seed") {
    for (const char* spec : {"name:S4", "name:SL23", "name:ES27", "name:F21"}) {
      auto g = parse_group(spec);
      auto reference = character_table(g, 1);
      for (std::uint64_t seed : {2u, 3u, 12345u}) {
        auto other = character_table(g, seed);
        CHECK(other.rows() == reference.rows());
      }
    }
  }

  TEST_CASE("check rejects a corrupted table") {
    auto g = parse_group("name:S3");
    auto table = character_table(g);
    std::vector<ClassFunction> rows = table.rows();
    rows[2] = rows[1];
    CHECK_THROWS_AS(CharacterTable(g, rows).check(), TableError);
    rows = table.rows();
    rows.pop_back();
    CHECK_THROWS_AS(CharacterTable(g, rows).check(), TableError);
  }

  TEST_CASE("row lookup") {
    auto table = character_table(parse_group("name:D4"));
    for (std::size_t i = 0; i < table.size(); ++i) CHECK(table.index_of(table[i]) == i);
    CHECK(table.linear_rows() == std::vector<std::size_t>{0, 1, 2, 3});
  }

  TEST_CASE("modular prime") {
    CHECK(dixon_prime(6, 6) == 7);
    CHECK(dixon_prime(12, 24) == 13);
    CHECK(dixon_prime(2, 2) == 3);
    const std::uint64_t p = dixon_prime(30, 120);
    CHECK(p % 30 == 1);
    CHECK(p * p > 4 * 120);
  }
}
