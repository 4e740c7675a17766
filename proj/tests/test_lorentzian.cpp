#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "realiz/errors.hpp"
#include "realiz/lorentzian.hpp"

using namespace realiz;

namespace {

SymMatrix mat(std::vector<std::vector<int>> rows) {
  std::vector<std::vector<Rational>> q;
  for (const auto& row : rows) {
    q.emplace_back();
    for (int v : row) q.back().emplace_back(v);
  }
  return SymMatrix(std::move(q));
}

}  // namespace

TEST_CASE("SymMatrix") {
  SymMatrix m = mat({{2, 3}, {3, 6}});
  CHECK(m.determinant() == 3);
  CHECK(m.trace() == 8);
  SymMatrix z(3);
  z.set(0, 2, Rational(1, 2));
  CHECK(z(2, 0) == Rational(1, 2));
  CHECK(z.determinant() == 0);
  CHECK_THROWS_AS(mat({{1, 2}, {3, 4}}), NotSymmetric);
  CHECK_THROWS_AS(mat({{1, 2}}), NotSymmetric);
  CHECK_THROWS_AS(SymMatrix(std::vector<std::vector<Rational>>{}), NotSymmetric);
}

TEST_CASE("characteristic_polynomial") {
  // x^2 - 8x + 3
  auto p = characteristic_polynomial(mat({{2, 3}, {3, 6}}));
  REQUIRE(p.size() == 3);
  CHECK(p[0] == 3);
  CHECK(p[1] == -8);
  CHECK(p[2] == 1);
  auto q = characteristic_polynomial(mat({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}));
  CHECK(q == std::vector<Rational>{-6, 11, -6, 1});
}

TEST_CASE("eigen_sign_pattern and weakly_lorentzian") {
  CHECK(weakly_lorentzian(mat({{1, 2}, {2, 4}})));
  CHECK(eigen_sign_pattern(mat({{1, 2}, {2, 4}})).str() == "+0");
  CHECK_FALSE(weakly_lorentzian(mat({{2, 3}, {3, 6}})));
  CHECK(eigen_sign_pattern(mat({{2, 3}, {3, 6}})).str() == "++");
  CHECK_FALSE(weakly_lorentzian(mat({{-1, 0}, {0, -1}})));
  CHECK(eigen_sign_pattern(mat({{-1, 0}, {0, -1}})).str() == "--");
  CHECK(weakly_lorentzian(mat({{0, 0}, {0, -1}})));
  CHECK(weakly_lorentzian(mat({{0, 0}, {0, 0}})));
  CHECK(weakly_lorentzian(mat({{0, 1}, {1, 0}})));
  CHECK(weakly_lorentzian(mat({{1, 1}, {1, 1}})));
  CHECK(weakly_lorentzian(mat({{5}})));
  CHECK(weakly_lorentzian(mat({{0}})));
  CHECK_FALSE(weakly_lorentzian(mat({{-5}})));
  SignPattern sp = eigen_sign_pattern(mat({{1, 0, 0}, {0, 0, 0}, {0, 0, -2}}));
  CHECK(sp == SignPattern{1, 1, 1});
  CHECK(sp.str() == "+0-");
}

TEST_CASE("property: exact signs agree with a floating-point eigensolver") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> entry(-6, 6), size(1, 5);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int p = size(rng);
    SymMatrix m(p);
    Eigen::MatrixXd f(p, p);
    // Occasional rank deficiency exercises the zero-eigenvalue count.
    const bool low_rank = trial % 4 == 0;
    std::vector<int> v(p);
    for (int& x : v) x = entry(rng);
    for (int i = 0; i < p; ++i)
      for (int j = i; j < p; ++j) {
        const int value = low_rank ? v[i] * v[j] : entry(rng);
        m.set(i, j, value);
        f(i, j) = f(j, i) = value;
      }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(f);
    const auto& ev = solver.eigenvalues();
    const double tol = 1e-7 * (1.0 + ev.cwiseAbs().maxCoeff());
    SignPattern want;
    bool ambiguous = false;
    for (int i = 0; i < p; ++i) {
      if (std::abs(ev[i]) < tol)
        ++want.zero;
      else if (ev[i] > 0)
        ++want.positive;
      else
        ++want.negative;
      if (std::abs(ev[i]) >= tol && std::abs(ev[i]) < 1e3 * tol) ambiguous = true;
    }
    if (ambiguous) continue;
    CHECK(eigen_sign_pattern(m) == want);
    const bool wl = want.positive <= 1 && (want.positive == 1 || want.zero > 0);
    CHECK(weakly_lorentzian(m) == wl);
    ++checked;
  }
  CHECK(checked > 1500);
}

TEST_CASE("property: 2x2 Hodge matrices are weakly Lorentzian iff b^2 >= ac") {
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = 0; c <= 6; ++c) {
        if (a + b + c == 0) continue;
        SymMatrix l = mat({{a, a + b}, {a + b, a + 2 * b + c}});
        CHECK(l.determinant() == a * c - b * b);
        CHECK(weakly_lorentzian(l) == (b * b >= a * c));
      }
}
