#include "realiz/lorentzian.hpp"

#include "realiz/errors.hpp"

namespace realiz {

SymMatrix::SymMatrix(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
  const std::size_t p = rows_.size();
  if (p == 0) throw NotSymmetric("matrix is empty");
  for (const auto& row : rows_)
    if (row.size() != p) throw NotSymmetric("matrix is not square");
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j)
      if (rows_[i][j] != rows_[j][i]) throw NotSymmetric("matrix is not symmetric");
}

SymMatrix::SymMatrix(int p) {
  if (p < 1) throw NotSymmetric("matrix is empty");
  rows_.assign(p, std::vector<Rational>(p, Rational(0)));
}

void SymMatrix::set(int i, int j, const Rational& value) {
  rows_.at(i).at(j) = value;
  rows_.at(j).at(i) = value;
}

Rational SymMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < size(); ++i) t += rows_[i][i];
  return t;
}

Rational SymMatrix::determinant() const {
  // Fraction-exact Gaussian elimination.
  auto a = rows_;
  const int p = size();
  Rational det = 1;
  for (int col = 0; col < p; ++col) {
    int pivot = col;
    while (pivot < p && a[pivot][col] == 0) ++pivot;
    if (pivot == p) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < p; ++r) {
      if (a[r][col] == 0) continue;
      Rational factor = a[r][col] / a[col][col];
      for (int c = col; c < p; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

std::vector<Rational> characteristic_polynomial(const SymMatrix& m) {
  // Faddeev–LeVerrier.
  const int p = m.size();
  std::vector<Rational> coeffs(p + 1, Rational(0));
  coeffs[p] = 1;
  std::vector<std::vector<Rational>> mk(p, std::vector<Rational>(p, Rational(0)));
  for (int step = 1; step <= p; ++step) {
    // mk <- A·mk + c_{p-step+1}·I
    std::vector<std::vector<Rational>> next(p, std::vector<Rational>(p, Rational(0)));
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) {
        Rational sum = 0;
        for (int l = 0; l < p; ++l) sum += m(i, l) * mk[l][j];
        next[i][j] = sum;
      }
    for (int i = 0; i < p; ++i) next[i][i] += coeffs[p - step + 1];
    mk = std::move(next);
    Rational tr = 0;
    for (int i = 0; i < p; ++i)
      for (int l = 0; l < p; ++l) tr += m(i, l) * mk[l][i];
    coeffs[p - step] = -tr / step;
  }
  return coeffs;
}

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::string SignPattern::str() const {
  return std::string(positive, '+') + std::string(zero, '0') + std::string(negative, '-');
}

SignPattern eigen_sign_pattern(const SymMatrix& m) {
  const std::vector<Rational> poly = characteristic_polynomial(m);
  SignPattern out;
  while (out.zero < m.size() && poly[out.zero] == 0) ++out.zero;
  std::vector<int> plus, minus;
  for (std::size_t i = out.zero; i < poly.size(); ++i) {
    const int s = sgn(poly[i]);
    plus.push_back(s);
    minus.push_back(i % 2 ? -s : s);
  }
  out.positive = sign_changes(plus);
  out.negative = sign_changes(minus);
  return out;
}

bool weakly_lorentzian(const SymMatrix& m) {
  const SignPattern s = eigen_sign_pattern(m);
  return s.positive <= 1 && (s.positive == 1 || s.zero > 0);
}

}  // namespace realiz
