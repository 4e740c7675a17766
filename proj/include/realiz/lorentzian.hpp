#pragma once

#include <string>
#include <vector>

#include "realiz/cohomology.hpp"

namespace realiz {

/// Exact symmetric p x p matrix, p >= 1.
class SymMatrix {
 public:
  /// Throws NotSymmetric unless `rows` is square, nonempty and symmetric.
  explicit SymMatrix(std::vector<std::vector<Rational>> rows);
  /// Zero matrix of size p.
  explicit SymMatrix(int p);

  int size() const noexcept { return static_cast<int>(rows_.size()); }
  const Rational& operator()(int i, int j) const { return rows_[i][j]; }
  /// Sets both (i,j) and (j,i).
  void set(int i, int j, const Rational& value);
  const std::vector<std::vector<Rational>>& rows() const noexcept { return rows_; }
  Rational determinant() const;
  Rational trace() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::vector<std::vector<Rational>> rows_;
};

/// Coefficients c_0..c_p of det(xI - M), lowest degree first.
std::vector<Rational> characteristic_polynomial(const SymMatrix& m);

/// Eigenvalue counts with multiplicity.
struct SignPattern {
  int positive = 0;
  int zero = 0;
  int negative = 0;

  /// "+" per positive, "0" per zero, "-" per negative eigenvalue, largest first.
  std::string str() const;
  friend bool operator==(const SignPattern&, const SignPattern&) = default;
};

/// Exact: the characteristic polynomial of a symmetric matrix is real-rooted,
/// so Descartes' rule of signs counts its positive and negative roots exactly.
SignPattern eigen_sign_pattern(const SymMatrix& m);

/// Largest eigenvalue >= 0 >= every other eigenvalue.
bool weakly_lorentzian(const SymMatrix& m);

}  // namespace realiz
