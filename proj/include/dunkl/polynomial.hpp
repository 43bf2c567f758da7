#pragma once

// Real polynomials in d variables, the intertwining operator V_k and the
// Dunkl operators D_k acting on them.

#include <map>
#include <span>
#include <vector>

#include "dunkl/measure.hpp"

namespace dunkl {

class Polynomial {
 public:
  using Exponent = std::vector<int>;

  explicit Polynomial(int dim);
  static Polynomial constant(int dim, double c);
  /// x_k (0-based axis).
  static Polynomial coordinate(int dim, int k);
  static Polynomial monomial(Exponent exponent, double coefficient = 1.0);

  int dim() const { return dim_; }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous(int degree) const;
  const std::map<Exponent, double>& terms() const { return terms_; }

  void add_term(const Exponent& exponent, double coefficient);
  double operator()(std::span<const double> x) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator*=(double s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, Polynomial b) { return a += (b *= -1.0); }
  friend Polynomial operator*(double s, Polynomial p) { return p *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Ordinary partial derivative along axis k.
  Polynomial partial(int k) const;
  /// f(sigma_k x): flip the sign of the k-th coordinate.
  Polynomial reflect(int k) const;

  /// Max absolute coefficient difference.
  static double distance(const Polynomial& a, const Polynomial& b);

 private:
  void prune();
  int dim_;
  std::map<Exponent, double> terms_;
};

/// V_k f(x) by tensor Gauss-Jacobi quadrature of
///   int_{[-1,1]^d} f(x_1 t_1, ..., x_d t_d) prod Phi_{k_j}(t_j) dt.
/// Axes with k_j = 0 use the point mass at t_j = 1. order <= 0 picks the
/// smallest order that is exact for deg f.
double intertwine(const Multiplicity& kappa, const Polynomial& f, std::span<const double> x,
                  int order = 0);

/// V_k f as a polynomial: x^a maps to prod_j m_{a_j}(k_j) x^a with the
/// Phi-moments m_n evaluated by the same quadrature.
Polynomial intertwine_polynomial(const Multiplicity& kappa, const Polynomial& f);

/// D_k f = partial_k f + k_k (f - f o sigma_k) / x_k, exact on polynomials
/// (0-based axis index).
Polynomial dunkl_derivative(const Multiplicity& kappa, int k, const Polynomial& f);

}  // namespace dunkl
