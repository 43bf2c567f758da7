#include "dunkl/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dunkl/quadrature.hpp"

namespace dunkl {

Polynomial::Polynomial(int dim) : dim_(dim) {
  if (dim < 1) throw DomainError("Polynomial: dimension must be >= 1");
}

Polynomial Polynomial::constant(int dim, double c) {
  Polynomial p(dim);
  p.add_term(Exponent(static_cast<std::size_t>(dim), 0), c);
  return p;
}

Polynomial Polynomial::coordinate(int dim, int k) {
  if (k < 0 || k >= dim) throw DomainError("Polynomial::coordinate: axis out of range");
  Exponent e(static_cast<std::size_t>(dim), 0);
  e[static_cast<std::size_t>(k)] = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(Exponent exponent, double coefficient) {
  Polynomial p(static_cast<int>(exponent.size()));
  p.add_term(exponent, coefficient);
  return p;
}

int Polynomial::degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

bool Polynomial::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(), [degree](const auto& term) {
    return std::accumulate(term.first.begin(), term.first.end(), 0) == degree;
  });
}

void Polynomial::add_term(const Exponent& exponent, double coefficient) {
  if (static_cast<int>(exponent.size()) != dim_) {
    throw DomainError("Polynomial: exponent dimension mismatch");
  }
  if (std::any_of(exponent.begin(), exponent.end(), [](int a) { return a < 0; })) {
    throw DomainError("Polynomial: negative exponent");
  }
  if (coefficient == 0.0) return;
  terms_[exponent] += coefficient;
  if (terms_[exponent] == 0.0) terms_.erase(exponent);
}

double Polynomial::operator()(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) throw DomainError("Polynomial: point dimension mismatch");
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double m = c;
    for (std::size_t j = 0; j < e.size(); ++j) {
      for (int p = 0; p < e[j]; ++p) m *= x[j];
    }
    acc += m;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.dim_ != dim_) throw DomainError("Polynomial: dimension mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (auto& [e, c] : terms_) c *= s;
  prune();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.dim_ != b.dim_) throw DomainError("Polynomial: dimension mismatch");
  Polynomial out(a.dim_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponent e(ea.size());
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::partial(int k) const {
  if (k < 0 || k >= dim_) throw DomainError("Polynomial::partial: axis out of range");
  Polynomial out(dim_);
  const auto kk = static_cast<std::size_t>(k);
  for (const auto& [e, c] : terms_) {
    if (e[kk] == 0) continue;
    Exponent d = e;
    d[kk] -= 1;
    out.add_term(d, c * e[kk]);
  }
  return out;
}

Polynomial Polynomial::reflect(int k) const {
  if (k < 0 || k >= dim_) throw DomainError("Polynomial::reflect: axis out of range");
  Polynomial out(dim_);
  const auto kk = static_cast<std::size_t>(k);
  for (const auto& [e, c] : terms_) out.add_term(e, (e[kk] % 2) ? -c : c);
  return out;
}

double Polynomial::distance(const Polynomial& a, const Polynomial& b) {
  const Polynomial diff = a - b;
  double m = 0.0;
  for (const auto& [e, c] : diff.terms_) m = std::max(m, std::abs(c));
  return m;
}

void Polynomial::prune() {
  std::erase_if(terms_, [](const auto& term) { return term.second == 0.0; });
}

namespace {

int exact_order(int degree) { return std::max(1, degree / 2 + 1); }

}  // namespace

double intertwine(const Multiplicity& kappa, const Polynomial& f, std::span<const double> x,
                  int order) {
  const int d = kappa.dim();
  if (f.dim() != d || static_cast<int>(x.size()) != d) {
    throw DomainError("intertwine: dimension mismatch");
  }
  if (order <= 0) order = exact_order(f.degree());

  std::vector<QuadratureRule> rules;
  rules.reserve(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) rules.push_back(phi_rule(kappa[j], order));

  // Walk the tensor grid with an odometer index.
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  std::vector<double> point(static_cast<std::size_t>(d));
  double acc = 0.0;
  while (true) {
    double w = 1.0;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      point[j] = x[j] * rules[j].nodes[idx[j]];
      w *= rules[j].weights[idx[j]];
    }
    acc += w * f(point);
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == rules[j].size()) idx[j++] = 0;
    if (j == idx.size()) break;
  }
  return acc;
}

Polynomial intertwine_polynomial(const Multiplicity& kappa, const Polynomial& f) {
  const int d = kappa.dim();
  if (f.dim() != d) throw DomainError("intertwine_polynomial: dimension mismatch");
  const int order = exact_order(f.degree());
  std::vector<QuadratureRule> rules;
  for (int j = 0; j < d; ++j) rules.push_back(phi_rule(kappa[j], order));

  auto moment = [&rules](std::size_t j, int n) {
    return rules[j].integrate([n](double t) { return std::pow(t, n); });
  };
  Polynomial out(d);
  for (const auto& [e, c] : f.terms()) {
    double scale = c;
    for (std::size_t j = 0; j < e.size(); ++j) scale *= moment(j, e[j]);
    out.add_term(e, scale);
  }
  return out;
}

Polynomial dunkl_derivative(const Multiplicity& kappa, int k, const Polynomial& f) {
  if (f.dim() != kappa.dim()) throw DomainError("dunkl_derivative: dimension mismatch");
  if (k < 0 || k >= f.dim()) throw DomainError("dunkl_derivative: axis out of range");
  // D_k x^a = (a_k + 2 k_k [a_k odd]) x^{a - e_k}
  const auto kk = static_cast<std::size_t>(k);
  Polynomial out(f.dim());
  for (const auto& [e, c] : f.terms()) {
    if (e[kk] == 0) continue;
    Polynomial::Exponent d = e;
    d[kk] -= 1;
    const double factor = e[kk] + ((e[kk] % 2) ? 2.0 * kappa[k] : 0.0);
    out.add_term(d, c * factor);
  }
  return out;
}

}  // namespace dunkl
