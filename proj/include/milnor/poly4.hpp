#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace milnor {

/// The four coordinates of the source space, in the fixed order used by every
/// exponent tuple and Jacobian in the project.
enum class Var : int { X = 0, Y = 1, U = 2, V = 3 };

inline constexpr std::array<char, 4> kVarNames = {'x', 'y', 'u', 'v'};

using Monomial = std::array<int, 4>;

/// Sparse real polynomial in (x, y, u, v).
///
/// Terms map exponent tuples to coefficients; a coefficient that becomes
/// exactly 0 is erased, so the zero polynomial is the empty map and equality
/// is equality of term maps. Arithmetic is exact in double precision for the
/// small-integer coefficients the DSL produces.
class Poly4 {
 public:
  Poly4() = default;

  static Poly4 constant(double c);
  static Poly4 variable(Var v);
  static Poly4 term(double coeff, const Monomial& exponents);

  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, double>& terms() const { return terms_; }

  Poly4& operator+=(const Poly4& rhs);
  Poly4& operator-=(const Poly4& rhs);
  Poly4 operator+(const Poly4& rhs) const;
  Poly4 operator-(const Poly4& rhs) const;
  Poly4 operator-() const;
  Poly4 operator*(const Poly4& rhs) const;
  Poly4 operator*(double s) const;
  Poly4 pow(int n) const;

  bool operator==(const Poly4& rhs) const { return terms_ == rhs.terms_; }

  /// Exact formal partial derivative.
  Poly4 partial(Var v) const;

  /// Composition with the diagonal map (x,y,u,v) -> (s0 x, s1 y, s2 u, s3 v):
  /// each coefficient picks up the product of the scales raised to the term's
  /// exponents. Covers both radius rescaling and sign involutions.
  Poly4 scaled(const Eigen::Vector4d& s) const;

  double eval(const Eigen::Vector4d& p) const;
  Eigen::Vector4d grad(const Eigen::Vector4d& p) const;

  /// Largest |coefficient|, 0 for the zero polynomial.
  double max_abs_coeff() const;

  /// Canonical rendering accepted by the real-map DSL (graded-lex term order).
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, double c);
  std::map<Monomial, double> terms_;
};

inline Poly4 operator*(double s, const Poly4& p) { return p * s; }

/// Flattened evaluation form for the numeric inner loops: struct-of-arrays
/// over terms, evaluated with per-variable power tables.
class PolyEval {
 public:
  PolyEval() = default;
  explicit PolyEval(const Poly4& p);

  double operator()(const Eigen::Vector4d& x) const;
  bool is_zero() const { return coeffs_.empty(); }

 private:
  std::vector<double> coeffs_;
  std::vector<std::array<std::uint8_t, 4>> exps_;
  int max_deg_ = 0;
};

}  // namespace milnor
