#include "milnor/poly4.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace milnor {

Poly4 Poly4::constant(double c) {
  Poly4 p;
  p.add_term({0, 0, 0, 0}, c);
  return p;
}

Poly4 Poly4::variable(Var v) {
  Monomial m = {0, 0, 0, 0};
  m[static_cast<int>(v)] = 1;
  return term(1.0, m);
}

Poly4 Poly4::term(double coeff, const Monomial& exponents) {
  Poly4 p;
  p.add_term(exponents, coeff);
  return p;
}

void Poly4::add_term(const Monomial& m, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

int Poly4::total_degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m[0] + m[1] + m[2] + m[3]);
  return deg;
}

Poly4& Poly4::operator+=(const Poly4& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly4& Poly4::operator-=(const Poly4& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Poly4 Poly4::operator+(const Poly4& rhs) const {
  Poly4 out = *this;
  out += rhs;
  return out;
}

Poly4 Poly4::operator-(const Poly4& rhs) const {
  Poly4 out = *this;
  out -= rhs;
  return out;
}

Poly4 Poly4::operator-() const {
  Poly4 out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly4 Poly4::operator*(const Poly4& rhs) const {
  Poly4 out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m = {ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]};
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Poly4 Poly4::operator*(double s) const {
  Poly4 out;
  if (s == 0.0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
  return out;
}

Poly4 Poly4::pow(int n) const {
  if (n < 0) throw std::invalid_argument("Poly4::pow: negative exponent");
  Poly4 out = constant(1.0);
  Poly4 base = *this;
  while (n > 0) {
    if (n & 1) out = out * base;
    base = base * base;
    n >>= 1;
  }
  return out;
}

Poly4 Poly4::partial(Var v) const {
  const int k = static_cast<int>(v);
  Poly4 out;
  for (const auto& [m, c] : terms_) {
    if (m[k] == 0) continue;
    Monomial d = m;
    d[k] -= 1;
    out.add_term(d, c * m[k]);
  }
  return out;
}

Poly4 Poly4::scaled(const Eigen::Vector4d& s) const {
  Poly4 out;
  for (const auto& [m, c] : terms_) {
    double factor = 1.0;
    for (int k = 0; k < 4; ++k) {
      for (int e = 0; e < m[k]; ++e) factor *= s[k];
    }
    out.add_term(m, c * factor);
  }
  return out;
}

double Poly4::eval(const Eigen::Vector4d& p) const {
  double acc = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c;
    for (int k = 0; k < 4; ++k) {
      for (int e = 0; e < m[k]; ++e) t *= p[k];
    }
    acc += t;
  }
  return acc;
}

Eigen::Vector4d Poly4::grad(const Eigen::Vector4d& p) const {
  Eigen::Vector4d g = Eigen::Vector4d::Zero();
  for (int k = 0; k < 4; ++k) g[k] = partial(static_cast<Var>(k)).eval(p);
  return g;
}

double Poly4::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [mono, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

namespace {

void format_coeff(std::string& out, double c, bool leading) {
  const double a = std::abs(c);
  if (leading) {
    if (c < 0) out += "-";
  } else {
    out += (c < 0) ? " - " : " + ";
  }
  char buf[40];
  if (a == std::floor(a) && a < 1e15) {
    std::snprintf(buf, sizeof(buf), "%.0f", a);
  } else {
    std::snprintf(buf, sizeof(buf), "%.17g", a);
  }
  out += buf;
}

}  // namespace

std::string Poly4::to_string() const {
  if (terms_.empty()) return "0";

  // Graded-lex: higher total degree first, then map order.
  std::vector<std::pair<Monomial, double>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = a.first[0] + a.first[1] + a.first[2] + a.first[3];
    const int db = b.first[0] + b.first[1] + b.first[2] + b.first[3];
    if (da != db) return da > db;
    return a.first < b.first;
  });

  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    const bool unit = std::abs(c) == 1.0 && (m[0] + m[1] + m[2] + m[3]) > 0;
    if (unit) {
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += (c < 0) ? " - " : " + ";
      }
    } else {
      format_coeff(out, c, first);
    }
    bool printed_var = false;
    for (int k = 0; k < 4; ++k) {
      if (m[k] == 0) continue;
      if (printed_var || !unit) out += "*";
      out += kVarNames[static_cast<std::size_t>(k)];
      if (m[k] > 1) {
        out += "^";
        out += std::to_string(m[k]);
      }
      printed_var = true;
    }
    first = false;
  }
  return out;
}

PolyEval::PolyEval(const Poly4& p) {
  coeffs_.reserve(p.term_count());
  exps_.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) {
    coeffs_.push_back(c);
    exps_.push_back({static_cast<std::uint8_t>(m[0]), static_cast<std::uint8_t>(m[1]),
                     static_cast<std::uint8_t>(m[2]), static_cast<std::uint8_t>(m[3])});
    max_deg_ = std::max({max_deg_, m[0], m[1], m[2], m[3]});
  }
}

double PolyEval::operator()(const Eigen::Vector4d& x) const {
  if (max_deg_ > 15) {  // rare; falls back to per-term powers
    double acc = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      double t = coeffs_[i];
      for (int k = 0; k < 4; ++k)
        for (int e = 0; e < exps_[i][k]; ++e) t *= x[k];
      acc += t;
    }
    return acc;
  }
  // Power tables up to the max per-variable degree.
  double pw[4][16];
  for (int k = 0; k < 4; ++k) {
    pw[k][0] = 1.0;
    for (int e = 1; e <= max_deg_; ++e) pw[k][e] = pw[k][e - 1] * x[k];
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& e = exps_[i];
    acc += coeffs_[i] * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]] * pw[3][e[3]];
  }
  return acc;
}

}  // namespace milnor
