#pragma once

// Presentation data for t(g): the extended Cartan matrix of the twisted
// affine diagram, the central coefficient tables of relations (1)-(5) and
// (8), the Serre arities of relations (9)-(12), and the Z x Q-hat grading.

#include <stdexcept>
#include <vector>

#include "twistfock/algebra_kind.hpp"
#include "twistfock/scalar.hpp"

namespace twistfock {

struct GeneratorSymbol {
  enum class Role { h, x_plus, x_minus } role;
  int index;  // 0..n

  static GeneratorSymbol H(int i) { return {Role::h, i}; }
  static GeneratorSymbol Xp(int i) { return {Role::x_plus, i}; }
  static GeneratorSymbol Xm(int i) { return {Role::x_minus, i}; }

  bool is_h() const { return role == Role::h; }
  int sign() const { return role == Role::x_plus ? +1 : role == Role::x_minus ? -1 : 0; }

  std::string str() const {
    switch (role) {
      case Role::h: return "a" + std::to_string(index);
      case Role::x_plus: return "X(+a" + std::to_string(index) + ")";
      case Role::x_minus: return "X(-a" + std::to_string(index) + ")";
    }
    return "?";
  }
  friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
  friend bool operator<(const GeneratorSymbol& a, const GeneratorSymbol& b) {
    auto ka = static_cast<int>(a.role) * 100 + a.index;
    auto kb = static_cast<int>(b.role) * 100 + b.index;
    return ka < kb;
  }
};

struct RelationTable {
  AlgebraKind kind;
  std::vector<std::vector<int>> cartan;  // (n+1) x (n+1) extended matrix
  std::vector<Scalar> d_vector;          // d_0 .. d_n

  int a(int i, int j) const { return cartan[i][j]; }
  int size() const { return kind.n + 1; }

  // [alpha_i(k), alpha_j(l)] = hh_coeff(i,j) k delta_{k,-l} c-slash
  Scalar hh_coeff(int i, int j) const {
    if (i > j) std::swap(i, j);
    const int n = kind.n;
    const int r = kind.r();
    const Family f = kind.family;
    if (i == 0 && j == 0)
      return Scalar::integer(f == Family::a_even ? 2 : 2 * r);
    if (i == 0)
      return Scalar::integer((f == Family::d ? 1 : r) * a(0, j));
    if (i == n && j == n) {
      switch (f) {
        case Family::a_odd:
        case Family::d4_triality: return Scalar::integer(2);
        case Family::a_even: return Scalar::integer(8);
        case Family::d: return Scalar::integer(4);
      }
    }
    if (i == n - 1 && j == n) {
      int factor = 1;
      if (f == Family::a_even) factor = 4;
      if (f == Family::d) factor = 2;
      return Scalar::integer(factor * a(n - 1, n));
    }
    return Scalar::integer((f == Family::d ? 1 : r) * a(i, j));
  }

  // [X(alpha_i,k), X(-alpha_i,l)] = alpha_i(k+l) + xx_ddelta(i) k delta c-slash
  Scalar xx_ddelta(int i) const {
    const int n = kind.n;
    const int r = kind.r();
    switch (kind.family) {
      case Family::a_odd:
      case Family::d4_triality:
        return Scalar::integer(r - (i == n ? r - 1 : 0));
      case Family::a_even:
        return Scalar::integer(r * (1 + (i == n ? r - 1 : 0)) - (i == 0 ? r - 1 : 0));
      case Family::d:
        return Scalar::integer(1 + ((i == 0 ? 1 : 0) + (i == n ? 1 : 0)) * (r - 1));
    }
    throw std::logic_error("xx_ddelta: bad family");
  }

  // number of ad's in the Serre relation for the pair (i, j), i != j
  int serre_arity(int i, int j) const { return 1 - a(i, j); }

  static RelationTable build(const AlgebraKind& kind) {
    RelationTable t;
    t.kind = kind;
    const int n = kind.n;
    const int m = n + 1;
    t.cartan.assign(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i) t.cartan[i][i] = 2;
    // fixed-point subalgebra part: C_n, B_n, B_n, G_2
    switch (kind.family) {
      case Family::d4_triality:
        t.cartan[1][2] = -3;
        t.cartan[2][1] = -1;
        break;
      case Family::a_odd:  // C_n
        for (int i = 1; i < n - 1; ++i) t.cartan[i][i + 1] = t.cartan[i + 1][i] = -1;
        t.cartan[n - 1][n] = -2;
        t.cartan[n][n - 1] = -1;
        break;
      case Family::d:
      case Family::a_even:  // B_n
        for (int i = 1; i < n - 1; ++i) t.cartan[i][i + 1] = t.cartan[i + 1][i] = -1;
        t.cartan[n - 1][n] = -1;
        t.cartan[n][n - 1] = -2;
        break;
    }
    // affine extension
    switch (kind.family) {
      case Family::a_odd:
        t.cartan[0][2] = t.cartan[2][0] = -1;
        break;
      case Family::d:
        t.cartan[0][1] = -2;
        t.cartan[1][0] = -1;
        break;
      case Family::a_even:
        t.cartan[0][1] = -1;
        t.cartan[1][0] = -2;
        break;
      case Family::d4_triality:
        t.cartan[0][1] = t.cartan[1][0] = -1;
        break;
    }
    // symmetrizers (d_0, ..., d_n)
    t.d_vector.clear();
    switch (kind.family) {
      case Family::a_odd:
        for (int i = 0; i < n; ++i) t.d_vector.push_back(Scalar::rational(1, 2));
        t.d_vector.push_back(Scalar::one());
        break;
      case Family::d:
        t.d_vector.push_back(Scalar::rational(1, 2));
        for (int i = 1; i < n; ++i) t.d_vector.push_back(Scalar::one());
        t.d_vector.push_back(Scalar::rational(1, 2));
        break;
      case Family::a_even:
        t.d_vector.push_back(Scalar::one());
        for (int i = 1; i < n; ++i) t.d_vector.push_back(Scalar::rational(1, 2));
        t.d_vector.push_back(Scalar::rational(1, 4));
        break;
      case Family::d4_triality:
        t.d_vector = {Scalar::rational(1, 3), Scalar::rational(1, 3), Scalar::one()};
        break;
    }
    return t;
  }
};

// degree in Z x Q-hat: s-mode plus an integer vector over (alpha_0..alpha_n)
struct Degree {
  int s_degree{0};
  std::vector<int> root_part;

  Degree operator+(const Degree& o) const {
    Degree r;
    r.s_degree = s_degree + o.s_degree;
    r.root_part = root_part;
    if (r.root_part.size() < o.root_part.size()) r.root_part.resize(o.root_part.size(), 0);
    for (size_t i = 0; i < o.root_part.size(); ++i) r.root_part[i] += o.root_part[i];
    return r;
  }
  friend bool operator==(const Degree&, const Degree&) = default;
};

inline Degree degree_of_central() { return Degree{0, {}}; }

inline Degree degree_of(const AlgebraKind& kind, const GeneratorSymbol& sym, int k) {
  Degree d;
  d.s_degree = k;
  d.root_part.assign(kind.n + 1, 0);
  if (!sym.is_h()) d.root_part[sym.index] = sym.sign();
  return d;
}

}  // namespace twistfock
