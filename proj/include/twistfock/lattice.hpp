#pragma once

// Root and weight bookkeeping in the epsilon coordinates: vectors over the
// directions {c, d, eps_i, epsbar_i} with (c|d) = 1, (c|c) = (d|d) = 0 and
// the eps directions orthonormal.  These vectors carry the simple roots
// alpha_0..alpha_n, beta and theta_0 of each family; they are lattice data
// only and never act as operators.
//
// The D4 family realizes its G2-shaped root system inside three unbarred
// directions eps_1, eps_2, eps_3 even though only eps_1, eps_2 carry field
// letters; the extra direction is root bookkeeping only.

#include <map>
#include <stdexcept>
#include <string>

#include "twistfock/algebra_kind.hpp"
#include "twistfock/scalar.hpp"

namespace twistfock {

struct Direction {
  enum class Kind : std::uint8_t { c, d, eps, eps_bar } kind;
  int index;  // used by eps / eps_bar

  static Direction c() { return {Kind::c, 0}; }
  static Direction d() { return {Kind::d, 0}; }
  static Direction eps(int i) { return {Kind::eps, i}; }
  static Direction eps_bar(int i) { return {Kind::eps_bar, i}; }

  int key() const {
    switch (kind) {
      case Kind::c: return 0;
      case Kind::d: return 1;
      case Kind::eps: return 10 + index;
      case Kind::eps_bar: return 1000 + index;
    }
    return -1;
  }
  friend bool operator<(const Direction& a, const Direction& b) { return a.key() < b.key(); }
  friend bool operator==(const Direction& a, const Direction& b) { return a.key() == b.key(); }

  std::string str() const {
    switch (kind) {
      case Kind::c: return "c";
      case Kind::d: return "d";
      case Kind::eps: return "e" + std::to_string(index);
      case Kind::eps_bar: return "b" + std::to_string(index);
    }
    return "?";
  }
};

class LatticeVector {
public:
  LatticeVector() = default;

  static LatticeVector direction(Direction dir, Scalar coeff = Scalar::one()) {
    LatticeVector v;
    v.add(dir, coeff);
    return v;
  }

  void add(Direction dir, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto it = comp_.find(dir);
    if (it == comp_.end()) {
      comp_.emplace(dir, coeff);
    } else {
      it->second += coeff;
      if (it->second.is_zero()) comp_.erase(it);
    }
  }

  LatticeVector operator+(const LatticeVector& o) const {
    LatticeVector r(*this);
    for (const auto& [dir, s] : o.comp_) r.add(dir, s);
    return r;
  }
  LatticeVector operator-(const LatticeVector& o) const { return *this + (-o); }
  LatticeVector operator-() const {
    LatticeVector r;
    for (const auto& [dir, s] : comp_) r.comp_.emplace(dir, -s);
    return r;
  }
  LatticeVector scaled(const Scalar& s) const {
    LatticeVector r;
    if (s.is_zero()) return r;
    for (const auto& [dir, c] : comp_) r.comp_.emplace(dir, c * s);
    return r;
  }

  bool is_zero() const { return comp_.empty(); }
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.comp_ == b.comp_;
  }

  const std::map<Direction, Scalar>& components() const { return comp_; }

  std::string str() const {
    if (comp_.empty()) return "0";
    std::string s;
    for (const auto& [dir, c] : comp_) {
      if (!s.empty()) s += " + ";
      s += c.str() + "*" + dir.str();
    }
    return s;
  }

private:
  std::map<Direction, Scalar> comp_;
};

// (c|d) = 1, (c|c) = (d|d) = 0, eps/eps_bar orthonormal, all cross terms zero
inline Scalar direction_inner(const Direction& a, const Direction& b) {
  using K = Direction::Kind;
  if (a.kind == K::c && b.kind == K::d) return Scalar::one();
  if (a.kind == K::d && b.kind == K::c) return Scalar::one();
  if (a.kind == K::eps && b.kind == K::eps && a.index == b.index) return Scalar::one();
  if (a.kind == K::eps_bar && b.kind == K::eps_bar && a.index == b.index) return Scalar::one();
  return Scalar::zero();
}

inline Scalar inner(const LatticeVector& u, const LatticeVector& v) {
  Scalar acc;
  for (const auto& [da, ca] : u.components())
    for (const auto& [db, cb] : v.components()) {
      Scalar g = direction_inner(da, db);
      if (!g.is_zero()) acc += ca * cb * g;
    }
  return acc;
}

inline LatticeVector c_vector() { return LatticeVector::direction(Direction::c()); }
inline LatticeVector d_vector() { return LatticeVector::direction(Direction::d()); }
inline LatticeVector eps_vector(int i) { return LatticeVector::direction(Direction::eps(i)); }
inline LatticeVector eps_bar_vector(int i) { return LatticeVector::direction(Direction::eps_bar(i)); }

// highest weight theta_0 of g_1 as a g_0-module
inline LatticeVector theta0(const AlgebraKind& kind) {
  Scalar h2 = Scalar::sqrt2() * Scalar::rational(1, 2);  // 1/sqrt2
  switch (kind.family) {
    case Family::a_odd:
      return eps_vector(1).scaled(h2) + eps_vector(2).scaled(h2);
    case Family::d:
      return eps_vector(1);
    case Family::a_even:
      return eps_vector(1).scaled(Scalar::sqrt2());
    case Family::d4_triality: {
      Scalar h3 = Scalar::sqrt3() * Scalar::rational(1, 3);  // 1/sqrt3
      return (eps_vector(1) - eps_vector(3)).scaled(h3);
    }
  }
  throw std::logic_error("theta0: bad family");
}

inline LatticeVector beta_vector(const AlgebraKind& kind) {
  Scalar coef;
  switch (kind.family) {
    case Family::a_odd: coef = Scalar::sqrt2(); break;
    case Family::d: coef = Scalar::one(); break;
    case Family::a_even: coef = Scalar::sqrt2() * Scalar::rational(1, 2); break;
    case Family::d4_triality: coef = Scalar::sqrt3(); break;
  }
  return eps_vector(1) - c_vector().scaled(coef);
}

// simple roots of the twisted affine diagram; index 0 is c - theta_0
inline LatticeVector simple_root(const AlgebraKind& kind, int i) {
  if (i < 0 || i > kind.n) throw std::out_of_range("simple_root: index out of range");
  if (i == 0) return c_vector() - theta0(kind);
  Scalar h2 = Scalar::sqrt2() * Scalar::rational(1, 2);
  switch (kind.family) {
    case Family::a_odd:
      if (i < kind.n) return (eps_vector(i) - eps_vector(i + 1)).scaled(h2);
      return eps_vector(kind.n).scaled(Scalar::sqrt2());
    case Family::d:
      if (i < kind.n) return eps_vector(i) - eps_vector(i + 1);
      return eps_vector(kind.n);
    case Family::a_even:
      if (i < kind.n) return (eps_vector(i) - eps_vector(i + 1)).scaled(h2);
      return eps_vector(kind.n).scaled(h2);
    case Family::d4_triality: {
      Scalar h3 = Scalar::sqrt3() * Scalar::rational(1, 3);
      if (i == 1) return (eps_vector(1) - eps_vector(2)).scaled(h3);
      return (eps_vector(2).scaled(Scalar::integer(2)) - eps_vector(1) - eps_vector(3)).scaled(h3);
    }
  }
  throw std::logic_error("simple_root: bad family");
}

}  // namespace twistfock
