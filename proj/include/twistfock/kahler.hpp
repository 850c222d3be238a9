#pragma once

// Kahler differentials of C[s^{+-1}, t^{+-1}] modulo exact forms, reduced to
// the basis { s^{j-1} t^m ds (m != 0), s^j t^{-1} dt, s^{-1} ds }.  The
// reduction implements b * d(a) for monomials via d(s^u t^k) and the exact-
// form relations; the degree-zero central elements are c0 = s^{-1}ds and
// c1 = t^{-1}dt.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "twistfock/algebra_kind.hpp"
#include "twistfock/scalar.hpp"

namespace twistfock {

class KahlerElement {
public:
  KahlerElement() = default;

  // ds term s^{j-1} t^m ds; the pair (0, 0) is s^{-1} ds itself
  void add_ds(int j, int m, const Scalar& c) {
    if (c.is_zero()) return;
    if (m == 0 && j != 0) throw std::logic_error("non-basis ds monomial");
    bump(ds_, {j, m}, c);
  }
  // dt term s^j t^{-1} dt
  void add_dt(int j, const Scalar& c) {
    if (c.is_zero()) return;
    bump(dt_, {j, 0}, c);
  }

  static KahlerElement c0() {
    KahlerElement k;
    k.add_ds(0, 0, Scalar::one());
    return k;
  }
  static KahlerElement c1() {
    KahlerElement k;
    k.add_dt(0, Scalar::one());
    return k;
  }

  KahlerElement& operator+=(const KahlerElement& o) {
    for (const auto& [k, c] : o.ds_) bump(ds_, k, c);
    for (const auto& [k, c] : o.dt_) bump(dt_, k, c);
    return *this;
  }
  KahlerElement operator+(const KahlerElement& o) const {
    KahlerElement r(*this);
    r += o;
    return r;
  }
  KahlerElement operator-() const { return scaled(Scalar::integer(-1)); }
  KahlerElement operator-(const KahlerElement& o) const { return *this + (-o); }
  KahlerElement scaled(const Scalar& s) const {
    KahlerElement r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : ds_) r.ds_.emplace(k, c * s);
    for (const auto& [k, c] : dt_) r.dt_.emplace(k, c * s);
    return r;
  }

  bool is_zero() const { return ds_.empty() && dt_.empty(); }
  friend bool operator==(const KahlerElement& a, const KahlerElement& b) {
    return a.ds_ == b.ds_ && a.dt_ == b.dt_;
  }

  const std::map<std::pair<int, int>, Scalar>& ds_terms() const { return ds_; }
  const std::map<std::pair<int, int>, Scalar>& dt_terms() const { return dt_; }
  Scalar coeff_c0() const {
    auto it = ds_.find({0, 0});
    return it == ds_.end() ? Scalar::zero() : it->second;
  }
  Scalar coeff_c1() const {
    auto it = dt_.find({0, 0});
    return it == dt_.end() ? Scalar::zero() : it->second;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& [k, c] : ds_) {
      if (!s.empty()) s += " + ";
      if (k.first == 0 && k.second == 0) {
        s += c.str() + "*(s^-1 ds)";
      } else {
        s += c.str() + "*(s^" + std::to_string(k.first - 1) + " t^" +
             std::to_string(k.second) + " ds)";
      }
    }
    for (const auto& [k, c] : dt_) {
      if (!s.empty()) s += " + ";
      s += c.str() + "*(s^" + std::to_string(k.first) + " t^-1 dt)";
    }
    return s;
  }

private:
  static void bump(std::map<std::pair<int, int>, Scalar>& m, std::pair<int, int> k,
                   const Scalar& c) {
    auto it = m.find(k);
    if (it == m.end()) {
      m.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) m.erase(it);
    }
  }

  std::map<std::pair<int, int>, Scalar> ds_;  // (j, m): s^{j-1} t^m ds
  std::map<std::pair<int, int>, Scalar> dt_;  // (j, 0): s^j t^{-1} dt
};

// b * d(a) for monomials b = s^v t^m, a = s^u t^p, reduced to the basis.
// Valid in the full quotient of Kahler forms; membership in the r-graded
// subspace is the caller's concern.
inline KahlerElement kahler_bda(std::pair<int, int> b_exp, std::pair<int, int> a_exp,
                                const Scalar& coeff = Scalar::one()) {
  const int v = b_exp.first, m = b_exp.second;
  const int u = a_exp.first, p = a_exp.second;
  KahlerElement out;
  if (coeff.is_zero()) return out;
  // b da = u s^{u+v-1} t^{m+p} ds + p s^{u+v} t^{m+p-1} dt
  const int js = u + v;      // ds monomial is s^{js - 1} t^{m+p} ds
  const int mt = m + p;
  if (u != 0) {
    if (mt != 0) {
      out.add_ds(js, mt, coeff * Scalar::integer(u));
    } else if (js == 0) {
      out.add_ds(0, 0, coeff * Scalar::integer(u));
    }  // s^{js-1} ds with js != 0 is exact
  }
  if (p != 0) {
    if (mt == 0) {  // s^{js} t^{-1} dt
      out.add_dt(js, coeff * Scalar::integer(p));
    } else if (js != 0) {
      // s^g t^d dt = -(g/(d+1)) s^{g-1} t^{d+1} ds   (d != -1)
      out.add_ds(js, mt, coeff * Scalar::integer(p) * Scalar::rational(-js, mt));
    }
    // js == 0 and mt != 0: t^d dt is exact
  }
  return out;
}

// public reduction with the membership precondition of the r-graded span
inline KahlerElement kahler_reduce(const AlgebraKind& kind, std::pair<int, int> b_exp,
                                   std::pair<int, int> a_exp) {
  const int tdeg = b_exp.second + a_exp.second;
  if (((tdeg % kind.r()) + kind.r()) % kind.r() != 0)
    throw std::invalid_argument("kahler_reduce: total t-degree not divisible by r");
  return kahler_bda(b_exp, a_exp);
}

}  // namespace twistfock
