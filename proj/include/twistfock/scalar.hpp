#pragma once

// Exact arithmetic in Q(zeta_24), zeta a fixed primitive 24th root of unity.
// Elements are stored by their coordinates over the power basis
// {1, z, ..., z^7}, reduced modulo the 24th cyclotomic polynomial
// x^8 - x^4 + 1.  This one field holds every constant the construction
// needs: sqrt2 = z^3 + z^21, sqrt3 = z^2 + z^22, i = z^6, omega = z^8.
//
// Coordinates are kept as machine integers over a common positive
// denominator whenever they fit; values that leave that range are promoted
// to GMP rationals transparently, so arithmetic is arbitrary precision.

#include <array>
#include <cstdint>
#include <complex>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace twistfock {

class Scalar {
public:
  using BigCoords = std::array<mpq_class, 8>;

  Scalar() : n_{}, d_(1) {}

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return integer(1); }

  static Scalar integer(long v) {
    Scalar s;
    if (v >= INT32_MIN && v <= INT32_MAX) {
      s.n_[0] = static_cast<std::int32_t>(v);
    } else {
      s.big_ = std::make_unique<BigCoords>();
      (*s.big_)[0] = v;
    }
    return s;
  }

  static Scalar rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Scalar::rational: zero denominator");
    Scalar s;
    if (den < 0) { num = -num; den = -den; }
    long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num >= INT32_MIN && num <= INT32_MAX && den <= INT32_MAX) {
      s.n_[0] = static_cast<std::int32_t>(num);
      s.d_ = static_cast<std::int32_t>(den);
    } else {
      s.big_ = std::make_unique<BigCoords>();
      (*s.big_)[0] = mpq_class(num, den);
      (*s.big_)[0].canonicalize();
    }
    return s;
  }

  // zeta^k for any integer k (taken mod 24)
  static Scalar zeta_power(long k) {
    k %= 24;
    if (k < 0) k += 24;
    bool negate = false;
    if (k >= 12) { k -= 12; negate = true; }  // z^12 = -1
    Scalar s;
    if (k < 8) {
      s.n_[k] = 1;
    } else {
      // z^(8+j) = z^(4+j) - z^j
      s.n_[k - 4] = 1;
      s.n_[k - 8] = -1;
    }
    return negate ? -s : s;
  }

  static Scalar omega() { return zeta_power(8); }      // primitive cube root
  static Scalar imag_unit() { return zeta_power(6); }
  static Scalar sqrt2() { return zeta_power(3) + zeta_power(21); }
  static Scalar sqrt3() { return zeta_power(2) + zeta_power(22); }

  Scalar(const Scalar& o) : n_(o.n_), d_(o.d_) {
    if (o.big_) big_ = std::make_unique<BigCoords>(*o.big_);
  }
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& o) {
    if (this != &o) {
      n_ = o.n_;
      d_ = o.d_;
      big_ = o.big_ ? std::make_unique<BigCoords>(*o.big_) : nullptr;
    }
    return *this;
  }
  Scalar& operator=(Scalar&&) noexcept = default;

  bool is_zero() const {
    if (big_) {
      for (const auto& q : *big_)
        if (q != 0) return false;
      return true;
    }
    for (auto v : n_)
      if (v != 0) return false;
    return true;
  }

  bool is_one() const {
    if (big_) {
      if ((*big_)[0] != 1) return false;
      for (int i = 1; i < 8; ++i)
        if ((*big_)[i] != 0) return false;
      return true;
    }
    if (d_ != 1 || n_[0] != 1) return false;
    for (int i = 1; i < 8; ++i)
      if (n_[i] != 0) return false;
    return true;
  }

  bool is_minus_one() const {
    Scalar t = -(*this);
    return t.is_one();
  }

  // true iff the element lies in Q (only the z^0 coordinate is nonzero)
  bool is_rational() const {
    if (big_) {
      for (int i = 1; i < 8; ++i)
        if ((*big_)[i] != 0) return false;
      return true;
    }
    for (int i = 1; i < 8; ++i)
      if (n_[i] != 0) return false;
    return true;
  }

  mpq_class coord(int i) const {
    if (big_) return (*big_)[i];
    return mpq_class(n_[i], d_);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.big_ || b.big_) return big_add(a, b);
    if (a.d_ == 1 && b.d_ == 1) {
      // integral coordinates: no reduction needed
      Scalar r;
      bool fits = true;
      for (int i = 0; i < 8; ++i) {
        std::int64_t v = static_cast<std::int64_t>(a.n_[i]) + b.n_[i];
        if (v < INT32_MIN || v > INT32_MAX) { fits = false; break; }
        r.n_[i] = static_cast<std::int32_t>(v);
      }
      if (fits) return r;
    }
    // cross-multiplied numerators fit easily in 64 bits
    std::array<std::int64_t, 8> num;
    for (int i = 0; i < 8; ++i)
      num[i] = static_cast<std::int64_t>(a.n_[i]) * b.d_ +
               static_cast<std::int64_t>(b.n_[i]) * a.d_;
    return from_small64(num, static_cast<std::int64_t>(a.d_) * b.d_);
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  Scalar operator-() const {
    Scalar r(*this);
    if (r.big_) {
      for (auto& q : *r.big_) q = -q;
    } else {
      for (auto& v : r.n_) v = -v;
    }
    return r;
  }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    if (a.big_ || b.big_) return big_mul(a, b);
    // convolution over the power basis, then fold with z^8 = z^4 - 1
    using I128 = __int128;
    std::array<I128, 15> c{};
    for (int i = 0; i < 8; ++i) {
      if (a.n_[i] == 0) continue;
      const I128 ai = a.n_[i];
      for (int j = 0; j < 8; ++j) {
        if (b.n_[j] == 0) continue;
        c[i + j] += ai * b.n_[j];
      }
    }
    for (int k = 14; k >= 8; --k) {
      if (c[k] == 0) continue;
      c[k - 4] += c[k];
      c[k - 8] -= c[k];
      c[k] = 0;
    }
    const I128 limit = static_cast<I128>(INT64_MAX);
    std::array<std::int64_t, 8> num;
    for (int i = 0; i < 8; ++i) {
      if (c[i] > limit || c[i] < -limit) return big_mul(a, b);
      num[i] = static_cast<std::int64_t>(c[i]);
    }
    return from_small64(num, static_cast<std::int64_t>(a.d_) * b.d_);
  }

  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
  Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

  // multiplicative inverse; the nonzero element inverts because
  // x^8 - x^4 + 1 is irreducible over Q
  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("Scalar::inverse: division by zero");
    // solve (this) * x = 1 via the multiplication matrix over the basis
    std::array<std::array<mpq_class, 9>, 8> m;
    Scalar zp = one();
    for (int col = 0; col < 8; ++col) {
      Scalar prod = *this * zp;
      for (int row = 0; row < 8; ++row) m[row][col] = prod.coord(row);
      zp = zp * zeta_power(1);
    }
    for (int row = 0; row < 8; ++row) m[row][8] = (row == 0) ? 1 : 0;
    // Gaussian elimination
    for (int col = 0; col < 8; ++col) {
      int piv = -1;
      for (int row = col; row < 8; ++row)
        if (m[row][col] != 0) { piv = row; break; }
      if (piv < 0) throw std::logic_error("Scalar::inverse: singular multiplication matrix");
      std::swap(m[col], m[piv]);
      mpq_class inv = 1 / m[col][col];
      for (int j = col; j <= 8; ++j) m[col][j] *= inv;
      for (int row = 0; row < 8; ++row) {
        if (row == col || m[row][col] == 0) continue;
        mpq_class f = m[row][col];
        for (int j = col; j <= 8; ++j) m[row][j] -= f * m[col][j];
      }
    }
    Scalar r;
    r.big_ = std::make_unique<BigCoords>();
    for (int i = 0; i < 8; ++i) (*r.big_)[i] = m[i][8];
    r.demote();
    return r;
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) {
      // both canonical with positive denominators
      return a.d_ == b.d_ && a.n_ == b.n_;
    }
    for (int i = 0; i < 8; ++i)
      if (a.coord(i) != b.coord(i)) return false;
    return true;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // numeric embedding at zeta = e^{i pi / 12}
  std::complex<double> embed() const {
    std::complex<double> acc(0.0, 0.0);
    constexpr double pi = 3.14159265358979323846;
    for (int i = 0; i < 8; ++i) {
      mpq_class q = coord(i);
      if (q == 0) continue;
      double v = q.get_d();
      acc += v * std::exp(std::complex<double>(0.0, pi * i / 12.0));
    }
    return acc;
  }

  // the 8 coordinates as canonical "p/q" strings
  std::vector<std::string> coord_strings() const {
    std::vector<std::string> out;
    out.reserve(8);
    for (int i = 0; i < 8; ++i) {
      mpq_class q = coord(i);
      q.canonicalize();
      out.push_back(q.get_num().get_str() + "/" + q.get_den().get_str());
    }
    return out;
  }

  static Scalar from_coord_strings(const std::vector<std::string>& v) {
    if (v.size() != 8) throw std::invalid_argument("Scalar: expected 8 coordinates");
    Scalar r;
    r.big_ = std::make_unique<BigCoords>();
    for (int i = 0; i < 8; ++i) {
      (*r.big_)[i] = mpq_class(v[i]);
      (*r.big_)[i].canonicalize();
    }
    r.demote();
    return r;
  }

  // compact display form, e.g. "1", "-2/3", "(0,1,0,0,0,0,0,0)"
  std::string str() const {
    if (is_rational()) {
      mpq_class q = coord(0);
      if (q.get_den() == 1) return q.get_num().get_str();
      return q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    std::string s = "(";
    for (int i = 0; i < 8; ++i) {
      if (i) s += ",";
      mpq_class q = coord(i);
      s += q.get_num().get_str();
      if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    }
    return s + ")";
  }

private:
  static Scalar from_small64(const std::array<std::int64_t, 8>& num, std::int64_t den) {
    std::int64_t g = 1;
    if (den > 1) {
      g = den;
      for (auto v : num) {
        g = std::gcd(g, v < 0 ? -v : v);
        if (g == 1) break;
      }
      if (g > 1) den /= g;
    }
    Scalar s;
    bool fits = den <= INT32_MAX;
    std::array<std::int64_t, 8> red;
    for (int i = 0; i < 8; ++i) {
      red[i] = g > 1 ? num[i] / g : num[i];
      if (red[i] < INT32_MIN || red[i] > INT32_MAX) fits = false;
    }
    if (fits) {
      for (int i = 0; i < 8; ++i) s.n_[i] = static_cast<std::int32_t>(red[i]);
      s.d_ = static_cast<std::int32_t>(den);
      return s;
    }
    s.big_ = std::make_unique<BigCoords>();
    static_assert(sizeof(long) == 8, "LP64 assumed for exact int64 -> mpz conversion");
    for (int i = 0; i < 8; ++i) {
      (*s.big_)[i] = mpq_class(mpz_class(static_cast<long>(red[i])), mpz_class(static_cast<long>(den)));
      (*s.big_)[i].canonicalize();
    }
    return s;
  }

  static Scalar big_add(const Scalar& a, const Scalar& b) {
    Scalar r;
    r.big_ = std::make_unique<BigCoords>();
    for (int i = 0; i < 8; ++i) (*r.big_)[i] = a.coord(i) + b.coord(i);
    r.demote();
    return r;
  }

  static Scalar big_mul(const Scalar& a, const Scalar& b) {
    std::array<mpq_class, 15> c;
    for (int i = 0; i < 8; ++i) {
      mpq_class ai = a.coord(i);
      if (ai == 0) continue;
      for (int j = 0; j < 8; ++j) {
        mpq_class bj = b.coord(j);
        if (bj == 0) continue;
        c[i + j] += ai * bj;
      }
    }
    for (int k = 14; k >= 8; --k) {
      if (c[k] == 0) continue;
      c[k - 4] += c[k];
      c[k - 8] -= c[k];
      c[k] = 0;
    }
    Scalar r;
    r.big_ = std::make_unique<BigCoords>();
    for (int i = 0; i < 8; ++i) (*r.big_)[i] = c[i];
    r.demote();
    return r;
  }

  // shrink back to the inline representation when the value fits
  void demote() {
    if (!big_) return;
    mpz_class den = 1;
    for (auto& q : *big_) {
      q.canonicalize();
      den = lcm(den, q.get_den());
    }
    if (!den.fits_slong_p()) return;
    long d = den.get_si();
    if (d > INT32_MAX) return;
    std::array<std::int32_t, 8> n;
    for (int i = 0; i < 8; ++i) {
      mpz_class num = (*big_)[i].get_num() * (den / (*big_)[i].get_den());
      if (!num.fits_slong_p()) return;
      long v = num.get_si();
      if (v < INT32_MIN || v > INT32_MAX) return;
      n[i] = static_cast<std::int32_t>(v);
    }
    n_ = n;
    d_ = static_cast<std::int32_t>(d);
    big_.reset();
  }

  std::array<std::int32_t, 8> n_;  // numerators over {1, z, ..., z^7}
  std::int32_t d_;                 // common denominator, > 0, gcd-reduced
  std::unique_ptr<BigCoords> big_; // set when the inline range is exceeded
};

inline Scalar operator*(long a, const Scalar& b) { return Scalar::integer(a) * b; }

}  // namespace twistfock
