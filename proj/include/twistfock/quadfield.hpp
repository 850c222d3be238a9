#pragma once

// Canonical normal-ordered quadratic fields :a(z)b(z): and their local
// brackets.  A field is a combination of ordered letter pairs; the sign rule
// :ab: = -:ba: normalizes every pair to increasing letter order and kills
// :aa:.  Brackets of two quadratics close on { field * delta, scalar *
// d_w delta } by the Wick formula
//
//   [:a1 b1:(z), :a2 b2:(w)] =
//       <a1,b2> :b1 a2:(w) d  -  <a1,a2> :b1 b2:(w) d
//     + <b1,a2> :a1 b2:(w) d  -  <b1,b2> :a1 a2:(w) d
//     + (<a1,b2><b1,a2> - <a1,a2><b1,b2>) d_w d(z-w),
//
// with d = delta(z-w); no higher delta derivatives ever occur.

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twistfock/algebra_kind.hpp"
#include "twistfock/letter.hpp"

namespace twistfock {

using LetterCombo = std::vector<std::pair<Letter, Scalar>>;

class QuadField {
public:
  using PairKey = std::pair<Letter, Letter>;  // strictly increasing

  QuadField() = default;

  // accumulate coeff * :a(z)b(z):, canonicalizing order and sign
  void add_pair(Letter a, Letter b, Scalar coeff) {
    if (coeff.is_zero()) return;
    if (a == b) return;  // :a(z)a(z): = 0
    if (b < a) {
      std::swap(a, b);
      coeff = -coeff;
    }
    PairKey k{a, b};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  QuadField& operator+=(const QuadField& o) {
    for (const auto& [k, c] : o.terms_) add_pair(k.first, k.second, c);
    return *this;
  }
  QuadField operator+(const QuadField& o) const {
    QuadField r(*this);
    r += o;
    return r;
  }
  QuadField operator-(const QuadField& o) const { return *this + o.scaled(Scalar::integer(-1)); }
  QuadField scaled(const Scalar& s) const {
    QuadField r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
  }

  // drop every pair touching the isotropic letters c, c*
  QuadField without_c_letters() const {
    QuadField r;
    for (const auto& [k, c] : terms_)
      if (!k.first.is_c() && !k.second.is_c()) r.terms_.emplace(k, c);
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<PairKey, Scalar>& terms() const { return terms_; }
  Scalar coeff(const Letter& a, const Letter& b) const {
    bool flip = b < a;
    auto it = terms_.find(flip ? PairKey{b, a} : PairKey{a, b});
    if (it == terms_.end()) return Scalar::zero();
    return flip ? -it->second : it->second;
  }

  friend bool operator==(const QuadField& x, const QuadField& y) { return x.terms_ == y.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += c.str() + "*:" + k.first.str() + " " + k.second.str() + ":";
    }
    return s;
  }

private:
  std::map<PairKey, Scalar> terms_;
};

// bilinear expansion of :A(z)B(z): for letter combinations A, B
inline QuadField normal_pair(const LetterCombo& a, const LetterCombo& b) {
  QuadField r;
  for (const auto& [la, ca] : a)
    for (const auto& [lb, cb] : b) r.add_pair(la, lb, ca * cb);
  return r;
}

// [A(z), B(w)] = delta_part(w) delta(z-w) + ddelta * d_w delta(z-w) * central
struct LocalBracket {
  QuadField delta_part;
  Scalar ddelta;

  bool is_zero() const { return delta_part.is_zero() && ddelta.is_zero(); }
  friend bool operator==(const LocalBracket& a, const LocalBracket& b) {
    return a.delta_part == b.delta_part && a.ddelta == b.ddelta;
  }
  std::string str() const {
    return "{delta: " + delta_part.str() + ", ddelta: " + ddelta.str() + "}";
  }
};

inline LocalBracket bracket(const QuadField& A, const QuadField& B, const AlgebraKind& kind) {
  LocalBracket out;
  for (const auto& [pa, sa] : A.terms()) {
    const Letter& a1 = pa.first;
    const Letter& b1 = pa.second;
    for (const auto& [pb, sb] : B.terms()) {
      const Letter& a2 = pb.first;
      const Letter& b2 = pb.second;
      const Scalar s = sa * sb;
      const Scalar p_a1b2 = pairing(kind, a1, b2);
      const Scalar p_a1a2 = pairing(kind, a1, a2);
      const Scalar p_b1a2 = pairing(kind, b1, a2);
      const Scalar p_b1b2 = pairing(kind, b1, b2);
      if (!p_a1b2.is_zero()) out.delta_part.add_pair(b1, a2, s * p_a1b2);
      if (!p_a1a2.is_zero()) out.delta_part.add_pair(b1, b2, -(s * p_a1a2));
      if (!p_b1a2.is_zero()) out.delta_part.add_pair(a1, b2, s * p_b1a2);
      if (!p_b1b2.is_zero()) out.delta_part.add_pair(a1, a2, -(s * p_b1b2));
      out.ddelta += s * (p_a1b2 * p_b1a2 - p_a1a2 * p_b1b2);
    }
  }
  return out;
}

// Iterated brackets ad F(z_k) ... ad F(z_2) G(z_1).  Multi-variable delta
// products are tracked as formally independent symbols indexed by the
// derivative flags (d_2, ..., d_k) of prod_i delta^{(d_i)}(z_i - z_1); every
// bracket leaves its field at z_1, so no relocation rewriting is needed.
// A slot's Scalar holds the central multiple of the delta-product whose last
// flag is 1; bracketing against a purely central slot gives zero.
struct AdChainResult {
  std::map<std::vector<int>, std::pair<QuadField, Scalar>> slots;

  bool is_zero() const { return slots.empty(); }
  void put(std::vector<int> flags, QuadField f, Scalar c) {
    if (f.is_zero() && c.is_zero()) return;
    slots.emplace(std::move(flags), std::make_pair(std::move(f), std::move(c)));
  }
  std::string str() const {
    if (slots.empty()) return "0";
    std::string s;
    for (const auto& [flags, val] : slots) {
      s += "[flags";
      for (int f : flags) s += " " + std::to_string(f);
      s += "] field: " + val.first.str() + ", central: " + val.second.str() + "\n";
    }
    return s;
  }
};

// operators are applied innermost first: ops[0] acts at z_2 on target at z_1
inline AdChainResult ad_chain(const std::vector<QuadField>& ops, const QuadField& target,
                              const AlgebraKind& kind) {
  if (ops.empty() || ops.size() > 4)
    throw std::invalid_argument("ad_chain: operator list length must be 1..4");
  AdChainResult cur;
  cur.put({}, target, Scalar::zero());
  for (const auto& op : ops) {
    AdChainResult next;
    for (const auto& [flags, val] : cur.slots) {
      const QuadField& f = val.first;
      if (f.is_zero()) continue;  // central slots are annihilated by further ads
      LocalBracket lb = bracket(op, f, kind);
      if (!lb.delta_part.is_zero()) {
        auto fl = flags;
        fl.push_back(0);
        auto it = next.slots.find(fl);
        if (it == next.slots.end())
          next.put(fl, lb.delta_part, Scalar::zero());
        else
          it->second.first += lb.delta_part;
      }
      if (!lb.ddelta.is_zero()) {
        auto fl = flags;
        fl.push_back(1);
        auto it = next.slots.find(fl);
        if (it == next.slots.end())
          next.put(fl, QuadField{}, lb.ddelta);
        else
          it->second.second += lb.ddelta;
      }
    }
    // prune slots that cancelled
    for (auto it = next.slots.begin(); it != next.slots.end();) {
      if (it->second.first.is_zero() && it->second.second.is_zero())
        it = next.slots.erase(it);
      else
        ++it;
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace twistfock
