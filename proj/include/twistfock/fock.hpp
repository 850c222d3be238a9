#pragma once

// The exact fermionic Fock space: basis states are finite sets of creation
// operators a(-k), k in Z_{>0}+1/2, applied to the vacuum, kept in a fixed
// canonical order with every crossing tracked as a sign.  Modes are stored
// doubled (mode2 = 2k, odd); energies are stored doubled as well so all
// bookkeeping stays integral.  Quadratic normal-ordered mode components act
// with exactly finite results, so no cutoff ever enters.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <map>
#include <unordered_map>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "twistfock/quadfield.hpp"

namespace twistfock {

struct FockEntry {
  Letter letter;
  std::int16_t mode2;       // negative odd integer: creation mode times two
  std::uint16_t lkey = 0;   // cached letter.key(), comparison hot path

  FockEntry() = default;
  FockEntry(Letter l, std::int16_t m2)
      : letter(l), mode2(m2), lkey(static_cast<std::uint16_t>(l.key())) {}

  // canonical order inside a state: mode descending (-1/2 first), then letter
  std::uint32_t order_key() const {
    return (static_cast<std::uint32_t>(-mode2) << 16) | lkey;
  }
  friend bool operator<(const FockEntry& a, const FockEntry& b) {
    return a.order_key() < b.order_key();
  }
  friend bool operator==(const FockEntry& a, const FockEntry& b) {
    return a.order_key() == b.order_key();
  }
};

class FockState {
public:
  using Entries = boost::container::small_vector<FockEntry, 10>;

  FockState() = default;

  int weight2() const { return weight2_; }  // total energy, doubled
  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }
  int max_abs_mode2() const {
    // canonical order puts the deepest mode last
    return entries_.empty() ? 0 : -int(entries_.back().mode2);
  }
  const Entries& entries() const { return entries_; }

  // apply the creation operator letter(mode2/2); nullopt on exclusion
  std::optional<std::pair<int, FockState>> create(const Letter& l, int mode2) const {
    FockEntry e{l, static_cast<std::int16_t>(mode2)};
    size_t pos = 0;
    while (pos < entries_.size() && entries_[pos] < e) ++pos;
    if (pos < entries_.size() && entries_[pos] == e) return std::nullopt;
    FockState out;
    out.entries_.assign(entries_.begin(), entries_.begin() + pos);
    out.entries_.push_back(e);
    out.entries_.insert(out.entries_.end(), entries_.begin() + pos, entries_.end());
    out.weight2_ = weight2_ - mode2;
    return std::make_pair(pos % 2 == 0 ? +1 : -1, std::move(out));
  }

  FockState without(size_t pos) const {
    FockState out;
    out.entries_.reserve(entries_.size() - 1);
    for (size_t i = 0; i < entries_.size(); ++i)
      if (i != pos) out.entries_.push_back(entries_[i]);
    out.weight2_ = weight2_ + entries_[pos].mode2;
    return out;
  }

  static FockState vacuum() { return FockState(); }
  static FockState of(std::vector<FockEntry> entries) {
    std::sort(entries.begin(), entries.end());
    FockState s;
    s.entries_.assign(entries.begin(), entries.end());
    for (const auto& e : entries) s.weight2_ -= e.mode2;
    return s;
  }

  friend bool operator==(const FockState& a, const FockState& b) {
    if (a.weight2_ != b.weight2_ || a.entries_.size() != b.entries_.size()) return false;
    for (size_t i = 0; i < a.entries_.size(); ++i)
      if (a.entries_[i].order_key() != b.entries_[i].order_key()) return false;
    return true;
  }
  // deterministic order: energy first, then the entry list lexicographically
  friend bool operator<(const FockState& a, const FockState& b) {
    if (a.weight2_ != b.weight2_) return a.weight2_ < b.weight2_;
    const size_t m = std::min(a.entries_.size(), b.entries_.size());
    for (size_t i = 0; i < m; ++i) {
      auto ka = a.entries_[i].order_key(), kb = b.entries_[i].order_key();
      if (ka != kb) return ka < kb;
    }
    return a.entries_.size() < b.entries_.size();
  }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (const auto& e : entries_)
      h = (h ^ static_cast<size_t>(e.order_key())) * 1099511628211ull;
    return h;
  }

  std::string str() const {
    if (entries_.empty()) return "|0>";
    std::string s;
    for (const auto& e : entries_) {
      s += e.letter.str() + "(" + std::to_string(e.mode2) + "/2)";
    }
    return s + "|0>";
  }

private:
  Entries entries_;
  std::int16_t weight2_ = 0;
};

struct FockStateHash {
  size_t operator()(const FockState& s) const { return s.hash(); }
};

class StateVector {
public:
  using Terms = std::unordered_map<FockState, Scalar, FockStateHash>;

  StateVector() = default;
  static StateVector basis(FockState s, Scalar c = Scalar::one()) {
    StateVector v;
    v.add_term(std::move(s), std::move(c));
    return v;
  }

  void add_term(FockState s, Scalar c) {
    if (c.is_zero()) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
      terms_.emplace(std::move(s), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_scaled(const StateVector& o, const Scalar& c) {
    if (c.is_zero()) return;
    if (c.is_one()) {
      for (const auto& [s, v] : o.terms_) add_term(s, v);
    } else {
      for (const auto& [s, v] : o.terms_) add_term(s, v * c);
    }
  }

  StateVector& operator+=(const StateVector& o) {
    for (const auto& [s, v] : o.terms_) add_term(s, v);
    return *this;
  }
  StateVector& operator-=(const StateVector& o) {
    for (const auto& [s, v] : o.terms_) add_term(s, -v);
    return *this;
  }
  StateVector scaled(const Scalar& c) const {
    StateVector r;
    if (c.is_zero()) return r;
    for (const auto& [s, v] : terms_) r.terms_.emplace(s, v * c);
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Scalar coeff(const FockState& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Scalar::zero() : it->second;
  }
  friend bool operator==(const StateVector& a, const StateVector& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [s, c] : a.terms_) {
      auto it = b.terms_.find(s);
      if (it == b.terms_.end() || !(it->second == c)) return false;
    }
    return true;
  }

  // terms in the deterministic state order, for rendering and serialization
  std::vector<std::pair<FockState, Scalar>> sorted_terms() const {
    std::vector<std::pair<FockState, Scalar>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [st, c] : sorted_terms()) {
      if (!s.empty()) s += " + ";
      s += c.str() + "*" + st.str();
    }
    return s;
  }

private:
  Terms terms_;
};

namespace detail {
// scratch buffer for one-letter images; a single Clifford generator maps a
// basis state to at most a handful of basis states
using ImageBuf = boost::container::small_vector<std::pair<FockState, Scalar>, 4>;

inline void letter_images(const AlgebraKind& kind, const Letter& l, int mode2,
                          const FockState& st, const Scalar& coeff, ImageBuf& out) {
  if (mode2 < 0) {
    if (auto r = st.create(l, mode2))
      out.emplace_back(std::move(r->second), r->first > 0 ? coeff : -coeff);
    return;
  }
  const auto& es = st.entries();
  for (size_t j = 0; j < es.size(); ++j) {
    if (es[j].mode2 != -mode2) continue;
    Scalar p = pairing(kind, l, es[j].letter);
    if (p.is_zero()) continue;
    Scalar c = coeff * p;
    out.emplace_back(st.without(j), j % 2 == 0 ? std::move(c) : -c);
  }
}
}  // namespace detail

// one Clifford generator letter(mode2/2) applied to a basis state
inline void apply_letter_basis(const AlgebraKind& kind, const Letter& l, int mode2,
                               const FockState& st, const Scalar& coeff, StateVector& out) {
  detail::ImageBuf buf;
  detail::letter_images(kind, l, mode2, st, coeff, buf);
  for (auto& [s, c] : buf) out.add_term(std::move(s), std::move(c));
}

inline StateVector apply_letter(const AlgebraKind& kind, const Letter& l, int mode2,
                                const StateVector& v) {
  StateVector out;
  for (const auto& [st, c] : v.terms()) apply_letter_basis(kind, l, mode2, st, c, out);
  return out;
}

// :a(m)b(n): on a basis state, per the mode normal-ordering definition
inline void apply_normal_mode_pair(const AlgebraKind& kind, const Letter& a, int m2,
                                   const Letter& b, int n2, const FockState& st,
                                   const Scalar& coeff, StateVector& out) {
  detail::ImageBuf mid;
  if (m2 < 0) {
    detail::letter_images(kind, b, n2, st, coeff, mid);
    for (auto& [s, c] : mid) apply_letter_basis(kind, a, m2, s, c, out);
  } else {
    detail::letter_images(kind, a, m2, st, -coeff, mid);
    for (auto& [s, c] : mid) apply_letter_basis(kind, b, n2, s, c, out);
  }
}

// the z^{-k-1} mode of a quadratic field: sum_m :a(m) b(k-m):.  Only
// finitely many m act: annihilation modes are bounded by the state content
// and creation-creation needs k < 0 with m in (k, 0).
inline void apply_mode_component_basis(const AlgebraKind& kind, const QuadField& f, int k,
                                       const FockState& st, const Scalar& coeff,
                                       StateVector& out) {
  const int M2 = st.max_abs_mode2();
  for (const auto& [pair, c] : f.terms()) {
    const Scalar cc = coeff * c;
    // m < 0: a creates; b(k-m) must either create (m > k) or hit the state
    for (int m2 = -1; m2 >= 2 * k - M2; m2 -= 2)
      apply_normal_mode_pair(kind, pair.first, m2, pair.second, 2 * k - m2, st, cc, out);
    // m > 0: a annihilates, bounded by the state's deepest mode
    for (int m2 = 1; m2 <= M2; m2 += 2)
      apply_normal_mode_pair(kind, pair.first, m2, pair.second, 2 * k - m2, st, cc, out);
  }
}

inline StateVector apply_mode_component(const AlgebraKind& kind, const QuadField& f, int k,
                                        const StateVector& v) {
  StateVector out;
  for (const auto& [st, c] : v.terms()) apply_mode_component_basis(kind, f, k, st, c, out);
  return out;
}

// the letters whose oscillators span the Fock space (c, c* are excluded as
// an inert factor; ghosts exist for the D and A_even families)
inline std::vector<Letter> fock_letters(const AlgebraKind& kind) {
  std::vector<Letter> ls;
  for (int star = 0; star <= 1; ++star) {
    for (int i = 1; i <= kind.n; ++i) ls.push_back(Letter::eps(i, star));
    for (int i = 1; i <= kind.n; ++i) ls.push_back(Letter::eps_bar(i, star));
    if (star == 0 && kind.has_ghosts()) {
      ls.push_back(Letter::ghost_e());
      ls.push_back(Letter::ghost_ebar());
    }
  }
  std::sort(ls.begin(), ls.end());
  return ls;
}

namespace detail {
inline void enumerate_weight(const std::vector<Letter>& letters, int remaining2, int min_abs_mode2,
                             size_t min_letter, std::vector<FockEntry>& prefix,
                             std::vector<FockState>& out) {
  if (remaining2 == 0) {
    out.push_back(FockState::of(prefix));
    return;
  }
  for (int am2 = min_abs_mode2; am2 <= remaining2; am2 += 2) {
    size_t start = (am2 == min_abs_mode2) ? min_letter : 0;
    for (size_t li = start; li < letters.size(); ++li) {
      prefix.push_back(FockEntry{letters[li], static_cast<std::int16_t>(-am2)});
      enumerate_weight(letters, remaining2 - am2, am2, li + 1, prefix, out);
      prefix.pop_back();
    }
  }
}
}  // namespace detail

// all canonical states of energy <= max_energy2 / 2, in deterministic order
// (energy ascending, then lexicographic); truncated at cap when cap > 0
inline std::vector<FockState> enumerate_states(const AlgebraKind& kind, int max_energy2,
                                               size_t cap = 0) {
  const auto letters = fock_letters(kind);
  std::vector<FockState> out;
  for (int w = 0; w <= max_energy2; ++w) {
    std::vector<FockState> level;
    std::vector<FockEntry> prefix;
    detail::enumerate_weight(letters, w, 1, 0, prefix, level);
    std::sort(level.begin(), level.end());
    for (auto& s : level) {
      out.push_back(std::move(s));
      if (cap > 0 && out.size() == cap) return out;
    }
  }
  return out;
}

}  // namespace twistfock
