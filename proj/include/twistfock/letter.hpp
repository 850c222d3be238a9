#pragma once

// Atomic fermionic field letters and the symmetric pairing <.,.> on the
// polarized space C = P_C + P_C^*.  Letters eps_i, epsbar_i, c span P_C;
// their starred partners span P_C^*; the ghost letters e, ebar exist only
// for the D and A_even families and are never starred.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "twistfock/algebra_kind.hpp"
#include "twistfock/scalar.hpp"

namespace twistfock {

enum class Species : std::uint8_t { eps, eps_bar, ghost_e, ghost_ebar, c };

struct Letter {
  Species species{Species::c};
  std::uint8_t index{0};  // 1..n for eps / eps_bar, 0 otherwise
  bool starred{false};

  static Letter eps(int i, bool star = false) {
    return Letter{Species::eps, static_cast<std::uint8_t>(i), star};
  }
  static Letter eps_bar(int i, bool star = false) {
    return Letter{Species::eps_bar, static_cast<std::uint8_t>(i), star};
  }
  static Letter ghost_e() { return Letter{Species::ghost_e, 0, false}; }
  static Letter ghost_ebar() { return Letter{Species::ghost_ebar, 0, false}; }
  static Letter c_letter(bool star = false) { return Letter{Species::c, 0, star}; }

  bool is_ghost() const { return species == Species::ghost_e || species == Species::ghost_ebar; }
  bool is_c() const { return species == Species::c; }

  Letter star() const {
    if (is_ghost()) throw std::logic_error("ghost letters are never starred");
    return Letter{species, index, !starred};
  }

  // Total order: eps(1..n) < eps_bar(1..n) < e < ebar < c, then the same
  // block starred.  The key is independent of n.
  int key() const {
    int block = 0;
    switch (species) {
      case Species::eps: block = index; break;
      case Species::eps_bar: block = 100 + index; break;
      case Species::ghost_e: block = 200; break;
      case Species::ghost_ebar: block = 201; break;
      case Species::c: block = 250; break;
    }
    return (starred ? 1000 : 0) + block;
  }

  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    return a.key() <=> b.key();
  }
  friend bool operator==(const Letter& a, const Letter& b) { return a.key() == b.key(); }

  bool valid_for(const AlgebraKind& kind) const {
    switch (species) {
      case Species::eps:
      case Species::eps_bar:
        return index >= 1 && index <= kind.n;
      case Species::ghost_e:
      case Species::ghost_ebar:
        return kind.has_ghosts() && !starred;
      case Species::c:
        return true;
    }
    return false;
  }

  std::string str() const {
    std::string s;
    switch (species) {
      case Species::eps: s = "e" + std::to_string(index); break;
      case Species::eps_bar: s = "b" + std::to_string(index); break;
      case Species::ghost_e: s = "gE"; break;
      case Species::ghost_ebar: s = "gEbar"; break;
      case Species::c: s = "c"; break;
    }
    if (starred) s += "*";
    return s;
  }

  static std::optional<Letter> parse(const std::string& in) {
    std::string s = in;
    bool star = false;
    if (!s.empty() && s.back() == '*') {
      star = true;
      s.pop_back();
    }
    if (s == "c") return Letter::c_letter(star);
    if (s == "gE") return star ? std::nullopt : std::optional<Letter>(ghost_e());
    if (s == "gEbar") return star ? std::nullopt : std::optional<Letter>(ghost_ebar());
    if (s.size() >= 2 && (s[0] == 'e' || s[0] == 'b')) {
      int idx = 0;
      for (size_t i = 1; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return std::nullopt;
        idx = idx * 10 + (s[i] - '0');
      }
      if (idx < 1) return std::nullopt;
      return s[0] == 'e' ? eps(idx, star) : eps_bar(idx, star);
    }
    return std::nullopt;
  }
};

// The symmetric bilinear pairing on letters.  <a, b*> = (a|b) with
// (eps_i|eps_j) = (epsbar_i|epsbar_j) = delta_ij and c isotropic and
// orthogonal to everything; two unstarred non-ghost letters and two starred
// letters pair to zero.  Ghosts pair only with ghosts: for family D
// <e,e> = <ebar,ebar> = 1, for family A_even <e,ebar> = <ebar,e> = 1.
inline Scalar pairing(const AlgebraKind& kind, const Letter& a, const Letter& b) {
  if (a.is_ghost() || b.is_ghost()) {
    if (!kind.has_ghosts())
      throw std::invalid_argument("ghost letter queried for a family without ghosts");
    if (!(a.is_ghost() && b.is_ghost())) return Scalar::zero();
    const bool same = a.species == b.species;
    if (kind.family == Family::d) return same ? Scalar::one() : Scalar::zero();
    return same ? Scalar::zero() : Scalar::one();
  }
  if (a.starred == b.starred) return Scalar::zero();
  if (a.is_c() || b.is_c()) return Scalar::zero();  // (c|c) = (c|eps) = 0
  if (a.species == b.species && a.index == b.index) return Scalar::one();
  return Scalar::zero();
}

}  // namespace twistfock
