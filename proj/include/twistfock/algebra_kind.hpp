#pragma once

// The four twisted families and their rank/twist bookkeeping.

#include <optional>
#include <stdexcept>
#include <string>

namespace twistfock {

enum class Family { a_odd, d, a_even, d4_triality };

struct AlgebraKind {
  Family family;
  int n;  // rank of the fixed-point subalgebra; n = 2 is forced for d4_triality

  int r() const { return family == Family::d4_triality ? 3 : 2; }

  // rank of the ambient simple algebra: A_{2n-1}, D_{n+1}, A_{2n}, D_4
  int ambient_rank() const {
    switch (family) {
      case Family::a_odd: return 2 * n - 1;
      case Family::d: return n + 1;
      case Family::a_even: return 2 * n;
      case Family::d4_triality: return 4;
    }
    return 0;
  }

  bool has_ghosts() const { return family == Family::d || family == Family::a_even; }

  std::string name() const {
    switch (family) {
      case Family::a_odd: return "A" + std::to_string(2 * n - 1) + "^(2)";
      case Family::d: return "D" + std::to_string(n + 1) + "^(2)";
      case Family::a_even: return "A" + std::to_string(2 * n) + "^(2)";
      case Family::d4_triality: return "D4^(3)";
    }
    return "?";
  }

  friend bool operator==(const AlgebraKind&, const AlgebraKind&) = default;
};

inline const char* family_flag(Family f) {
  switch (f) {
    case Family::a_odd: return "a-odd";
    case Family::d: return "d";
    case Family::a_even: return "a-even";
    case Family::d4_triality: return "d4-triality";
  }
  return "?";
}

inline std::optional<Family> parse_family(const std::string& s) {
  if (s == "a-odd") return Family::a_odd;
  if (s == "d") return Family::d;
  if (s == "a-even") return Family::a_even;
  if (s == "d4-triality") return Family::d4_triality;
  return std::nullopt;
}

// rank bounds from the definition of each family
inline std::optional<std::string> validate_kind(Family f, int n) {
  switch (f) {
    case Family::a_odd:
      if (n < 3) return "family a-odd requires n >= 3";
      break;
    case Family::d:
      if (n < 2) return "family d requires n >= 2";
      break;
    case Family::a_even:
      if (n < 2) return "family a-even requires n >= 2";
      break;
    case Family::d4_triality:
      if (n != 2) return "family d4-triality has n = 2";
      break;
  }
  return std::nullopt;
}

inline AlgebraKind make_kind(Family f, int n) {
  if (auto err = validate_kind(f, n)) throw std::invalid_argument(*err);
  return AlgebraKind{f, n};
}

}  // namespace twistfock
