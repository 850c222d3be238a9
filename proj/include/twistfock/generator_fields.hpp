#pragma once

// The quadratic-field assignment of the level (1,0) representation: every
// generator alpha_i(z), X(+-alpha_i, z) becomes a normal-ordered quadratic
// in the field letters.  beta stands for the letter combination
// -coef * c + eps_1 (coef = sqrt2, 1, 1/sqrt2, sqrt3 per family); pairs
// containing the isotropic letters c, c* act as zero and are dropped when
// eliminate_c is set (the default for every check).

#include <stdexcept>

#include "twistfock/quadfield.hpp"
#include "twistfock/relation_table.hpp"

namespace twistfock {

inline LetterCombo one_letter(Letter l) { return {{l, Scalar::one()}}; }

inline LetterCombo beta_combo(const AlgebraKind& kind, bool starred) {
  Scalar coef;
  switch (kind.family) {
    case Family::a_odd: coef = Scalar::sqrt2(); break;
    case Family::d: coef = Scalar::one(); break;
    case Family::a_even: coef = Scalar::sqrt2() * Scalar::rational(1, 2); break;
    case Family::d4_triality: coef = Scalar::sqrt3(); break;
  }
  return {{Letter::c_letter(starred), -coef}, {Letter::eps(1, starred), Scalar::one()}};
}

inline QuadField generator_field(const AlgebraKind& kind, const GeneratorSymbol& sym,
                                 bool eliminate_c = true) {
  const int n = kind.n;
  const int i = sym.index;
  if (i < 0 || i > n) throw std::out_of_range("generator_field: index out of range");

  auto np = [](const LetterCombo& a, const LetterCombo& b) { return normal_pair(a, b); };
  auto L = one_letter;
  const auto e = [](int j, bool s = false) { return Letter::eps(j, s); };
  const auto b = [](int j, bool s = false) { return Letter::eps_bar(j, s); };
  const Scalar s2 = Scalar::sqrt2();
  const Scalar w = Scalar::omega();
  const LetterCombo beta = beta_combo(kind, false);
  const LetterCombo beta_s = beta_combo(kind, true);

  QuadField f;
  switch (sym.role) {
    case GeneratorSymbol::Role::h:
      if (i == 0) {
        switch (kind.family) {
          case Family::a_odd:
            f = np(beta_s, beta) + np(L(e(2, true)), L(e(2))) +
                np(L(b(1)), L(b(1, true))) + np(L(b(2)), L(b(2, true)));
            break;
          case Family::d:
            f = np(beta_s, beta).scaled(Scalar::integer(2));
            break;
          case Family::a_even:
            f = np(L(b(1)), L(b(1, true))) + np(beta_s, beta);
            break;
          case Family::d4_triality:
            f = np(L(e(1, true)), L(e(1))) + np(beta_s, beta) +
                np(L(e(2, true)), L(e(2))) + np(L(b(2, true)), L(b(2)));
            break;
        }
      } else if (i < n) {
        switch (kind.family) {
          case Family::a_odd:
            f = np(L(e(i)), L(e(i, true))) + np(L(e(i + 1, true)), L(e(i + 1))) +
                np(L(b(i, true)), L(b(i))) + np(L(b(i + 1)), L(b(i + 1, true)));
            break;
          case Family::d:
            f = np(L(e(i)), L(e(i, true))) + np(L(e(i + 1, true)), L(e(i + 1)));
            break;
          case Family::a_even:
            f = np(L(e(i)), L(e(i, true))) + np(L(e(i + 1, true)), L(e(i + 1))) +
                np(L(b(i + 1)), L(b(i + 1, true))) + np(L(b(i, true)), L(b(i)));
            break;
          case Family::d4_triality:
            f = np(L(e(1)), L(e(1, true))) + np(L(e(2, true)), L(e(2))) +
                np(L(b(2)), L(b(2, true))).scaled(Scalar::integer(2));
            break;
        }
      } else {
        switch (kind.family) {
          case Family::a_odd:
            f = np(L(e(n)), L(e(n, true))) + np(L(b(n, true)), L(b(n)));
            break;
          case Family::d:
            f = np(L(e(n)), L(e(n, true))).scaled(Scalar::integer(2));
            break;
          case Family::a_even:
            f = (np(L(e(n)), L(e(n, true))) + np(L(b(n, true)), L(b(n))))
                    .scaled(Scalar::integer(2));
            break;
          case Family::d4_triality:
            f = np(L(e(2)), L(e(2, true))) + np(L(b(2, true)), L(b(2)));
            break;
        }
      }
      break;

    case GeneratorSymbol::Role::x_plus:
      if (i == 0) {
        switch (kind.family) {
          case Family::a_odd:
            f = np(L(b(2)), beta_s) + np(L(e(2, true)), L(b(1)));
            break;
          case Family::d:
            f = np(L(Letter::ghost_ebar()), beta_s).scaled(s2);
            break;
          case Family::a_even:
            f = np(L(b(1)), beta_s);
            break;
          case Family::d4_triality:
            f = np(L(b(1)), beta_s) + np(L(b(1, true)), L(e(1, true))).scaled(w) +
                np(L(b(2, true)), L(e(2, true))).scaled(w * w);
            break;
        }
      } else if (i < n) {
        switch (kind.family) {
          case Family::a_odd:
          case Family::a_even:
            f = np(L(e(i)), L(e(i + 1, true))) + np(L(b(i, true)), L(b(i + 1)));
            break;
          case Family::d:
            f = np(L(e(i)), L(e(i + 1, true)));
            break;
          case Family::d4_triality:
            f = np(L(e(1)), L(e(2, true))) + np(L(b(2)), L(b(1, true))) +
                np(L(b(2)), L(b(1)));
            break;
        }
      } else {
        switch (kind.family) {
          case Family::a_odd:
            f = np(L(e(n)), L(b(n, true)));
            break;
          case Family::d:
            f = np(L(e(n)), L(Letter::ghost_e())).scaled(s2);
            break;
          case Family::a_even:
            f = (np(L(e(n)), L(Letter::ghost_ebar())) +
                 np(L(b(n, true)), L(Letter::ghost_e())))
                    .scaled(s2);
            break;
          case Family::d4_triality:
            f = np(L(e(2)), L(b(2, true)));
            break;
        }
      }
      break;

    case GeneratorSymbol::Role::x_minus:
      if (i == 0) {
        switch (kind.family) {
          case Family::a_odd:
            f = np(beta, L(b(2, true))) + np(L(b(1, true)), L(e(2)));
            break;
          case Family::d:
            f = np(beta, L(Letter::ghost_ebar())).scaled(s2);
            break;
          case Family::a_even:
            f = np(beta, L(b(1, true)));
            break;
          case Family::d4_triality:
            f = np(beta, L(b(1, true))) + np(L(e(1)), L(b(1))).scaled(w * w) +
                np(L(e(2)), L(b(2))).scaled(w);
            break;
        }
      } else if (i < n) {
        switch (kind.family) {
          case Family::a_odd:
          case Family::a_even:
            f = np(L(e(i + 1)), L(e(i, true))) + np(L(b(i + 1, true)), L(b(i)));
            break;
          case Family::d:
            f = np(L(e(i + 1)), L(e(i, true)));
            break;
          case Family::d4_triality:
            f = np(L(e(2)), L(e(1, true))) + np(L(b(1)), L(b(2, true))) +
                np(L(b(1, true)), L(b(2, true)));
            break;
        }
      } else {
        switch (kind.family) {
          case Family::a_odd:
            f = np(L(b(n)), L(e(n, true)));
            break;
          case Family::d:
            f = np(L(Letter::ghost_e()), L(e(n, true))).scaled(s2);
            break;
          case Family::a_even:
            f = (np(L(Letter::ghost_e()), L(e(n, true))) +
                 np(L(Letter::ghost_ebar()), L(b(n))))
                    .scaled(s2);
            break;
          case Family::d4_triality:
            f = np(L(b(2)), L(e(2, true)));
            break;
        }
      }
      break;
  }
  return eliminate_c ? f.without_c_letters() : f;
}

}  // namespace twistfock
