#pragma once

// Commutator verification on the Fock space: mode components of the
// generator fields are applied as operators on an enumerated test-state set
// and [G_k, H_l] v is compared, exactly, against the mode translation of the
// expected bracket.  Two expectations are supported: the relation-table
// right-hand sides (the presentation's own claim) and the symbolic local
// bracket computed by the Wick engine (the cross-layer oracle).  Operator
// columns are memoized per (symbol, mode) while a generator pair is active.

#include <unordered_map>

#include "twistfock/fock.hpp"
#include "twistfock/generator_fields.hpp"
#include "twistfock/mry_check.hpp"

namespace twistfock {

class FockChecker {
public:
  FockChecker(const AlgebraKind& kind, int energy2 = 8, size_t cap = 2000)
      : kind_(kind),
        table_(RelationTable::build(kind)),
        base_(enumerate_states(kind, energy2, cap)) {
    for (int i = 0; i <= kind.n; ++i) {
      for (auto sym : {GeneratorSymbol::H(i), GeneratorSymbol::Xp(i), GeneratorSymbol::Xm(i)})
        fields_.emplace(sym_code(sym), generator_field(kind, sym));
    }
  }

  const std::vector<FockState>& states() const { return base_; }
  const RelationTable& table() const { return table_; }
  const QuadField& field(const GeneratorSymbol& s) const { return fields_.at(sym_code(s)); }

  // relation-covered generator pairs in canonical orientation
  struct Pair {
    GeneratorSymbol G, H;
    enum class Kind { hh, hx, xx_same, x_plus_minus } relation;
  };

  std::vector<Pair> relation_pairs() const {
    std::vector<Pair> ps;
    const int n = kind_.n;
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        ps.push_back({GeneratorSymbol::H(i), GeneratorSymbol::H(j), Pair::Kind::hh});
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        for (int s : {+1, -1})
          ps.push_back({GeneratorSymbol::H(i),
                        s > 0 ? GeneratorSymbol::Xp(j) : GeneratorSymbol::Xm(j),
                        Pair::Kind::hx});
    for (int i = 0; i <= n; ++i)
      for (int s : {+1, -1}) {
        auto X = s > 0 ? GeneratorSymbol::Xp(i) : GeneratorSymbol::Xm(i);
        ps.push_back({X, X, Pair::Kind::xx_same});
      }
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        ps.push_back({GeneratorSymbol::Xp(i), GeneratorSymbol::Xm(j),
                      Pair::Kind::x_plus_minus});
    return ps;
  }

  // pairs with no defining relation (same-sign X of distinct indices);
  // these are still covered by the symbolic-bracket oracle
  std::vector<Pair> extra_pairs() const {
    std::vector<Pair> ps;
    const int n = kind_.n;
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int s : {+1, -1}) {
          auto Xi = s > 0 ? GeneratorSymbol::Xp(i) : GeneratorSymbol::Xm(i);
          auto Xj = s > 0 ? GeneratorSymbol::Xp(j) : GeneratorSymbol::Xm(j);
          ps.push_back({Xi, Xj, Pair::Kind::xx_same});
        }
    return ps;
  }

  // exact residual check of [G_k, H_l] against the chosen expectation over
  // the whole test-state set, for all |k|, |l| <= mode_bound
  CheckRecord check_pair(const Pair& p, int mode_bound, bool table_expectation) const {
    detail::Stopwatch sw;
    CheckRecord rec;
    rec.id = std::string(table_expectation ? "fock:" : "oracle:") + p.G.str() + "," + p.H.str();
    const QuadField& fG = field(p.G);
    const QuadField& fH = field(p.H);
    const LocalBracket sym_bracket = bracket(fG, fH, kind_);

    std::unordered_map<int, Memo> memoG, memoH;
    rec.pass = true;
    for (int k = -mode_bound; k <= mode_bound && rec.pass; ++k)
      for (int l = -mode_bound; l <= mode_bound && rec.pass; ++l) {
        Memo& mg = memoG[k];
        Memo& mh = memoH[l];
        // expected operator for this (k, l)
        QuadField exp_field;
        Scalar exp_central;
        if (table_expectation) {
          expected_from_table(p, k, l, exp_field, exp_central);
        } else {
          exp_field = sym_bracket.delta_part;
          exp_central = (l == -k) ? Scalar::integer(k) * sym_bracket.ddelta : Scalar::zero();
        }
        Memo memoE;
        for (const auto& v : base_) {
          StateVector acc;
          const StateVector& hv = apply_memo(fH, l, v, mh);
          for (const auto& [s, c] : hv.terms()) acc.add_scaled(apply_memo(fG, k, s, mg), c);
          const StateVector& gv = apply_memo(fG, k, v, mg);
          for (const auto& [s, c] : gv.terms()) acc.add_scaled(apply_memo(fH, l, s, mh), -c);
          if (!exp_field.is_zero())
            acc -= apply_memo(exp_field, k + l, v, memoE);
          if (!exp_central.is_zero()) acc.add_term(v, -exp_central);
          if (!acc.is_zero()) {
            rec.pass = false;
            rec.indices = {k, l};
            rec.residual = "[" + p.G.str() + "(" + std::to_string(k) + "), " + p.H.str() + "(" +
                           std::to_string(l) + ")] on " + v.str() + " -> " + acc.str();
            break;
          }
        }
      }
    rec.ms = sw.ms();
    return rec;
  }

  std::vector<CheckRecord> run_commutator_suite(int mode_bound, bool include_extra_pairs) const {
    std::vector<CheckRecord> out;
    for (const auto& p : relation_pairs()) out.push_back(check_pair(p, mode_bound, true));
    if (include_extra_pairs)
      for (const auto& p : extra_pairs()) out.push_back(check_pair(p, mode_bound, false));
    return out;
  }

  // iterated mode commutators ad X(s a_i, k_m) ... ad X(s a_i, k_2) X(s a_j, k_1)
  // applied to states; the Serre relations make every residual vanish
  CheckRecord serre_fock(int i, int j, int sign, const std::vector<int>& modes,
                         const std::vector<FockState>& states) const {
    detail::Stopwatch sw;
    const int arity = table_.serre_arity(i, j);
    if (static_cast<int>(modes.size()) != arity + 1)
      throw std::invalid_argument("serre_fock: need one mode per operator plus the target");
    CheckRecord rec;
    rec.id = "serre-fock";
    rec.indices = {i, j, sign};
    const QuadField op =
        field(sign > 0 ? GeneratorSymbol::Xp(i) : GeneratorSymbol::Xm(i));
    const QuadField tgt =
        field(sign > 0 ? GeneratorSymbol::Xp(j) : GeneratorSymbol::Xm(j));
    // modes = (k_{arity+1}, ..., k_2, k_1): outermost first, target last
    rec.pass = true;
    for (const auto& st : states) {
      StateVector v = StateVector::basis(st);
      StateVector r = ad_apply(op, tgt, modes, arity, v);
      if (!r.is_zero()) {
        rec.pass = false;
        rec.residual = "on " + st.str() + " -> " + r.str();
        break;
      }
    }
    rec.ms = sw.ms();
    return rec;
  }

private:
  using Memo = std::unordered_map<FockState, StateVector, FockStateHash>;

  static int sym_code(const GeneratorSymbol& s) {
    return static_cast<int>(s.role) * 128 + s.index;
  }

  const StateVector& apply_memo(const QuadField& f, int k, const FockState& s, Memo& memo) const {
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    StateVector out;
    apply_mode_component_basis(kind_, f, k, s, Scalar::one(), out);
    return memo.emplace(s, std::move(out)).first->second;
  }

  void expected_from_table(const Pair& p, int k, int l, QuadField& exp_field,
                           Scalar& exp_central) const {
    switch (p.relation) {
      case Pair::Kind::hh:
        if (l == -k)
          exp_central = Scalar::integer(k) * table_.hh_coeff(p.G.index, p.H.index);
        break;
      case Pair::Kind::hx: {
        int a = table_.a(p.G.index, p.H.index);
        if (a != 0) exp_field = field(p.H).scaled(Scalar::integer(p.H.sign() * a));
        break;
      }
      case Pair::Kind::xx_same:
        break;  // zero
      case Pair::Kind::x_plus_minus:
        if (p.G.index == p.H.index) {
          exp_field = field(GeneratorSymbol::H(p.G.index));
          if (l == -k) exp_central = Scalar::integer(k) * table_.xx_ddelta(p.G.index);
        }
        break;
    }
  }

  // A_0 = tgt(k_1); A_m = [op(k_{m+1}), A_{m-1}]; returns A_depth(v)
  StateVector ad_apply(const QuadField& op, const QuadField& tgt, const std::vector<int>& modes,
                       int depth, const StateVector& v) const {
    if (depth == 0) return apply_mode_component(kind_, tgt, modes.back(), v);
    const int mode = modes[modes.size() - 1 - depth];
    StateVector ov = apply_mode_component(kind_, op, mode, v);
    StateVector w = ad_apply(op, tgt, modes, depth - 1, ov);
    StateVector u =
        apply_mode_component(kind_, op, mode, ad_apply(op, tgt, modes, depth - 1, v));
    u -= w;
    return u;
  }

  AlgebraKind kind_;
  RelationTable table_;
  std::vector<FockState> base_;
  std::map<int, QuadField> fields_;
};

}  // namespace twistfock
