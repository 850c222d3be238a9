#pragma once

// Exhaustive symbolic verification of the defining relations (1)-(12)
// against the quadratic-field assignment.  Every instance is checked by
// computing the local bracket (or iterated ad chain) exactly and comparing
// with the expected right-hand side; a failing instance carries its residual
// in the record instead of raising.

#include <functional>
#include <string>
#include <vector>

#include "twistfock/check_record.hpp"
#include "twistfock/generator_fields.hpp"
#include "twistfock/quadfield.hpp"
#include "twistfock/relation_table.hpp"

namespace twistfock {

using FieldProvider = std::function<QuadField(const AlgebraKind&, const GeneratorSymbol&)>;

inline FieldProvider default_fields() {
  return [](const AlgebraKind& k, const GeneratorSymbol& s) { return generator_field(k, s); };
}

// relations (1)-(8): a single local bracket against an expected value
inline CheckRecord check_bracket_relation(const AlgebraKind& kind, const RelationTable& table,
                                          const std::string& id, std::vector<int> indices,
                                          const QuadField& A, const QuadField& B,
                                          const LocalBracket& expected) {
  detail::Stopwatch sw;
  CheckRecord rec;
  rec.id = id;
  rec.indices = std::move(indices);
  LocalBracket got = bracket(A, B, kind);
  LocalBracket residual{got.delta_part - expected.delta_part, got.ddelta - expected.ddelta};
  rec.pass = residual.is_zero();
  if (!rec.pass) rec.residual = residual.str();
  rec.ms = sw.ms();
  (void)table;
  return rec;
}

// relations (9)-(12): iterated ad chain must vanish identically
inline CheckRecord check_serre_relation(const AlgebraKind& kind, const RelationTable& table,
                                        int i, int j, int sign, const FieldProvider& fields) {
  detail::Stopwatch sw;
  const int arity = table.serre_arity(i, j);
  CheckRecord rec;
  rec.id = "rel" + std::to_string(8 + arity);
  rec.indices = {i, j, sign};
  GeneratorSymbol op = sign > 0 ? GeneratorSymbol::Xp(i) : GeneratorSymbol::Xm(i);
  GeneratorSymbol tgt = sign > 0 ? GeneratorSymbol::Xp(j) : GeneratorSymbol::Xm(j);
  std::vector<QuadField> ops(arity, fields(kind, op));
  AdChainResult res = ad_chain(ops, fields(kind, tgt), kind);
  rec.pass = res.is_zero();
  if (!rec.pass) rec.residual = res.str();
  rec.ms = sw.ms();
  return rec;
}

inline CheckRecord check_relation(const AlgebraKind& kind, const RelationTable& table, int rel,
                                  std::vector<int> indices,
                                  const FieldProvider& fields = default_fields()) {
  auto H = [&](int i) { return fields(kind, GeneratorSymbol::H(i)); };
  auto X = [&](int i, int s) {
    return fields(kind, s > 0 ? GeneratorSymbol::Xp(i) : GeneratorSymbol::Xm(i));
  };
  switch (rel) {
    case 1:
    case 2:
    case 3:
    case 4:
    case 5: {
      int i = indices[0], j = indices[1];
      LocalBracket expected{QuadField{}, table.hh_coeff(i, j)};
      return check_bracket_relation(kind, table, "rel" + std::to_string(rel), std::move(indices),
                                    H(i), H(j), expected);
    }
    case 6: {
      int i = indices[0], j = indices[1], s = indices[2];
      LocalBracket expected{X(j, s).scaled(Scalar::integer(s * table.a(i, j))), Scalar::zero()};
      return check_bracket_relation(kind, table, "rel6", std::move(indices), H(i), X(j, s),
                                    expected);
    }
    case 7: {
      int i = indices[0], s = indices[1];
      return check_bracket_relation(kind, table, "rel7", std::move(indices), X(i, s), X(i, s),
                                    LocalBracket{});
    }
    case 8: {
      int i = indices[0], j = indices[1];
      LocalBracket expected;
      if (i == j) expected = LocalBracket{H(i), table.xx_ddelta(i)};
      return check_bracket_relation(kind, table, "rel8", std::move(indices), X(i, +1), X(j, -1),
                                    expected);
    }
    case 9:
    case 10:
    case 11:
    case 12:
      return check_serre_relation(kind, table, indices[0], indices[1], indices[2], fields);
  }
  throw std::invalid_argument("check_relation: unknown relation id");
}

// every instance of relations (1)-(12) for one kind
inline Report check_all(const AlgebraKind& kind, const FieldProvider& fields = default_fields()) {
  const RelationTable table = RelationTable::build(kind);
  const int n = kind.n;
  Report rep{kind, {}};
  auto run = [&](int rel, std::vector<int> idx) {
    rep.records.push_back(check_relation(kind, table, rel, std::move(idx), fields));
  };
  run(1, {0, 0});
  for (int j = 1; j <= n; ++j) run(2, {0, j});
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      if (i == n - 1 && j == n) continue;
      if (i == n && j == n) continue;
      run(3, {i, j});
    }
  run(4, {n - 1, n});
  run(5, {n, n});
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int s : {+1, -1}) run(6, {i, j, s});
  for (int i = 0; i <= n; ++i)
    for (int s : {+1, -1}) run(7, {i, s});
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) run(8, {i, j});
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      const int arity = table.serre_arity(i, j);
      for (int s : {+1, -1}) run(8 + arity, {i, j, s});
    }
  return rep;
}

}  // namespace twistfock
