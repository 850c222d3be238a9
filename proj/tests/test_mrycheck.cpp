#include <catch2/catch_amalgamated.hpp>

#include "twistfock/mry_check.hpp"
#include "twistfock/serialize.hpp"

using namespace twistfock;

namespace {
const AlgebraKind kAOdd3 = make_kind(Family::a_odd, 3);
const AlgebraKind kD2 = make_kind(Family::d, 2);
const AlgebraKind kD3 = make_kind(Family::d, 3);
const AlgebraKind kAEven2 = make_kind(Family::a_even, 2);
const AlgebraKind kD4 = make_kind(Family::d4_triality, 2);
}  // namespace

TEST_CASE("extended Cartan matrices") {
  auto d3 = RelationTable::build(kD3);
  CHECK(d3.a(0, 1) == -2);
  CHECK(d3.a(1, 0) == -1);
  auto ae2 = RelationTable::build(kAEven2);
  CHECK(ae2.a(0, 1) == -1);
  CHECK(ae2.a(1, 0) == -2);
  auto d4 = RelationTable::build(kD4);
  CHECK(d4.a(1, 2) == -3);
  CHECK(d4.a(2, 1) == -1);
  CHECK(d4.a(0, 1) == -1);
  auto ao = RelationTable::build(kAOdd3);
  CHECK(ao.a(0, 2) == -1);
  CHECK(ao.a(2, 0) == -1);
  CHECK(ao.a(0, 1) == 0);
  CHECK(ao.a(2, 3) == -2);  // C_n tail
  CHECK(ao.a(3, 2) == -1);
  for (const auto& kind : {kAOdd3, kD2, kD3, kAEven2, kD4}) {
    auto t = RelationTable::build(kind);
    for (int i = 0; i <= kind.n; ++i) CHECK(t.a(i, i) == 2);
  }
}

TEST_CASE("generator field assignments") {
  // (a-odd, X(alpha_0)): c-elimination leaves :epsbar_2 eps_1*: + :eps_2* epsbar_1:
  QuadField f = generator_field(kAOdd3, GeneratorSymbol::Xp(0));
  QuadField expect = normal_pair(one_letter(Letter::eps_bar(2)), one_letter(Letter::eps(1, true))) +
                     normal_pair(one_letter(Letter::eps(2, true)), one_letter(Letter::eps_bar(1)));
  CHECK(f == expect);

  // (d, alpha_0): 2 :beta* beta: collapses to 2 :eps_1* eps_1:
  QuadField h0 = generator_field(kD2, GeneratorSymbol::H(0));
  REQUIRE(h0.term_count() == 1);
  CHECK(h0.coeff(Letter::eps(1, true), Letter::eps(1)) == Scalar::integer(2));

  // (d4, X(alpha_2)) = :eps_2 eps*_bar2:
  QuadField x2 = generator_field(kD4, GeneratorSymbol::Xp(2));
  REQUIRE(x2.term_count() == 1);
  CHECK(x2.coeff(Letter::eps(2), Letter::eps_bar(2, true)) == Scalar::one());
}

TEST_CASE("relation spot checks from the realization") {
  auto table = RelationTable::build(kAEven2);
  // relation (8), i = j = n: ddelta = 4
  auto rec = check_relation(kAEven2, table, 8, {2, 2});
  CHECK(rec.pass);
  CHECK(RelationTable::build(kAEven2).xx_ddelta(2) == Scalar::integer(4));
  // relation (8), i = j = 0 for the triality family: ddelta = 3
  auto t4 = RelationTable::build(kD4);
  CHECK(check_relation(kD4, t4, 8, {0, 0}).pass);
  CHECK(t4.xx_ddelta(0) == Scalar::integer(3));
  // relation (6), i = j = 0, positive sign: delta part is 2 X(alpha_0)
  auto lb = bracket(generator_field(kAOdd3, GeneratorSymbol::H(0)),
                    generator_field(kAOdd3, GeneratorSymbol::Xp(0)), kAOdd3);
  CHECK(lb.delta_part ==
        generator_field(kAOdd3, GeneratorSymbol::Xp(0)).scaled(Scalar::integer(2)));
  CHECK(lb.ddelta.is_zero());
}

TEST_CASE("hh central coefficients match the tables") {
  // [alpha_n(z), alpha_n(w)] carries 2 d_w delta for a-odd
  auto lb = bracket(generator_field(kAOdd3, GeneratorSymbol::H(3)),
                    generator_field(kAOdd3, GeneratorSymbol::H(3)), kAOdd3);
  CHECK(lb.delta_part.is_zero());
  CHECK(lb.ddelta == Scalar::integer(2));
  // the bracket-derived coefficient agrees with the table for all i <= j
  for (const auto& kind : {kAOdd3, kD2, kD3, kAEven2, kD4}) {
    auto table = RelationTable::build(kind);
    for (int i = 0; i <= kind.n; ++i)
      for (int j = i; j <= kind.n; ++j) {
        auto b = bracket(generator_field(kind, GeneratorSymbol::H(i)),
                         generator_field(kind, GeneratorSymbol::H(j)), kind);
        INFO(kind.name() << " (" << i << "," << j << ")");
        CHECK(b.delta_part.is_zero());
        CHECK(b.ddelta == table.hh_coeff(i, j));
      }
  }
}

TEST_CASE("check_all passes and the mutation hook trips it") {
  for (const auto& kind : {kAOdd3, kD2}) {
    Report rep = check_all(kind);
    CHECK(rep.all_pass());
    CHECK(rep.fail_count() == 0);
  }
  // the construction is uniform in the rank, beyond the acceptance test set
  for (const auto& kind : {make_kind(Family::a_odd, 4), make_kind(Family::d, 4),
                           make_kind(Family::a_even, 4)}) {
    Report rep = check_all(kind);
    INFO(kind.name());
    CHECK(rep.all_pass());
  }
  // perturbing one field coefficient by +1 must break at least one relation
  FieldProvider tweaked = [](const AlgebraKind& k, const GeneratorSymbol& s) {
    QuadField f = generator_field(k, s);
    if (s.role == GeneratorSymbol::Role::h && s.index == 1)
      f.add_pair(Letter::eps(1), Letter::eps(1, true), Scalar::one());
    return f;
  };
  Report rep = check_all(kD2, tweaked);
  CHECK(rep.fail_count() > 0);
  // failing records carry their residuals as data
  bool saw_residual = false;
  for (const auto& r : rep.records)
    if (!r.pass && !r.residual.empty()) saw_residual = true;
  CHECK(saw_residual);
}

TEST_CASE("c-elimination neutrality") {
  // with and without elimination: identical ddelta; delta parts agree after
  // eliminating both sides
  for (const auto& kind : {kAOdd3, kD2, kAEven2, kD4}) {
    for (int i = 0; i <= kind.n; ++i)
      for (int j = 0; j <= kind.n; ++j) {
        auto with_e = bracket(generator_field(kind, GeneratorSymbol::Xp(i)),
                              generator_field(kind, GeneratorSymbol::Xm(j)), kind);
        auto without =
            bracket(generator_field(kind, GeneratorSymbol::Xp(i), false),
                    generator_field(kind, GeneratorSymbol::Xm(j), false), kind);
        CHECK(with_e.ddelta == without.ddelta);
        CHECK(with_e.delta_part == without.delta_part.without_c_letters());
      }
  }
}

TEST_CASE("grading") {
  CHECK(degree_of_central() == (Degree{0, {}}));
  Degree d = degree_of(kAOdd3, GeneratorSymbol::Xp(1), 3);
  CHECK(d.s_degree == 3);
  CHECK(d.root_part == std::vector<int>{0, 1, 0, 0});
  CHECK(degree_of(kAOdd3, GeneratorSymbol::H(2), -1).root_part == std::vector<int>{0, 0, 0, 0});
  // additivity across relation (6): [alpha_i(k), X(alpha_j, l)] ~ X(alpha_j, k+l)
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      for (int k : {-2, 1})
        for (int l : {0, 2}) {
          Degree lhs = degree_of(kAOdd3, GeneratorSymbol::H(i), k) +
                       degree_of(kAOdd3, GeneratorSymbol::Xp(j), l);
          CHECK(lhs == degree_of(kAOdd3, GeneratorSymbol::Xp(j), k + l));
        }
  // relation (8) diagonal: X(+a_i, k) + X(-a_i, l) -> alpha_i(k+l)
  Degree sum = degree_of(kD2, GeneratorSymbol::Xp(1), 2) +
               degree_of(kD2, GeneratorSymbol::Xm(1), -1);
  CHECK(sum == degree_of(kD2, GeneratorSymbol::H(1), 1));
}

TEST_CASE("report serialization") {
  Report rep = check_all(kD2);
  json j = to_json(rep, false);
  CHECK(j.at("kind") == "d");
  CHECK(j.at("n") == 2);
  CHECK(j.at("relations").size() == rep.records.size());
  CHECK(j.at("relations")[0].contains("status"));
  CHECK_FALSE(j.at("relations")[0].contains("ms"));
  json jt = to_json(rep, true);
  CHECK(jt.at("relations")[0].contains("ms"));
  // quadfield round trip
  QuadField f = generator_field(kD4, GeneratorSymbol::Xp(0));
  CHECK(quadfield_from_json(to_json(f)) == f);
}
