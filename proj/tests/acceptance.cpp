// Acceptance suite: one line per criterion, exact checks throughout.
// Exit status 0 iff every criterion passes.

#include <cstdio>
#include <string>
#include <vector>

#include "twistfock/suites.hpp"

using namespace twistfock;

namespace {

const std::vector<AlgebraKind> kTestSet = {
    make_kind(Family::a_odd, 3),  make_kind(Family::d, 2),
    make_kind(Family::d, 3),      make_kind(Family::a_even, 2),
    make_kind(Family::a_even, 3), make_kind(Family::d4_triality, 2)};

int g_failures = 0;

void report(int idx, const std::string& what, bool pass, double ms,
            const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s (%.0f ms)%s\n", pass ? "PASS" : "FAIL", idx, what.c_str(),
              ms, detail.empty() ? "" : ("  -- " + detail).c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string first_failure(const std::vector<CheckRecord>& records) {
  for (const auto& r : records)
    if (!r.pass) {
      std::string s = r.id;
      for (int v : r.indices) s += " " + std::to_string(v);
      return s + ": " + r.residual;
    }
  return "";
}

}  // namespace

int main() {
  // 1. every instance of relations (1)-(12), symbolically, zero residual
  {
    detail::Stopwatch sw;
    bool pass = true;
    std::string detail;
    int instances = 0;
    for (const auto& kind : kTestSet) {
      Report rep = check_all(kind);
      instances += static_cast<int>(rep.records.size());
      if (!rep.all_pass()) {
        pass = false;
        detail = kind.name() + " " + first_failure(rep.records);
      }
    }
    report(1, "symbolic relation suite, " + std::to_string(instances) + " instances over 6 kinds",
           pass, sw.ms(), detail);
  }

  // 2. central d-delta coefficients of [X(alpha_0), X(-alpha_0)] and
  //    [X(alpha_n), X(-alpha_n)] match the proof values exactly
  {
    detail::Stopwatch sw;
    bool pass = true;
    std::string detail;
    auto expect = [&](const AlgebraKind& kind, int i, long value) {
      auto lb = bracket(generator_field(kind, GeneratorSymbol::Xp(i)),
                        generator_field(kind, GeneratorSymbol::Xm(i)), kind);
      if (!(lb.ddelta == Scalar::integer(value))) {
        pass = false;
        detail = kind.name() + " i=" + std::to_string(i) + " got " + lb.ddelta.str() +
                 " want " + std::to_string(value);
      }
    };
    const AlgebraKind a3 = kTestSet[0], d2 = kTestSet[1], ae2 = kTestSet[3], d4 = kTestSet[5];
    expect(a3, 0, 2);
    expect(d2, 0, 2);
    expect(ae2, 0, 1);
    expect(d4, 0, 3);
    expect(a3, a3.n, 1);
    expect(d2, d2.n, 2);
    expect(ae2, ae2.n, 4);
    expect(d4, d4.n, 1);
    report(2, "central coefficients of relation (8) reproduce the proof values", pass, sw.ms(),
           detail);
  }

  // 3. fock oracle: commutators of every generator pair on all states of
  //    energy <= 4 (capped at 2000), |k|, |l| <= 2 -- relation-covered pairs
  //    against the table, the remaining same-sign pairs against the
  //    symbolic bracket
  {
    detail::Stopwatch sw;
    bool pass = true;
    std::string detail;
    for (const auto& kind : kTestSet) {
      FockChecker chk(kind, 8, 2000);
      auto run_pairs = [&](const std::vector<FockChecker::Pair>& pairs, bool table) {
        for (const auto& p : pairs) {
          auto rec = chk.check_pair(p, 2, table);
          if (!rec.pass) {
            pass = false;
            detail = kind.name() + " " + rec.id + ": " + rec.residual;
            return;
          }
        }
      };
      run_pairs(chk.relation_pairs(), true);
      if (pass) run_pairs(chk.extra_pairs(), false);
      if (!pass) break;
    }
    report(3, "fock commutators match the tables and the symbolic oracle on 2000-state sets",
           pass, sw.ms(), detail);
  }

  // 4. Serre relations: symbolic ad chains empty, cross-checked on states
  {
    detail::Stopwatch sw;
    bool pass = true;
    std::string detail;
    for (const auto& kind : kTestSet) {
      RunConfig cfg;
      cfg.kind = kind;
      auto suite = run_serre(cfg);
      if (suite.fail_count() != 0) {
        pass = false;
        detail = kind.name() + " " + first_failure(suite.records);
        break;
      }
    }
    report(4, "Serre relations, symbolic and on fock states (arity up to 4)", pass, sw.ms(),
           detail);
  }

  // 5. psi homomorphism at mode bound 2, pairing tables entry for entry,
  //    and the literal uncorrected readings fail
  {
    detail::Stopwatch sw;
    bool pass = true;
    std::string detail;
    for (const auto& kind : kTestSet) {
      RunConfig cfg;
      cfg.kind = kind;
      cfg.mode_bound = 2;
      auto suite = run_psi(cfg);
      if (suite.fail_count() != 0) {
        pass = false;
        detail = kind.name() + " " + first_failure(suite.records);
        break;
      }
    }
    report(5, "psi homomorphism, pairing tables, and literal-reading regressions", pass, sw.ms(),
           detail);
  }

  // 6. axiom suites: Clifford anticommutators, normal-ordering antisymmetry,
  //    representation Jacobi, Lie-algebra invariants on all basis triples,
  //    Kahler reductions
  {
    detail::Stopwatch sw;
    bool pass = true;
    std::string detail;
    for (const auto& kind : kTestSet) {
      RunConfig cfg;
      cfg.kind = kind;
      auto suite = run_axioms(cfg);
      for (const auto& rec : suite.records) {
        if (rec.id.rfind("scalar-", 0) == 0) continue;  // criterion 7
        if (!rec.pass) {
          pass = false;
          detail = kind.name() + " " + rec.id + ": " + rec.residual;
        }
      }
      if (!pass) break;
    }
    report(6, "axiom suites across all kinds, exact", pass, sw.ms(), detail);
  }

  // 7. scalar field: ring axioms and inversion on 1000 samples, and the
  //    complex embedding consistent within 1e-9
  {
    detail::Stopwatch sw;
    RunConfig cfg;
    cfg.kind = kTestSet[0];
    auto suite = run_axioms(cfg);
    bool pass = true;
    std::string detail;
    for (const auto& rec : suite.records) {
      if (rec.id.rfind("scalar-", 0) != 0) continue;
      if (!rec.pass) {
        pass = false;
        detail = rec.id + ": " + rec.residual;
      }
    }
    report(7, "scalar field: 1000-sample ring/inversion checks, embedding within 1e-9", pass,
           sw.ms(), detail);
  }

  if (g_failures == 0) {
    std::printf("acceptance: all 7 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failing\n", g_failures);
  return 1;
}
