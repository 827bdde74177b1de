#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "strang/arquiver.hpp"
#include "strang/serialize.hpp"
#include "strang/suites.hpp"

using namespace strang;

namespace {

constexpr double kRelationsSeconds = 60.0;
constexpr double kKrauseSeconds = 120.0;
constexpr double kPolySeconds = 10.0;
constexpr double kResidualLog2 = -40.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SuiteParams params(int i, int c, int d, const Field& f, std::size_t maxlen, std::size_t nmax = 1) {
  SuiteParams p;
  p.family = i;
  p.c = c;
  p.d = d;
  p.field = f;
  p.maxlen = maxlen;
  p.nmax = nmax;
  return p;
}

/// Folds reports into an outcome, naming the first failing check of each failing report.
void absorb(Outcome& o, const CheckReport& r) {
  if (r.pass()) return;
  o.pass = false;
  std::string where = r.suite;
  for (const auto& [k, v] : r.params) where += " " + k + "=" + v;
  for (const auto& c : r.checks) {
    if (c.status != CheckStatus::fail) continue;
    o.detail += "[" + where + ": " + c.id + " observed " + c.observed + ", expected " + c.expected + "] ";
    return;
  }
  o.detail += "[" + where + ": empty report] ";
}

Outcome relations() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (int i : {1, 2})
    for (int c : {0, 1})
      for (int d : {3, 4}) absorb(o, suite_relations(params(i, c, d, Field::gf(2), 10)));
  const double s = seconds_since(t0);
  if (s >= kRelationsSeconds) o.pass = false;
  o.detail += "strings |C|<=10, bands |B|<=8, m<=2 over F_4 in " + std::to_string(s) + " s";
  return o;
}

Outcome krause() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (int i : {1, 2})
    for (int c : {0, 1}) absorb(o, suite_krause(params(i, c, 3, Field::gf(1), 6)));
  const double s = seconds_since(t0);
  if (s >= kKrauseSeconds) o.pass = false;
  o.detail += "all string pairs |S|,|T|<=6 at d=3 in " + std::to_string(s) + " s";
  return o;
}

Outcome stable_end() {
  Outcome o;
  for (int i : {1, 2})
    for (int c : {0, 1})
      for (int d : {3, 4}) absorb(o, suite_stablend(params(i, c, d, Field::gf(2), 8)));
  o.detail += "End, stable End and Ext^1 tables, both families, both c, d in {3,4}, F_4";
  return o;
}

Outcome omega() {
  Outcome o;
  for (int i : {1, 2})
    for (int c : {0, 1})
      for (int d : {3, 4}) absorb(o, suite_omega(params(i, c, d, Field::gf(2), 8)));
  o.detail += "Omega^-2(S_001), period(Y)=3, Omega on S^(lambda) with the lambda=1 boundary flagged";
  return o;
}

Outcome ar() {
  Outcome o;
  const AlgebraSpec s(2, 0, 3);
  const Field f = Field::gf(2);
  Piece seed;
  seed.word = named_family("S_001", 0, s);
  const auto tube = grow_component(seed, s, f, 4);
  if (tube.classification() != "tube(rank 3)" || !tube.tau_closed) {
    o.pass = false;
    o.detail += "[S_001: " + tube.classification() + "] ";
  }
  for (int c : {0, 1}) {
    const AlgebraSpec sc(2, c, 3);
    for (Elem lam : f.units()) {
      Piece band;
      band.kind = Piece::Kind::band;
      band.word = parse_word("a" + named_family("C_010", 0, sc).str(), sc);
      band.lambda = lam;
      const auto g = grow_component(band, sc, f, 2);
      if (g.classification() != "tube(rank 1)") {
        o.pass = false;
        o.detail += "[S^(" + std::to_string(lam) + "), c=" + std::to_string(c) + ": " + g.classification() + "] ";
      }
    }
  }
  Piece s0;
  s0.word = Word::empty(0);
  const auto za = grow_component(s0, s, f, 2);
  std::vector<std::optional<std::size_t>> at(5);
  for (int n = -2; n <= 2; ++n) {
    const auto cn = string_module(named_family("C", n, s), s, f);
    for (std::size_t k = 0; k < za.nodes.size() && !at[static_cast<std::size_t>(n + 2)]; ++k)
      if (is_isomorphic(build_piece(za.nodes[k].piece, s, f), cn)) at[static_cast<std::size_t>(n + 2)] = k;
  }
  bool path = true;
  for (std::size_t k = 0; k < at.size(); ++k) path = path && at[k].has_value();
  for (std::size_t k = 0; path && k + 1 < at.size(); ++k) path = za.has_edge(*at[k], *at[k + 1]);
  if (!path || za.classification() != "ZA-infinity-infinity") {
    o.pass = false;
    o.detail += "[S_0 component: sectional path C(-2)..C(2) " + std::string(path ? "present" : "missing") + "] ";
  }
  for (int i : {1, 2})
    for (int c : {0, 1}) absorb(o, suite_ar(params(i, c, 3, f, 8)));
  o.detail += "S_001 3-tube, S^(lambda) one-tubes, S_0 component holds C(1), C(2) on a sectional path";
  return o;
}

Outcome towers() {
  Outcome o;
  const auto p = params(2, 1, 3, Field::gf(2), 8, 4);
  for (Elem lam : {Elem{2}, Elem{3}}) absorb(o, suite_towers(p, lam));
  o.detail += "lambda in {t, t+1}, n<=4: rank profile 3(n-l), quotient V_lambda, non-split";
  return o;
}

Outcome polynomials() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  absorb(o, suite_pd(12));
  double worst = -1e300;
  for (int l = 2; l <= 11; ++l) {
    const auto r = root_sanity(l, 64);
    worst = std::max(worst, r.log2_residual);
    if (!(r.log2_residual < kResidualLog2) || !r.stable) o.pass = false;
  }
  const double s = seconds_since(t0);
  if (s >= kPolySeconds) o.pass = false;
  o.detail += "3<=d<=12, worst log2 residual " + std::to_string(worst) + ", " + std::to_string(s) + " s";
  return o;
}

Outcome mod2() {
  Outcome o;
  for (int c : {0, 1}) absorb(o, suite_mod2_and_ses(params(2, c, 3, Field::gf(1), 8, 1)));
  o.detail += "U_bar nilpotency 2, Ext^1(U_bar,S_1)=0, sequences for n in {0,1}";
  return o;
}

Outcome negative_controls() {
  Outcome o;
  std::size_t caught = 0, total = 0;
  for (int i : {1, 2})
    for (int c : {0, 1}) {
      auto p = params(i, c, 3, Field::gf(2), 8);
      p.corrupt = true;
      ++total;
      const bool fails = !suite_stablend(p).pass() || !suite_omega(p).pass();
      if (fails) {
        ++caught;
      } else {
        o.pass = false;
        o.detail += "[family " + std::to_string(i) + ", c=" + std::to_string(c) + " passed with c flipped] ";
      }
    }
  o.detail += std::to_string(caught) + "/" + std::to_string(total) + " flipped algebras caught";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"relation soundness", relations},
      {"Krause oracle equivalence", krause},
      {"stable endomorphism table", stable_end},
      {"syzygy facts", omega},
      {"AR components", ar},
      {"lift towers", towers},
      {"p_d polynomials", polynomials},
      {"mod-2 shapes and sequences", mod2},
      {"negative controls", negative_controls},
  };
  bool all = true;
  int k = 0;
  for (const auto& [name, run] : criteria) {
    ++k;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::printf("criterion %d (%s): %s  %s\n", k, name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%s\n", all ? "ALL PASS" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
