#include "strang/suites.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "strang/arquiver.hpp"
#include "strang/homology.hpp"
#include "strang/krause.hpp"
#include "strang/polynomial.hpp"
#include "strang/projective.hpp"

namespace strang {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "?";
}

bool CheckReport::pass() const { return !checks.empty() && count(CheckStatus::fail) == 0; }

std::size_t CheckReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == s; }));
}

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

struct Ctx {
  AlgebraSpec stated;
  AlgebraSpec used;
  Field field;
  CheckReport report;

  Ctx(const std::string& suite, const SuiteParams& p)
      : stated(p.family, p.c, p.d), used(p.corrupt ? stated.flipped() : stated), field(p.field) {
    report.suite = suite;
    report.params = {{"family", str(static_cast<std::size_t>(p.family))},
                     {"c", str(static_cast<std::size_t>(p.c))},
                     {"d", str(static_cast<std::size_t>(p.d))},
                     {"field", p.field.name()},
                     {"maxlen", str(p.maxlen)},
                     {"nmax", str(p.nmax)},
                     {"corrupt", p.corrupt ? "true" : "false"}};
  }

  void add(std::string id, std::string anchor, bool ok, std::string observed, std::string expected,
           std::string kind = "claim", std::string note = "") {
    report.checks.push_back({std::move(id), std::move(anchor), ok ? CheckStatus::pass : CheckStatus::fail,
                             std::move(observed), std::move(expected), std::move(kind), std::move(note)});
  }
  void skip(std::string id, std::string anchor, std::string note) {
    report.checks.push_back({std::move(id), std::move(anchor), CheckStatus::skip, "-", "-", "claim", std::move(note)});
  }

  Representation string(const Word& w) const { return string_module(w, used, field); }
  Representation named(const std::string& name, int param = 0) const {
    return string(named_family(name, param, stated));
  }
};

Word band_word(const AlgebraSpec& spec) {
  return Word::from_letters({Letter{0, false}}).concat(named_family("C_010", 0, spec));
}

// S^{(λ)}: the band M(αC_010, λ, 1), or the string M(C_010) at λ = 0.
Representation s_lambda(const Ctx& ctx, Elem lambda, std::size_t m = 1) {
  if (lambda == 0) return ctx.named("C_010");
  return band_module(band_word(ctx.stated), lambda, m, ctx.used, ctx.field);
}

std::string lam(Elem x) { return "λ=" + std::to_string(x); }

std::string join(const std::vector<std::string>& xs, std::size_t limit = 6) {
  std::string s;
  for (std::size_t i = 0; i < xs.size() && i < limit; ++i) s += (i ? ", " : "") + xs[i];
  if (xs.size() > limit) s += ", ... (" + str(xs.size()) + " total)";
  return s.empty() ? "none" : s;
}

ModuleMap map_power(const Field& f, const ModuleMap& g, std::size_t e, const Representation& m) {
  ModuleMap out = ModuleMap::identity(m);
  for (std::size_t k = 0; k < e; ++k) out = compose(f, g, out);
  return out;
}

// Linear combinations of a basis in a fixed order: single elements, pairwise sums, then seeded
// random combinations.
template <class Visit>
void scan_combinations(const Field& f, const std::vector<ModuleMap>& basis, std::size_t random_trials, Visit visit) {
  auto combine = [&](const std::vector<Elem>& coefs) {
    ModuleMap g = scale(f, 0, basis.front());
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (coefs[i]) g = add(g, scale(f, coefs[i], basis[i]));
    return g;
  };
  if (basis.empty()) return;
  const std::size_t n = basis.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Elem> c(n, 0);
    c[i] = 1;
    if (visit(combine(c))) return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Elem> c(n, 0);
      c[i] = c[j] = 1;
      if (visit(combine(c))) return;
    }
  }
  std::mt19937_64 rng(0x70e5ULL);
  std::uniform_int_distribution<unsigned> pick(0, f.size() - 1);
  for (std::size_t t = 0; t < random_trials; ++t) {
    std::vector<Elem> c(n);
    for (auto& x : c) x = static_cast<Elem>(pick(rng));
    if (visit(combine(c))) return;
  }
}

}  // namespace

CheckReport suite_stablend(const SuiteParams& p) {
  Ctx ctx("stablend", p);
  const AlgebraSpec& sp = ctx.stated;

  // (a) bricks among enumerated strings and bands.
  std::set<Word> uniserial;
  for (const char* name : {"S_0", "S_1", "S_01", "S_10", "S_001", "S_100"})
    uniserial.insert(canonical_string(named_family(name, 0, sp)));
  std::vector<std::string> uni_obs, offenders;
  bool uni_ok = true;
  std::size_t tested = 0;
  for (const auto& w : enumerate(sp, WordKind::strings, p.maxlen)) {
    const std::size_t e = hom_dim(ctx.string(w), ctx.string(w));
    ++tested;
    if (uniserial.count(w)) {
      uni_obs.push_back("M(" + w.str() + "):" + str(e));
      uni_ok = uni_ok && e == 1;
    } else if (e < 2) {
      offenders.push_back("M(" + w.str() + "):" + str(e));
    }
  }
  for (const auto& w : enumerate(sp, WordKind::bands, p.maxlen)) {
    for (Elem l : ctx.field.units()) {
      const Representation b = band_module(w, l, 1, ctx.used, ctx.field);
      ++tested;
      const std::size_t e = hom_dim(b, b);
      if (e < 2) offenders.push_back(b.label + ":" + str(e));
    }
  }
  ctx.add("a.uniserial-bricks", "claim:bricks-are-the-six-uniserials", uni_ok && uni_obs.size() == 6, join(uni_obs),
          "End dim 1 for S_0 S_1 S_01 S_10 S_001 S_100");
  ctx.add("a.other-modules", "claim:bricks-are-the-six-uniserials", offenders.empty(),
          str(offenders.size()) + " of " + str(tested - uni_obs.size()) + " with End dim < 2: " + join(offenders),
          "End dim >= 2 for every other module with word length <= " + str(p.maxlen));

  // (b) stable End of S^{(λ)} for every λ in k.
  for (unsigned x = 0; x < ctx.field.size(); ++x) {
    const auto l = static_cast<Elem>(x);
    const std::size_t st = stable_end_dim(s_lambda(ctx, l));
    const bool want_one = sp.c() == 1;
    ctx.add("b.stable-end[" + lam(l) + "]", "claim:one-tube-stable-end-iff-c1", (st == 1) == want_one, str(st),
            want_one ? "1" : "!= 1", "claim", l == 0 ? "λ=0 is the string module M(C_010)" : "");
  }

  // (c) stable End of M(C_{2,n}).
  if (sp.family() == 2) {
    std::vector<std::string> obs;
    bool ok = true;
    for (int n = -3; n <= 3; ++n) {
      const std::size_t st = stable_end_dim(ctx.named("C", n));
      obs.push_back("n=" + std::to_string(n) + ":" + str(st));
      ok = ok && st == 1;
    }
    ctx.add("c.cn-stable-bricks", "claim:cn-stable-end-is-k", ok, join(obs, 7), "1 for -3 <= n <= 3");
  } else {
    ctx.skip("c.cn-stable-bricks", "claim:cn-stable-end-is-k", "stated for family 2 only");
  }

  // (d) Ext^1.
  const Representation s0 = ctx.named("S_0");
  const Representation x = ctx.named("X");
  const Representation y = ctx.named("Y");
  ctx.add("d.ext-S0", "claim:ext-simple-top", ext1_dim(s0, s0) == 1, str(ext1_dim(s0, s0)), "1");
  ctx.add("d.ext-X", "claim:ext-three-tube-neighbour", ext1_dim(x, x) == 1, str(ext1_dim(x, x)), "1", "claim",
          "X = " + x.label);
  ctx.add("d.ext-Y", "claim:ext-three-tube-mouth", ext1_dim(y, y) == 0, str(ext1_dim(y, y)), "0", "claim",
          "Y = " + y.label);
  if (sp.c() == 1) {
    for (unsigned v = 0; v < ctx.field.size(); ++v) {
      const auto l = static_cast<Elem>(v);
      const Representation s = s_lambda(ctx, l);
      const std::size_t e = ext1_dim(s, s);
      ctx.add("d.ext-S-lambda[" + lam(l) + "]", "claim:ext-one-tube-c1", e == 1, str(e), "1");
    }
  } else {
    ctx.skip("d.ext-S-lambda", "claim:ext-one-tube-c1", "stated for c=1 only");
  }

  // (e) m = 2 bands.
  std::vector<std::string> small;
  std::size_t sampled = 0;
  std::size_t least = SIZE_MAX;
  for (const auto& w : enumerate(sp, WordKind::bands, std::min<std::size_t>(p.maxlen, 6))) {
    for (Elem l : ctx.field.units()) {
      const std::size_t st = stable_end_dim(band_module(w, l, 2, ctx.used, ctx.field));
      ++sampled;
      least = std::min(least, st);
      if (st < 2) small.push_back("M(" + w.str() + ";" + lam(l) + ";m=2):" + str(st));
    }
  }
  ctx.add("e.band-m2", "claim:band-m2-stable-end-at-least-2", sampled > 0 && small.empty(),
          str(sampled) + " sampled, least " + (sampled ? str(least) : "-") + "; below 2: " + join(small), ">= 2");
  return ctx.report;
}

CheckReport suite_omega(const SuiteParams& p) {
  Ctx ctx("omega", p);
  const AlgebraSpec& sp = ctx.stated;
  const std::size_t maxp = 6;
  auto period_str = [&](const std::optional<std::size_t>& v) { return v ? str(*v) : "none <= " + str(maxp); };

  const Representation y = ctx.named("Y");
  const auto py = omega_period(y, maxp);
  ctx.add("period-Y", "claim:three-tube-mouth-period-3", py == std::optional<std::size_t>(3), period_str(py), "3",
          "claim", "Y = " + y.label);

  const Representation s001 = ctx.named("S_001");
  const bool inv2 = is_isomorphic(syzygy_power(s001, -2), ctx.named("S_100"));
  ctx.add("cosyzygy2-S001", "claim:S100-is-inverse-square-of-S001", inv2, inv2 ? "isomorphic" : "not isomorphic",
          "isomorphic");

  for (Elem l : ctx.field.units()) {
    const Representation s = s_lambda(ctx, l);
    const Representation om = syzygy(s);
    const auto per = omega_period(s, maxp);
    if (sp.c() == 0) {
      const bool iso = is_isomorphic(om, s);
      ctx.add("omega-S-lambda[" + lam(l) + "]", "claim:one-tube-omega-fixed-c0", iso, iso ? "Ω(S) ≅ S" : "Ω(S) ≇ S",
              "Ω(S) ≅ S");
      ctx.add("period-S-lambda[" + lam(l) + "]", "claim:one-tube-omega-fixed-c0", per == std::optional<std::size_t>(1),
              period_str(per), "1");
    } else {
      const Elem target = Field::add(1, l);
      const bool iso = is_isomorphic(om, s_lambda(ctx, target));
      const std::string note = target == 0 ? "boundary: 1+λ = 0, compared with the string module S^(0) = M(C_010)" : "";
      ctx.add("omega-S-lambda[" + lam(l) + "]", "claim:one-tube-omega-shift-c1", iso,
              iso ? "Ω(S^(λ)) ≅ S^(" + std::to_string(target) + ")" : "Ω(S^(λ)) ≇ S^(" + std::to_string(target) + ")",
              "Ω(S^(λ)) ≅ S^(1+λ)", "claim", note);
      ctx.add("period-S-lambda[" + lam(l) + "]", "claim:one-tube-period-2-c1", per == std::optional<std::size_t>(2),
              period_str(per), "2", "claim", note);
    }
  }

  for (const auto& [name, param] : std::vector<std::pair<std::string, int>>{{"S_0", 0}, {"C", 1}}) {
    const Representation m = ctx.named(name, param);
    const auto per = omega_period(m, maxp);
    ctx.add("period-ZA[" + m.label + "]", "claim:ZA-components-not-periodic", !per.has_value(), period_str(per),
            "none <= " + str(maxp), "structural", "bounded search");
  }
  return ctx.report;
}

CheckReport suite_towers(const SuiteParams& p, Elem lambda) {
  Ctx ctx("towers", p);
  ctx.report.params.emplace_back("lambda", std::to_string(lambda));
  if (lambda == 0) {
    ctx.add("lambda-nonzero", "claim:tower-free-over-truncated-polynomials", false, "λ=0", "λ != 0");
    return ctx.report;
  }
  const Field& f = ctx.field;
  const Word bw = band_word(ctx.stated);
  const Representation v1 = band_module(bw, lambda, 1, ctx.used, f);
  const std::size_t base = v1.dim();
  std::optional<Representation> prev;
  for (std::size_t n = 1; n <= p.nmax; ++n) {
    const std::string tag = "[n=" + str(n) + "]";
    const Representation v = band_module(bw, lambda, n, ctx.used, f);
    const HomSpace end = hom_space(v, v);
    std::optional<ModuleMap> tau;
    std::optional<ModuleMap> fallback;
    auto profile_ok = [&](const ModuleMap& g) {
      for (std::size_t l = 0; l <= n; ++l)
        if (map_rank(f, map_power(f, g, l, v)) != (n - l) * base) return false;
      return true;
    };
    if (n == 1) {
      tau = ModuleMap::zero(v, v);
    } else {
      scan_combinations(f, end.basis, 512, [&](const ModuleMap& g) {
        if (!map_power(f, g, n, v).is_zero() || map_power(f, g, n - 1, v).is_zero()) return false;
        if (!fallback) fallback = g;
        if (!profile_ok(g)) return false;
        tau = g;
        return true;
      });
      if (!tau) tau = fallback;
    }
    if (!tau) {
      ctx.add("tau" + tag, "claim:tower-free-over-truncated-polynomials", false,
              "no endomorphism of nilpotency index " + str(n) + " among " + str(end.dim()) + "-dim End combinations",
              "exists");
      continue;
    }
    ctx.add("tau" + tag, "claim:tower-free-over-truncated-polynomials", true, "found", "τ^n = 0, τ^(n-1) != 0");
    std::vector<std::string> ranks, want;
    for (std::size_t l = 0; l <= n; ++l) {
      ranks.push_back(str(map_rank(f, map_power(f, *tau, l, v))));
      want.push_back(str((n - l) * base));
    }
    ctx.add("rank-profile" + tag, "claim:tower-free-over-truncated-polynomials", ranks == want, join(ranks, 8),
            join(want, 8));
    const Representation q = quotient(v, image_of(v, *tau)).quotient;
    const bool qiso = is_isomorphic(q, v1);
    ctx.add("quotient" + tag, "claim:tower-quotient-is-base", qiso, qiso ? "V/im τ ≅ V_λ" : "V/im τ ≇ V_λ",
            "V/im τ ≅ V_λ");
    if (n >= 2 && prev) {
      const Representation im = submodule(v, image_of(v, *tau)).sub;
      const bool sub_ok = is_isomorphic(im, *prev);
      const bool split = is_isomorphic(v, direct_sum({*prev, v1}));
      ctx.add("sequence" + tag, "claim:tower-sequences-non-split", sub_ok && !split,
              std::string(sub_ok ? "im τ ≅ V_{λ,n-1}" : "im τ ≇ V_{λ,n-1}") + (split ? ", split" : ", non-split"),
              "im τ ≅ V_{λ,n-1}, non-split");
    }
    prev = v;
  }
  return ctx.report;
}

CheckReport suite_mod2_and_ses(const SuiteParams& p) {
  Ctx ctx("mod2_and_ses", p);
  const AlgebraSpec& sp = ctx.stated;
  const Field& f = ctx.field;
  if (sp.family() == 2) {
    const Representation u = ctx.named("U_bar");
    const std::size_t N = static_cast<std::size_t>(sp.n());
    std::vector<std::string> ranks, want;
    for (std::size_t l = 0; l <= N; ++l) {
      const Matrix h = l == 0 ? Matrix::identity(u.dims[1]) : path_matrix(u, repeat("h", static_cast<int>(l)));
      ranks.push_back(str(rank(f, h)));
      want.push_back(str(N - l));
    }
    ctx.add("a.eta-nilpotency", "claim:U-bar-free-over-k[t]/(t^N)", ranks == want, "rank η^l: " + join(ranks, 16),
            join(want, 16), "claim", "U_bar = " + u.label);
    const Representation s1 = ctx.named("S_1");
    const std::size_t e = ext1_dim(u, s1);
    ctx.add("b.ext-U-bar-S1", "claim:ext-U-bar-S1-vanishes", e == 0, str(e), "0");
  } else {
    ctx.skip("a.eta-nilpotency", "claim:U-bar-free-over-k[t]/(t^N)", "U_bar is defined for family 2 only");
    ctx.skip("b.ext-U-bar-S1", "claim:ext-U-bar-S1-vanishes", "U_bar is defined for family 2 only");
  }

  const Projective p0 = projective_module(ctx.used, f, 0);
  for (std::size_t n = 0; n <= p.nmax; ++n) {
    const std::string tag = "[n=" + str(n) + "]";
    const Representation cn = ctx.named("C", static_cast<int>(n));
    std::vector<Representation> parts(n, p0.rep);
    parts.push_back(ctx.named("T_00"));
    const Representation src = direct_sum(parts);
    const HomSpace hs = hom_space(src, cn);
    const std::size_t bits = hs.dim() * f.degree();
    const bool exhaustive = bits <= 20;
    const std::size_t space = exhaustive ? (std::size_t{1} << bits) : 4096;
    std::size_t tried = 0;
    bool found = false;
    auto test = [&](const std::vector<Elem>& coefs) {
      ++tried;
      ModuleMap g = ModuleMap::zero(src, cn);
      for (std::size_t i = 0; i < coefs.size(); ++i)
        if (coefs[i]) g = add(g, scale(f, coefs[i], hs.basis[i]));
      if (map_rank(f, g) != cn.dim()) return false;
      const Representation k = submodule(src, kernel_of(src, g)).sub;
      return is_isomorphic(k, cn);
    };
    if (exhaustive) {
      std::vector<Elem> c(hs.dim(), 0);
      for (std::size_t code = 0; code < space && !found; ++code) {
        std::size_t rest = code;
        for (auto& x : c) {
          x = static_cast<Elem>(rest % f.size());
          rest /= f.size();
        }
        found = test(c);
      }
    } else {
      std::mt19937_64 rng(0x5e5ULL);
      std::uniform_int_distribution<unsigned> pick(0, f.size() - 1);
      for (std::size_t t = 0; t < space && !found; ++t) {
        std::vector<Elem> c(hs.dim());
        for (auto& x : c) x = static_cast<Elem>(pick(rng));
        found = test(c);
      }
    }
    const std::string mode = exhaustive ? "exhaustive" : "random";
    ctx.add("c.sequence" + tag, "claim:projective-presentation-of-Cn", found,
            found ? "found after " + str(tried) + " of " + str(space) + " maps (" + mode + ")"
                  : "none in " + str(space) + " maps (" + mode + ", hom dim " + str(hs.dim()) + ")",
            "surjection P_0^n ⊕ M(α) → M(C_n) with kernel ≅ M(C_n)", "claim", "C_n = " + cn.label);
    const std::size_t e = ext1_dim(cn, cn);
    ctx.add("d.ext-Cn" + tag, "claim:ext-Cn-is-k", e == 1, str(e), "1");
  }
  return ctx.report;
}

CheckReport suite_krause(const SuiteParams& p) {
  Ctx ctx("krause", p);
  const auto words = enumerate(ctx.used, WordKind::strings, p.maxlen);
  std::vector<Representation> mods;
  mods.reserve(words.size());
  for (const auto& w : words) mods.push_back(string_module(w, ctx.used, ctx.field));
  std::size_t pairs = 0;
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      ++pairs;
      const std::size_t k = krause_hom_dim(words[i], words[j], ctx.used);
      const std::size_t h = hom_dim(mods[i], mods[j]);
      if (k != h) bad.push_back(words[i].str() + "→" + words[j].str() + ":" + str(k) + "/" + str(h));
    }
  }
  ctx.add("hom-dims", "oracle:admissible-triples-count-homs", bad.empty(),
          str(pairs) + " pairs, " + str(bad.size()) + " mismatches: " + join(bad), "0 mismatches", "oracle");

  // The graph maps themselves are independent homomorphisms.
  std::size_t checked = 0;
  std::vector<std::string> dependent;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].size() > 4) continue;
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (words[j].size() > 4) continue;
      std::vector<Vec> vs;
      for (const auto& t : admissible_triples(words[i], words[j], ctx.used))
        vs.push_back(flatten_map(graph_map(words[i], words[j], t, ctx.used, ctx.field)));
      ++checked;
      if (vs.empty()) continue;
      if (rank(ctx.field, Matrix::from_rows(vs, vs.front().size())) != vs.size())
        dependent.push_back(words[i].str() + "→" + words[j].str());
    }
  }
  ctx.add("graph-maps-independent", "oracle:admissible-triples-count-homs", dependent.empty(),
          str(checked) + " pairs up to length 4, dependent: " + join(dependent), "all independent", "structural");
  return ctx.report;
}

CheckReport suite_relations(const SuiteParams& p) {
  Ctx ctx("relations", p);
  const AlgebraSpec& sp = ctx.used;
  std::vector<std::string> bad;
  std::size_t strings = 0;
  for (const auto& w : enumerate(sp, WordKind::strings, p.maxlen)) {
    ++strings;
    if (!check_relations(string_module(w, sp, ctx.field))) bad.push_back("M(" + w.str() + ")");
  }
  ctx.add("strings", "structural:relations-hold", bad.empty(), str(strings) + " modules, failing: " + join(bad),
          "all satisfy the relations", "structural");
  bad.clear();
  std::size_t bands = 0;
  const std::size_t band_len = p.maxlen >= 2 ? p.maxlen - 2 : 0;
  for (const auto& w : enumerate(sp, WordKind::bands, band_len)) {
    for (Elem l : ctx.field.units()) {
      for (std::size_t m = 1; m <= 2; ++m) {
        ++bands;
        const Representation b = band_module(w, l, m, sp, ctx.field);
        if (!check_relations(b)) bad.push_back(b.label);
      }
    }
  }
  ctx.add("bands", "structural:relations-hold", bad.empty(), str(bands) + " modules, failing: " + join(bad),
          "all satisfy the relations", "structural");
  for (const auto& s : symmetric_sanity(sp, ctx.field))
    ctx.add("projective." + s.id, "structural:projectives-symmetric", s.pass, s.observed, s.expected, "structural");
  return ctx.report;
}

CheckReport suite_ar(const SuiteParams& p) {
  Ctx ctx("ar", p);
  const AlgebraSpec& sp = ctx.used;
  const Field& f = ctx.field;
  auto string_piece = [&](const Word& w) { return Piece{Piece::Kind::string, w, 0, 1}; };

  const std::string mouth = sp.family() == 2 ? "S_001" : "Y";
  const auto tube = grow_component(string_piece(named_family(mouth, 0, sp)), sp, f, 4);
  ctx.add("three-tube", "claim:three-tube-with-Y", tube.tau_period == std::optional<std::size_t>(3),
          tube.classification(), "tube(rank 3)", "claim", "seed " + tube.nodes.front().label + ", radius 4");
  ctx.add("three-tube.tau-closed", "structural:tau-automorphism", tube.tau_closed,
          tube.tau_closed ? "closed" : "not closed", "closed", "structural");
  const auto mouth_nbrs = ar_neighbors(tube.nodes.front().piece, sp, f);
  const auto succ = std::count_if(mouth_nbrs.begin(), mouth_nbrs.end(),
                                  [](const Neighbor& n) { return n.direction == Direction::successor; });
  ctx.add("three-tube.mouth", "claim:three-tube-with-Y", succ == 1 && mouth_nbrs.size() == 2,
          str(static_cast<std::size_t>(succ)) + " successor, " +
              str(mouth_nbrs.size() - static_cast<std::size_t>(succ)) + " predecessor",
          "1 successor, 1 predecessor");

  for (Elem l : f.units()) {
    const Piece seed{Piece::Kind::band, band_word(sp), l, 1};
    const auto g = grow_component(seed, sp, f, 2);
    ctx.add("one-tube[" + lam(l) + "]", "claim:band-one-tube", g.tau_period == std::optional<std::size_t>(1) &&
                                                                    g.tau_closed,
            g.classification() + (g.tau_closed ? "" : ", τ not closed"), "tube(rank 1)");
  }

  const auto za = grow_component(string_piece(Word::empty(0)), sp, f, 2);
  ctx.add("S0.classification", "claim:ZA-components-not-periodic", !za.is_tube(), za.classification(),
          "ZA-infinity-infinity", "structural", "no τ-period up to " + str(za.period_bound));
  ctx.add("S0.tau-closed", "structural:tau-automorphism", za.tau_closed, za.tau_closed ? "closed" : "not closed",
          "closed", "structural");
  std::vector<std::optional<std::size_t>> chain;
  std::vector<std::string> chain_labels;
  for (int n = -2; n <= 2; ++n) {
    const Piece pc = canonical_piece(string_piece(named_family("C", n, sp)), f);
    chain.push_back(za.find(pc.label()));
    chain_labels.push_back(pc.label());
  }
  bool present = chain[3] && chain[4];
  ctx.add("S0.contains-C1-C2", "claim:component-of-S0-holds-Cn", present,
          std::string(chain[3] ? "has " : "lacks ") + chain_labels[3] + ", " + (chain[4] ? "has " : "lacks ") +
              chain_labels[4],
          "both present");
  bool path = true;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k)
    path = path && chain[k] && chain[k + 1] && za.has_edge(*chain[k], *chain[k + 1]);
  ctx.add("S0.sectional-path", "claim:component-of-S0-holds-Cn", path,
          path ? "A_-2 → A_-1 → A_0 → A_1 → A_2 present" : "path broken", "irreducible maps A_n → A_{n+1}, |n| <= 2",
          "claim", join(chain_labels, 5));

  std::size_t maps = 0;
  std::vector<std::string> wrong;
  for (const auto& e : za.edges) {
    const Word& a = za.nodes[e.from].piece.word;
    const Word& b = za.nodes[e.to].piece.word;
    const Representation ma = string_module(a, sp, f);
    const Representation mb = string_module(b, sp, f);
    const ModuleMap g = canonical_map(a, b, sp, f);
    ++maps;
    const std::size_t r = map_rank(f, g);
    const bool ok = is_intertwiner(ma, mb, g) &&
                    (e.kind == EdgeKind::hook_inclusion ? r == ma.dim() : r == mb.dim());
    if (!ok) wrong.push_back(za.nodes[e.from].label + "→" + za.nodes[e.to].label);
  }
  ctx.add("S0.irreducible-maps", "structural:hooks-inject-cohooks-project", wrong.empty() && maps > 0,
          str(maps) + " maps, wrong: " + join(wrong), "inclusions injective, projections surjective", "structural");

  const auto again = ar_neighbors(za.nodes.front().piece, sp, f);
  const auto first = ar_neighbors(za.nodes.front().piece, sp, f);
  bool same = again.size() == first.size();
  for (std::size_t i = 0; same && i < again.size(); ++i) same = again[i].label() == first[i].label();
  ctx.add("neighbors-deterministic", "structural:determinism", same, same ? "identical" : "differ", "identical",
          "structural");
  return ctx.report;
}

CheckReport suite_pd(int dmax) {
  CheckReport r;
  r.suite = "pd";
  r.params = {{"dmax", std::to_string(dmax)}};
  auto add = [&](std::string id, std::string anchor, bool ok, std::string obs, std::string exp, std::string kind) {
    r.checks.push_back({std::move(id), std::move(anchor), ok ? CheckStatus::pass : CheckStatus::fail, std::move(obs),
                        std::move(exp), std::move(kind), ""});
  };
  for (int d = 3; d <= dmax; ++d) {
    const std::string tag = "[d=" + std::to_string(d) + "]";
    const IntPoly p = pd(d);
    const long deg = (1L << (d - 2)) - 1;
    add("monic" + tag, "claim:pd-monic-even", p.is_monic(), p.leading().str(), "1", "claim");
    add("degree" + tag, "claim:pd-degree", p.degree() == deg, std::to_string(p.degree()), std::to_string(deg), "claim");
    std::size_t odd = 0;
    for (long k = 0; k < p.degree(); ++k)
      if (p.coeff(static_cast<std::size_t>(k)) % 2 != 0) ++odd;
    add("even" + tag, "claim:pd-monic-even", odd == 0, str(odd) + " odd non-leading coefficients", "0", "claim");
    const std::size_t q = mod2_quotient_dim(d);
    add("mod2-dim" + tag, "claim:mod2-ring-is-truncated-polynomials", q == (std::size_t{1} << (d - 2)), str(q),
        str(std::size_t{1} << (d - 2)), "claim");
    std::vector<int> want(static_cast<std::size_t>(deg + 1), 0);
    want.back() = 1;
    add("mod2-pd" + tag, "claim:mod2-ring-is-truncated-polynomials", p.mod2() == want, "t-valuation " +
        str(p.mod2().empty() ? 0 : p.t_valuation()), "p_d ≡ t^" + std::to_string(deg) + " mod 2", "structural");
  }
  // Chebyshev: C_0 = 2, C_1 = t, C_{k+1} = t C_k - C_{k-1}; q_l = C_{2^{l-2}}.
  std::vector<IntPoly> cheb{IntPoly::constant(2), IntPoly::t()};
  for (int l = 2; l <= std::min(dmax, 8); ++l) {
    const std::size_t k = std::size_t{1} << (l - 2);
    while (cheb.size() <= k) cheb.push_back(IntPoly::t() * cheb.back() - cheb[cheb.size() - 2]);
    add("chebyshev[l=" + std::to_string(l) + "]", "oracle:halfroot-minpoly-is-chebyshev", cheb[k] == minpoly_halfroot(l),
        cheb[k] == minpoly_halfroot(l) ? "equal" : "differ", "equal", "oracle");
  }
  for (int l = 2; l <= std::max(2, dmax - 1); ++l) {
    const RootSanity rs = root_sanity(l, 64);
    std::ostringstream obs;
    obs << "log2 residual " << rs.log2_residual << " at " << rs.precision << " bits";
    add("root-sanity[l=" + std::to_string(l) + "]", "oracle:halfroot-is-2cos", rs.log2_residual < -40 && rs.stable,
        obs.str(), "< -40", "oracle");
  }
  for (int a = 2; a <= std::min(6, dmax); ++a) {
    for (int b = a + 1; b <= std::min(6, dmax); ++b) {
      const BigInt res = resultant(minpoly_halfroot(a), minpoly_halfroot(b));
      add("coprime[" + std::to_string(a) + "," + std::to_string(b) + "]", "structural:halfroot-minpolys-coprime",
          res != 0, "resultant " + res.str(), "!= 0", "structural");
    }
  }
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ar", "krause", "mod2_and_ses", "omega", "pd", "relations", "stablend",
                                              "towers"};
  return names;
}

CheckReport run_suite(const std::string& name, const SuiteParams& p) {
  if (name == "stablend") return suite_stablend(p);
  if (name == "omega") return suite_omega(p);
  if (name == "towers") {
    // λ = t and t+1 in F_4, or 1 over F_2.
    CheckReport r = suite_towers(p, p.field.size() > 2 ? 2 : 1);
    if (p.field.size() > 2) {
      CheckReport r2 = suite_towers(p, 3);
      for (auto& c : r2.checks) c.id += "[λ=3]";
      for (auto& c : r.checks) c.id += "[λ=2]";
      r.checks.insert(r.checks.end(), r2.checks.begin(), r2.checks.end());
      r.params.back().second = "2,3";
    }
    return r;
  }
  if (name == "mod2_and_ses") return suite_mod2_and_ses(p);
  if (name == "krause") return suite_krause(p);
  if (name == "relations") return suite_relations(p);
  if (name == "ar") return suite_ar(p);
  if (name == "pd") return suite_pd(std::max(3, p.d));
  throw Error("unknown-suite", "no suite named '" + name + "'");
}

std::size_t thread_budget() {
  if (const char* env = std::getenv("STRANG_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<CheckReport> run_all(std::size_t maxlen_cap) {
  std::vector<std::function<CheckReport()>> jobs;
  const Field f2 = Field::gf(1);
  const Field f4 = Field::gf(2);
  auto params = [&](int i, int c, int d, const Field& f, std::size_t maxlen, std::size_t nmax) {
    SuiteParams p;
    p.family = i;
    p.c = c;
    p.d = d;
    p.field = f;
    p.maxlen = std::min(maxlen, maxlen_cap);
    p.nmax = nmax;
    return p;
  };
  for (int i : {1, 2}) {
    for (int c : {0, 1}) {
      for (int d : {3, 4}) {
        jobs.push_back([=] { return suite_stablend(params(i, c, d, f4, 8, 1)); });
        jobs.push_back([=] { return suite_omega(params(i, c, d, f4, 8, 1)); });
        jobs.push_back([=] { return suite_krause(params(i, c, d, f2, d == 3 ? 6 : 5, 1)); });
        jobs.push_back([=] { return suite_relations(params(i, c, d, f4, 10, 1)); });
        if (d == 3) {
          jobs.push_back([=] { return suite_ar(params(i, c, d, f4, 8, 1)); });
          jobs.push_back([=] { return suite_mod2_and_ses(params(i, c, d, f2, 8, 1)); });
        }
        if (c == 1 && (d == 3 || i == 2)) {
          jobs.push_back([=] { return run_suite("towers", params(i, c, d, f4, 8, d == 3 ? 4 : 3)); });
        }
      }
    }
  }
  jobs.push_back([] { return suite_pd(12); });
  auto reports = run_parallel(jobs, thread_budget());
  std::stable_sort(reports.begin(), reports.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.suite < b.suite; });
  return reports;
}

}  // namespace strang
