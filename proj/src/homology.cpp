#include "strang/homology.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <tuple>

#include "strang/projective.hpp"

namespace strang {

namespace {

using ProjKey = std::tuple<int, int, int, unsigned, unsigned, int>;

const Projective& cached_projective(const AlgebraSpec& spec, const Field& field, int u) {
  static std::mutex mu;
  static std::map<ProjKey, std::unique_ptr<Projective>> cache;
  const ProjKey key{spec.family(), spec.c(), spec.d(), field.degree(), field.modulus(), u};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::make_unique<Projective>(projective_module(spec, field, u))).first;
  }
  return *it->second;
}

std::size_t socle_index(const Projective& p) {
  const int u = p.basis.vertex;
  const std::string soc = p.rep.spec.socle_path(u);
  const auto& labels = p.rep.basis_labels[static_cast<std::size_t>(u)];
  const auto it = std::find(labels.begin(), labels.end(), soc);
  if (it == labels.end()) throw Error("internal", "socle path missing from projective basis");
  return static_cast<std::size_t>(it - labels.begin());
}

void require_same(const Representation& m, const Representation& n) {
  if (!(m.spec == n.spec) || !(m.field == n.field)) throw Error("mixed-spec", "modules over different algebras or fields");
}

/// Standard basis indices complementing the span of `vecs` (the non-pivot coordinates).
std::vector<std::size_t> complement_indices(const Field& f, const std::vector<Vec>& vecs, std::size_t n) {
  const auto basis = span_basis(f, vecs, n);
  std::vector<char> pivot(n, 0);
  for (const auto& v : basis) {
    const auto it = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
    pivot[static_cast<std::size_t>(it - v.begin())] = 1;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) out.push_back(i);
  return out;
}

bool is_iso_map(const Field& f, const ModuleMap& g) {
  for (std::size_t u = 0; u < 2; ++u) {
    if (g.f[u].rows() != g.f[u].cols()) return false;
    if (rank(f, g.f[u]) != g.f[u].rows()) return false;
  }
  return true;
}

ModuleMap combine(const Field& f, const std::vector<ModuleMap>& basis, const std::vector<Elem>& coefs) {
  ModuleMap acc = scale(f, 0, basis.front());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coefs[k] != 0) acc = add(acc, scale(f, coefs[k], basis[k]));
  }
  return acc;
}

/// Identity-style summand map: P_u -> M sending path p to p·m.
void place_generator(const Representation& m, const Projective& p, const Vec& gen, std::array<std::size_t, 2> col_off,
                     ModuleMap& out) {
  const int u = p.basis.vertex;
  std::array<std::size_t, 2> idx{0, 0};
  for (const auto& path : p.basis.paths) {
    Vec img;
    int v = u;
    if (path.empty()) {
      img = gen;
    } else {
      int src = 0;
      p.rep.spec.composable(path, &src, &v);
      img = mul(m.field, path_matrix(m, path), gen);
    }
    const auto vv = static_cast<std::size_t>(v);
    for (std::size_t r = 0; r < img.size(); ++r) out.f[vv](r, col_off[vv] + idx[vv]) = img[r];
    ++idx[vv];
  }
}

}  // namespace

Vec flatten_map(const ModuleMap& f) {
  Vec v(f.f[0].data());
  v.insert(v.end(), f.f[1].data().begin(), f.f[1].data().end());
  return v;
}

ModuleMap unflatten_map(const Representation& m, const Representation& n, const Vec& v) {
  const std::size_t s0 = n.dims[0] * m.dims[0];
  const std::size_t s1 = n.dims[1] * m.dims[1];
  if (v.size() != s0 + s1) throw Error("shape", "map vector has wrong length");
  return {{Matrix(n.dims[0], m.dims[0], Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(s0))),
           Matrix(n.dims[1], m.dims[1], Vec(v.begin() + static_cast<std::ptrdiff_t>(s0), v.end()))}};
}

Matrix hom_system(const Representation& m, const Representation& n) {
  require_same(m, n);
  const std::array<std::size_t, 2> off{0, n.dims[0] * m.dims[0]};
  const std::size_t unknowns = off[1] + n.dims[1] * m.dims[1];
  std::size_t rows = 0;
  for (int id = 0; id < m.spec.num_arrows(); ++id) {
    const auto& a = m.spec.arrow(id);
    rows += n.dims[static_cast<std::size_t>(a.dst)] * m.dims[static_cast<std::size_t>(a.src)];
  }
  Matrix sys(rows, unknowns);
  std::size_t row = 0;
  for (int id = 0; id < m.spec.num_arrows(); ++id) {
    const auto& a = m.spec.arrow(id);
    const auto s = static_cast<std::size_t>(a.src);
    const auto t = static_cast<std::size_t>(a.dst);
    const Matrix& mz = m.arrow(id);
    const Matrix& nz = n.arrow(id);
    for (std::size_t r = 0; r < n.dims[t]; ++r) {
      for (std::size_t c = 0; c < m.dims[s]; ++c, ++row) {
        // X_t(r,k) M(k,c)
        for (std::size_t k = 0; k < m.dims[t]; ++k) sys(row, off[t] + r * m.dims[t] + k) ^= mz(k, c);
        // N(r,k) X_s(k,c)
        for (std::size_t k = 0; k < n.dims[s]; ++k) sys(row, off[s] + k * m.dims[s] + c) ^= nz(r, k);
      }
    }
  }
  return sys;
}

HomSpace hom_space(const Representation& m, const Representation& n) {
  const Matrix sys = hom_system(m, n);
  HomSpace h;
  if (sys.cols() == 0) return h;
  for (const auto& v : kernel(m.field, sys)) h.basis.push_back(unflatten_map(m, n, v));
  return h;
}

std::size_t hom_dim(const Representation& m, const Representation& n) {
  const Matrix sys = hom_system(m, n);
  return sys.cols() - rank(m.field, sys);
}

Cover projective_cover(const Representation& m) {
  if (m.is_zero()) throw Error("zero-module", "projective cover of the zero module");
  const auto rad = radical_space(m);
  std::array<std::vector<std::size_t>, 2> gens;
  for (std::size_t u = 0; u < 2; ++u) gens[u] = complement_indices(m.field, rad.basis[u], m.dims[u]);
  std::vector<Representation> parts;
  std::vector<std::pair<int, Vec>> generators;
  for (int u = 0; u < 2; ++u) {
    const auto& proj = cached_projective(m.spec, m.field, u);
    for (auto i : gens[static_cast<std::size_t>(u)]) {
      Vec e(m.dims[static_cast<std::size_t>(u)], 0);
      e[i] = 1;
      generators.emplace_back(u, std::move(e));
      parts.push_back(proj.rep);
    }
  }
  Cover c{direct_sum(parts), {}, {gens[0].size(), gens[1].size()}};
  c.map = ModuleMap::zero(c.module, m);
  std::array<std::size_t, 2> off{0, 0};
  for (const auto& [u, gen] : generators) {
    const auto& proj = cached_projective(m.spec, m.field, u);
    place_generator(m, proj, gen, off, c.map);
    off[0] += proj.rep.dims[0];
    off[1] += proj.rep.dims[1];
  }
  return c;
}

Cover injective_hull(const Representation& m) {
  if (m.is_zero()) throw Error("zero-module", "injective hull of the zero module");
  const auto soc = socle_space(m);
  std::vector<Representation> parts;
  std::vector<ModuleMap> chosen;
  std::array<std::size_t, 2> mult{0, 0};
  for (int u = 0; u < 2; ++u) {
    const auto uu = static_cast<std::size_t>(u);
    const std::size_t s = soc.basis[uu].size();
    if (s == 0) continue;
    const auto& proj = cached_projective(m.spec, m.field, u);
    const std::size_t q = socle_index(proj);
    const HomSpace h = hom_space(m, proj.rep);
    std::vector<Vec> functionals;
    for (const auto& g : h.basis) {
      Vec phi(s, 0);
      for (std::size_t k = 0; k < s; ++k) {
        Elem acc = 0;
        for (std::size_t i = 0; i < m.dims[uu]; ++i) acc ^= m.field.mul(g.f[uu](q, i), soc.basis[uu][k][i]);
        phi[k] = acc;
      }
      functionals.push_back(phi);
      if (span_basis(m.field, functionals, s).size() < functionals.size()) {
        functionals.pop_back();
        continue;
      }
      chosen.push_back(g);
      parts.push_back(proj.rep);
      if (functionals.size() == s) break;
    }
    if (functionals.size() != s) throw Error("no-injective-extension", "socle of " + m.label + " does not embed");
    mult[uu] = s;
  }
  Cover c{direct_sum(parts), {}, mult};
  c.map = ModuleMap::zero(m, c.module);
  std::array<std::size_t, 2> off{0, 0};
  for (const auto& g : chosen) {
    for (std::size_t v = 0; v < 2; ++v) {
      c.map.f[v].set_block(off[v], 0, g.f[v]);
      off[v] += g.f[v].rows();
    }
  }
  return c;
}

Representation syzygy(const Representation& m) {
  const Cover c = projective_cover(m);
  Representation k = submodule(c.module, kernel_of(c.module, c.map)).sub;
  k.label = "Ω(" + m.label + ")";
  k.indecomposable = m.indecomposable && !k.is_zero();
  k.basis_labels = {};
  return k;
}

Representation cosyzygy(const Representation& m) {
  const Cover c = injective_hull(m);
  Representation q = quotient(c.module, image_of(c.module, c.map)).quotient;
  q.label = "Ω^-1(" + m.label + ")";
  q.indecomposable = m.indecomposable && !q.is_zero();
  q.basis_labels = {};
  return q;
}

Representation syzygy_power(const Representation& m, int k) {
  Representation cur = m;
  for (int i = 0; i < k && !cur.is_zero(); ++i) cur = syzygy(cur);
  for (int i = 0; i < -k && !cur.is_zero(); ++i) cur = cosyzygy(cur);
  return cur;
}

StableHom phom_and_stable(const Representation& m, const Representation& n) {
  require_same(m, n);
  StableHom out;
  out.hom = hom_dim(m, n);
  if (out.hom == 0 || m.is_zero() || n.is_zero()) return out;
  const Cover c = projective_cover(n);
  const HomSpace h = hom_space(m, c.module);
  std::vector<Vec> through;
  through.reserve(h.dim());
  for (const auto& g : h.basis) through.push_back(flatten_map(compose(m.field, c.map, g)));
  out.projective_sub = span_basis(m.field, through, n.dims[0] * m.dims[0] + n.dims[1] * m.dims[1]);
  out.phom = out.projective_sub.size();
  out.stable = out.hom - out.phom;
  return out;
}

std::size_t stable_end_dim(const Representation& m) { return phom_and_stable(m, m).stable; }

std::size_t ext1_dim(const Representation& m, const Representation& n) {
  if (m.is_zero() || n.is_zero()) return 0;
  const Representation om = syzygy(m);
  if (om.is_zero()) return 0;
  return phom_and_stable(om, n).stable;
}

std::string to_string(IsoMode mode) {
  switch (mode) {
    case IsoMode::fingerprint: return "fingerprint";
    case IsoMode::basis_scan: return "basis-scan";
    case IsoMode::exhaustive: return "exhaustive";
    case IsoMode::random: return "random";
  }
  return "?";
}

IsoResult is_isomorphic_detail(const Representation& m, const Representation& n) {
  require_same(m, n);
  if (m.dims != n.dims) return {false, IsoMode::fingerprint, true};
  if (m.is_zero()) return {true, IsoMode::fingerprint, true};
  const HomSpace h = hom_space(m, n);
  if (h.dim() == 0) return {false, IsoMode::fingerprint, true};
  if (hom_dim(n, m) != h.dim() || hom_dim(m, m) != h.dim() || hom_dim(n, n) != h.dim()) {
    return {false, IsoMode::fingerprint, true};
  }
  const Field& f = m.field;
  for (const auto& g : h.basis) {
    if (is_iso_map(f, g)) return {true, IsoMode::basis_scan, true};
  }
  if (m.indecomposable || n.indecomposable) return {false, IsoMode::basis_scan, true};

  const double bits = static_cast<double>(h.dim()) * f.degree();
  if (bits <= 20.0) {
    std::vector<Elem> coefs(h.dim(), 0);
    const unsigned q = f.size();
    for (;;) {
      std::size_t k = 0;
      while (k < coefs.size()) {
        if (++coefs[k] < q) break;
        coefs[k] = 0;
        ++k;
      }
      if (k == coefs.size()) break;
      if (is_iso_map(f, combine(f, h.basis, coefs))) return {true, IsoMode::exhaustive, true};
    }
    return {false, IsoMode::exhaustive, true};
  }
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<unsigned> dist(0, f.size() - 1);
  std::vector<Elem> coefs(h.dim());
  for (int trial = 0; trial < 256; ++trial) {
    for (auto& c : coefs) c = static_cast<Elem>(dist(rng));
    if (is_iso_map(f, combine(f, h.basis, coefs))) return {true, IsoMode::random, true};
  }
  return {false, IsoMode::random, false};
}

bool is_isomorphic(const Representation& m, const Representation& n) { return is_isomorphic_detail(m, n).iso; }

std::array<std::size_t, 2> projective_multiplicities(const Representation& m) {
  std::array<std::size_t, 2> out{0, 0};
  for (int u = 0; u < 2; ++u) {
    const auto uu = static_cast<std::size_t>(u);
    if (m.dims[uu] == 0) continue;
    out[uu] = rank(m.field, path_matrix(m, m.spec.socle_path(u)));
  }
  return out;
}

Stripped strip_projectives(const Representation& m) {
  Stripped s{{0, 0}, m};
  Subspace gens;
  for (int u = 0; u < 2; ++u) {
    const auto uu = static_cast<std::size_t>(u);
    if (m.dims[uu] == 0) continue;
    const Matrix sp = path_matrix(m, m.spec.socle_path(u));
    std::vector<Vec> images;
    for (std::size_t j = 0; j < m.dims[uu]; ++j) {
      images.push_back(sp.col_vec(j));
      if (span_basis(m.field, images, m.dims[uu]).size() < images.size()) {
        images.pop_back();
        continue;
      }
      Vec e(m.dims[uu], 0);
      e[j] = 1;
      gens.basis[uu].push_back(std::move(e));
    }
    s.mult[uu] = images.size();
  }
  if (s.mult[0] + s.mult[1] == 0) return s;
  const Subspace proj = generated_submodule(m, gens);
  s.rest = quotient(m, proj).quotient;
  s.rest.label = "rest(" + m.label + ")";
  s.rest.indecomposable = false;
  return s;
}

namespace {

ModuleMap map_power(const Field& f, ModuleMap g, std::size_t e) {
  ModuleMap acc{{Matrix::identity(g.f[0].rows()), Matrix::identity(g.f[1].rows())}};
  while (e != 0) {
    if (e & 1u) acc = compose(f, g, acc);
    g = compose(f, g, g);
    e >>= 1;
  }
  return acc;
}

void split_into(const Representation& m, std::vector<Representation>& out, std::mt19937_64& rng) {
  if (m.is_zero()) return;
  if (m.indecomposable) {
    out.push_back(m);
    return;
  }
  const HomSpace end = hom_space(m, m);
  if (end.dim() <= 1) {
    Representation r = m;
    r.indecomposable = true;
    out.push_back(std::move(r));
    return;
  }
  const Field& f = m.field;
  std::vector<std::vector<Elem>> trials;
  const std::size_t h = end.dim();
  for (std::size_t i = 0; i < h; ++i) {
    std::vector<Elem> c(h, 0);
    c[i] = 1;
    trials.push_back(c);
  }
  for (std::size_t i = 0; i < h && trials.size() < 400; ++i) {
    for (std::size_t j = i + 1; j < h && trials.size() < 400; ++j) {
      std::vector<Elem> c(h, 0);
      c[i] = 1;
      c[j] = 1;
      trials.push_back(c);
    }
  }
  std::uniform_int_distribution<unsigned> dist(0, f.size() - 1);
  for (int t = 0; t < 64; ++t) {
    std::vector<Elem> c(h);
    for (auto& x : c) x = static_cast<Elem>(dist(rng));
    trials.push_back(c);
  }
  for (const auto& c : trials) {
    const ModuleMap phi = map_power(f, combine(f, end.basis, c), m.dim());
    const std::size_t r = map_rank(f, phi);
    if (r == 0 || r == m.dim()) continue;
    auto a = submodule(m, image_of(m, phi)).sub;
    auto b = submodule(m, kernel_of(m, phi)).sub;
    a.label = m.label + "/im";
    b.label = m.label + "/ker";
    split_into(a, out, rng);
    split_into(b, out, rng);
    return;
  }
  out.push_back(m);
}

// Basis-free data shared by a module and its word: dims, then ranks of each arrow, then ranks
// of each two-letter path xy (x after y). On M(C) and M(B,λ,m) these ranks count letters and
// length-2 factors of direct runs, times m for bands.
using Signature = std::vector<std::size_t>;

std::size_t path_slot(int x, int y) { return static_cast<std::size_t>(x * 4 + y); }

Signature word_signature(const Word& w, bool band) {
  Signature sig(2 + 4 + 16, 0);
  const std::size_t n = band ? w.size() : w.size() + 1;
  for (std::size_t j = 0; j < n; ++j) ++sig[static_cast<std::size_t>(w.vertex_at(j))];
  const auto& ls = w.letters();
  for (const auto& l : ls) ++sig[2 + static_cast<std::size_t>(l.arrow)];
  const std::size_t pairs = band ? ls.size() : (ls.empty() ? 0 : ls.size() - 1);
  for (std::size_t j = 0; j < pairs; ++j) {
    const Letter& p = ls[j];
    const Letter& q = ls[(j + 1) % ls.size()];
    if (p.inverse != q.inverse) continue;
    sig[6 + (p.inverse ? path_slot(q.arrow, p.arrow) : path_slot(p.arrow, q.arrow))] += 1;
  }
  return sig;
}

Signature module_signature(const Representation& m) {
  Signature sig(2 + 4 + 16, 0);
  sig[0] = m.dims[0];
  sig[1] = m.dims[1];
  const int arrows = m.spec.num_arrows();
  for (int x = 0; x < arrows; ++x) sig[2 + static_cast<std::size_t>(x)] = rank(m.field, m.arrow(x));
  for (int x = 0; x < arrows; ++x) {
    for (int y = 0; y < arrows; ++y) {
      if (kArrows[static_cast<std::size_t>(y)].dst != kArrows[static_cast<std::size_t>(x)].src) continue;
      const std::string path{kArrows[static_cast<std::size_t>(x)].name, kArrows[static_cast<std::size_t>(y)].name};
      sig[6 + path_slot(x, y)] = rank(m.field, path_matrix(m, path));
    }
  }
  return sig;
}

struct CandidateIndex {
  std::size_t maxlen = 0;
  std::map<Signature, std::vector<Word>> strings;
  std::map<Signature, std::vector<Word>> bands;
};

struct CandidateCache {
  std::mutex mu;
  std::map<std::tuple<int, int, int>, std::shared_ptr<const CandidateIndex>> index;
};

// Enumerated up to at least maxlen; lengths grow in steps of 4 to limit re-enumeration.
std::shared_ptr<const CandidateIndex> candidates(const AlgebraSpec& spec, std::size_t maxlen) {
  static CandidateCache cache;
  std::lock_guard<std::mutex> lock(cache.mu);
  const auto key = std::make_tuple(spec.family(), spec.c(), spec.d());
  auto it = cache.index.find(key);
  if (it != cache.index.end() && it->second->maxlen >= maxlen) return it->second;
  auto idx = std::make_shared<CandidateIndex>();
  idx->maxlen = (maxlen + 3) / 4 * 4;
  for (const auto& w : enumerate(spec, WordKind::strings, idx->maxlen)) idx->strings[word_signature(w, false)].push_back(w);
  for (const auto& w : enumerate(spec, WordKind::bands, idx->maxlen)) idx->bands[word_signature(w, true)].push_back(w);
  cache.index[key] = idx;
  return idx;
}

}  // namespace

std::vector<Representation> decompose(const Representation& m) {
  std::mt19937_64 rng(0xdec0ULL);
  std::vector<Representation> out;
  split_into(m, out, rng);
  return out;
}

std::string Piece::label() const {
  if (kind == Kind::string) return "M(" + word.str() + ")";
  return "M(" + word.str() + ";λ=" + std::to_string(lambda) + ";m=" + std::to_string(multiplicity) + ")";
}

std::string Recognition::label() const {
  std::string s;
  auto append = [&](const std::string& x) {
    if (!s.empty()) s += " + ";
    s += x;
  };
  for (int u = 0; u < 2; ++u) {
    const auto k = projectives[static_cast<std::size_t>(u)];
    if (k == 1) append("P" + std::to_string(u));
    if (k > 1) append("P" + std::to_string(u) + "^" + std::to_string(k));
  }
  for (const auto& p : pieces) append(p.label());
  return s.empty() ? "0" : s;
}

Representation build_piece(const Piece& p, const AlgebraSpec& spec, const Field& field) {
  if (p.kind == Piece::Kind::string) return string_module(p.word, spec, field);
  return band_module(p.word, p.lambda, p.multiplicity, spec, field);
}

std::optional<Piece> recognize_indecomposable(const Representation& m, std::size_t maxlen) {
  if (m.is_zero()) return std::nullopt;
  maxlen = std::min(maxlen, m.dim());
  const auto idx = candidates(m.spec, maxlen);
  const Signature sig = module_signature(m);
  auto matches = [&](const Piece& p) { return is_isomorphic(build_piece(p, m.spec, m.field), m); };
  if (auto it = idx->strings.find(sig); it != idx->strings.end()) {
    for (const auto& w : it->second) {
      if (w.size() > maxlen) continue;
      Piece p{Piece::Kind::string, w, 0, 1};
      if (matches(p)) return p;
    }
  }
  for (std::size_t mult = 1; mult <= m.dim(); ++mult) {
    if (std::any_of(sig.begin(), sig.end(), [&](std::size_t v) { return v % mult != 0; })) continue;
    Signature unit = sig;
    for (auto& v : unit) v /= mult;
    auto it = idx->bands.find(unit);
    if (it == idx->bands.end()) continue;
    for (const auto& w : it->second) {
      if (w.size() > maxlen) continue;
      for (Elem lambda : m.field.units()) {
        Piece p{Piece::Kind::band, w, lambda, mult};
        if (matches(p)) return p;
      }
    }
  }
  return std::nullopt;
}

Recognition recognize(const Representation& m, std::size_t maxlen) {
  Recognition r;
  const Stripped s = strip_projectives(m);
  r.projectives = s.mult;
  for (const auto& piece : decompose(s.rest)) {
    auto p = recognize_indecomposable(piece, maxlen);
    if (!p) {
      throw Error("unrecognized", "no string or band of length <= " + std::to_string(maxlen) + " matches a summand of " +
                                      m.label + " with dims " + dims_str(piece.dims));
    }
    r.pieces.push_back(*p);
  }
  std::sort(r.pieces.begin(), r.pieces.end(), [](const Piece& a, const Piece& b) {
    return std::tie(a.kind, a.word, a.lambda, a.multiplicity) < std::tie(b.kind, b.word, b.lambda, b.multiplicity);
  });
  return r;
}

}  // namespace strang
