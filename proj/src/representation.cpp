#include "strang/representation.hpp"

#include <algorithm>

namespace strang {

void Representation::reset_arrows() {
  arrows.clear();
  for (int id = 0; id < spec.num_arrows(); ++id) {
    const auto& a = spec.arrow(id);
    arrows.emplace_back(dims[static_cast<std::size_t>(a.dst)], dims[static_cast<std::size_t>(a.src)]);
  }
}

ModuleMap ModuleMap::zero(const Representation& m, const Representation& n) {
  return {{Matrix(n.dims[0], m.dims[0]), Matrix(n.dims[1], m.dims[1])}};
}

ModuleMap ModuleMap::identity(const Representation& m) {
  return {{Matrix::identity(m.dims[0]), Matrix::identity(m.dims[1])}};
}

ModuleMap compose(const Field& field, const ModuleMap& g, const ModuleMap& f) {
  return {{mul(field, g.f[0], f.f[0]), mul(field, g.f[1], f.f[1])}};
}

ModuleMap add(const ModuleMap& a, const ModuleMap& b) { return {{add(a.f[0], b.f[0]), add(a.f[1], b.f[1])}}; }

ModuleMap scale(const Field& field, Elem c, const ModuleMap& a) {
  return {{scale(field, c, a.f[0]), scale(field, c, a.f[1])}};
}

bool is_intertwiner(const Representation& m, const Representation& n, const ModuleMap& f) {
  for (std::size_t u = 0; u < 2; ++u) {
    if (f.f[u].rows() != n.dims[u] || f.f[u].cols() != m.dims[u]) return false;
  }
  for (int id = 0; id < m.spec.num_arrows(); ++id) {
    const auto& a = m.spec.arrow(id);
    const auto s = static_cast<std::size_t>(a.src);
    const auto t = static_cast<std::size_t>(a.dst);
    if (!(mul(m.field, f.f[t], m.arrow(id)) == mul(m.field, n.arrow(id), f.f[s]))) return false;
  }
  return true;
}

std::size_t map_rank(const Field& field, const ModuleMap& f) { return rank(field, f.f[0]) + rank(field, f.f[1]); }

Matrix flatten(const ModuleMap& f) { return diag(f.f[0], f.f[1]); }

Matrix path_matrix(const Representation& rep, std::string_view path) {
  int src = 0;
  if (!rep.spec.composable(path, &src)) throw Error("non-composable", "path '" + std::string(path) + "'");
  Matrix acc = Matrix::identity(rep.dims[static_cast<std::size_t>(src)]);
  for (auto it = path.rbegin(); it != path.rend(); ++it) acc = mul(rep.field, rep.arrow(arrow_id(*it)), acc);
  return acc;
}

bool check_relations(const Representation& rep) {
  for (const auto& rel : rep.spec.relations()) {
    const Matrix lhs = path_matrix(rep, rel.lhs);
    if (rel.coef == 0) {
      if (!lhs.is_zero()) return false;
    } else if (!(lhs == path_matrix(rep, rel.rhs))) {
      return false;
    }
  }
  return true;
}

Representation zero_module(const AlgebraSpec& spec, const Field& field) {
  Representation r(spec, field);
  r.reset_arrows();
  r.label = "0";
  return r;
}

Representation string_module(const Word& w, const AlgebraSpec& spec, const Field& field) {
  if (!is_string(w, spec)) throw Error("invalid-string", "'" + w.str() + "' is not a string");
  Representation r(spec, field);
  const std::size_t n = w.size();
  std::vector<std::size_t> loc(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const auto v = static_cast<std::size_t>(w.vertex_at(j));
    loc[j] = r.dims[v]++;
    r.basis_labels[v].push_back("z" + std::to_string(j));
  }
  r.reset_arrows();
  for (std::size_t k = 1; k <= n; ++k) {
    const Letter& l = w[k];
    Matrix& m = r.arrows[static_cast<std::size_t>(l.arrow)];
    if (!l.inverse) {
      m(loc[k - 1], loc[k]) ^= 1;
    } else {
      m(loc[k], loc[k - 1]) ^= 1;
    }
  }
  r.label = "M(" + w.str() + ")";
  r.kind = RepKind::string;
  r.indecomposable = true;
  return r;
}

Representation band_module(const Word& w, Elem lambda, std::size_t m, const AlgebraSpec& spec, const Field& field) {
  if (lambda == 0 || !field.valid(lambda)) throw Error("zero-division", "band parameter must be a nonzero field element");
  if (m == 0) throw Error("bad-multiplicity", "band multiplicity must be positive");
  if (!is_band(w, spec)) throw Error("invalid-band", "'" + w.str() + "' is not a band");
  Representation r(spec, field);
  const std::size_t n = w.size();
  std::vector<std::size_t> loc(n * m);
  auto at = [&](std::size_t j, std::size_t jp) { return loc[(j % n) * m + jp]; };
  for (std::size_t j = 0; j < n; ++j) {
    const auto v = static_cast<std::size_t>(w.vertex_at(j));
    for (std::size_t jp = 0; jp < m; ++jp) {
      loc[j * m + jp] = r.dims[v]++;
      r.basis_labels[v].push_back("z" + std::to_string(j) + "," + std::to_string(jp + 1));
    }
  }
  r.reset_arrows();
  const Elem lambda_inv = field.inv(lambda);
  int seams = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const Letter& l = w[k];
    Matrix& mat = r.arrows[static_cast<std::size_t>(l.arrow)];
    // direct: z_k -> z_{k-1}; inverse: z_{k-1} -> z_k (indices mod n)
    const std::size_t from = l.inverse ? k - 1 : k;
    const std::size_t to = l.inverse ? k : k - 1;
    for (std::size_t jp = 0; jp < m; ++jp) {
      if (k == 1) {
        mat(at(to, jp), at(from, jp)) ^= l.inverse ? lambda_inv : lambda;
        if (jp + 1 < m) mat(at(to, jp + 1), at(from, jp)) ^= 1;
      } else {
        mat(at(to, jp), at(from, jp)) ^= 1;
      }
    }
    if (k == 1) ++seams;
  }
  if (seams != 1) throw Error("internal", "band seam rule fired " + std::to_string(seams) + " times");
  r.label = "M(" + w.str() + ";λ=" + std::to_string(lambda) + ";m=" + std::to_string(m) + ")";
  r.kind = RepKind::band;
  r.indecomposable = true;
  return r;
}

Representation simple_module(const AlgebraSpec& spec, const Field& field, int u) {
  Representation r = string_module(Word::empty(u), spec, field);
  r.label = "S_" + std::to_string(u);
  return r;
}

Representation direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw Error("empty-sum", "direct sum of no modules needs an algebra");
  Representation r(parts.front().spec, parts.front().field);
  r.reset_arrows();
  std::string label;
  for (const auto& p : parts) {
    if (!(p.spec == r.spec) || !(p.field == r.field)) throw Error("mixed-spec", "direct sum across algebras or fields");
    for (int id = 0; id < r.spec.num_arrows(); ++id) {
      auto& dst = r.arrows[static_cast<std::size_t>(id)];
      dst = diag(dst, p.arrow(id));
    }
    for (std::size_t u = 0; u < 2; ++u) {
      r.dims[u] += p.dims[u];
      for (const auto& b : p.basis_labels[u]) r.basis_labels[u].push_back(b);
    }
    if (p.is_zero()) continue;
    if (!label.empty()) label += " + ";
    label += p.label;
  }
  r.label = label.empty() ? "0" : label;
  r.indecomposable = parts.size() == 1 && parts.front().indecomposable;
  if (r.basis_labels[0].size() != r.dims[0] || r.basis_labels[1].size() != r.dims[1]) r.basis_labels = {};
  return r;
}

namespace {

Matrix columns(const std::vector<Vec>& vs, std::size_t n) { return Matrix::from_columns(vs, n); }

std::vector<Vec> as_columns(const Matrix& m) {
  std::vector<Vec> out;
  out.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.col_vec(c));
  return out;
}

}  // namespace

Subspace generated_submodule(const Representation& rep, const Subspace& gens) {
  Subspace cur;
  for (std::size_t u = 0; u < 2; ++u) cur.basis[u] = span_basis(rep.field, gens.basis[u], rep.dims[u]);
  for (;;) {
    Subspace next = cur;
    for (int id = 0; id < rep.spec.num_arrows(); ++id) {
      const auto& a = rep.spec.arrow(id);
      const auto s = static_cast<std::size_t>(a.src);
      const auto t = static_cast<std::size_t>(a.dst);
      for (const auto& v : cur.basis[s]) next.basis[t].push_back(mul(rep.field, rep.arrow(id), v));
    }
    bool grew = false;
    for (std::size_t u = 0; u < 2; ++u) {
      next.basis[u] = span_basis(rep.field, next.basis[u], rep.dims[u]);
      grew = grew || next.basis[u].size() != cur.basis[u].size();
    }
    cur = std::move(next);
    if (!grew) return cur;
  }
}

SubResult submodule(const Representation& rep, const Subspace& sub) {
  Representation r(rep.spec, rep.field);
  std::array<Matrix, 2> incl;
  for (std::size_t u = 0; u < 2; ++u) {
    r.dims[u] = sub.basis[u].size();
    incl[u] = columns(sub.basis[u], rep.dims[u]);
  }
  r.reset_arrows();
  const std::array<LinearSolver, 2> solvers{LinearSolver(rep.field, incl[0]), LinearSolver(rep.field, incl[1])};
  for (std::size_t u = 0; u < 2; ++u) {
    if (solvers[u].rank() != r.dims[u]) throw Error("not-independent", "subspace basis is linearly dependent");
  }
  for (int id = 0; id < rep.spec.num_arrows(); ++id) {
    const auto& a = rep.spec.arrow(id);
    const auto s = static_cast<std::size_t>(a.src);
    const auto t = static_cast<std::size_t>(a.dst);
    Matrix& out = r.arrows[static_cast<std::size_t>(id)];
    for (std::size_t c = 0; c < r.dims[s]; ++c) {
      const Vec img = mul(rep.field, rep.arrow(id), sub.basis[s][c]);
      const auto x = solvers[t].solve(img);
      if (!x) throw Error("not-invariant", "subspace is not closed under arrow " + std::string(1, a.name));
      for (std::size_t k = 0; k < r.dims[t]; ++k) out(k, c) = (*x)[k];
    }
  }
  r.label = "sub(" + rep.label + ")";
  return {std::move(r), ModuleMap{{incl[0], incl[1]}}};
}

QuotientResult quotient(const Representation& rep, const Subspace& sub) {
  Representation r(rep.spec, rep.field);
  std::array<Matrix, 2> proj;
  std::array<std::vector<std::size_t>, 2> comp;
  for (std::size_t u = 0; u < 2; ++u) {
    const std::size_t n = rep.dims[u];
    const auto basis = span_basis(rep.field, sub.basis[u], n);
    std::vector<char> pivot(n, 0);
    for (const auto& v : basis) {
      const auto it = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
      pivot[static_cast<std::size_t>(it - v.begin())] = 1;
    }
    std::vector<Vec> full = basis;
    for (std::size_t i = 0; i < n; ++i) {
      if (pivot[i]) continue;
      comp[u].push_back(i);
      Vec e(n, 0);
      e[i] = 1;
      full.push_back(std::move(e));
    }
    const auto inv = inverse(rep.field, columns(full, n));
    if (!inv) throw Error("internal", "complement construction failed");
    r.dims[u] = comp[u].size();
    proj[u] = inv->block(basis.size(), 0, comp[u].size(), n);
  }
  r.reset_arrows();
  for (int id = 0; id < rep.spec.num_arrows(); ++id) {
    const auto& a = rep.spec.arrow(id);
    const auto s = static_cast<std::size_t>(a.src);
    const auto t = static_cast<std::size_t>(a.dst);
    const Matrix lifted = rep.arrow(id).select_cols(comp[s]);
    r.arrows[static_cast<std::size_t>(id)] = mul(rep.field, proj[t], lifted);
  }
  r.label = "quot(" + rep.label + ")";
  return {std::move(r), ModuleMap{{proj[0], proj[1]}}};
}

Subspace kernel_of(const Representation& m, const ModuleMap& f) {
  Subspace k;
  for (std::size_t u = 0; u < 2; ++u) {
    if (f.f[u].rows() == 0) {
      for (std::size_t i = 0; i < m.dims[u]; ++i) {
        Vec e(m.dims[u], 0);
        e[i] = 1;
        k.basis[u].push_back(std::move(e));
      }
    } else {
      k.basis[u] = kernel(m.field, f.f[u]);
    }
  }
  return k;
}

Subspace image_of(const Representation& n, const ModuleMap& f) {
  Subspace im;
  for (std::size_t u = 0; u < 2; ++u) im.basis[u] = span_basis(n.field, as_columns(f.f[u]), n.dims[u]);
  return im;
}

Subspace radical_space(const Representation& rep) {
  Subspace rad;
  for (int id = 0; id < rep.spec.num_arrows(); ++id) {
    const auto t = static_cast<std::size_t>(rep.spec.arrow(id).dst);
    for (auto& c : as_columns(rep.arrow(id))) rad.basis[t].push_back(std::move(c));
  }
  for (std::size_t u = 0; u < 2; ++u) rad.basis[u] = span_basis(rep.field, rad.basis[u], rep.dims[u]);
  return rad;
}

Subspace socle_space(const Representation& rep) {
  Subspace soc;
  for (std::size_t u = 0; u < 2; ++u) {
    Matrix stacked(0, rep.dims[u]);
    for (int id = 0; id < rep.spec.num_arrows(); ++id) {
      if (static_cast<std::size_t>(rep.spec.arrow(id).src) == u) stacked = vstack(stacked, rep.arrow(id));
    }
    if (stacked.rows() == 0) {
      for (std::size_t i = 0; i < rep.dims[u]; ++i) {
        Vec e(rep.dims[u], 0);
        e[i] = 1;
        soc.basis[u].push_back(std::move(e));
      }
    } else {
      soc.basis[u] = kernel(rep.field, stacked);
    }
  }
  return soc;
}

Representation radical(const Representation& rep) {
  auto r = submodule(rep, radical_space(rep)).sub;
  r.label = "rad " + rep.label;
  return r;
}

Representation socle(const Representation& rep) {
  auto r = submodule(rep, socle_space(rep)).sub;
  r.label = "soc " + rep.label;
  return r;
}

Representation top(const Representation& rep) {
  auto r = quotient(rep, radical_space(rep)).quotient;
  r.label = "top " + rep.label;
  return r;
}

std::array<std::size_t, 2> top_dims(const Representation& rep) {
  const auto rad = radical_space(rep);
  return {rep.dims[0] - rad.basis[0].size(), rep.dims[1] - rad.basis[1].size()};
}

std::array<std::size_t, 2> socle_dims(const Representation& rep) {
  const auto soc = socle_space(rep);
  return {soc.basis[0].size(), soc.basis[1].size()};
}

std::size_t radical_length(const Representation& rep) {
  Subspace cur;
  for (std::size_t u = 0; u < 2; ++u) {
    for (std::size_t i = 0; i < rep.dims[u]; ++i) {
      Vec e(rep.dims[u], 0);
      e[i] = 1;
      cur.basis[u].push_back(std::move(e));
    }
  }
  std::size_t layers = 0;
  while (cur.dim() != 0) {
    ++layers;
    Subspace next;
    for (int id = 0; id < rep.spec.num_arrows(); ++id) {
      const auto& a = rep.spec.arrow(id);
      for (const auto& v : cur.basis[static_cast<std::size_t>(a.src)]) {
        next.basis[static_cast<std::size_t>(a.dst)].push_back(mul(rep.field, rep.arrow(id), v));
      }
    }
    for (std::size_t u = 0; u < 2; ++u) next.basis[u] = span_basis(rep.field, next.basis[u], rep.dims[u]);
    cur = std::move(next);
  }
  return layers;
}

std::string dims_str(const std::array<std::size_t, 2>& d) {
  return "(" + std::to_string(d[0]) + "," + std::to_string(d[1]) + ")";
}

}  // namespace strang
