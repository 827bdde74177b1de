#include "strang/projective.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace strang {

namespace {

int path_end(const AlgebraSpec& spec, const std::string& p, int u) {
  return p.empty() ? u : spec.arrow(arrow_id(p.front())).dst;
}

bool path_less(const std::string& a, const std::string& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

Projective projective_module(const AlgebraSpec& spec, const Field& field, int u) {
  PathBasis pb;
  pb.vertex = u;
  std::set<std::string> seen{""};
  std::deque<std::string> queue{""};
  while (!queue.empty()) {
    const std::string p = queue.front();
    queue.pop_front();
    const int t = path_end(spec, p, u);
    for (int id = 0; id < spec.num_arrows(); ++id) {
      if (spec.arrow(id).src != t) continue;
      const std::string q = std::string(1, spec.arrow(id).name) + p;
      const auto r = spec.reduce(q);
      if (!r) continue;
      if (*r != q) pb.identifications.emplace(q, *r);
      if (seen.insert(*r).second) queue.push_back(*r);
    }
  }
  pb.paths.assign(seen.begin(), seen.end());
  std::sort(pb.paths.begin(), pb.paths.end(), path_less);

  Representation rep(spec, field);
  std::map<std::string, std::size_t> local;
  for (const auto& p : pb.paths) {
    const auto v = static_cast<std::size_t>(path_end(spec, p, u));
    local[p] = rep.dims[v]++;
    rep.basis_labels[v].push_back(p.empty() ? "e" + std::to_string(u) : p);
  }
  rep.reset_arrows();
  for (const auto& p : pb.paths) {
    const int t = path_end(spec, p, u);
    for (int id = 0; id < spec.num_arrows(); ++id) {
      if (spec.arrow(id).src != t) continue;
      const auto r = spec.reduce(std::string(1, spec.arrow(id).name) + p);
      if (!r) continue;
      rep.arrows[static_cast<std::size_t>(id)](local.at(*r), local.at(p)) ^= 1;
    }
  }
  rep.label = "P" + std::to_string(u);
  rep.kind = RepKind::projective;
  rep.indecomposable = true;
  return {std::move(rep), std::move(pb)};
}

std::size_t algebra_dim(const AlgebraSpec& spec, const Field& field) {
  return projective_module(spec, field, 0).rep.dim() + projective_module(spec, field, 1).rep.dim();
}

std::vector<SanityCheck> symmetric_sanity(const AlgebraSpec& spec, const Field& field) {
  std::vector<SanityCheck> out;
  for (int u = 0; u < 2; ++u) {
    const auto p = projective_module(spec, field, u).rep;
    const std::string tag = "P" + std::to_string(u);
    const std::array<std::size_t, 2> unit{u == 0 ? 1u : 0u, u == 1 ? 1u : 0u};
    const bool rel = check_relations(p);
    out.push_back({tag + ".relations", rel, rel ? "hold" : "violated", "hold"});
    const auto td = top_dims(p);
    out.push_back({tag + ".top", td == unit, dims_str(td), dims_str(unit)});
    const auto sd = socle_dims(p);
    out.push_back({tag + ".socle", sd == unit, dims_str(sd), dims_str(unit)});
    const auto rl = radical_length(p);
    const auto expect = static_cast<std::size_t>(spec.expected_radical_length(u));
    out.push_back({tag + ".radical_length", rl == expect, std::to_string(rl), std::to_string(expect)});
  }
  return out;
}

}  // namespace strang
