#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace strang {

/// Arrow ids: 0=α ("a", 0→0), 1=β ("b", 0→1), 2=γ ("g", 1→0), 3=η ("h", 1→1, family 2 only).
struct Arrow {
  char name;
  int src;
  int dst;
};

inline constexpr std::array<Arrow, 4> kArrows{{{'a', 0, 0}, {'b', 0, 1}, {'g', 1, 0}, {'h', 1, 1}}};

/// Arrow id for a lowercase name, or -1.
int arrow_id(char name) noexcept;

/// A relation lhs = coef * rhs between paths; coef == 0 means lhs = 0.
struct Relation {
  std::string lhs;
  unsigned coef;
  std::string rhs;
};

/// Paths are strings of arrow names in composition order: "ba" is β∘α, i.e. α then β.
/// The empty string with an explicit vertex is the trivial path.
class AlgebraSpec {
 public:
  /// Throws Error("defect-too-small") for d < 3, Error("bad-spec") for other invalid input.
  AlgebraSpec(int family, int c, int d);

  int family() const noexcept { return family_; }
  int c() const noexcept { return c_; }
  int d() const noexcept { return d_; }
  /// 2^{d-2}.
  int n() const noexcept { return 1 << (d_ - 2); }

  int num_arrows() const noexcept { return family_ == 2 ? 4 : 3; }
  const Arrow& arrow(int id) const noexcept { return kArrows[static_cast<std::size_t>(id)]; }
  bool has_arrow(int id) const noexcept { return id >= 0 && id < num_arrows(); }

  /// J_i, as paths.
  std::vector<std::string> forbidden() const;
  std::size_t max_forbidden_length() const;
  std::vector<Relation> relations() const;

  /// True when `path` is composable; its source and target are written to src/dst.
  bool composable(std::string_view path, int* src = nullptr, int* dst = nullptr) const noexcept;

  /// Normal form of a nontrivial path, or nullopt if it is zero in the algebra.
  /// Every nonzero path is a scalar-1 multiple of its normal form.
  std::optional<std::string> reduce(std::string_view path) const;

  /// The socle path of P_u.
  std::string socle_path(int u) const;

  /// Radical length of P_u as a closed formula.
  int expected_radical_length(int u) const noexcept;

  /// Same algebra with c replaced by 1-c.
  AlgebraSpec flipped() const { return AlgebraSpec(family_, 1 - c_, d_); }

  std::string name() const;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;

 private:
  int family_;
  int c_;
  int d_;
};

/// `s` repeated `k` times.
std::string repeat(std::string_view s, int k);

}  // namespace strang
