#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "strang/field.hpp"

namespace strang {

enum class CheckStatus { pass, fail, skip };
std::string to_string(CheckStatus s);

/// kind: "claim" for a stated result, "oracle" for agreement of two independent computations,
/// "structural" for internal consistency. anchor: a stable descriptive claim id.
struct Check {
  std::string id;
  std::string anchor;
  CheckStatus status = CheckStatus::pass;
  std::string observed;
  std::string expected;
  std::string kind = "claim";
  std::string note;
};

struct CheckReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Check> checks;
  /// No failing check and at least one check.
  bool pass() const;
  std::size_t count(CheckStatus s) const;
};

/// Parameters common to the suites. `corrupt` builds every module over the algebra with c
/// flipped while the expectations keep the stated c.
struct SuiteParams {
  int family = 2;
  int c = 0;
  int d = 3;
  Field field = Field::gf(2);
  std::size_t maxlen = 8;
  std::size_t nmax = 1;
  bool corrupt = false;
};

/// Uniserial bricks, stable End of the S^{(λ)} family and of M(C_{2,n}), Ext^1 values, and
/// m=2 band modules.
CheckReport suite_stablend(const SuiteParams& p);
/// Ω-periods, Ω^{-2}(S_001) ≅ S_100 and the action of Ω on the S^{(λ)} family.
CheckReport suite_omega(const SuiteParams& p);
/// Towers V_{λ,n} = M(αC_010, λ, n) for n <= nmax and λ = `lambda`.
CheckReport suite_towers(const SuiteParams& p, Elem lambda);
/// Nilpotency of U_bar, Ext^1(U_bar, S_1), the sequences 0 → M(C_n) → P_0^n ⊕ M(α) → M(C_n) → 0.
CheckReport suite_mod2_and_ses(const SuiteParams& p);
/// Admissible-triple counts against intertwiner kernels for all string pairs up to maxlen.
CheckReport suite_krause(const SuiteParams& p);
/// Relations on strings (|C| <= maxlen), bands (|B| <= maxlen-2, m <= 2) and projectives.
CheckReport suite_relations(const SuiteParams& p);
/// Tubes and the sectional path through S_0 in the stable AR quiver.
CheckReport suite_ar(const SuiteParams& p);
/// p_d for 3 <= d <= dmax; Chebyshev oracle up to min(dmax, 8).
CheckReport suite_pd(int dmax);

/// Suite names accepted by run_suite, in output order.
const std::vector<std::string>& suite_names();
/// Throws Error("unknown-suite").
CheckReport run_suite(const std::string& name, const SuiteParams& p);

/// The `verify --all` matrix: every suite over (family, c, d in {3,4}) within the size caps,
/// run on at most STRANG_THREADS threads, sorted by (suite, params).
std::vector<CheckReport> run_all(std::size_t maxlen_cap = 10);

/// STRANG_THREADS, else hardware concurrency (at least 1).
std::size_t thread_budget();

/// Runs jobs[i] on up to `threads` workers; results keep job order.
template <class T>
std::vector<T> run_parallel(const std::vector<std::function<T()>>& jobs, std::size_t threads);

}  // namespace strang

#include "strang/detail/parallel.hpp"
