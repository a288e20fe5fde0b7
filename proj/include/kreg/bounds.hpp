#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kreg/koszul.hpp"

namespace kreg {

/// Regularity bounds for Koszul homology checked by the harness.
///
///   perfect_module   reg H_k(x;M) <= |x_1|+..+|x_{g+k}| + t_{n-g}(M) - n
///   strongly_cm      reg H_k(x)   <= |x_1|+..+|x_{g+k}| - g
///   zero_dim         reg H_k(x)   <= |x_1|+..+|x_{n+k}| - n
///   cm_quotient      reg S/I      <= |x_1|+..+|x_g| - g
///   zero_dim_module  reg H_k(x;M) <= |x_1|+..+|x_n| + t_k(M) - n,  k <= codim M
///
/// with |x_1| >= |x_2| >= ... and g = grade I.
enum class BoundKind { perfect_module, strongly_cm, zero_dim, cm_quotient, zero_dim_module };

inline constexpr std::array<BoundKind, 5> kAllBoundKinds = {
    BoundKind::perfect_module, BoundKind::strongly_cm, BoundKind::zero_dim, BoundKind::cm_quotient,
    BoundKind::zero_dim_module};

/// Identifier used in case files and reports ("thm12", "cor13", ...).
std::string_view bound_id(BoundKind kind);
std::optional<BoundKind> parse_bound_id(std::string_view id);

/// Whether the bound is about H_k(x; M) rather than H_k(x; S).
bool uses_module(BoundKind kind);

struct TheoremCase {
  std::string id;
  GeneratorList generators;
  std::optional<ModulePresentation> module;  // nullopt means M = S
  std::vector<BoundKind> theorems;

  const Ring& ring() const noexcept { return generators.ring(); }
  ModulePresentation module_or_ring() const;
  void validate() const;
};

struct PreconditionFlags {
  bool is_zero_dimensional = false;
  bool is_CM_ideal = false;
  bool is_strongly_CM = false;
  bool is_perfect_of_grade = false;  // M perfect of grade n - g
  bool finite_colength = false;      // M/IM of finite length
};

/// Flags a bound needs before a negative slack counts as a violation.
bool preconditions_hold(BoundKind kind, const PreconditionFlags& flags);

/// Homology module with its resolution and invariants.
struct HomologyData {
  ModulePresentation module;
  Resolution resolution;
  ModuleInvariants invariants;
};

/// Everything the bounds need about one case, computed on first use.
class CaseAnalysis {
 public:
  explicit CaseAnalysis(TheoremCase c);

  const TheoremCase& theorem_case() const noexcept { return case_; }
  std::size_t nvars() const noexcept { return case_.ring()->nvars(); }
  /// n - dim S/I.
  int grade() const;

  const KoszulHomology& koszul(bool over_module) const;
  const std::vector<HomologyData>& homology(bool over_module) const;
  const ModuleInvariants& module_invariants() const;
  const BettiTable& module_betti() const { return koszul(true).resolution.betti; }
  const PreconditionFlags& preconditions() const;
  /// Degreewise Hilbert functions of H_0..H_l on [d_min, d_max], cached.
  const std::vector<HilbertFunction>& oracle(bool over_module, int d_min, int d_max) const;

 private:
  struct Side {
    std::optional<KoszulHomology> koszul;
    std::optional<std::vector<HomologyData>> homology;
    std::map<std::pair<int, int>, std::vector<HilbertFunction>> oracle;
  };
  Side& side(bool over_module) const;

  TheoremCase case_;
  mutable std::optional<int> grade_;
  mutable Side ring_side_;
  mutable Side module_side_;
  mutable std::optional<ModuleInvariants> module_inv_;
  mutable std::optional<PreconditionFlags> flags_;
};

/// Value of the bound for index k; nullopt when the sum runs past l, when
/// the needed t_i(M) is -infinity, or for k != 0 with cm_quotient.
std::optional<int> bound_value(BoundKind kind, const GeneratorList& x, int n, int grade, const BettiTable& module_betti,
                               int k);

/// Duality check for the total complex D = Tot(K(x) ⊗ F) of a finite-length
/// H_k: reg H_k = -mindeg Ext^n(H_k, S) - n, and Ext^n(H_k, S) has the same
/// Hilbert function as H^{n+k}(Hom(D, S)) on a window around its support.
/// Throws PreconditionError if H_k has infinite length.
bool check_duality(const KoszulHomology& kh, const HomologyData& h, std::size_t n, int k);

struct BoundRow {
  int k = 0;
  std::optional<int> reg;    // nullopt = -infinity
  std::optional<int> bound;  // nullopt = not evaluable (see bound_value)
  std::optional<int> slack;
  bool vacuous = false;
  bool in_scope = true;
  std::optional<bool> oracle_match;
};

enum class Verdict { verified, precondition_failed, violation };
std::string_view verdict_name(Verdict v);

struct BoundReport {
  std::string case_id;
  BoundKind kind = BoundKind::zero_dim;
  PreconditionFlags flags;
  std::vector<BoundRow> rows;
  std::optional<bool> duality_checked;  // nullopt = some H_k of infinite length
  int oracle_d_min = 0;
  int oracle_d_max = 0;
  Verdict verdict = Verdict::verified;
};

struct EvalOptions {
  bool oracle = true;
  bool duality = true;
  /// Overrides the top of the oracle window (default: largest bound or reg, plus 2).
  std::optional<int> d_max;
};

BoundReport evaluate_bound(const CaseAnalysis& analysis, BoundKind kind, const EvalOptions& opts = {});

}  // namespace kreg
