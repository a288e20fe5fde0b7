#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "kreg/bounds.hpp"

namespace kreg {

enum class FamilyKind { ci, artinian_monomial, ci_plus_redundant, determinantal_cm, module_over_zero_dim };

inline constexpr std::array<FamilyKind, 5> kAllFamilies = {FamilyKind::ci, FamilyKind::artinian_monomial,
                                                           FamilyKind::ci_plus_redundant, FamilyKind::determinantal_cm,
                                                           FamilyKind::module_over_zero_dim};

std::string_view family_name(FamilyKind kind);
std::optional<FamilyKind> parse_family(std::string_view name);

/// Size limits for generated cases.  determinantal-cm always uses 4 variables.
struct FamilySpec {
  FamilyKind kind = FamilyKind::ci;
  int max_vars = 3;
  int max_deg = 3;
  std::uint32_t characteristic = kDefaultCharacteristic;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Retries allowed per case before giving up on degenerate draws.
inline constexpr int kMaxRetries = 50;

/// Seeded source with portable integer draws (the standard distributions
/// are implementation-defined, the engine is not).
class CaseRng {
 public:
  explicit CaseRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  Coeff nonzero(const PrimeField& F) { return static_cast<Coeff>(uniform(1, F.characteristic() - 1)); }

 private:
  std::mt19937_64 engine_;
};

/// Random homogeneous form of degree d with every coefficient nonzero.
Polynomial dense_form(const Ring& ring, int d, CaseRng& rng);

/// Deterministic in (spec, seed); case i of a larger count equals case i of a
/// smaller one.  Throws GenerationError when a case needs more than
/// kMaxRetries draws, std::invalid_argument on unusable limits.
std::vector<TheoremCase> generate_family(const FamilySpec& spec, std::uint64_t seed, int count);

}  // namespace kreg
