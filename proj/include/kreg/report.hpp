#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "kreg/bounds.hpp"
#include "kreg/families.hpp"

namespace kreg {

inline constexpr int kSchemaVersion = 1;

/// A case file that could not be turned into a case.  Syntax errors cover
/// malformed JSON, missing or mistyped fields and unparsable polynomials;
/// semantic errors cover well-formed input that describes an invalid case.
class CaseFileError : public std::runtime_error {
 public:
  enum class Kind { syntax, semantic };
  CaseFileError(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

struct CaseFile {
  TheoremCase theorem_case;
  std::optional<BoundKind> theorem;
  std::optional<int> d_max;
  std::optional<std::uint64_t> seed;
};

CaseFile parse_case_file(std::string_view text);
nlohmann::json case_file_json(const TheoremCase& c, std::optional<BoundKind> theorem);

nlohmann::json ring_json(const Ring& ring);
/// {"twists": [...], "relations": [[...], ...]}, one inner list per relation column.
nlohmann::json module_json(const ModulePresentation& M);
/// {"entries": [[i, j, b], ...]} in (i, j) order.
nlohmann::json betti_json(const BettiTable& B);
nlohmann::json hilbert_json(const HilbertFunction& hf);
/// Integer, or "-inf" for nullopt.
nlohmann::json reg_json(std::optional<int> reg);

nlohmann::json report_json(const BoundReport& rep, const TheoremCase& c);

/// Serialized form used for every output file: sorted keys, two-space indent,
/// trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace kreg
