#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace injcol {

enum class Errc {
  invalid_input,
  parse_error,
  loop,
  digon,
  budget_exceeded,
  construction_failed,
  invalid_parameters,
  invalid_size,
  round_limit_exceeded,
  invalid_independent_set,
  invalid_hcol,
  family_too_weak,
  invalid_proper_coloring,
  missing_edge_color,
  invalid_injective_coloring,
  invalid_base_coloring,
  not_adjacent,
  no_witness,
  invalid_2dipath,
  genus_too_small,
  degeneracy_exceeds_heawood,
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_input: return "invalid-input";
    case Errc::parse_error: return "parse-error";
    case Errc::loop: return "loop-error";
    case Errc::digon: return "digon-error";
    case Errc::budget_exceeded: return "budget-exceeded";
    case Errc::construction_failed: return "construction-failed";
    case Errc::invalid_parameters: return "invalid-parameters";
    case Errc::invalid_size: return "invalid-size";
    case Errc::round_limit_exceeded: return "round-limit-exceeded";
    case Errc::invalid_independent_set: return "invalid-independent-set";
    case Errc::invalid_hcol: return "invalid-hcol";
    case Errc::family_too_weak: return "family-too-weak";
    case Errc::invalid_proper_coloring: return "invalid-proper-coloring";
    case Errc::missing_edge_color: return "missing-edge-color";
    case Errc::invalid_injective_coloring: return "invalid-injective-coloring";
    case Errc::invalid_base_coloring: return "invalid-base-coloring";
    case Errc::not_adjacent: return "not-adjacent";
    case Errc::no_witness: return "no-witness";
    case Errc::invalid_2dipath: return "invalid-2dipath";
    case Errc::genus_too_small: return "genus-too-small";
    case Errc::degeneracy_exceeds_heawood: return "degeneracy-exceeds-heawood";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace injcol
