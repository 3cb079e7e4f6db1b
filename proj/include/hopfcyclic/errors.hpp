#pragma once

#include <stdexcept>
#include <string>

namespace hopfcyclic {

/// Machine-readable error categories. The names match the codes printed by the CLI.
enum class ErrorCode {
  division_by_zero,
  field_mismatch,
  shape_mismatch,
  no_solution,
  not_well_defined,
  antipode_not_bijective,
  enumeration_incomplete,
  unchecked_prereq,
  version_mismatch,
  not_epimorphism,
  hypothesis_failed,
  coinvariants_too_large,
  not_galois,
  tau_not_well_defined,
  operator_escapes_subspace,
  not_cyclic,
  requires_degrees,
  resource_cap,
  representative_invalid,
  output_not_cocycle,
  parse_error,
  field_required,
  defect,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::division_by_zero: return "DIVISION_BY_ZERO";
    case ErrorCode::field_mismatch: return "FIELD_MISMATCH";
    case ErrorCode::shape_mismatch: return "SHAPE_MISMATCH";
    case ErrorCode::no_solution: return "NO_SOLUTION";
    case ErrorCode::not_well_defined: return "NOT_WELL_DEFINED";
    case ErrorCode::antipode_not_bijective: return "ANTIPODE_NOT_BIJECTIVE";
    case ErrorCode::enumeration_incomplete: return "ENUMERATION_INCOMPLETE";
    case ErrorCode::unchecked_prereq: return "UNCHECKED_PREREQ";
    case ErrorCode::version_mismatch: return "VERSION_MISMATCH";
    case ErrorCode::not_epimorphism: return "NOT_EPIMORPHISM";
    case ErrorCode::hypothesis_failed: return "HYPOTHESIS_FAILED";
    case ErrorCode::coinvariants_too_large: return "COINVARIANTS_TOO_LARGE";
    case ErrorCode::not_galois: return "NOT_GALOIS";
    case ErrorCode::tau_not_well_defined: return "TAU_NOT_WELL_DEFINED";
    case ErrorCode::operator_escapes_subspace: return "OPERATOR_ESCAPES_SUBSPACE";
    case ErrorCode::not_cyclic: return "NOT_CYCLIC";
    case ErrorCode::requires_degrees: return "REQUIRES_DEGREES";
    case ErrorCode::resource_cap: return "RESOURCE_CAP";
    case ErrorCode::representative_invalid: return "REPRESENTATIVE_INVALID";
    case ErrorCode::output_not_cocycle: return "OUTPUT_NOT_COCYCLE";
    case ErrorCode::parse_error: return "PARSE_ERROR";
    case ErrorCode::field_required: return "FIELD_REQUIRED";
    case ErrorCode::defect: return "DEFECT";
  }
  return "UNKNOWN";
}

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// The text without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace hopfcyclic
