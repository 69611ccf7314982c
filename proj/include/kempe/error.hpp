#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kempe {

enum class ErrorCode {
  parse_error,
  not_cubic,
  loop_edge,
  non_planar,
  inconsistent_rotation,
  no_admissible_edge,
  would_create_loop,
  stale_trace,
  not_incident,
  wrong_start_color,
  not_co_path,
  not_maximal,
  not_perfect,
  not_resolution_cycle,
  bad_move_target,
  odd_cycle,
  exclusive_chain,
  precondition,
  limits_exceeded,
  unknown_fixture,
  wrong_variable_count,
  not_proper,
  bridged,
  postulate_violation,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::not_cubic: return "NotCubic";
    case ErrorCode::loop_edge: return "LoopEdge";
    case ErrorCode::non_planar: return "NonPlanar";
    case ErrorCode::inconsistent_rotation: return "InconsistentRotation";
    case ErrorCode::no_admissible_edge: return "NoAdmissibleEdge";
    case ErrorCode::would_create_loop: return "WouldCreateLoop";
    case ErrorCode::stale_trace: return "StaleTrace";
    case ErrorCode::not_incident: return "NotIncident";
    case ErrorCode::wrong_start_color: return "WrongStartColor";
    case ErrorCode::not_co_path: return "NotCoPath";
    case ErrorCode::not_maximal: return "NotMaximal";
    case ErrorCode::not_perfect: return "NotPerfect";
    case ErrorCode::not_resolution_cycle: return "NotResolutionCycle";
    case ErrorCode::bad_move_target: return "BadMoveTarget";
    case ErrorCode::odd_cycle: return "OddCycle";
    case ErrorCode::exclusive_chain: return "ExclusiveChain";
    case ErrorCode::precondition: return "PreconditionViolation";
    case ErrorCode::limits_exceeded: return "LimitsExceeded";
    case ErrorCode::unknown_fixture: return "UnknownFixture";
    case ErrorCode::wrong_variable_count: return "WrongVariableCount";
    case ErrorCode::not_proper: return "NotProper";
    case ErrorCode::bridged: return "Bridged";
    case ErrorCode::postulate_violation: return "PostulateViolation";
  }
  return "Unknown";
}

/// Every failure raised by the library. `code()` identifies the contract that
/// was broken; the message carries the details (vertex ids, edge ids).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kempe
