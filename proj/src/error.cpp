#include "spansub/error.hpp"

namespace spansub {

const char* to_string(ErrKind k) {
  switch (k) {
    case ErrKind::BadParameters: return "BadParameters";
    case ErrKind::PartitionMismatch: return "PartitionMismatch";
    case ErrKind::MultigraphUnsupported: return "MultigraphUnsupported";
    case ErrKind::SameVertex: return "SameVertex";
    case ErrKind::TooSmall: return "TooSmall";
    case ErrKind::TooLarge: return "TooLarge";
    case ErrKind::TooWeak: return "TooWeak";
    case ErrKind::Disconnected: return "Disconnected";
    case ErrKind::NotStrong: return "NotStrong";
    case ErrKind::NotSemicomplete: return "NotSemicomplete";
    case ErrKind::NotTournament: return "NotTournament";
    case ErrKind::BadStartCycle: return "BadStartCycle";
    case ErrKind::BadShift: return "BadShift";
    case ErrKind::BadK: return "BadK";
    case ErrKind::BadN: return "BadN";
    case ErrKind::UnknownName: return "UnknownName";
    case ErrKind::NotFound: return "NotFound";
    case ErrKind::Unbalanced: return "Unbalanced";
    case ErrKind::NoPairing: return "NoPairing";
    case ErrKind::NoViolation: return "NoViolation";
    case ErrKind::NoPacking: return "NoPacking";
    case ErrKind::HostNotKT: return "HostNotKT";
    case ErrKind::Exceptional: return "Exceptional";
    case ErrKind::BudgetExhausted: return "BudgetExhausted";
    case ErrKind::PreconditionFailed: return "PreconditionFailed";
    case ErrKind::BuildingBlockRejected: return "BuildingBlockRejected";
    case ErrKind::InternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "UnknownError";
}

}  // namespace spansub
