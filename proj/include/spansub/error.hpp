#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spansub {

enum class ErrKind {
  BadParameters,
  PartitionMismatch,
  MultigraphUnsupported,
  SameVertex,
  TooSmall,
  TooLarge,
  TooWeak,
  Disconnected,
  NotStrong,
  NotSemicomplete,
  NotTournament,
  BadStartCycle,
  BadShift,
  BadK,
  BadN,
  UnknownName,
  NotFound,
  Unbalanced,
  NoPairing,
  NoViolation,
  NoPacking,
  HostNotKT,
  Exceptional,
  BudgetExhausted,
  PreconditionFailed,
  BuildingBlockRejected,
  InternalInvariantViolation,
};

const char* to_string(ErrKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, std::string msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

  ErrKind kind() const { return kind_; }

 private:
  ErrKind kind_;
};

// Raised when a named digraph admits no spanning strong bipartite subdigraph.
class ExceptionalError : public Error {
 public:
  explicit ExceptionalError(std::string name)
      : Error(ErrKind::Exceptional, name), name_(std::move(name)) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Carries the vertex partition certifying that k disjoint spanning trees
// cannot exist (fewer than k(s-1) edges cross the s parts).
class NoPackingError : public Error {
 public:
  NoPackingError(std::vector<int> part_of, int part_count)
      : Error(ErrKind::NoPacking, "no spanning tree packing; certificate attached"),
        part_of_(std::move(part_of)),
        part_count_(part_count) {}

  const std::vector<int>& part_of() const { return part_of_; }
  int part_count() const { return part_count_; }

 private:
  std::vector<int> part_of_;
  int part_count_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& msg) { throw Error(kind, msg); }

inline void require(bool cond, ErrKind kind, const std::string& msg) {
  if (!cond) fail(kind, msg);
}

}  // namespace spansub
