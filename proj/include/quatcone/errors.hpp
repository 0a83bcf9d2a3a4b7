#pragma once

#include <stdexcept>
#include <string>

namespace quatcone {

enum class Errc {
  FieldMismatch,
  TowerMismatch,
  AlgebraMismatch,
  DivisionByZero,
  NilOrdering,
  NotInCone,
  NotSymmetric,
  Singular,
  EmptyInterval,
  Unsupported,
  Parse,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::FieldMismatch: return "field_mismatch";
    case Errc::TowerMismatch: return "tower_mismatch";
    case Errc::AlgebraMismatch: return "algebra_mismatch";
    case Errc::DivisionByZero: return "division_by_zero";
    case Errc::NilOrdering: return "nil_ordering";
    case Errc::NotInCone: return "not_in_cone";
    case Errc::NotSymmetric: return "not_symmetric";
    case Errc::Singular: return "singular";
    case Errc::EmptyInterval: return "empty_interval";
    case Errc::Unsupported: return "unsupported";
    case Errc::Parse: return "parse";
    case Errc::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace quatcone
