#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kmcrystal {

/// Domain error categories. The CLI prints error_name() on stderr.
enum class ErrorKind {
  DiagonalNotTwo,
  PositiveOffDiagonal,
  ZeroPatternAsymmetric,
  NotSymmetrizable,
  NotInRootLattice,
  NotAffine,
  NotFinite,
  NotDominant,
  NotAntidominant,
  NonIntegralPath,
  UnboundedInfiniteType,
  TruncationBoundary,
  OrderNotWeightMonotone,
  NotTypeA,
  DepthInsufficient,
  NotInQPlus,
  InvalidArgument,
  CacheError,
};

constexpr std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DiagonalNotTwo: return "DiagonalNotTwo";
    case ErrorKind::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case ErrorKind::ZeroPatternAsymmetric: return "ZeroPatternAsymmetric";
    case ErrorKind::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorKind::NotInRootLattice: return "NotInRootLattice";
    case ErrorKind::NotAffine: return "NotAffine";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::NotAntidominant: return "NotAntidominant";
    case ErrorKind::NonIntegralPath: return "NonIntegralPath";
    case ErrorKind::UnboundedInfiniteType: return "UnboundedInfiniteType";
    case ErrorKind::TruncationBoundary: return "TruncationBoundary";
    case ErrorKind::OrderNotWeightMonotone: return "OrderNotWeightMonotone";
    case ErrorKind::NotTypeA: return "NotTypeA";
    case ErrorKind::DepthInsufficient: return "DepthInsufficient";
    case ErrorKind::NotInQPlus: return "NotInQPlus";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::CacheError: return "CacheError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kmcrystal
