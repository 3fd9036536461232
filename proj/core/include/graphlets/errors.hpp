#pragma once

#include <stdexcept>
#include <string>

namespace graphlets {

/// Error categories, mapped to CLI exit codes (input=2, numerical=3, refused=4).
enum class ErrorKind { Input, Numerical, Refused };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), kind_(kind), name_(std::move(name)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

private:
  ErrorKind kind_;
  std::string name_;
};

struct IsolatedVertex : Error {
  explicit IsolatedVertex(long long id)
      : Error(ErrorKind::Input, "IsolatedVertex", "vertex " + std::to_string(id) + " has no incident edge") {}
};

struct NegativeWeight : Error {
  explicit NegativeWeight(const std::string& what) : Error(ErrorKind::Input, "NegativeWeight", what) {}
};

struct ConflictingWeight : Error {
  explicit ConflictingWeight(const std::string& what) : Error(ErrorKind::Input, "ConflictingWeight", what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(ErrorKind::Input, "ParseError", what) {}
};

struct RefinementTooLarge : Error {
  explicit RefinementTooLarge(const std::string& what) : Error(ErrorKind::Refused, "RefinementTooLarge", what) {}
};

struct ExactModeTooLarge : Error {
  explicit ExactModeTooLarge(const std::string& what) : Error(ErrorKind::Refused, "ExactModeTooLarge", what) {}
};

struct VertexCountMismatch : Error {
  explicit VertexCountMismatch(const std::string& what) : Error(ErrorKind::Input, "VertexCountMismatch", what) {}
};

struct InvalidPartition : Error {
  explicit InvalidPartition(const std::string& what) : Error(ErrorKind::Input, "InvalidPartition", what) {}
};

struct InvalidSplit : Error {
  explicit InvalidSplit(const std::string& what) : Error(ErrorKind::Input, "InvalidSplit", what) {}
};

struct DegeneratePart : Error {
  explicit DegeneratePart(const std::string& what) : Error(ErrorKind::Refused, "DegeneratePart", what) {}
};

struct NotConnected : Error {
  explicit NotConnected(const std::string& what) : Error(ErrorKind::Refused, "NotConnected", what) {}
};

struct SpectralGapTooSmall : Error {
  explicit SpectralGapTooSmall(const std::string& what) : Error(ErrorKind::Refused, "SpectralGapTooSmall", what) {}
};

struct BalanceNotBracketed : Error {
  explicit BalanceNotBracketed(const std::string& what) : Error(ErrorKind::Numerical, "BalanceNotBracketed", what) {}
};

struct ProbabilityOverflow : Error {
  explicit ProbabilityOverflow(const std::string& what) : Error(ErrorKind::Input, "ProbabilityOverflow", what) {}
};

struct IsolationRetryExhausted : Error {
  explicit IsolationRetryExhausted(const std::string& what)
      : Error(ErrorKind::Numerical, "IsolationRetryExhausted", what) {}
};

struct NumericalFailure : Error {
  explicit NumericalFailure(const std::string& what) : Error(ErrorKind::Numerical, "NumericalFailure", what) {}
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& what) : Error(ErrorKind::Input, "InvalidArgument", what) {}
};

struct SizeTooSmall : Error {
  explicit SizeTooSmall(const std::string& what) : Error(ErrorKind::Input, "SizeTooSmall", what) {}
};

struct NeedTwoSizes : Error {
  explicit NeedTwoSizes(const std::string& what) : Error(ErrorKind::Input, "NeedTwoSizes", what) {}
};

}  // namespace graphlets
