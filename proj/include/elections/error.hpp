#ifndef ELECTIONS_ERROR_HPP
#define ELECTIONS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace elections {

enum class ErrorKind {
  MissingState,
  ShareOutOfRange,
  ElectorSumMismatch,
  MalformedRow,
  DegenerateVote,
  DegenerateSample,
  RankDeficient,
  IndexOutOfRange,
  DimensionMismatch,
  TiedState,
  ExactPopularTie,
  EmptyInput,
  Io,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MissingState: return "MissingState";
    case ErrorKind::ShareOutOfRange: return "ShareOutOfRange";
    case ErrorKind::ElectorSumMismatch: return "ElectorSumMismatch";
    case ErrorKind::MalformedRow: return "MalformedRow";
    case ErrorKind::DegenerateVote: return "DegenerateVote";
    case ErrorKind::DegenerateSample: return "DegenerateSample";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::TiedState: return "TiedState";
    case ErrorKind::ExactPopularTie: return "ExactPopularTie";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` is the stable name used in
/// CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace elections

#endif
