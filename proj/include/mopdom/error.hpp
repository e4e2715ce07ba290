#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mopdom {

enum class Errc {
    WrongChordCount,
    CrossingChords,
    DuplicateOrDegenerateChord,
    VertexOutOfRange,
    NotMaximalOuterplanar,
    EmptyOrDisconnected,
    ResultNotMaximalOuterplanar,
    NotALeaf,
    PreconditionTooSmall,
    NoDegree3Node,
    DeviationPresent,
    TooSmall,
    TooLarge,
    Infeasible,
    OutOfRange,
    BoundViolated,
    RuleMismatch,
    NoRuleApplies,
    CertificationFailed,
    BadParameter,
    UnknownFixture,
    ParseError,
};

std::string_view to_string(Errc code) noexcept;

/// Every library failure is reported through this one exception type; the
/// code identifies which contract was violated.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail);

    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace mopdom
