#include "mopdom/error.hpp"

namespace mopdom {

std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::WrongChordCount: return "WrongChordCount";
    case Errc::CrossingChords: return "CrossingChords";
    case Errc::DuplicateOrDegenerateChord: return "DuplicateOrDegenerateChord";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::NotMaximalOuterplanar: return "NotMaximalOuterplanar";
    case Errc::EmptyOrDisconnected: return "EmptyOrDisconnected";
    case Errc::ResultNotMaximalOuterplanar: return "ResultNotMaximalOuterplanar";
    case Errc::NotALeaf: return "NotALeaf";
    case Errc::PreconditionTooSmall: return "PreconditionTooSmall";
    case Errc::NoDegree3Node: return "NoDegree3Node";
    case Errc::DeviationPresent: return "DeviationPresent";
    case Errc::TooSmall: return "TooSmall";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Infeasible: return "Infeasible";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::BoundViolated: return "BoundViolated";
    case Errc::RuleMismatch: return "RuleMismatch";
    case Errc::NoRuleApplies: return "NoRuleApplies";
    case Errc::CertificationFailed: return "CertificationFailed";
    case Errc::BadParameter: return "BadParameter";
    case Errc::UnknownFixture: return "UnknownFixture";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code)
{
}

}  // namespace mopdom
