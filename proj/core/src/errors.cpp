#include "wco/errors.hpp"

namespace wco {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::InnerConstantTooLarge: return "InnerConstantTooLarge";
        case Errc::NotInvertible: return "NotInvertible";
        case Errc::BasePointOutsideDisk: return "BasePointOutsideDisk";
        case Errc::ParameterOutsideDisk: return "ParameterOutsideDisk";
        case Errc::NotSelfMap: return "NotSelfMap";
        case Errc::DegenerateComposition: return "DegenerateComposition";
        case Errc::NoFixedPointFound: return "NoFixedPointFound";
        case Errc::PoleInsideDisk: return "PoleInsideDisk";
        case Errc::GridDegenerate: return "GridDegenerate";
        case Errc::ConvergenceFailure: return "ConvergenceFailure";
        case Errc::DerivativeZero: return "DerivativeZero";
        case Errc::DerivativeNotContractive: return "DerivativeNotContractive";
        case Errc::NoConvergence: return "NoConvergence";
        case Errc::DivergentKoenigsNorm: return "DivergentKoenigsNorm";
        case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

}  // namespace wco
