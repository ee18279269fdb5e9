#pragma once

#include <stdexcept>
#include <string>

namespace wco {

// Every failure mode a caller may want to distinguish.  Contract violations
// that no caller can sensibly recover from (bad sizes, negative weights, ...)
// throw std::invalid_argument instead.
enum class Errc {
    InnerConstantTooLarge,
    NotInvertible,
    BasePointOutsideDisk,
    ParameterOutsideDisk,
    NotSelfMap,
    DegenerateComposition,
    NoFixedPointFound,
    PoleInsideDisk,
    GridDegenerate,
    ConvergenceFailure,
    DerivativeZero,
    DerivativeNotContractive,
    NoConvergence,
    DivergentKoenigsNorm,
    ParseError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace wco
