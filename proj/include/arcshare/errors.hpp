#pragma once

#include <stdexcept>
#include <string>

namespace arcshare {

// Error taxonomy shared by every module. Each failure mode of the public
// API maps to exactly one code so callers (and the CLI exit-code logic)
// can dispatch without parsing messages.
enum class Errc {
    NotPrime,
    ReducibleModulus,
    SpecMismatch,
    DivisionByZero,
    DimensionMismatch,
    ZeroVector,
    TooFewPoints,
    BadDimension,
    ZeroColumn,
    BadColumnIndex,
    BadIndex,
    BadThreshold,
    NotAPartition,
    Degenerate,
    EmptyUpper,
    TooLarge,
    SizeMismatch,
    UnverifiedScheme,
    InconsistentShares,
    UnsupportedOrder,
    ParityMismatch,
    NotAnArc,
    NoExternalLine,
    VerificationFailed,
    BadInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace arcshare
