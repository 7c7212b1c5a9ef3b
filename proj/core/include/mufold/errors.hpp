#pragma once

#include <stdexcept>
#include <string>

namespace mufold {

// Every failure the library can signal, tagged so the CLI can map it to a
// stable exit code and a machine-readable error field.
enum class ErrorCode {
    SyntaxError,        // malformed expression text
    UnknownVariable,    // identifier outside the expression alphabet
    NotDivisible,       // exact polynomial division left a remainder
    DegenerateInput,    // resultant of two polynomials constant in the eliminated variable
    NotSolvable,        // first unfolding coordinate has no unit linear part in x
    TruncationTooSmall, // series order unstable under raising the truncation bound
    KTooSmall,          // exponent count below 2
    KTooLarge,          // exponent count above sigma(m)+1
    PrimeNeedsK2,       // prime multiplicity admits only two characteristic exponents
    NotPrimitive,       // parametrization is a multiple cover
    SharedBranch,       // two parametrizations of the same branch
    NonIsolated,        // resultant of the partials vanishes for every shear
    NoConvergence,      // shear sweep exhausted without two matching values
    NonInteger,         // weighted Milnor formula did not divide
    InfiniteCrossCaps,  // ramification ideal has positive-dimensional zero set
    IdenticallyZero,    // double point resultant vanished: not generically one-to-one
    NotQuasihomogeneous,// no weight vector makes the germ weighted-homogeneous
    UnhandledCase,      // slice data outside the three supported weight/gcd cases
    HypothesisFailed,   // counterexample construction hypotheses not met
    PreconditionViolated, // generic bad input (invalid germ, empty curve, ...)
};

const char* error_code_name(ErrorCode code);

// Process exit code buckets: 2 parse, 3 precondition, 4 unhandled case,
// 5 internal / oracle non-convergence.
int exit_code_for(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace mufold
