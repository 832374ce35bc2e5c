#pragma once

#include <stdexcept>
#include <string>

namespace lrc {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define LRC_ERROR_TYPE(Name)                                          \
    struct Name : Error {                                             \
        explicit Name(const std::string& what) : Error(what) {}      \
    }

LRC_ERROR_TYPE(ShapeError);                 // malformed arguments: lengths, ranges, overlaps
LRC_ERROR_TYPE(NotPrime);                   // modulus is not prime
LRC_ERROR_TYPE(DivisionByZero);             // field inverse/division by zero
LRC_ERROR_TYPE(AlphabetTooSmall);           // q too small for the requested code
LRC_ERROR_TYPE(DegenerateCode);             // analysis needs at least two codewords
LRC_ERROR_TYPE(NonIntegralDimension);       // |C| is not a power of q
LRC_ERROR_TYPE(NotSystematic);              // prefix projection is not a bijection
LRC_ERROR_TYPE(TooLarge);                   // size cap or combinatorial budget exceeded
LRC_ERROR_TYPE(InvalidSpec);                // inconsistent construction parameters
LRC_ERROR_TYPE(InvalidStrategy);            // forced trace step fails eligibility
LRC_ERROR_TYPE(InternalInvariantViolation); // a step the theory guarantees did not exist
LRC_ERROR_TYPE(NeedsGlobalRepair);          // witness-based repair impossible for this pattern

#undef LRC_ERROR_TYPE

}  // namespace lrc
