#pragma once

#include <stdexcept>
#include <string>

namespace ramval {

/// Valuation of a series cannot be certified at the current truncation.
struct IndeterminateValuation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The residue equation y^p - y = a0 has no root in the coefficient field.
/// Either the coefficient field must be enlarged or the extension is
/// nontrivial at residue level.
struct ResidueRootMissing : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The defining polynomial splits at residue level, so the valuation would
/// not extend uniquely.
struct UnibranchedViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The coefficient field does not contain the Artin-Schreier roots needed
/// for the Galois action of a tower.
struct CoefficientFieldTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A declared approximant sequence failed to produce strictly increasing
/// values v(a - c_k).
struct NotIncreasing : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Requested a valuation-basis computation on an extension that has none.
struct NoValuationBasis : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A closed-form value disagrees with its brute-force oracle. Hard failure.
struct OracleMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A sampling-based certification could not be decided at the current
/// truncation.
struct SamplingInconclusive : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The approximant profile is too short to pin down the cut.
struct ProfileTooShort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The element lies in the ground field, so its different is undefined.
struct ElementInGroundField : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_no(line) {}
    int line_no;
};

} // namespace ramval
