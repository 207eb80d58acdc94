#pragma once

#include <stdexcept>
#include <string>

namespace icosa {

// All library failures derive from Error so callers can catch one type.
// Each subclass names the invariant that broke, not the call site.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computed rotation image did not land on a vertex within tolerance.
struct SnapFailure : Error {
    using Error::Error;
};

// A product of two stored elements is not itself a stored element.
struct ClosureViolation : Error {
    using Error::Error;
};

// A class-sum operator failed to act as a scalar on an irrep.
struct NotScalar : Error {
    using Error::Error;
};

// Rotation-matrix and tabulated irreps disagree beyond any basis alignment.
struct ConventionMismatch : Error {
    using Error::Error;
};

// A row/column/family index is outside its documented range.
struct IndexInvalid : Error {
    using Error::Error;
};

// A class operator mixed vectors across distinct projection sectors.
struct SectorLeak : Error {
    using Error::Error;
};

// Eigenvalue clustering could not be matched one-to-one to irrep labels.
struct DegenerateAmbiguity : Error {
    using Error::Error;
};

// A state-space action table is not a permutation homomorphism.
struct ActionInconsistent : Error {
    using Error::Error;
};

// An adjacency row disagrees with the documented neighbor rule.
struct RuleMismatch : Error {
    using Error::Error;
};

// Symmetry-adapted vectors supposed to be independent are not.
struct RowDependence : Error {
    using Error::Error;
};

// A claimed symmetry does not commute with the Hamiltonian.
struct NotSymmetry : Error {
    using Error::Error;
};

// Block spectra and dense spectra disagree beyond tolerance.
struct SpectrumMismatch : Error {
    using Error::Error;
};

} // namespace icosa
