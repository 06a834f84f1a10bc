#pragma once

// Desk-scale size limits. Operations beyond these throw SizeLimitExceeded
// instead of running for hours.
namespace nlab::limits {

// Largest k for which S_k is enumerated path by path (|S_10| = 1037718).
inline constexpr int kMaxEnumeratedPathLength = 10;

// Largest |k| for moment path sums (computed by a transfer recursion over the
// Schroeder lattice, so this is far beyond explicit enumeration).
inline constexpr int kMaxMomentIndex = 40;

// Largest m + n for tuple enumeration of S_{m,n}.
inline constexpr int kMaxTupleSpan = 7;

// Largest order for explicit tiling enumeration (|T_5| = 32768).
inline constexpr int kMaxAztecOrder = 5;

// Largest matrix dimension accepted by the exact determinant routines.
inline constexpr int kMaxDeterminantOrder = 10;

// Largest |s| + n reachable by the Sylvester table extension.
inline constexpr int kMaxSylvesterSpan = 16;

}  // namespace nlab::limits
