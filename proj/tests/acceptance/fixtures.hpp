#pragma once

// Generated by derive_fixtures from the oracle operator pair.

namespace gale::acceptance {

// Max pixel deviation of CG from the true image with the oracle operators.
inline constexpr double kCgOracleDeviation = 0;
// Central-region RSE of the oracle-adjoint FBP pipeline.
inline constexpr double kFbpOracleRse = 0.26900279139503863;

}  // namespace gale::acceptance
