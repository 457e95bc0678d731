#pragma once

// Acceptance thresholds shared by the acceptance suite, `experiment --assert` and the README.
namespace permlocal::thresholds {

inline constexpr int kVersion = 1;

inline constexpr int kDeskN = 4096;
inline constexpr int kDeskSamples = 2000;
inline constexpr double kMeanTolerance = 0.02;        // convergence and rooted marginals
inline constexpr double kVarianceMax = 0.002;         // across-sample variance at kDeskN
inline constexpr double kLimitWindowTolerance = 0.01; // limit samplers at h = 1
inline constexpr int kLimitWindowDraws = 100000;
inline constexpr double kShiftSpreadMax = 0.02;
inline constexpr double kShiftExactTolerance = 0.01;
inline constexpr int kShiftRadius = 6;
inline constexpr int kShiftMax = 3;
inline constexpr int kWindowSetSamples = 1000;
inline constexpr double kWindowSetTolerance = 0.02;
inline constexpr int kSeparatingLineSamples = 500;
inline constexpr double kSeparatingLineMin = 0.95;
inline constexpr int kUniformDraws = 140000;
inline constexpr double kUniformTolerance = 0.01;
inline constexpr int kTStarDraws = 200000;
inline constexpr double kTStarTolerance = 0.01;
// Largest pattern size for which finitely many marginals are checked.
inline constexpr int kMarginalPatternSize = 4;

}  // namespace permlocal::thresholds
