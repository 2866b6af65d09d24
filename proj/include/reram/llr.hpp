#pragma once

#include <algorithm>
#include <vector>

namespace reram {

// LLR convention throughout: log(Pr(bit = 0) / Pr(bit = 1)). Positive means
// the evidence favours 0.
using LlrFrame = std::vector<double>;

// Saturation magnitude for all exchanged messages, placed past the knee where
// exp() underflows in log-sum-exp arithmetic.
inline constexpr double kLlrSat = 38.0;

inline double saturate_llr(double v) { return std::clamp(v, -kLlrSat, kLlrSat); }

inline int hard_bit(double llr) { return llr < 0.0 ? 1 : 0; }

}  // namespace reram
