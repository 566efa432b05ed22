#pragma once

#include <string>
#include <vector>

#include "chowring/pipeline.hpp"

namespace chowring {

/// c1^2*c3 -> c_1^{2}c_{3}
std::string latex_polynomial(const Polynomial& p);

/// \mathbb{Z}[c_1, ..., c_n]/(g_1, ..., g_m)
std::string latex_quotient(const std::vector<Variable>& variables,
                           const std::vector<Polynomial>& relations);

/// Standalone document displaying the presentation. Uses the simplified
/// generators when present.
std::string latex_document(const RingPresentation& p);

}  // namespace chowring
