#pragma once

#include <filesystem>
#include <string>

#include "lrslab/recurrence.hpp"

namespace lrslab {

// Sequence spec files are JSON objects:
//   {"label": "...", "order": k, "coeffs": ["a_1", ...], "initial": ["U_1", ...]}
// with integers written as decimal strings.
RecurrenceSpec parse_spec(const std::string& text);
RecurrenceSpec load_spec(const std::filesystem::path& path);
std::string format_spec(const RecurrenceSpec& spec);
void save_spec(const RecurrenceSpec& spec, const std::filesystem::path& path);

// Ready-made sequences used by the tools and tests.
RecurrenceSpec fibonacci_spec();
// U_n = n^2 + 1, characteristic polynomial (X - 1)^3.
RecurrenceSpec n_squared_plus_one_spec();
// Psi = X^2 - X + 2 with U_1 = U_2 = 1 (complex conjugate roots).
RecurrenceSpec complex_lucas_spec();
// U_n = 2^n - a, characteristic polynomial X^2 - 3X + 2.
RecurrenceSpec power_of_two_minus_spec(const BigInt& a);

}  // namespace lrslab
