#pragma once

#include <filesystem>
#include <memory>

#include "sea/model.hpp"

namespace sea {

// Power set of {1..k}: sum = disjoint union, product = intersection,
// supplement = complement. A fully sharp reference algebra. k <= 16.
std::unique_ptr<AlgebraModel> make_boolean(int k);

// Exact rationals in [0,1]: a + b when <= 1, product a*b, supplement
// 1 - a. Window bound = maximum denominator.
std::unique_ptr<AlgebraModel> make_scale();

// Two copies of the rational unit interval glued at 0 and 1. Sums stay
// inside one copy; the product takes the first argument's copy. Window
// bound = maximum denominator.
std::unique_ptr<AlgebraModel> make_horizontal_sum();

// The two-indexed family {0, 1, a(n,m), b(n,m)} with the wrap-around
// sum and product rules parameterized by n0 >= 2. Window bound = max n.
std::unique_ptr<AlgebraModel> make_e0(int n0);

// Finite table from a model file; structural validation only.
std::unique_ptr<AlgebraModel> load_finite(const std::filesystem::path& file);

} // namespace sea
