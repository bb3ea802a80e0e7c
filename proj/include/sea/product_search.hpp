#pragma once

#include "sea/model.hpp"

namespace sea {

// A complete product table over a finite carrier, row-major in the
// canonical carrier order.
struct ProductTable {
    std::vector<std::uint32_t> cells;
    friend bool operator==(const ProductTable&, const ProductTable&) = default;
    friend auto operator<=>(const ProductTable&, const ProductTable&) = default;
};

// Every total product making the given finite effect algebra a
// sequential one, found by depth-first cell assignment in row-major
// canonical order with constraint pruning, emitted in lexicographic
// table order, each re-validated by the full auditor before emission.
//
// Preconditions: finite carrier of size <= 8 and a clean EA audit
// (ModelError otherwise). The model's own product, if any, is ignored.
std::vector<ProductTable> enumerate_products(const AlgebraModel& model,
                                             std::size_t max_solutions);

} // namespace sea
