#pragma once

#include <span>

#include "sea/model.hpp"

namespace sea {

// One axiom-violation witness: which axiom, the offending tuple, and
// both evaluated sides ("undefined" is a legal side).
struct Violation {
    std::string axiom;
    std::vector<ElementRef> witness;
    std::string lhs;
    std::string rhs;
};

// Violations are sorted by (axiom id, canonical tuple order, sides);
// two audits of the same window are byte-identical.
struct AuditReport {
    std::vector<Violation> violations;
    std::uint64_t checked_tuples = 0;
    std::string window_descriptor;

    bool clean() const { return violations.empty(); }
};

// Exhaustive check of the effect-algebra axioms over the window:
// symmetry on all pairs, associativity on all ordered triples (sums
// evaluated exactly even when they leave the window), supplement
// existence/uniqueness (carrier scan on finite backends, rule
// consistency x + x' = 1 and x'' = x on symbolic ones), and the
// only-zero-sums-with-one law on all elements.
AuditReport audit_ea(const AlgebraModel& model, std::span<const ElementRef> window,
                     std::string descriptor = "");

// Exhaustive check of the sequential axioms over the window:
// additivity of every left section, the unit law, zero-product
// symmetry, the commutation laws (supplement clause plus windowed
// associativity clause), and the two-probe commutation law with its
// sum clause. Intermediate values are evaluated exactly.
AuditReport audit_sea(const AlgebraModel& model, std::span<const ElementRef> window,
                      std::string descriptor = "");

// Both audits merged (the sequential part only when the model carries a
// product).
AuditReport audit_full(const AlgebraModel& model, std::span<const ElementRef> window,
                       std::string descriptor = "");

void sort_violations(std::vector<Violation>& violations);

} // namespace sea
