#pragma once

#include <span>

#include "sea/model.hpp"

namespace sea {

// Level sets of the generated-subalgebra construction. Each level
// contains the previous one; at a fixpoint the final set is closed
// under supplement, product, and every defined sum.
struct ClosureResult {
    std::vector<ElementSet> levels;
    ElementSet elements;
    bool reached_fixpoint = false;
    std::size_t iterations = 0;
    bool size_limit_hit = false;
};

struct ClosureLimits {
    std::size_t max_iterations = 64;
    std::size_t max_size = 10000;
};

// One level: S with all supplements, all ordered products, and all
// defined sums of members adjoined. Ordered pairs both ways — the
// construction does not assume a commutative product.
ElementSet closure_step(const AlgebraModel& model, const ElementSet& s);

// Iterates closure_step to a fixpoint or a tripped limit. The closure
// of a nonempty set may be infinite; partial results are flagged, never
// silently truncated. Empty generating sets are rejected.
ClosureResult generate_sub_sea(const AlgebraModel& model, const ElementSet& generators,
                               const ClosureLimits& limits = {});

// Why a set failed to be closed.
struct SubSeaWitness {
    std::string operation; // "zero", "one", "supplement", "product", "sum"
    std::vector<ElementRef> args;
    std::optional<ElementRef> result; // the escaping element, when one exists
};

struct SubSeaCheck {
    bool closed = false;
    std::optional<SubSeaWitness> witness;
};

// True iff F contains 0 and 1 and is closed under supplement, product,
// and all defined sums among its members. First failure in canonical
// order.
SubSeaCheck is_sub_sea(const AlgebraModel& model, const ElementSet& f);

// Window elements commuting with every member of A.
ElementSet commutant(const AlgebraModel& model, const ElementSet& a,
                     std::span<const ElementRef> window);

// Greedy sweep in canonical order: grows F by every window element that
// commutes with everything accepted so far. The result is commutative
// and maximal within the window. F must be commutative and inside the
// window (ModelError otherwise).
ElementSet maximal_commutative_extension(const AlgebraModel& model, const ElementSet& f,
                                         std::span<const ElementRef> window);

// Commutativity of the generated subalgebra, plus the windowed closure
// laws of the maximal commutative extension.
struct CommutativeGenerationReport {
    ClosureResult closure;
    bool closure_commutative = false;
    std::optional<std::pair<ElementRef, ElementRef>> noncommuting;
    bool extension_closed = false;
    std::vector<SubSeaWitness> extension_witnesses;

    bool pass() const { return closure_commutative && extension_closed; }
};

CommutativeGenerationReport check_commutative_generation(const AlgebraModel& model,
                                                         const ElementSet& generators,
                                                         std::span<const ElementRef> window,
                                                         const ClosureLimits& limits = {});

// One hypothesis instance of the uniqueness question: n.a = n.b = c,
// classified by the sharpness of c, commutation of the pair, and
// equality. A case with a sharp c, commuting pair, and a != b
// contradicts the uniqueness law and marks the model (or the law)
// inconsistent.
struct UniquenessCase {
    ElementRef a, b, c;
    std::uint32_t n = 0;
    bool c_sharp = false;
    bool a_commutes_b = false;
    bool a_equals_b = false;

    bool inconsistent() const { return c_sharp && a_commutes_b && !a_equals_b; }
};

// All ordered window pairs (a, b) with n.a and n.b defined and equal.
// n >= 2.
std::vector<UniquenessCase> uniqueness_search(const AlgebraModel& model, std::uint32_t n,
                                              std::span<const ElementRef> window);

std::vector<UniquenessCase> inconsistent_cases(const std::vector<UniquenessCase>& cases);

} // namespace sea
