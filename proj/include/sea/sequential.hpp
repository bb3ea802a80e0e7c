#pragma once

#include "sea/audit.hpp"
#include "sea/model.hpp"

namespace sea {

// Operative sharpness criterion, valid on every backend: x is sharp iff
// x o x = x.
bool is_sharp(const AlgebraModel& model, const ElementRef& x);

// Order-theoretic sharpness: the meet of {x, x'} is zero. Needs the full
// order, so finite backends only (ModelError otherwise). NoMeet when the
// lower bounds of {x, x'} have no maximum.
enum class MeetSharpness { Sharp, NotSharp, NoMeet };
MeetSharpness sharp_via_meet(const AlgebraModel& model, const ElementRef& x);

// a | b: the products agree both ways.
bool commutes(const AlgebraModel& model, const ElementRef& a, const ElementRef& b);

// First pair (canonical order) whose products disagree; nullopt when the
// set is commutative.
std::optional<std::pair<ElementRef, ElementRef>>
first_noncommuting_pair(const AlgebraModel& model, const ElementSet& s);

bool is_commutative_set(const AlgebraModel& model, const ElementSet& s);

// n-fold sum a + a + ... (left fold), undefined as soon as any partial
// sum is. n >= 1.
std::optional<ElementRef> nat_multiple(const AlgebraModel& model, const ElementRef& a,
                                       std::uint32_t n);

// ---------------------------------------------------------------------------
// Derived-law suites. Violations are data, same shape as the axiom
// audits; all of these must come back clean on a genuine model.

// a + b = a + c (both defined) forces b = c.
AuditReport check_cancellation(const AlgebraModel& model, std::span<const ElementRef> window);

// Order plumbing over the window: 0 <= a <= 1, summability of (a, b)
// matches a <= b', supplement involution, and unambiguous differences.
AuditReport check_order_laws(const AlgebraModel& model, std::span<const ElementRef> window);

// For sharp c: a <= c exactly when both products with c fix a.
AuditReport check_sharp_order(const AlgebraModel& model, std::span<const ElementRef> window);

// Finite models: idempotence-based sharpness agrees with the meet-based
// one wherever the meet exists.
AuditReport check_sharp_meet_agreement(const AlgebraModel& model);

} // namespace sea
