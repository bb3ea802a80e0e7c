#include "sea/sequential.hpp"

#include <algorithm>

namespace sea {

namespace {

std::vector<ElementRef> canonical(std::span<const ElementRef> window) {
    std::vector<ElementRef> w(window.begin(), window.end());
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    return w;
}

} // namespace

bool is_sharp(const AlgebraModel& model, const ElementRef& x) {
    return model.circ(x, x) == x;
}

MeetSharpness sharp_via_meet(const AlgebraModel& model, const ElementRef& x) {
    if (!model.is_finite())
        throw ModelError("meet-based sharpness needs a finite carrier");
    auto sup = model.supplement(x);
    if (!sup)
        throw ModelError("element has no unique supplement");
    auto carrier = model.carrier();
    std::vector<ElementRef> lower;
    for (const auto& c : carrier)
        if (leq(model, c, x) && leq(model, c, *sup)) lower.push_back(c);
    for (const auto& m : lower) {
        bool is_max = true;
        for (const auto& c : lower)
            if (!leq(model, c, m)) {
                is_max = false;
                break;
            }
        if (is_max) return m == model.zero() ? MeetSharpness::Sharp : MeetSharpness::NotSharp;
    }
    return MeetSharpness::NoMeet;
}

bool commutes(const AlgebraModel& model, const ElementRef& a, const ElementRef& b) {
    return model.circ(a, b) == model.circ(b, a);
}

std::optional<std::pair<ElementRef, ElementRef>>
first_noncommuting_pair(const AlgebraModel& model, const ElementSet& s) {
    for (auto i = s.begin(); i != s.end(); ++i)
        for (auto j = i; j != s.end(); ++j)
            if (!commutes(model, *i, *j)) return std::make_pair(*i, *j);
    return std::nullopt;
}

bool is_commutative_set(const AlgebraModel& model, const ElementSet& s) {
    return !first_noncommuting_pair(model, s).has_value();
}

std::optional<ElementRef> nat_multiple(const AlgebraModel& model, const ElementRef& a,
                                       std::uint32_t n) {
    if (n < 1)
        throw ModelError("natural multiple needs n >= 1");
    ElementRef acc = a;
    for (std::uint32_t i = 1; i < n; ++i) {
        auto next = model.oplus(acc, a);
        if (!next) return std::nullopt;
        acc = *next;
    }
    return acc;
}

AuditReport check_cancellation(const AlgebraModel& model, std::span<const ElementRef> window) {
    auto w = canonical(window);
    AuditReport report;
    report.window_descriptor = "custom window (" + std::to_string(w.size()) + " elements)";
    for (const auto& a : w)
        for (const auto& b : w)
            for (const auto& c : w) {
                ++report.checked_tuples;
                if (b == c) continue;
                auto ab = model.oplus(a, b);
                if (!ab) continue;
                auto ac = model.oplus(a, c);
                if (ac && *ab == *ac)
                    report.violations.push_back(
                        {"CANCEL", {a, b, c}, model.label(*ab), model.label(*ac)});
            }
    sort_violations(report.violations);
    return report;
}

AuditReport check_order_laws(const AlgebraModel& model, std::span<const ElementRef> window) {
    auto w = canonical(window);
    AuditReport report;
    report.window_descriptor = "custom window (" + std::to_string(w.size()) + " elements)";

    for (const auto& a : w) {
        ++report.checked_tuples;
        if (!leq(model, model.zero(), a))
            report.violations.push_back({"ORDER-BOUNDS", {a}, "0 <= a fails", "0 <= a"});
        if (!leq(model, a, model.one()))
            report.violations.push_back({"ORDER-BOUNDS", {a}, "a <= 1 fails", "a <= 1"});
        auto sup = model.supplement(a);
        if (!sup) {
            report.violations.push_back({"INVOLUTION", {a}, "no unique supplement", ""});
            continue;
        }
        auto back = model.supplement(*sup);
        if (!back || *back != a)
            report.violations.push_back(
                {"INVOLUTION", {a}, back ? model.label(*back) : "undefined", model.label(a)});
    }

    for (const auto& a : w)
        for (const auto& b : w) {
            ++report.checked_tuples;
            bool summable = perp(model, a, b);
            auto bs = model.supplement(b);
            if (!bs) continue; // flagged above
            bool below = leq(model, a, *bs);
            if (summable != below)
                report.violations.push_back({"PERP-ORDER", {a, b},
                                             summable ? "a _|_ b" : "not a _|_ b",
                                             below ? "a <= b'" : "not a <= b'"});
            auto diff = ominus(model, b, a);
            if (diff.status == OminusResult::Status::Ambiguous)
                report.violations.push_back(
                    {"OMINUS-UNIQUE", {b, a}, "ambiguous difference", "unique difference"});
        }

    sort_violations(report.violations);
    return report;
}

AuditReport check_sharp_order(const AlgebraModel& model, std::span<const ElementRef> window) {
    auto w = canonical(window);
    AuditReport report;
    report.window_descriptor = "custom window (" + std::to_string(w.size()) + " elements)";
    for (const auto& c : w) {
        if (!is_sharp(model, c)) continue;
        for (const auto& a : w) {
            ++report.checked_tuples;
            bool below = leq(model, a, c);
            bool fixed = model.circ(a, c) == a && model.circ(c, a) == a;
            if (below != fixed)
                report.violations.push_back({"SHARP-ORDER", {a, c},
                                             below ? "a <= c" : "not a <= c",
                                             fixed ? "both products fix a" : "a not fixed"});
        }
    }
    sort_violations(report.violations);
    return report;
}

AuditReport check_sharp_meet_agreement(const AlgebraModel& model) {
    if (!model.is_finite())
        throw ModelError("meet-based sharpness needs a finite carrier");
    AuditReport report;
    auto carrier = model.carrier();
    report.window_descriptor =
        "full carrier (" + std::to_string(carrier.size()) + " elements)";
    for (const auto& x : carrier) {
        ++report.checked_tuples;
        MeetSharpness meet = sharp_via_meet(model, x);
        if (meet == MeetSharpness::NoMeet) continue;
        bool idem = is_sharp(model, x);
        if ((meet == MeetSharpness::Sharp) != idem)
            report.violations.push_back({"SHARP-MEET", {x},
                                         idem ? "idempotent" : "not idempotent",
                                         meet == MeetSharpness::Sharp ? "meet is zero"
                                                                      : "meet is nonzero"});
    }
    sort_violations(report.violations);
    return report;
}

} // namespace sea
