#include "sea/audit.hpp"

#include <algorithm>

namespace sea {

namespace {

std::vector<ElementRef> canonical(std::span<const ElementRef> window) {
    std::vector<ElementRef> w(window.begin(), window.end());
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    return w;
}

std::string fmt(const AlgebraModel& model, const std::optional<ElementRef>& x) {
    return x ? model.label(*x) : "undefined";
}

std::string default_descriptor(std::string descriptor, std::size_t n) {
    if (!descriptor.empty()) return descriptor;
    return "custom window (" + std::to_string(n) + " elements)";
}

} // namespace

void sort_violations(std::vector<Violation>& violations) {
    std::sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
        if (a.axiom != b.axiom) return a.axiom < b.axiom;
        if (a.witness != b.witness) return a.witness < b.witness;
        if (a.lhs != b.lhs) return a.lhs < b.lhs;
        return a.rhs < b.rhs;
    });
}

AuditReport audit_ea(const AlgebraModel& model, std::span<const ElementRef> window,
                     std::string descriptor) {
    auto w = canonical(window);
    AuditReport report;
    report.window_descriptor = default_descriptor(std::move(descriptor), w.size());

    // EA1: one check per unordered pair
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i; j < w.size(); ++j) {
            auto ab = model.oplus(w[i], w[j]);
            auto ba = model.oplus(w[j], w[i]);
            ++report.checked_tuples;
            if (ab.has_value() != ba.has_value() || (ab && *ab != *ba))
                report.violations.push_back(
                    {"EA1", {w[i], w[j]}, fmt(model, ab), fmt(model, ba)});
        }

    // EA2: all ordered triples; intermediate sums evaluated exactly
    for (const auto& a : w)
        for (const auto& b : w)
            for (const auto& c : w) {
                ++report.checked_tuples;
                auto bc = model.oplus(b, c);
                if (!bc) continue;
                auto a_bc = model.oplus(a, *bc);
                if (!a_bc) continue;
                auto ab = model.oplus(a, b);
                auto ab_c = ab ? model.oplus(*ab, c) : std::optional<ElementRef>{};
                if (!ab_c || *ab_c != *a_bc)
                    report.violations.push_back(
                        {"EA2", {a, b, c}, fmt(model, a_bc), fmt(model, ab_c)});
            }

    // EA3: existence + uniqueness by carrier scan where a carrier
    // exists; rule consistency (x + x' = 1, x'' = x) otherwise
    if (model.is_finite()) {
        auto carrier = model.carrier();
        for (const auto& a : w) {
            ++report.checked_tuples;
            std::vector<ElementRef> hits;
            for (const auto& b : carrier) {
                auto s = model.oplus(a, b);
                if (s && *s == model.one()) hits.push_back(b);
            }
            if (hits.empty())
                report.violations.push_back({"EA3", {a}, "no supplement", "unique supplement"});
            else if (hits.size() > 1) {
                std::string found;
                for (const auto& h : hits) {
                    if (!found.empty()) found += ", ";
                    found += model.label(h);
                }
                report.violations.push_back(
                    {"EA3", {a}, "supplements: " + found, "unique supplement"});
            }
        }
    } else {
        for (const auto& a : w) {
            ++report.checked_tuples;
            auto r = model.orthosupplement(a);
            if (r.status != SupplementResult::Status::Unique) {
                report.violations.push_back(
                    {"EA3", {a},
                     r.status == SupplementResult::Status::Missing ? "no supplement"
                                                                   : "ambiguous supplement",
                     "unique supplement"});
                continue;
            }
            auto sum = model.oplus(a, *r.value);
            if (!sum || *sum != model.one())
                report.violations.push_back(
                    {"EA3", {a}, fmt(model, sum), model.label(model.one())});
            auto back = model.supplement(*r.value);
            if (!back || *back != a)
                report.violations.push_back({"EA3", {a}, fmt(model, back), model.label(a)});
        }
    }

    // EA4
    for (const auto& a : w) {
        ++report.checked_tuples;
        auto s = model.oplus(a, model.one());
        if (s && a != model.zero())
            report.violations.push_back(
                {"EA4", {a}, fmt(model, s), "defined only for the zero element"});
    }

    sort_violations(report.violations);
    return report;
}

AuditReport audit_sea(const AlgebraModel& model, std::span<const ElementRef> window,
                      std::string descriptor) {
    if (!model.has_product())
        throw ModelError("model '" + model.name() + "' has no product to audit");
    auto w = canonical(window);
    AuditReport report;
    report.window_descriptor = default_descriptor(std::move(descriptor), w.size());

    // SEA1: left sections are additive
    for (const auto& a : w)
        for (const auto& b : w)
            for (const auto& c : w) {
                ++report.checked_tuples;
                auto bc = model.oplus(b, c);
                if (!bc) continue;
                ElementRef lhs = model.circ(a, *bc);
                auto sum = model.oplus(model.circ(a, b), model.circ(a, c));
                if (!sum)
                    report.violations.push_back({"SEA1", {a, b, c}, model.label(lhs),
                                                 "undefined (section images not summable)"});
                else if (*sum != lhs)
                    report.violations.push_back(
                        {"SEA1", {a, b, c}, model.label(lhs), model.label(*sum)});
            }

    // SEA2: one is a left unit
    for (const auto& a : w) {
        ++report.checked_tuples;
        ElementRef v = model.circ(model.one(), a);
        if (v != a)
            report.violations.push_back({"SEA2", {a}, model.label(v), model.label(a)});
    }

    // SEA3: zero products are two-sided
    for (const auto& a : w)
        for (const auto& b : w) {
            ++report.checked_tuples;
            if (model.circ(a, b) != model.zero()) continue;
            ElementRef ba = model.circ(b, a);
            if (ba != model.zero())
                report.violations.push_back(
                    {"SEA3", {a, b}, model.label(model.zero()), model.label(ba)});
        }

    // SEA4: commuting pairs commute with the supplement, and associate
    // against every window element
    for (const auto& a : w)
        for (const auto& b : w) {
            ++report.checked_tuples;
            if (model.circ(a, b) != model.circ(b, a)) continue;
            if (auto bs = model.supplement(b)) {
                ElementRef l = model.circ(a, *bs);
                ElementRef r = model.circ(*bs, a);
                if (l != r)
                    report.violations.push_back(
                        {"SEA4", {a, b}, model.label(l), model.label(r)});
            }
            for (const auto& c : w) {
                ++report.checked_tuples;
                ElementRef l = model.circ(a, model.circ(b, c));
                ElementRef r = model.circ(model.circ(a, b), c);
                if (l != r)
                    report.violations.push_back(
                        {"SEA4", {a, b, c}, model.label(l), model.label(r)});
            }
        }

    // SEA5: an element commuting with both factors commutes with the
    // product, and with the sum when it is defined
    for (const auto& c : w)
        for (const auto& a : w)
            for (const auto& b : w) {
                ++report.checked_tuples;
                if (model.circ(c, a) != model.circ(a, c)) continue;
                if (model.circ(c, b) != model.circ(b, c)) continue;
                ElementRef ab = model.circ(a, b);
                ElementRef l = model.circ(c, ab);
                ElementRef r = model.circ(ab, c);
                if (l != r)
                    report.violations.push_back(
                        {"SEA5", {c, a, b}, model.label(l), model.label(r)});
                if (auto sum = model.oplus(a, b)) {
                    ElementRef l2 = model.circ(c, *sum);
                    ElementRef r2 = model.circ(*sum, c);
                    if (l2 != r2)
                        report.violations.push_back(
                            {"SEA5", {c, a, b}, model.label(l2), model.label(r2)});
                }
            }

    sort_violations(report.violations);
    return report;
}

AuditReport audit_full(const AlgebraModel& model, std::span<const ElementRef> window,
                       std::string descriptor) {
    AuditReport report = audit_ea(model, window, descriptor);
    if (model.has_product()) {
        AuditReport sea = audit_sea(model, window, std::move(descriptor));
        report.checked_tuples += sea.checked_tuples;
        report.violations.insert(report.violations.end(), sea.violations.begin(),
                                 sea.violations.end());
        sort_violations(report.violations);
    }
    return report;
}

} // namespace sea
