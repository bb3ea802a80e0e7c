#include "sea/analysis.hpp"

#include <algorithm>

#include "sea/sequential.hpp"

namespace sea {

ElementSet closure_step(const AlgebraModel& model, const ElementSet& s) {
    if (s.empty())
        throw ModelError("closure step over an empty set");
    ElementSet out = s;
    for (const auto& a : s)
        if (auto sup = model.supplement(a)) out.insert(*sup);
    for (const auto& a : s)
        for (const auto& b : s) {
            out.insert(model.circ(a, b));
            if (auto sum = model.oplus(a, b)) out.insert(*sum);
        }
    return out;
}

ClosureResult generate_sub_sea(const AlgebraModel& model, const ElementSet& generators,
                               const ClosureLimits& limits) {
    if (generators.empty())
        throw ModelError("empty generating set");
    ClosureResult result;
    ElementSet current = generators;
    while (result.iterations < limits.max_iterations) {
        ElementSet next = closure_step(model, current);
        ++result.iterations;
        result.levels.push_back(next);
        if (next == current) {
            result.reached_fixpoint = true;
            current = std::move(next);
            break;
        }
        current = std::move(next);
        if (current.size() > limits.max_size) {
            result.size_limit_hit = true;
            break;
        }
    }
    result.elements = std::move(current);
    return result;
}

SubSeaCheck is_sub_sea(const AlgebraModel& model, const ElementSet& f) {
    if (!f.contains(model.zero()))
        return {false, SubSeaWitness{"zero", {}, model.zero()}};
    if (!f.contains(model.one()))
        return {false, SubSeaWitness{"one", {}, model.one()}};
    for (const auto& a : f) {
        auto sup = model.supplement(a);
        if (!sup)
            return {false, SubSeaWitness{"supplement", {a}, std::nullopt}};
        if (!f.contains(*sup))
            return {false, SubSeaWitness{"supplement", {a}, *sup}};
    }
    for (const auto& a : f)
        for (const auto& b : f) {
            ElementRef p = model.circ(a, b);
            if (!f.contains(p))
                return {false, SubSeaWitness{"product", {a, b}, p}};
        }
    for (const auto& a : f)
        for (const auto& b : f)
            if (auto sum = model.oplus(a, b); sum && !f.contains(*sum))
                return {false, SubSeaWitness{"sum", {a, b}, *sum}};
    return {true, std::nullopt};
}

ElementSet commutant(const AlgebraModel& model, const ElementSet& a,
                     std::span<const ElementRef> window) {
    ElementSet out;
    for (const auto& x : window) {
        bool all = true;
        for (const auto& e : a)
            if (!commutes(model, x, e)) {
                all = false;
                break;
            }
        if (all) out.insert(x);
    }
    return out;
}

ElementSet maximal_commutative_extension(const AlgebraModel& model, const ElementSet& f,
                                         std::span<const ElementRef> window) {
    if (auto bad = first_noncommuting_pair(model, f))
        throw ModelError("generating set is not commutative: " + model.label(bad->first) +
                         " vs " + model.label(bad->second));
    ElementSet win(window.begin(), window.end());
    for (const auto& e : f)
        if (!win.contains(e))
            throw ModelError("generating set leaves the window: " + model.label(e));
    ElementSet accepted = f;
    for (const auto& x : win) {
        if (accepted.contains(x)) continue;
        bool ok = true;
        for (const auto& e : accepted)
            if (!commutes(model, x, e)) {
                ok = false;
                break;
            }
        if (ok) accepted.insert(x);
    }
    return accepted;
}

CommutativeGenerationReport check_commutative_generation(const AlgebraModel& model,
                                                         const ElementSet& generators,
                                                         std::span<const ElementRef> window,
                                                         const ClosureLimits& limits) {
    if (generators.empty())
        throw ModelError("empty generating set");
    if (auto bad = first_noncommuting_pair(model, generators))
        throw ModelError("generating set is not commutative: " + model.label(bad->first) +
                         " vs " + model.label(bad->second));

    CommutativeGenerationReport report;
    report.closure = generate_sub_sea(model, generators, limits);
    report.noncommuting = first_noncommuting_pair(model, report.closure.elements);
    report.closure_commutative = !report.noncommuting.has_value();

    // windowed closure laws of the maximal commutative extension: an
    // operation result inside the window never escapes the extension
    ElementSet ext = maximal_commutative_extension(model, generators, window);
    ElementSet win(window.begin(), window.end());
    report.extension_closed = true;
    auto escape = [&](std::string op, std::vector<ElementRef> args, const ElementRef& r) {
        if (win.contains(r) && !ext.contains(r)) {
            report.extension_closed = false;
            report.extension_witnesses.push_back({std::move(op), std::move(args), r});
        }
    };
    for (const auto& a : ext)
        if (auto sup = model.supplement(a)) escape("supplement", {a}, *sup);
    for (const auto& a : ext)
        for (const auto& b : ext) {
            escape("product", {a, b}, model.circ(a, b));
            if (auto sum = model.oplus(a, b)) escape("sum", {a, b}, *sum);
        }
    return report;
}

std::vector<UniquenessCase> uniqueness_search(const AlgebraModel& model, std::uint32_t n,
                                              std::span<const ElementRef> window) {
    if (n < 2)
        throw ModelError("uniqueness search needs n >= 2");
    std::vector<ElementRef> w(window.begin(), window.end());
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());

    std::vector<std::pair<ElementRef, ElementRef>> multiples; // (x, n.x)
    for (const auto& x : w)
        if (auto m = nat_multiple(model, x, n)) multiples.emplace_back(x, *m);

    std::vector<UniquenessCase> cases;
    for (const auto& [a, na] : multiples)
        for (const auto& [b, nb] : multiples) {
            if (na != nb) continue;
            UniquenessCase uc;
            uc.a = a;
            uc.b = b;
            uc.c = na;
            uc.n = n;
            uc.c_sharp = is_sharp(model, na);
            uc.a_commutes_b = commutes(model, a, b);
            uc.a_equals_b = a == b;
            cases.push_back(uc);
        }
    return cases;
}

std::vector<UniquenessCase> inconsistent_cases(const std::vector<UniquenessCase>& cases) {
    std::vector<UniquenessCase> out;
    for (const auto& c : cases)
        if (c.inconsistent()) out.push_back(c);
    return out;
}

} // namespace sea
