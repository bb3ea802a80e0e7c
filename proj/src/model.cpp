#include "sea/model.hpp"

#include <algorithm>

namespace sea {

std::string AlgebraModel::window_descriptor(std::int64_t bound) const {
    if (is_finite())
        return "full carrier (" + std::to_string(carrier_size()) + " elements)";
    return name() + " window bound " + std::to_string(bound) + " (" +
           std::to_string(window(bound).size()) + " elements)";
}

std::vector<ElementRef> AlgebraModel::carrier() const {
    throw ModelError("model '" + name() + "' has an infinite carrier");
}

std::size_t AlgebraModel::carrier_size() const {
    throw ModelError("model '" + name() + "' has an infinite carrier");
}

void AlgebraModel::require_element(const ElementRef& x) const {
    if (!contains(x))
        throw ModelError("element is not in model '" + name() + "'");
}

bool perp(const AlgebraModel& model, const ElementRef& a, const ElementRef& b) {
    return model.oplus(a, b).has_value();
}

std::vector<ElementRef> ominus_all(const AlgebraModel& model, const ElementRef& b,
                                   const ElementRef& a) {
    std::vector<ElementRef> out;
    for (const ElementRef& c : model.difference_candidates(b, a)) {
        auto sum = model.oplus(a, c);
        if (sum && *sum == b) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

OminusResult ominus(const AlgebraModel& model, const ElementRef& b, const ElementRef& a) {
    auto sols = ominus_all(model, b, a);
    if (sols.empty()) return {OminusResult::Status::Undefined, std::nullopt};
    if (sols.size() > 1) return {OminusResult::Status::Ambiguous, std::nullopt};
    return {OminusResult::Status::Defined, sols.front()};
}

bool leq(const AlgebraModel& model, const ElementRef& a, const ElementRef& b) {
    return !ominus_all(model, b, a).empty();
}

} // namespace sea
