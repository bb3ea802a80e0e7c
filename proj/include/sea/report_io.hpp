#pragma once

#include <json.hpp>

#include "sea/analysis.hpp"
#include "sea/audit.hpp"

namespace sea {

using OrderedJson = nlohmann::ordered_json;

// Label-level violation, the machine-report form. Parsing a machine
// report back yields exactly these.
struct ViolationText {
    std::string axiom;
    std::vector<std::string> witness;
    std::string lhs;
    std::string rhs;
    friend bool operator==(const ViolationText&, const ViolationText&) = default;
};

ViolationText violation_text(const AlgebraModel& model, const Violation& v);

OrderedJson violations_to_json(const AlgebraModel& model,
                               const std::vector<Violation>& violations);
std::vector<ViolationText> violations_from_json(const OrderedJson& j);

OrderedJson cases_to_json(const AlgebraModel& model, const std::vector<UniquenessCase>& cases);

OrderedJson closure_to_json(const AlgebraModel& model, const ClosureResult& closure);

} // namespace sea
