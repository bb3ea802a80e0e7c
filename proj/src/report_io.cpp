#include "sea/report_io.hpp"

namespace sea {

ViolationText violation_text(const AlgebraModel& model, const Violation& v) {
    ViolationText t;
    t.axiom = v.axiom;
    for (const auto& w : v.witness) t.witness.push_back(model.label(w));
    t.lhs = v.lhs;
    t.rhs = v.rhs;
    return t;
}

OrderedJson violations_to_json(const AlgebraModel& model,
                               const std::vector<Violation>& violations) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& v : violations) {
        ViolationText t = violation_text(model, v);
        OrderedJson j;
        j["axiom"] = t.axiom;
        j["witness"] = t.witness;
        j["lhs"] = t.lhs;
        j["rhs"] = t.rhs;
        arr.push_back(std::move(j));
    }
    return arr;
}

std::vector<ViolationText> violations_from_json(const OrderedJson& j) {
    std::vector<ViolationText> out;
    for (const auto& v : j) {
        ViolationText t;
        t.axiom = v.at("axiom").get<std::string>();
        for (const auto& w : v.at("witness")) t.witness.push_back(w.get<std::string>());
        t.lhs = v.at("lhs").get<std::string>();
        t.rhs = v.at("rhs").get<std::string>();
        out.push_back(std::move(t));
    }
    return out;
}

OrderedJson cases_to_json(const AlgebraModel& model, const std::vector<UniquenessCase>& cases) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& c : cases) {
        OrderedJson j;
        j["a"] = model.label(c.a);
        j["b"] = model.label(c.b);
        j["c"] = model.label(c.c);
        j["n"] = c.n;
        j["c_sharp"] = c.c_sharp;
        j["a_commutes_b"] = c.a_commutes_b;
        j["a_equals_b"] = c.a_equals_b;
        j["inconsistent"] = c.inconsistent();
        arr.push_back(std::move(j));
    }
    return arr;
}

OrderedJson closure_to_json(const AlgebraModel& model, const ClosureResult& closure) {
    OrderedJson j;
    OrderedJson sizes = OrderedJson::array();
    for (const auto& level : closure.levels) sizes.push_back(level.size());
    j["level_sizes"] = std::move(sizes);
    OrderedJson elems = OrderedJson::array();
    for (const auto& e : closure.elements) elems.push_back(model.label(e));
    j["elements"] = std::move(elems);
    j["reached_fixpoint"] = closure.reached_fixpoint;
    j["iterations"] = closure.iterations;
    j["size_limit_hit"] = closure.size_limit_hit;
    return j;
}

} // namespace sea
