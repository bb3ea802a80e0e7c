#pragma once

#include <array>
#include <memory>
#include <unordered_map>

#include "sea/model.hpp"

namespace sea {

// Label-level description of a finite model, as read from a model file
// or dumped from any finite backend. Triples are ordered (left, right,
// result); the product section is optional so that sum-only algebras
// can be fed to the product search.
struct FiniteTriple {
    std::string left, right, result;
    std::size_t line = 0; // source line when parsed from text, else 0
};

struct FiniteModelData {
    std::string name;
    std::vector<std::string> labels;
    std::string zero_label, one_label;
    std::vector<FiniteTriple> sum_triples;
    std::vector<FiniteTriple> product_triples;
    bool has_product = false;
};

// Explicit-table backend. Sum pairs are stored exactly as given —
// symmetry is the auditor's to check, never assumed here.
class FiniteModel final : public AlgebraModel {
public:
    // Structural validation only: labels resolve, no duplicate sum pair
    // with conflicting result, product total when present, zero != one.
    // Axiom validity is the auditor's job. Throws ModelError.
    explicit FiniteModel(const FiniteModelData& data);

    bool is_finite() const override { return true; }
    bool has_product() const override { return has_product_; }

    bool contains(const ElementRef& x) const override;
    std::optional<ElementRef> oplus(const ElementRef& a, const ElementRef& b) const override;
    ElementRef circ(const ElementRef& a, const ElementRef& b) const override;
    SupplementResult orthosupplement(const ElementRef& x) const override;

    std::vector<ElementRef> window(std::int64_t bound) const override;
    std::int64_t default_window_bound() const override { return 0; }
    std::vector<ElementRef> difference_candidates(const ElementRef& b,
                                                  const ElementRef& a) const override;

    std::vector<ElementRef> carrier() const override;
    std::size_t carrier_size() const override { return labels_.size(); }

    std::string label(const ElementRef& x) const override;
    std::optional<ElementRef> parse_element(std::string_view text) const override;
    std::string element_syntax() const override { return "a carrier label | 0 | 1"; }

private:
    std::uint32_t index_of(const ElementRef& x) const;

    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::uint32_t> by_label_;
    std::uint32_t zero_idx_ = 0, one_idx_ = 0;
    std::unordered_map<std::uint64_t, std::uint32_t> sum_;
    std::vector<std::uint32_t> product_; // row-major, empty when absent
    bool has_product_ = false;
    std::vector<SupplementResult> supplements_; // scan results, fixed at build
};

// Dump any finite model (table- or rule-backed) to label-level data,
// enumerating all defined sums and, when present, all products.
FiniteModelData finite_data_from(const AlgebraModel& model);

// Same algebra with the product table replaced by `cells` (row-major
// over the canonical carrier order).
std::unique_ptr<AlgebraModel> with_product(const AlgebraModel& model,
                                           const std::vector<std::uint32_t>& cells);

} // namespace sea
