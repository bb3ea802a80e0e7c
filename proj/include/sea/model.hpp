#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sea/element.hpp"

namespace sea {

// Bad handles, bad parameters, broken preconditions. Axiom violations
// are never errors; they come back as report data.
struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Outcome of the orthosupplement lookup. Missing/Ambiguous both mean
// the model violates the unique-supplement axiom; callers report them,
// they do not throw.
struct SupplementResult {
    enum class Status { Unique, Missing, Ambiguous };
    Status status = Status::Missing;
    std::optional<ElementRef> value; // engaged iff Unique
};

// Outcome of solving a + c = b for c. Ambiguous signals a cancellation
// failure (diagnostic, not resolvable by tie-breaking).
struct OminusResult {
    enum class Status { Defined, Undefined, Ambiguous };
    Status status = Status::Undefined;
    std::optional<ElementRef> value; // engaged iff Defined
};

using ElementSet = std::set<ElementRef>;

// A carrier with a partial sum, a total product, and distinguished 0
// and 1, behind one interface for finite-table and symbolic-rule
// backends. Models are immutable after construction.
class AlgebraModel {
public:
    virtual ~AlgebraModel() = default;

    const std::string& name() const { return name_; }
    const ElementRef& zero() const { return zero_; }
    const ElementRef& one() const { return one_; }

    virtual bool is_finite() const = 0;
    virtual bool has_product() const { return true; }

    virtual bool contains(const ElementRef& x) const = 0;

    // Partial sum. nullopt = undefined, never an error on carrier
    // elements; foreign handles throw ModelError.
    virtual std::optional<ElementRef> oplus(const ElementRef& a, const ElementRef& b) const = 0;

    // Total sequential product.
    virtual ElementRef circ(const ElementRef& a, const ElementRef& b) const = 0;

    // The unique x' with x + x' = 1, when it is unique.
    virtual SupplementResult orthosupplement(const ElementRef& x) const = 0;

    // Convenience for audited-clean models: nullopt when the supplement
    // is missing or ambiguous.
    std::optional<ElementRef> supplement(const ElementRef& x) const {
        auto r = orthosupplement(x);
        return r.status == SupplementResult::Status::Unique ? r.value : std::nullopt;
    }

    // Finite enumeration slice of the carrier, sorted canonically.
    // The bound's meaning is per-model (index bound, denominator cap);
    // finite backends return the whole carrier regardless.
    virtual std::vector<ElementRef> window(std::int64_t bound) const = 0;
    virtual std::int64_t default_window_bound() const = 0;
    virtual std::string window_descriptor(std::int64_t bound) const;

    // A finite set guaranteed to contain every c with a + c = b.
    virtual std::vector<ElementRef> difference_candidates(const ElementRef& b,
                                                          const ElementRef& a) const = 0;

    // Full carrier; throws ModelError on infinite backends.
    virtual std::vector<ElementRef> carrier() const;
    virtual std::size_t carrier_size() const;

    virtual std::string label(const ElementRef& x) const = 0;

    // Command-line element syntax; nullopt when the text does not name
    // a carrier element of this model.
    virtual std::optional<ElementRef> parse_element(std::string_view text) const = 0;

    // One-line grammar of this model's element syntax, for diagnostics.
    virtual std::string element_syntax() const = 0;

protected:
    AlgebraModel(std::string name, ElementRef zero, ElementRef one)
        : name_(std::move(name)), zero_(zero), one_(one) {}

    // For backends that resolve the distinguished elements after the
    // base is constructed (table loaders).
    void set_distinguished(ElementRef zero, ElementRef one) {
        zero_ = zero;
        one_ = one;
    }

    void require_element(const ElementRef& x) const;

private:
    std::string name_;
    ElementRef zero_;
    ElementRef one_;
};

// a _|_ b: the sum is defined.
bool perp(const AlgebraModel& model, const ElementRef& a, const ElementRef& b);

// Every c with a + c = b, deduped, canonically sorted.
std::vector<ElementRef> ominus_all(const AlgebraModel& model, const ElementRef& b,
                                   const ElementRef& a);

// b - a when it exists uniquely; Ambiguous when cancellation fails.
OminusResult ominus(const AlgebraModel& model, const ElementRef& b, const ElementRef& a);

// a <= b: some c has a + c = b.
bool leq(const AlgebraModel& model, const ElementRef& a, const ElementRef& b);

} // namespace sea
