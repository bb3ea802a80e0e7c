#include "sea/finite_model.hpp"

#include <algorithm>

namespace sea {

namespace {

std::uint64_t pair_key(std::uint32_t l, std::uint32_t r) {
    return (std::uint64_t(l) << 32) | r;
}

} // namespace

FiniteModel::FiniteModel(const FiniteModelData& data)
    : AlgebraModel(data.name.empty() ? "finite" : data.name, finite_ref(0), finite_ref(0)) {
    if (data.labels.size() < 2)
        throw ModelError("finite model needs at least two elements");
    for (const auto& l : data.labels) {
        if (l.empty()) throw ModelError("empty element label");
        if (!by_label_.emplace(l, std::uint32_t(labels_.size())).second)
            throw ModelError("duplicate element label '" + l + "'");
        labels_.push_back(l);
    }
    auto resolve = [&](const std::string& l, std::size_t line) -> std::uint32_t {
        auto it = by_label_.find(l);
        if (it == by_label_.end())
            throw ModelError("unknown label '" + l + "'" +
                             (line ? " (line " + std::to_string(line) + ")" : ""));
        return it->second;
    };
    zero_idx_ = resolve(data.zero_label, 0);
    one_idx_ = resolve(data.one_label, 0);
    if (zero_idx_ == one_idx_)
        throw ModelError("zero and one must be distinct elements");
    set_distinguished(finite_ref(zero_idx_), finite_ref(one_idx_));

    for (const auto& t : data.sum_triples) {
        std::uint32_t l = resolve(t.left, t.line);
        std::uint32_t r = resolve(t.right, t.line);
        std::uint32_t res = resolve(t.result, t.line);
        auto [it, inserted] = sum_.emplace(pair_key(l, r), res);
        if (!inserted && it->second != res)
            throw ModelError("duplicate sum entry (" + t.left + ", " + t.right +
                             ") with conflicting result" +
                             (t.line ? " (line " + std::to_string(t.line) + ")" : ""));
    }

    has_product_ = data.has_product;
    if (has_product_) {
        const std::size_t n = labels_.size();
        std::vector<bool> seen(n * n, false);
        product_.assign(n * n, 0);
        for (const auto& t : data.product_triples) {
            std::uint32_t l = resolve(t.left, t.line);
            std::uint32_t r = resolve(t.right, t.line);
            std::uint32_t res = resolve(t.result, t.line);
            std::size_t cell = std::size_t(l) * n + r;
            if (seen[cell] && product_[cell] != res)
                throw ModelError("duplicate product entry (" + t.left + ", " + t.right +
                                 ") with conflicting result" +
                                 (t.line ? " (line " + std::to_string(t.line) + ")" : ""));
            seen[cell] = true;
            product_[cell] = res;
        }
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t r = 0; r < n; ++r)
                if (!seen[l * n + r])
                    throw ModelError("product table is not total: missing (" + labels_[l] +
                                     ", " + labels_[r] + ")");
    }

    // Supplement scan, fixed once: the model is immutable afterwards.
    const std::uint32_t n = std::uint32_t(labels_.size());
    supplements_.resize(n);
    for (std::uint32_t a = 0; a < n; ++a) {
        std::vector<std::uint32_t> hits;
        for (std::uint32_t b = 0; b < n; ++b) {
            auto it = sum_.find(pair_key(a, b));
            if (it != sum_.end() && it->second == one_idx_) hits.push_back(b);
        }
        if (hits.size() == 1)
            supplements_[a] = {SupplementResult::Status::Unique, finite_ref(hits.front())};
        else if (hits.empty())
            supplements_[a] = {SupplementResult::Status::Missing, std::nullopt};
        else
            supplements_[a] = {SupplementResult::Status::Ambiguous, std::nullopt};
    }
}

std::uint32_t FiniteModel::index_of(const ElementRef& x) const {
    require_element(x);
    return x.as<FiniteIdx>()->index;
}

bool FiniteModel::contains(const ElementRef& x) const {
    const auto* f = x.as<FiniteIdx>();
    return f && f->index < labels_.size();
}

std::optional<ElementRef> FiniteModel::oplus(const ElementRef& a, const ElementRef& b) const {
    auto it = sum_.find(pair_key(index_of(a), index_of(b)));
    if (it == sum_.end()) return std::nullopt;
    return finite_ref(it->second);
}

ElementRef FiniteModel::circ(const ElementRef& a, const ElementRef& b) const {
    std::uint32_t l = index_of(a), r = index_of(b);
    if (!has_product_)
        throw ModelError("model '" + name() + "' has no product table");
    return finite_ref(product_[std::size_t(l) * labels_.size() + r]);
}

SupplementResult FiniteModel::orthosupplement(const ElementRef& x) const {
    return supplements_[index_of(x)];
}

std::vector<ElementRef> FiniteModel::window(std::int64_t) const { return carrier(); }

std::vector<ElementRef> FiniteModel::difference_candidates(const ElementRef&,
                                                           const ElementRef&) const {
    return carrier();
}

std::vector<ElementRef> FiniteModel::carrier() const {
    std::vector<ElementRef> out;
    out.reserve(labels_.size());
    for (std::uint32_t i = 0; i < labels_.size(); ++i) out.push_back(finite_ref(i));
    return out;
}

std::string FiniteModel::label(const ElementRef& x) const {
    const auto* f = x.as<FiniteIdx>();
    if (!f || f->index >= labels_.size()) return "<foreign>";
    return labels_[f->index];
}

std::optional<ElementRef> FiniteModel::parse_element(std::string_view text) const {
    auto it = by_label_.find(std::string(text));
    if (it != by_label_.end()) return finite_ref(it->second);
    if (text == "0") return zero();
    if (text == "1") return one();
    return std::nullopt;
}

FiniteModelData finite_data_from(const AlgebraModel& model) {
    if (!model.is_finite())
        throw ModelError("cannot dump an infinite carrier to a table");
    FiniteModelData data;
    data.name = model.name();
    auto elems = model.carrier();
    for (const auto& e : elems) data.labels.push_back(model.label(e));
    data.zero_label = model.label(model.zero());
    data.one_label = model.label(model.one());
    for (const auto& a : elems)
        for (const auto& b : elems)
            if (auto s = model.oplus(a, b))
                data.sum_triples.push_back(
                    {model.label(a), model.label(b), model.label(*s), 0});
    data.has_product = model.has_product();
    if (data.has_product)
        for (const auto& a : elems)
            for (const auto& b : elems)
                data.product_triples.push_back(
                    {model.label(a), model.label(b), model.label(model.circ(a, b)), 0});
    return data;
}

std::unique_ptr<AlgebraModel> with_product(const AlgebraModel& model,
                                           const std::vector<std::uint32_t>& cells) {
    FiniteModelData data = finite_data_from(model);
    const std::size_t n = data.labels.size();
    if (cells.size() != n * n)
        throw ModelError("product table has wrong size");
    data.product_triples.clear();
    data.has_product = true;
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t r = 0; r < n; ++r)
            data.product_triples.push_back(
                {data.labels[l], data.labels[r], data.labels[cells[l * n + r]], 0});
    return std::make_unique<FiniteModel>(data);
}

} // namespace sea
