#include "sea/product_search.hpp"

#include <algorithm>

#include "sea/audit.hpp"
#include "sea/finite_model.hpp"

namespace sea {

namespace {

constexpr std::int32_t kUnset = -1;

struct SearchState {
    const AlgebraModel* model = nullptr;
    std::size_t n = 0;
    std::vector<ElementRef> carrier;
    std::vector<std::optional<std::uint32_t>> sum; // n*n, index of a+b when defined
    std::uint32_t zero = 0, one = 0;
    std::vector<std::int32_t> cells; // n*n, kUnset while open
    std::vector<std::size_t> open;   // free cells, row-major
    std::vector<ProductTable> found;
    std::size_t max_solutions = 0;

    std::int32_t at(std::uint32_t l, std::uint32_t r) const { return cells[l * n + r]; }

    // partial-table consistency: every axiom instance decidable from
    // the filled cells must hold
    bool consistent() const {
        // zero products are two-sided
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b) {
                std::int32_t ab = at(a, b);
                if (ab == std::int32_t(zero) && at(b, a) != kUnset &&
                    at(b, a) != std::int32_t(zero))
                    return false;
            }
        // left sections are additive
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                for (std::uint32_t c = 0; c < n; ++c) {
                    auto bc = sum[b * n + c];
                    if (!bc) continue;
                    std::int32_t ab = at(a, b), ac = at(a, c), abc = at(a, *bc);
                    if (ab == kUnset || ac == kUnset || abc == kUnset) continue;
                    auto s = sum[std::size_t(ab) * n + std::size_t(ac)];
                    if (!s || std::int32_t(*s) != abc) return false;
                }
        // commuting pairs: supplement clause and associativity clause
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b) {
                std::int32_t ab = at(a, b), ba = at(b, a);
                if (ab == kUnset || ba == kUnset || ab != ba) continue;
                auto bs = model->supplement(carrier[b]);
                if (bs) {
                    std::uint32_t bsi = index_of(*bs);
                    std::int32_t l = at(a, bsi), r = at(bsi, a);
                    if (l != kUnset && r != kUnset && l != r) return false;
                }
                for (std::uint32_t c = 0; c < n; ++c) {
                    std::int32_t bc = at(b, c);
                    if (bc == kUnset) continue;
                    std::int32_t l = at(a, std::uint32_t(bc));
                    std::int32_t r = at(std::uint32_t(ab), c);
                    if (l != kUnset && r != kUnset && l != r) return false;
                }
            }
        // two-probe commutation with product and sum
        for (std::uint32_t c = 0; c < n; ++c)
            for (std::uint32_t a = 0; a < n; ++a) {
                std::int32_t ca = at(c, a), ac = at(a, c);
                if (ca == kUnset || ac == kUnset || ca != ac) continue;
                for (std::uint32_t b = 0; b < n; ++b) {
                    std::int32_t cb = at(c, b), bc = at(b, c);
                    if (cb == kUnset || bc == kUnset || cb != bc) continue;
                    std::int32_t ab = at(a, b);
                    if (ab != kUnset) {
                        std::int32_t l = at(c, std::uint32_t(ab));
                        std::int32_t r = at(std::uint32_t(ab), c);
                        if (l != kUnset && r != kUnset && l != r) return false;
                    }
                    if (auto s = sum[a * n + b]) {
                        std::int32_t l = at(c, *s);
                        std::int32_t r = at(*s, c);
                        if (l != kUnset && r != kUnset && l != r) return false;
                    }
                }
            }
        return true;
    }

    std::uint32_t index_of(const ElementRef& x) const {
        auto it = std::lower_bound(carrier.begin(), carrier.end(), x);
        return std::uint32_t(it - carrier.begin());
    }

    void dfs(std::size_t pos) {
        if (found.size() >= max_solutions) return;
        if (pos == open.size()) {
            emit();
            return;
        }
        std::size_t cell = open[pos];
        for (std::uint32_t v = 0; v < n; ++v) {
            cells[cell] = std::int32_t(v);
            if (consistent()) dfs(pos + 1);
            if (found.size() >= max_solutions) break;
        }
        cells[cell] = kUnset;
    }

    void emit() {
        std::vector<std::uint32_t> table(cells.begin(), cells.end());
        auto candidate = with_product(*model, table);
        auto window = candidate->carrier();
        if (audit_sea(*candidate, window).clean())
            found.push_back(ProductTable{std::move(table)});
    }
};

} // namespace

std::vector<ProductTable> enumerate_products(const AlgebraModel& model,
                                             std::size_t max_solutions) {
    if (!model.is_finite())
        throw ModelError("product search needs a finite carrier");
    if (model.carrier_size() > 8)
        throw ModelError("product search is capped at carrier size 8");

    SearchState st;
    st.model = &model;
    st.carrier = model.carrier();
    st.n = st.carrier.size();
    st.max_solutions = max_solutions == 0 ? SIZE_MAX : max_solutions;

    auto ea = audit_ea(model, st.carrier);
    if (!ea.clean())
        throw ModelError("sum table fails the effect-algebra audit (" +
                         std::to_string(ea.violations.size()) + " violations); not searching");

    st.zero = st.index_of(model.zero());
    st.one = st.index_of(model.one());
    st.sum.resize(st.n * st.n);
    for (std::uint32_t l = 0; l < st.n; ++l)
        for (std::uint32_t r = 0; r < st.n; ++r)
            if (auto s = model.oplus(st.carrier[l], st.carrier[r]))
                st.sum[l * st.n + r] = st.index_of(*s);

    // unit row fixed by the unit law; zero and unit columns by their
    // derived laws (the final audit re-verifies both)
    st.cells.assign(st.n * st.n, kUnset);
    for (std::uint32_t x = 0; x < st.n; ++x) {
        st.cells[st.one * st.n + x] = std::int32_t(x);
        st.cells[x * st.n + st.zero] = std::int32_t(st.zero);
        st.cells[x * st.n + st.one] = std::int32_t(x);
    }
    for (std::size_t i = 0; i < st.n * st.n; ++i)
        if (st.cells[i] == kUnset) st.open.push_back(i);

    st.dfs(0);
    std::sort(st.found.begin(), st.found.end());
    return st.found;
}

} // namespace sea
