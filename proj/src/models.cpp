#include "sea/models.hpp"

#include <algorithm>
#include <charconv>

#include "sea/model_io.hpp"

namespace sea {

namespace {

bool parse_i64(std::string_view s, std::int64_t& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

// ---------------------------------------------------------------------------
// Boolean algebra on subsets of {1..k}, elements as bitmasks.

class BooleanModel final : public AlgebraModel {
public:
    explicit BooleanModel(int k)
        : AlgebraModel("boolean(k=" + std::to_string(k) + ")", finite_ref(0),
                       finite_ref((std::uint32_t(1) << k) - 1)),
          k_(k),
          full_((std::uint32_t(1) << k) - 1) {}

    bool is_finite() const override { return true; }

    bool contains(const ElementRef& x) const override {
        const auto* f = x.as<FiniteIdx>();
        return f && f->index <= full_;
    }

    std::optional<ElementRef> oplus(const ElementRef& a, const ElementRef& b) const override {
        std::uint32_t x = mask(a), y = mask(b);
        if (x & y) return std::nullopt;
        return finite_ref(x | y);
    }

    ElementRef circ(const ElementRef& a, const ElementRef& b) const override {
        return finite_ref(mask(a) & mask(b));
    }

    SupplementResult orthosupplement(const ElementRef& x) const override {
        return {SupplementResult::Status::Unique, finite_ref(full_ & ~mask(x))};
    }

    std::vector<ElementRef> window(std::int64_t) const override { return carrier(); }
    std::int64_t default_window_bound() const override { return 0; }

    std::vector<ElementRef> difference_candidates(const ElementRef& b,
                                                  const ElementRef& a) const override {
        std::uint32_t x = mask(a), y = mask(b);
        if ((x & y) != x) return {};
        return {finite_ref(y & ~x)};
    }

    std::vector<ElementRef> carrier() const override {
        std::vector<ElementRef> out;
        out.reserve(std::size_t(full_) + 1);
        for (std::uint32_t i = 0; i <= full_; ++i) out.push_back(finite_ref(i));
        return out;
    }
    std::size_t carrier_size() const override { return std::size_t(full_) + 1; }

    std::string label(const ElementRef& x) const override {
        std::uint32_t v = x.as<FiniteIdx>() ? x.as<FiniteIdx>()->index : 0;
        if (v == 0) return "{}";
        std::string out = "{";
        for (int i = 0; i < k_; ++i)
            if (v & (std::uint32_t(1) << i)) {
                if (out.size() > 1) out += '.';
                out += std::to_string(i + 1);
            }
        return out + "}";
    }

    std::optional<ElementRef> parse_element(std::string_view text) const override {
        if (text == "0") return zero();
        if (text == "1") return one();
        if (text.size() < 2 || text.front() != '{' || text.back() != '}') return std::nullopt;
        std::uint32_t v = 0;
        std::string_view body = text.substr(1, text.size() - 2);
        while (!body.empty()) {
            auto dot = body.find('.');
            std::string_view tok = body.substr(0, dot);
            std::int64_t member = 0;
            if (!parse_i64(tok, member) || member < 1 || member > k_) return std::nullopt;
            v |= std::uint32_t(1) << (member - 1);
            body = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
        }
        return finite_ref(v);
    }

    std::string element_syntax() const override { return "{N.N...} | {} | 0 | 1"; }

private:
    std::uint32_t mask(const ElementRef& x) const {
        require_element(x);
        return x.as<FiniteIdx>()->index;
    }

    int k_;
    std::uint32_t full_;
};

// ---------------------------------------------------------------------------
// Rational unit interval.

class ScaleModel final : public AlgebraModel {
public:
    ScaleModel()
        : AlgebraModel("scale", scale_ref(Rational(0, 1)), scale_ref(Rational(1, 1))) {}

    bool is_finite() const override { return false; }

    bool contains(const ElementRef& x) const override {
        const auto* s = x.as<ScaleSym>();
        return s && s->q >= Rational(0, 1) && s->q <= Rational(1, 1);
    }

    std::optional<ElementRef> oplus(const ElementRef& a, const ElementRef& b) const override {
        Rational sum = val(a) + val(b);
        if (sum > Rational(1, 1)) return std::nullopt;
        return scale_ref(sum);
    }

    ElementRef circ(const ElementRef& a, const ElementRef& b) const override {
        return scale_ref(val(a) * val(b));
    }

    SupplementResult orthosupplement(const ElementRef& x) const override {
        return {SupplementResult::Status::Unique, scale_ref(Rational(1, 1) - val(x))};
    }

    std::vector<ElementRef> window(std::int64_t bound) const override {
        ElementSet out;
        for (std::int64_t den = 1; den <= std::max<std::int64_t>(bound, 1); ++den)
            for (std::int64_t num = 0; num <= den; ++num)
                out.insert(scale_ref(Rational(num, den)));
        return {out.begin(), out.end()};
    }
    std::int64_t default_window_bound() const override { return 8; }
    std::string window_descriptor(std::int64_t bound) const override {
        return "scale, denominators <= " + std::to_string(bound) + " (" +
               std::to_string(window(bound).size()) + " elements)";
    }

    std::vector<ElementRef> difference_candidates(const ElementRef& b,
                                                  const ElementRef& a) const override {
        Rational d = val(b) - val(a);
        if (d < Rational(0, 1)) return {};
        return {scale_ref(d)};
    }

    std::string label(const ElementRef& x) const override {
        const auto* s = x.as<ScaleSym>();
        return s ? s->q.str() : "<foreign>";
    }

    std::optional<ElementRef> parse_element(std::string_view text) const override {
        auto q = Rational::parse(text);
        if (!q) return std::nullopt;
        ElementRef ref = scale_ref(*q);
        if (!contains(ref)) return std::nullopt;
        return ref;
    }

    std::string element_syntax() const override { return "P/Q in [0,1] | 0 | 1"; }

private:
    Rational val(const ElementRef& x) const {
        require_element(x);
        return x.as<ScaleSym>()->q;
    }
};

// ---------------------------------------------------------------------------
// Horizontal sum of two unit intervals.

class HorizontalSumModel final : public AlgebraModel {
public:
    HorizontalSumModel() : AlgebraModel("hs", hs_zero(), hs_one()) {}

    bool is_finite() const override { return false; }

    bool contains(const ElementRef& x) const override {
        const auto* h = x.as<HSSym>();
        if (!h) return false;
        switch (h->kind) {
        case HSSym::Kind::Zero:
        case HSSym::Kind::One:
            return h->q == Rational();
        default:
            return h->q > Rational(0, 1) && h->q < Rational(1, 1);
        }
    }

    std::optional<ElementRef> oplus(const ElementRef& a, const ElementRef& b) const override {
        const HSSym& x = sym(a);
        const HSSym& y = sym(b);
        if (x.kind == HSSym::Kind::Zero) return b;
        if (y.kind == HSSym::Kind::Zero) return a;
        if (x.kind == HSSym::Kind::One || y.kind == HSSym::Kind::One) return std::nullopt;
        if (x.kind != y.kind) return std::nullopt; // distinct copies are incompatible
        Rational sum = x.q + y.q;
        if (sum > Rational(1, 1)) return std::nullopt;
        if (sum == Rational(1, 1)) return one();
        return ElementRef(HSSym{x.kind, sum});
    }

    ElementRef circ(const ElementRef& a, const ElementRef& b) const override {
        const HSSym& x = sym(a);
        const HSSym& y = sym(b);
        if (x.kind == HSSym::Kind::Zero || y.kind == HSSym::Kind::Zero) return zero();
        if (x.kind == HSSym::Kind::One) return b;
        if (y.kind == HSSym::Kind::One) return a;
        // product lands in the first argument's copy
        return ElementRef(HSSym{x.kind, x.q * y.q});
    }

    SupplementResult orthosupplement(const ElementRef& x) const override {
        const HSSym& h = sym(x);
        switch (h.kind) {
        case HSSym::Kind::Zero: return {SupplementResult::Status::Unique, one()};
        case HSSym::Kind::One: return {SupplementResult::Status::Unique, zero()};
        default:
            return {SupplementResult::Status::Unique,
                    ElementRef(HSSym{h.kind, Rational(1, 1) - h.q})};
        }
    }

    std::vector<ElementRef> window(std::int64_t bound) const override {
        ElementSet out{zero(), one()};
        for (std::int64_t den = 2; den <= bound; ++den)
            for (std::int64_t num = 1; num < den; ++num) {
                out.insert(hs_left(Rational(num, den)));
                out.insert(hs_right(Rational(num, den)));
            }
        return {out.begin(), out.end()};
    }
    std::int64_t default_window_bound() const override { return 8; }
    std::string window_descriptor(std::int64_t bound) const override {
        return "hs, denominators <= " + std::to_string(bound) + " (" +
               std::to_string(window(bound).size()) + " elements)";
    }

    std::vector<ElementRef> difference_candidates(const ElementRef& b,
                                                  const ElementRef& a) const override {
        // a + c = b forces c into {0, b, a', same-copy difference}
        std::vector<ElementRef> out{zero(), b};
        if (auto sup = supplement(a)) out.push_back(*sup);
        const HSSym& x = sym(a);
        const HSSym& y = sym(b);
        if ((x.kind == HSSym::Kind::Left || x.kind == HSSym::Kind::Right) &&
            y.kind == x.kind && y.q > x.q)
            out.push_back(ElementRef(HSSym{x.kind, y.q - x.q}));
        return out;
    }

    std::string label(const ElementRef& x) const override {
        const auto* h = x.as<HSSym>();
        if (!h) return "<foreign>";
        switch (h->kind) {
        case HSSym::Kind::Zero: return "0";
        case HSSym::Kind::One: return "1";
        case HSSym::Kind::Left: return "L:" + h->q.str();
        default: return "R:" + h->q.str();
        }
    }

    std::optional<ElementRef> parse_element(std::string_view text) const override {
        if (text == "0") return zero();
        if (text == "1") return one();
        if (text.size() < 3 || text[1] != ':') return std::nullopt;
        auto q = Rational::parse(text.substr(2));
        if (!q) return std::nullopt;
        if (*q == Rational(0, 1)) return zero();
        if (*q == Rational(1, 1)) return one();
        ElementRef ref = text[0] == 'L'   ? hs_left(*q)
                         : text[0] == 'R' ? hs_right(*q)
                                          : ElementRef{};
        if (!contains(ref)) return std::nullopt;
        return ref;
    }

    std::string element_syntax() const override { return "L:P/Q | R:P/Q | 0 | 1"; }

private:
    const HSSym& sym(const ElementRef& x) const {
        require_element(x);
        return *x.as<HSSym>();
    }
};

// ---------------------------------------------------------------------------
// The two-indexed family algebra.

class E0Model final : public AlgebraModel {
public:
    explicit E0Model(int n0)
        : AlgebraModel("e0(n0=" + std::to_string(n0) + ")", e0_zero(), e0_one()), n0_(n0) {}

    bool is_finite() const override { return false; }

    bool contains(const ElementRef& x) const override {
        const auto* e = x.as<E0Sym>();
        if (!e) return false;
        switch (e->kind) {
        case E0Sym::Kind::Zero:
        case E0Sym::Kind::One:
            return e->n == 0 && e->m == 0;
        default:
            return e->n >= 0 && e->m >= 0 && e->m <= n0_ - 1 && (e->n != 0 || e->m != 0);
        }
    }

    std::optional<ElementRef> oplus(const ElementRef& a, const ElementRef& b) const override {
        const E0Sym& x = sym(a);
        const E0Sym& y = sym(b);
        if (x.kind == E0Sym::Kind::Zero) return b;
        if (y.kind == E0Sym::Kind::Zero) return a;
        if (x.kind == E0Sym::Kind::One || y.kind == E0Sym::Kind::One) return std::nullopt;
        if (x.kind == E0Sym::Kind::A && y.kind == E0Sym::Kind::A) return add_aa(x, y);
        if (x.kind == E0Sym::Kind::A && y.kind == E0Sym::Kind::B) return add_ab(x, y);
        if (x.kind == E0Sym::Kind::B && y.kind == E0Sym::Kind::A) return add_ab(y, x);
        return std::nullopt; // b + b is never defined
    }

    ElementRef circ(const ElementRef& a, const ElementRef& b) const override {
        const E0Sym& x = sym(a);
        const E0Sym& y = sym(b);
        if (x.kind == E0Sym::Kind::Zero || y.kind == E0Sym::Kind::Zero) return zero();
        if (x.kind == E0Sym::Kind::One) return b;
        if (y.kind == E0Sym::Kind::One) return a;
        if (x.kind == E0Sym::Kind::A && y.kind == E0Sym::Kind::A) return zero();
        if (x.kind == E0Sym::Kind::A) return a; // a o b = a
        if (y.kind == E0Sym::Kind::A) return b; // b o a = a, by symmetry
        return wrap(E0Sym::Kind::B, x.n + y.n, x.m + y.m);
    }

    SupplementResult orthosupplement(const ElementRef& x) const override {
        const E0Sym& e = sym(x);
        switch (e.kind) {
        case E0Sym::Kind::Zero: return {SupplementResult::Status::Unique, one()};
        case E0Sym::Kind::One: return {SupplementResult::Status::Unique, zero()};
        case E0Sym::Kind::A:
            return {SupplementResult::Status::Unique, e0_b(e.n, e.m)};
        default:
            return {SupplementResult::Status::Unique, e0_a(e.n, e.m)};
        }
    }

    std::vector<ElementRef> window(std::int64_t bound) const override {
        std::vector<ElementRef> out{zero(), one()};
        for (std::int64_t n = 0; n <= bound; ++n)
            for (std::int64_t m = 0; m <= n0_ - 1; ++m) {
                if (n == 0 && m == 0) continue;
                out.push_back(e0_a(n, m));
            }
        for (std::int64_t n = 0; n <= bound; ++n)
            for (std::int64_t m = 0; m <= n0_ - 1; ++m) {
                if (n == 0 && m == 0) continue;
                out.push_back(e0_b(n, m));
            }
        std::sort(out.begin(), out.end());
        return out;
    }
    std::int64_t default_window_bound() const override { return 6; }
    std::string window_descriptor(std::int64_t bound) const override {
        return name() + ", first index <= " + std::to_string(bound) + " (" +
               std::to_string(window(bound).size()) + " elements)";
    }

    std::vector<ElementRef> difference_candidates(const ElementRef& b,
                                                  const ElementRef& a) const override {
        // any c with a + c = b has first index <= n_a + n_b + n0
        const E0Sym& x = sym(a);
        const E0Sym& y = sym(b);
        return window(x.n + y.n + n0_);
    }

    std::string label(const ElementRef& x) const override {
        const auto* e = x.as<E0Sym>();
        if (!e) return "<foreign>";
        switch (e->kind) {
        case E0Sym::Kind::Zero: return "0";
        case E0Sym::Kind::One: return "1";
        case E0Sym::Kind::A:
            return "a:" + std::to_string(e->n) + "," + std::to_string(e->m);
        default:
            return "b:" + std::to_string(e->n) + "," + std::to_string(e->m);
        }
    }

    std::optional<ElementRef> parse_element(std::string_view text) const override {
        if (text == "0") return zero();
        if (text == "1") return one();
        if (text.size() < 3 || text[1] != ':') return std::nullopt;
        auto comma = text.find(',');
        if (comma == std::string_view::npos) return std::nullopt;
        std::int64_t n = 0, m = 0;
        if (!parse_i64(text.substr(2, comma - 2), n)) return std::nullopt;
        if (!parse_i64(text.substr(comma + 1), m)) return std::nullopt;
        ElementRef ref = text[0] == 'a' ? e0_a(n, m) : text[0] == 'b' ? e0_b(n, m) : ElementRef{};
        if (!contains(ref)) return std::nullopt;
        return ref;
    }

    std::string element_syntax() const override { return "a:N,M | b:N,M | 0 | 1"; }

private:
    const E0Sym& sym(const ElementRef& x) const {
        require_element(x);
        return *x.as<E0Sym>();
    }

    // second index wraps modulo n0 with a carry of n0 into the first
    ElementRef wrap(E0Sym::Kind kind, std::int64_t n, std::int64_t m) const {
        if (m >= n0_) {
            n += n0_;
            m -= n0_;
        }
        return ElementRef(E0Sym{kind, n, m});
    }

    std::optional<ElementRef> add_aa(const E0Sym& x, const E0Sym& y) const {
        return wrap(E0Sym::Kind::A, x.n + y.n, x.m + y.m);
    }

    // a(n,m) + b(r,s), in the order the cases exclude each other
    std::optional<ElementRef> add_ab(const E0Sym& a, const E0Sym& b) const {
        const std::int64_t n = a.n, m = a.m, r = b.n, s = b.m;
        if (n == r && m == s) return one();
        if (n <= r && m <= s) return e0_b(r - n, s - m);
        if (n + n0_ <= r && m > s) return e0_b(r - n - n0_, s - m + n0_);
        return std::nullopt;
    }

    int n0_;
};

} // namespace

std::unique_ptr<AlgebraModel> make_boolean(int k) {
    if (k < 1 || k > 16)
        throw ModelError("boolean model requires 1 <= k <= 16");
    return std::make_unique<BooleanModel>(k);
}

std::unique_ptr<AlgebraModel> make_scale() { return std::make_unique<ScaleModel>(); }

std::unique_ptr<AlgebraModel> make_horizontal_sum() {
    return std::make_unique<HorizontalSumModel>();
}

std::unique_ptr<AlgebraModel> make_e0(int n0) {
    if (n0 < 2)
        throw ModelError("e0 model requires n0 >= 2");
    return std::make_unique<E0Model>(n0);
}

std::unique_ptr<AlgebraModel> load_finite(const std::filesystem::path& file) {
    return std::make_unique<FiniteModel>(read_model_file(file));
}

} // namespace sea
