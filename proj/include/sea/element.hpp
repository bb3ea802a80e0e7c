#pragma once

#include <compare>
#include <cstdint>
#include <variant>

#include "sea/rational.hpp"

namespace sea {

// Index into a finite carrier list.
struct FiniteIdx {
    std::uint32_t index = 0;
    friend auto operator<=>(const FiniteIdx&, const FiniteIdx&) = default;
};

// Element of the two-indexed family algebra: 0, 1, a(n,m), b(n,m).
// For A/B: n, m >= 0, m <= n0-1, (n,m) != (0,0). Zero/One carry n = m = 0.
struct E0Sym {
    enum class Kind : std::uint8_t { Zero = 0, One = 1, A = 2, B = 3 };
    Kind kind = Kind::Zero;
    std::int64_t n = 0;
    std::int64_t m = 0;
    friend auto operator<=>(const E0Sym&, const E0Sym&) = default;
};

// Element of the horizontal sum of two rational unit intervals.
// Left/Right carry a rational strictly between 0 and 1; the shared
// endpoints are the Zero/One tags (q = 0 there).
struct HSSym {
    enum class Kind : std::uint8_t { Zero = 0, One = 1, Left = 2, Right = 3 };
    Kind kind = Kind::Zero;
    Rational q;
    friend bool operator==(const HSSym&, const HSSym&) = default;
    friend std::strong_ordering operator<=>(const HSSym& a, const HSSym& b) {
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        return a.q <=> b.q;
    }
};

// Element of the rational unit-interval algebra, 0 <= q <= 1.
struct ScaleSym {
    Rational q;
    friend bool operator==(const ScaleSym&, const ScaleSym&) = default;
    friend std::strong_ordering operator<=>(const ScaleSym& a, const ScaleSym& b) {
        return a.q <=> b.q;
    }
};

// Opaque handle to a carrier element. Equality is canonical: two refs
// are equal iff they denote the same element of the same backend kind.
// The ordering is total and deterministic within a model (finite:
// carrier index; symbolic: tag, then indices) and is what every report
// and canonical sweep uses for tie-breaking.
class ElementRef {
public:
    using Repr = std::variant<FiniteIdx, E0Sym, HSSym, ScaleSym>;

    ElementRef() : repr_(FiniteIdx{0}) {}
    explicit ElementRef(Repr r) : repr_(std::move(r)) {}

    const Repr& repr() const { return repr_; }

    template <typename T>
    const T* as() const { return std::get_if<T>(&repr_); }

    friend bool operator==(const ElementRef& a, const ElementRef& b) {
        return a.repr_ == b.repr_;
    }
    friend std::strong_ordering operator<=>(const ElementRef& a, const ElementRef& b) {
        if (auto c = a.repr_.index() <=> b.repr_.index(); c != 0) return c;
        return std::visit(
            [&](const auto& x) -> std::strong_ordering {
                using T = std::decay_t<decltype(x)>;
                return x <=> *std::get_if<T>(&b.repr_);
            },
            a.repr_);
    }

private:
    Repr repr_;
};

inline ElementRef finite_ref(std::uint32_t index) { return ElementRef(FiniteIdx{index}); }

inline ElementRef e0_zero() { return ElementRef(E0Sym{E0Sym::Kind::Zero, 0, 0}); }
inline ElementRef e0_one() { return ElementRef(E0Sym{E0Sym::Kind::One, 0, 0}); }
inline ElementRef e0_a(std::int64_t n, std::int64_t m) {
    return ElementRef(E0Sym{E0Sym::Kind::A, n, m});
}
inline ElementRef e0_b(std::int64_t n, std::int64_t m) {
    return ElementRef(E0Sym{E0Sym::Kind::B, n, m});
}

inline ElementRef hs_zero() { return ElementRef(HSSym{HSSym::Kind::Zero, Rational()}); }
inline ElementRef hs_one() { return ElementRef(HSSym{HSSym::Kind::One, Rational()}); }
inline ElementRef hs_left(Rational q) { return ElementRef(HSSym{HSSym::Kind::Left, q}); }
inline ElementRef hs_right(Rational q) { return ElementRef(HSSym{HSSym::Kind::Right, q}); }

inline ElementRef scale_ref(Rational q) { return ElementRef(ScaleSym{q}); }

} // namespace sea
