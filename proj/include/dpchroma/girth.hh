#pragma once

#include "dpchroma/graph.hh"
#include "dpchroma/oriented_edge_set.hh"

#include <compare>
#include <optional>
#include <string>

namespace dpchroma {

/// A cycle length or infinity. Infinity compares above every finite value.
class Girth {
public:
    static Girth infinite() { return Girth(); }
    static Girth finite(std::size_t length) { return Girth(length); }

    bool is_finite() const { return value_.has_value(); }
    bool is_infinite() const { return !value_; }
    /// Precondition: is_finite().
    std::size_t value() const { return *value_; }
    bool is_even() const { return value_ && *value_ % 2 == 0; }
    bool is_odd() const { return value_ && *value_ % 2 == 1; }

    std::string to_string() const { return value_ ? std::to_string(*value_) : "infinite"; }

    friend bool operator==(const Girth &, const Girth &) = default;
    friend std::strong_ordering operator<=>(const Girth & a, const Girth & b)
    {
        if (a.value_ && b.value_)
            return *a.value_ <=> *b.value_;
        if (!a.value_ && !b.value_)
            return std::strong_ordering::equal;
        return a.value_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }

private:
    Girth() = default;
    explicit Girth(std::size_t v) : value_(v) {}
    std::optional<std::size_t> value_;
};

struct GirthResult {
    Girth girth = Girth::infinite();
    std::optional<Cycle> witness; ///< present iff girth is finite
};

/// Shortest cycle through edge e: a shortest endpoint path in G - e closed by e.
/// The witness runs from the low endpoint of e to the high one.
GirthResult edge_girth(const Graph & g, EdgeIndex e);

/// Shortest cycle meeting `e0` in an odd number of edges, searched as the
/// shortest (v,0)-(v,1) path in the parity double cover.
GirthResult edge_set_girth(const Graph & g, const EdgeSubset & e0);

/// Distance from (from, from_parity) to (to, to_parity) in the parity double
/// cover of (g, e0); nullopt when unreachable.
std::optional<std::size_t> parity_cover_distance(const Graph & g, const EdgeSubset & e0,
                                                 Vertex from, int from_parity,
                                                 Vertex to, int to_parity);

/// Number of edges of `estar` traversed tail-to-head when walking `c` in
/// its stored order.
std::size_t forward_count(const Graph & g, const OrientedEdgeSet & estar, const Cycle & c);

/// Balanced: no member of `estar` on the cycle, or an even number of them
/// with exactly half traversed forward.
bool balanced_on(const Graph & g, const OrientedEdgeSet & estar, const Cycle & c);

struct BalanceVerdict {
    bool balanced = true;
    std::optional<Cycle> witness; ///< first cycle shorter than the bound that fails
};

/// Tests every cycle with fewer than `bound` edges. The cycle cap is passed
/// to enumerate_cycles; its BudgetExceeded propagates.
BalanceVerdict check_balance(const Graph & g, const OrientedEdgeSet & estar, std::size_t bound,
                             std::size_t cycle_cap = default_cycle_cap);

} // namespace dpchroma
