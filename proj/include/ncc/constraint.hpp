#pragma once

#include <cstddef>
#include <vector>

#include "ncc/bitword.hpp"

namespace ncc {

/// Reduce a forbidden set to its unique factor-minimal form: drop every word
/// that contains another member as a contiguous factor (duplicates included).
std::vector<BitWord> minimal_forbidden_set(const std::vector<BitWord>& forbidden);

/// Binary finite-type constraint given by a finite set of forbidden factors.
/// Immutable after construction; all queries are const and thread-safe.
class FiniteTypeConstraint {
public:
    static constexpr std::size_t default_enum_cap = std::size_t{1} << 24;

    explicit FiniteTypeConstraint(std::vector<BitWord> forbidden);

    const std::vector<BitWord>& forbidden() const { return forbidden_; }
    const std::vector<BitWord>& minimal_forbidden() const { return minimal_; }

    /// Topological order: (longest minimal forbidden word) - 1, or 0 if none.
    int order() const { return order_; }

    bool irreducible() const { return irreducible_; }

    /// True iff w contains no minimal forbidden factor.
    bool allows(const BitWord& w) const;

    /// All allowed words of length n, ascending. Depth-first extension with
    /// suffix pruning; never materializes the full 2^n cube.
    std::vector<BitWord> enumerate_allowed(int n, std::size_t cap = default_enum_cap) const;

    /// Count of allowed words of length n (same traversal, no storage).
    std::size_t count_allowed(int n) const;

    /// Vertex graph on the allowed words of length order(), in enumerate_allowed
    /// order. Edge u -> u' iff u' = drop_first(u)+b and u+b is allowed. For
    /// order 0 the single vertex is the empty word and the matrix entry counts
    /// allowed letters. `essential[i]` marks vertices lying on bi-infinite
    /// allowed paths; these are the vertices the spectral layer uses.
    struct Graph {
        std::vector<BitWord> vertices;
        std::vector<std::vector<int>> adjacency;   // 0/1 (2 on the order-0 full shift)
        std::vector<char> essential;
        std::vector<char> right_extendable;        // lies on arbitrarily long forward paths
        std::vector<char> left_extendable;
        std::vector<int> scc_id;                   // strongly connected component per vertex
    };
    const Graph& graph() const { return graph_; }

    /// Words of length len (>= order) occurring in bi-infinite allowed paths.
    std::vector<BitWord> essential_words(int len, std::size_t cap = default_enum_cap) const;

    std::vector<std::vector<int>> graph_presentation() const { return graph_.adjacency; }

private:
    std::vector<BitWord> forbidden_;
    std::vector<BitWord> minimal_;
    int order_ = 0;
    bool irreducible_ = false;
    Graph graph_;
};

inline int topological_order(const FiniteTypeConstraint& c) { return c.order(); }
inline bool is_irreducible(const FiniteTypeConstraint& c) { return c.irreducible(); }
inline std::vector<BitWord> enumerate_allowed(const FiniteTypeConstraint& c, int n,
                                              std::size_t cap = FiniteTypeConstraint::default_enum_cap) {
    return c.enumerate_allowed(n, cap);
}
inline std::vector<std::vector<int>> graph_presentation(const FiniteTypeConstraint& c) {
    return c.graph_presentation();
}

}  // namespace ncc
