#include "ncc/constraint.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ncc/errors.hpp"

namespace ncc {
namespace {

// Iterative Tarjan SCC; returns component id per vertex, ids in reverse
// topological order of the condensation.
std::vector<int> strongly_connected_components(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    int next_index = 0, next_comp = 0;

    struct Frame { int v; std::size_t edge; };
    for (int start = 0; start < n; ++start) {
        if (index[start] != -1) continue;
        std::vector<Frame> frames{{start, 0}};
        index[start] = low[start] = next_index++;
        stack.push_back(start);
        on_stack[start] = 1;
        while (!frames.empty()) {
            auto& [v, edge] = frames.back();
            bool descended = false;
            while (edge < adj[v].size()) {
                int w = adj[v][edge++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
            }
            if (descended) continue;
            if (low[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = next_comp;
                } while (w != v);
                ++next_comp;
            }
            int finished = v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[finished]);
        }
    }
    return comp;
}

std::vector<char> reach(const std::vector<std::vector<int>>& adj, const std::vector<char>& seed) {
    std::vector<char> seen = seed;
    std::vector<int> queue;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v)
        if (seen[v]) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    }
    return seen;
}

}  // namespace

std::vector<BitWord> minimal_forbidden_set(const std::vector<BitWord>& forbidden) {
    std::vector<BitWord> sorted = forbidden;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<BitWord> out;
    for (const BitWord& w : sorted) {
        bool redundant = false;
        for (const BitWord& f : out)
            if (w.contains(f)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(w);
    }
    // shorter words were considered first only within equal lengths; re-scan
    // once so a long word listed early cannot survive a later short factor
    std::vector<BitWord> minimal;
    for (const BitWord& w : out) {
        bool redundant = false;
        for (const BitWord& f : out)
            if (f != w && w.contains(f)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(w);
    }
    return minimal;
}

FiniteTypeConstraint::FiniteTypeConstraint(std::vector<BitWord> forbidden)
    : forbidden_(std::move(forbidden)) {
    std::sort(forbidden_.begin(), forbidden_.end());
    forbidden_.erase(std::unique(forbidden_.begin(), forbidden_.end()), forbidden_.end());
    for (const BitWord& w : forbidden_)
        if (w.empty()) throw std::invalid_argument("empty forbidden word forbids everything");
    minimal_ = minimal_forbidden_set(forbidden_);
    int max_len = 0;
    for (const BitWord& w : minimal_) max_len = std::max(max_len, w.size());
    order_ = minimal_.empty() ? 0 : max_len - 1;

    graph_.vertices = enumerate_allowed(order_);
    const int nv = static_cast<int>(graph_.vertices.size());
    graph_.adjacency.assign(nv, std::vector<int>(nv, 0));
    std::vector<std::vector<int>> adj(nv), radj(nv);
    for (int i = 0; i < nv; ++i) {
        const BitWord& u = graph_.vertices[i];
        for (int b = 0; b < 2; ++b) {
            if (!allows(u.append(b))) continue;
            const BitWord next = order_ == 0 ? u : u.append(b).drop_first();
            const auto it = std::lower_bound(graph_.vertices.begin(), graph_.vertices.end(), next);
            const int j = static_cast<int>(it - graph_.vertices.begin());
            graph_.adjacency[i][j] += 1;   // order 0: both letters loop on the empty word
            if (adj[i].empty() || adj[i].back() != j) adj[i].push_back(j);
            else continue;                 // parallel edge already recorded for reachability
            radj[j].push_back(i);
        }
    }
    graph_.scc_id = strongly_connected_components(adj);

    // cyclic components: more than one vertex, or a self-loop (incl. parallel loops)
    std::vector<int> comp_size(nv, 0);
    for (int v = 0; v < nv; ++v) ++comp_size[graph_.scc_id[v]];
    std::vector<char> in_cycle(nv, 0);
    for (int v = 0; v < nv; ++v) {
        if (comp_size[graph_.scc_id[v]] > 1) {
            in_cycle[v] = 1;
            continue;
        }
        if (graph_.adjacency[v][v] > 0) in_cycle[v] = 1;
    }
    graph_.right_extendable = reach(radj, in_cycle);   // can reach a cycle forward
    graph_.left_extendable = reach(adj, in_cycle);     // reachable from a cycle
    graph_.essential.assign(nv, 0);
    for (int v = 0; v < nv; ++v)
        graph_.essential[v] = graph_.right_extendable[v] && graph_.left_extendable[v];

    // irreducible: the essential vertices form exactly one component, and every
    // vertex occurring in arbitrarily long allowed words (extendable without
    // bound on at least one side) already lies among them
    int essential_comp = -1;
    bool single = true, nonempty = false;
    for (int v = 0; v < nv; ++v) {
        if (!graph_.essential[v]) continue;
        nonempty = true;
        if (essential_comp == -1) essential_comp = graph_.scc_id[v];
        else if (graph_.scc_id[v] != essential_comp) single = false;
    }
    bool longword_covered = true;
    for (int v = 0; v < nv; ++v)
        if ((graph_.right_extendable[v] || graph_.left_extendable[v]) && !graph_.essential[v])
            longword_covered = false;
    irreducible_ = nonempty && single && longword_covered;
}

bool FiniteTypeConstraint::allows(const BitWord& w) const {
    for (const BitWord& f : minimal_)
        if (w.contains(f)) return false;
    return true;
}

namespace {

template <typename Visit>
void walk_allowed(const std::vector<BitWord>& minimal, int n, Visit&& visit) {
    // depth-first extension; a new symbol can only complete a forbidden factor
    // ending at it, so only suffixes of the growing word need checking
    std::function<void(BitWord)> go = [&](BitWord w) {
        if (w.size() == n) {
            visit(w);
            return;
        }
        for (int b = 0; b < 2; ++b) {
            const BitWord next = w.append(b);
            bool ok = true;
            for (const BitWord& f : minimal) {
                if (f.size() > next.size()) continue;
                if (next.suffix(f.size()) == f) {
                    ok = false;
                    break;
                }
            }
            if (ok) go(next);
        }
    };
    go(BitWord{});
}

}  // namespace

std::vector<BitWord> FiniteTypeConstraint::enumerate_allowed(int n, std::size_t cap) const {
    if (n < 0) throw std::invalid_argument("enumerate_allowed: negative length");
    std::vector<BitWord> out;
    walk_allowed(minimal_, n, [&](const BitWord& w) {
        if (out.size() >= cap)
            throw resource_error("allowed-word count at length " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(cap));
        out.push_back(w);
    });
    return out;   // depth-first with 0 before 1 emits in ascending order
}

std::size_t FiniteTypeConstraint::count_allowed(int n) const {
    std::size_t count = 0;
    walk_allowed(minimal_, n, [&](const BitWord&) { ++count; });
    return count;
}

std::vector<BitWord> FiniteTypeConstraint::essential_words(int len, std::size_t cap) const {
    if (len < order_) throw std::invalid_argument("essential_words needs len >= order");
    auto vertex_of = [&](const BitWord& w) {
        const auto it = std::lower_bound(graph_.vertices.begin(), graph_.vertices.end(), w);
        return static_cast<int>(it - graph_.vertices.begin());
    };
    // a word on a bi-infinite path = allowed, leading vertex reachable from a
    // cycle, trailing vertex able to reach one
    std::vector<BitWord> out;
    for (const BitWord& w : enumerate_allowed(len, cap))
        if (graph_.left_extendable[vertex_of(w.prefix(order_))] &&
            graph_.right_extendable[vertex_of(w.suffix(order_))])
            out.push_back(w);
    return out;
}

}  // namespace ncc
