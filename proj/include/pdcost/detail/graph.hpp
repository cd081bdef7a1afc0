#pragma once

#include "pdcost/detail/num.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <vector>

namespace pdcost::detail {

using Adjacency = std::vector<std::vector<std::uint32_t>>;

struct Sccs {
    std::vector<std::uint32_t> comp;  // node -> component
    std::uint32_t count = 0;          // components numbered in completion order
};

/// Tarjan's algorithm without recursion. A component is completed only after
/// every component reachable from it, so increasing ids are callee-first.
Sccs strongly_connected(const Adjacency& adj);

/// Nodes reachable from `sources`.
std::vector<bool> reachable_from(const Adjacency& adj, const std::vector<std::uint32_t>& sources);

template <class Num>
struct WEdge {
    std::uint32_t from;
    std::uint32_t to;
    Ext<Num> w;  // never +∞
};

struct CycleFlags {
    bool has_cycle = false;
    bool has_negative = false;
    bool has_nonpositive = false;
};

/// Per component: does some cycle inside it have negative / nonpositive weight.
template <class Num>
std::vector<CycleFlags> cycle_flags(std::size_t n, const std::vector<WEdge<Num>>& edges, const Sccs& sccs) {
    std::vector<CycleFlags> flags(sccs.count);
    std::vector<std::vector<std::uint32_t>> internal(sccs.count);
    for (std::uint32_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        auto c = sccs.comp[e.from];
        if (c != sccs.comp[e.to]) continue;
        internal[c].push_back(i);
        flags[c].has_cycle = true;
        if (e.w.is_neg()) flags[c].has_negative = true;
    }

    std::vector<Num> dist(n);
    std::vector<std::uint32_t> len(n, 0);
    std::vector<char> queued(n, 0);
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> out(n);  // (to, edge)
    for (std::uint32_t c = 0; c < sccs.count; ++c) {
        auto& f = flags[c];
        if (!f.has_cycle) continue;
        if (f.has_negative) {
            f.has_nonpositive = true;
            continue;
        }
        std::vector<std::uint32_t> nodes;
        for (auto i : internal[c]) {
            nodes.push_back(edges[i].from);
            out[edges[i].from].emplace_back(edges[i].to, i);
        }
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        const std::uint32_t size = static_cast<std::uint32_t>(nodes.size());

        // Shortest paths from a virtual source joined to every node with
        // weight 0. A relaxation path of `size` edges proves a negative cycle.
        std::deque<std::uint32_t> queue;
        for (auto u : nodes) {
            dist[u] = Num{};
            len[u] = 0;
            queued[u] = 1;
            queue.push_back(u);
        }
        bool negative = false;
        while (!queue.empty() && !negative) {
            auto u = queue.front();
            queue.pop_front();
            queued[u] = 0;
            for (auto [v, i] : out[u]) {
                Num cand = num_add(dist[u], edges[i].w.v);
                if (cand < dist[v]) {
                    dist[v] = cand;
                    len[v] = len[u] + 1;
                    if (len[v] >= size) {
                        negative = true;
                        break;
                    }
                    if (!queued[v]) {
                        queued[v] = 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        for (auto u : nodes) queued[u] = 0;
        if (negative) {
            f.has_negative = f.has_nonpositive = true;
        } else {
            // zero cycle iff the subgraph of tight edges has a cycle
            std::vector<std::uint32_t> indeg(size, 0);
            auto local = [&](std::uint32_t u) {
                return static_cast<std::uint32_t>(std::lower_bound(nodes.begin(), nodes.end(), u) - nodes.begin());
            };
            std::vector<std::vector<std::uint32_t>> tight(size);
            for (auto i : internal[c]) {
                const auto& e = edges[i];
                if (num_add(dist[e.from], e.w.v) == dist[e.to]) {
                    tight[local(e.from)].push_back(local(e.to));
                    ++indeg[local(e.to)];
                }
            }
            std::vector<std::uint32_t> work;
            for (std::uint32_t u = 0; u < size; ++u)
                if (indeg[u] == 0) work.push_back(u);
            std::uint32_t removed = 0;
            while (!work.empty()) {
                auto u = work.back();
                work.pop_back();
                ++removed;
                for (auto v : tight[u])
                    if (--indeg[v] == 0) work.push_back(v);
            }
            f.has_nonpositive = removed < size;
        }
        for (auto u : nodes) out[u].clear();
    }
    return flags;
}

}  // namespace pdcost::detail
