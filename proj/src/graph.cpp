#include "pdcost/detail/graph.hpp"

#include <limits>

namespace pdcost::detail {

Sccs strongly_connected(const Adjacency& adj) {
    const auto n = static_cast<std::uint32_t>(adj.size());
    constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
    Sccs result;
    result.comp.assign(n, kUnvisited);
    std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<std::uint32_t> stack;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> call;  // (node, next edge)
    std::uint32_t counter = 0;

    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [u, next] = call.back();
            if (next < adj[u].size()) {
                auto v = adj[u][next++];
                if (index[v] == kUnvisited) {
                    index[v] = low[v] = counter++;
                    stack.push_back(v);
                    on_stack[v] = 1;
                    call.emplace_back(v, 0);
                } else if (on_stack[v]) {
                    low[u] = std::min(low[u], index[v]);
                }
                continue;
            }
            std::uint32_t done = u;
            call.pop_back();
            if (!call.empty()) {
                auto parent = call.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] == index[done]) {
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    result.comp[w] = result.count;
                } while (w != done);
                ++result.count;
            }
        }
    }
    return result;
}

std::vector<bool> reachable_from(const Adjacency& adj, const std::vector<std::uint32_t>& sources) {
    std::vector<bool> seen(adj.size(), false);
    std::vector<std::uint32_t> work;
    for (auto s : sources)
        if (!seen[s]) {
            seen[s] = true;
            work.push_back(s);
        }
    while (!work.empty()) {
        auto u = work.back();
        work.pop_back();
        for (auto v : adj[u])
            if (!seen[v]) {
                seen[v] = true;
                work.push_back(v);
            }
    }
    return seen;
}

}  // namespace pdcost::detail
