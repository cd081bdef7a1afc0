#include "pdcost/detail/summary.hpp"

#include "pdcost/error.hpp"

#include <deque>
#include <map>

namespace pdcost::detail {

namespace {

constexpr std::uint64_t kPackLimit = std::uint64_t{1} << 21;

struct ChainFact {
    std::uint32_t t;
    std::uint32_t l;
    StateId s;
    bool f;
};

struct Waiter {
    std::uint32_t t;
    std::uint32_t l;
    bool f;
};

}  // namespace

PopSummary::PopSummary(const Pda& pda) : nsym_(pda.num_symbols()) {
    const auto nq = pda.num_states();
    if (nq >= kPackLimit || nsym_ >= kPackLimit || pda.transitions.size() >= kPackLimit)
        throw RangeError("automaton too large for pop summaries");
    ends_.assign(nq * nsym_, {});
    const auto accepting = pda.accepting_mask();

    // bit 0: fact holds without a visit requirement, bit 1: with a visit
    std::unordered_map<std::uint64_t, std::uint8_t> chain_bits;
    std::vector<std::uint8_t> triple_bits;
    std::unordered_map<std::uint64_t, std::vector<Waiter>> waiters;

    std::deque<ChainFact> chain_work;
    std::deque<std::pair<std::uint32_t, bool>> triple_work;

    auto add_triple = [&](StateId p, SymbolId x, StateId r, bool f) {
        std::uint64_t key = pack3(p, x, r);
        auto [it, inserted] = index_.try_emplace(key, static_cast<std::uint32_t>(triples_.size()));
        if (inserted) {
            triples_.push_back(Triple{p, x, r, false});
            triple_bits.push_back(0);
            ends_[p * nsym_ + x].push_back(End{r, it->second});
        }
        std::uint32_t id = it->second;
        std::uint8_t bit = f ? 2 : 1;
        if (triple_bits[id] & bit) return;
        triple_bits[id] |= bit;
        if (f) triples_[id].visit = true;
        triple_work.emplace_back(id, f);
    };
    auto add_chain = [&](std::uint32_t t, std::uint32_t l, StateId s, bool f) {
        std::uint8_t& bits = chain_bits[pack3(t, l, s)];
        std::uint8_t bit = f ? 2 : 1;
        if (bits & bit) return;
        bits |= bit;
        chain_work.push_back(ChainFact{t, l, s, f});
    };

    for (std::uint32_t i = 0; i < pda.transitions.size(); ++i) {
        const auto& t = pda.transitions[i];
        bool f = accepting[t.to];
        if (t.push.empty()) {
            if (!t.reads_bottom()) add_triple(t.from, t.top, t.to, f);
        } else {
            add_chain(i, static_cast<std::uint32_t>(t.push.size()), t.to, f);
        }
    }

    while (!chain_work.empty() || !triple_work.empty()) {
        while (!chain_work.empty()) {
            ChainFact c = chain_work.front();
            chain_work.pop_front();
            const auto& t = pda.transitions[c.t];
            if (c.l == 0) {
                if (!t.reads_bottom()) add_triple(t.from, t.top, c.s, c.f);
                continue;
            }
            SymbolId y = t.push[c.l - 1];
            waiters[pack3(c.s, y, 0)].push_back(Waiter{c.t, c.l, c.f});
            const auto& es = ends_[c.s * nsym_ + y];
            for (std::size_t k = 0; k < es.size(); ++k) {
                std::uint32_t id = es[k].index;
                StateId r = es[k].r;
                if (triple_bits[id] & 1) add_chain(c.t, c.l - 1, r, c.f);
                if (triple_bits[id] & 2) add_chain(c.t, c.l - 1, r, true);
            }
        }
        while (!triple_work.empty()) {
            auto [id, f] = triple_work.front();
            triple_work.pop_front();
            const Triple tr = triples_[id];
            auto it = waiters.find(pack3(tr.p, tr.x, 0));
            if (it == waiters.end()) continue;
            for (std::size_t k = 0; k < it->second.size(); ++k) {
                Waiter w = it->second[k];
                add_chain(w.t, w.l - 1, tr.r, w.f || f);
            }
        }
    }
}

std::optional<std::uint32_t> PopSummary::find(StateId p, SymbolId x, StateId r) const {
    auto it = index_.find(pack3(p, x, r));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<NonterminalId> append_triple_grammar(const Pda& pda, const PopSummary& summary, Cfg& g,
                                                 const TripleNaming* naming) {
    const auto& triples = summary.triples();
    std::vector<NonterminalId> nt(triples.size());
    for (std::size_t i = 0; i < triples.size(); ++i)
        nt[i] = g.add_nonterminal(naming && naming->triple ? naming->triple(triples[i]) : std::string());

    // helper[(t, l, s)] lists (r, nonterminal) for words popping y_l..y_1 from s,
    // l >= 2. For l = 1 the triple itself is used.
    std::map<std::tuple<std::size_t, std::size_t, StateId>, std::vector<std::pair<StateId, NonterminalId>>>
        helpers;

    std::function<const std::vector<std::pair<StateId, NonterminalId>>&(std::size_t, std::size_t, StateId)>
        helper = [&](std::size_t ti, std::size_t l, StateId s)
        -> const std::vector<std::pair<StateId, NonterminalId>>& {
        auto key = std::make_tuple(ti, l, s);
        auto found = helpers.find(key);
        if (found != helpers.end()) return found->second;
        const auto& t = pda.transitions[ti];
        std::map<StateId, std::vector<std::vector<GSymbol>>> bodies;
        for (const auto& e : summary.ends(s, t.push[l - 1])) {
            if (l == 2) {
                for (const auto& e2 : summary.ends(e.r, t.push[0]))
                    bodies[e2.r].push_back({GSymbol::n(nt[e.index]), GSymbol::n(nt[e2.index])});
            } else {
                const auto& below = helper(ti, l - 1, e.r);
                for (const auto& [r, h] : below)
                    bodies[r].push_back({GSymbol::n(nt[e.index]), GSymbol::n(h)});
            }
        }
        std::vector<std::pair<StateId, NonterminalId>> out;
        for (auto& [r, bs] : bodies) {
            NonterminalId h = g.add_nonterminal(naming && naming->helper ? naming->helper(ti, l, s, r)
                                                                         : std::string());
            for (auto& b : bs) g.add(h, std::move(b));
            out.emplace_back(r, h);
        }
        return helpers.emplace(key, std::move(out)).first->second;
    };

    for (std::size_t ti = 0; ti < pda.transitions.size(); ++ti) {
        const auto& t = pda.transitions[ti];
        if (t.reads_bottom()) continue;
        const GSymbol a = GSymbol::t(t.letter);
        const std::size_t k = t.push.size();
        auto head = [&](StateId r) -> std::optional<NonterminalId> {
            auto id = summary.find(t.from, t.top, r);
            if (!id) return std::nullopt;
            return nt[*id];
        };
        if (k == 0) {
            if (auto h = head(t.to)) g.add(*h, {a});
            continue;
        }
        for (const auto& e : summary.ends(t.to, t.push[k - 1])) {
            if (k == 1) {
                if (auto h = head(e.r)) g.add(*h, {a, GSymbol::n(nt[e.index])});
            } else if (k == 2) {
                for (const auto& e2 : summary.ends(e.r, t.push[0]))
                    if (auto h = head(e2.r))
                        g.add(*h, {a, GSymbol::n(nt[e.index]), GSymbol::n(nt[e2.index])});
            } else {
                for (const auto& [r, hn] : helper(ti, k - 1, e.r))
                    if (auto h = head(r)) g.add(*h, {a, GSymbol::n(nt[e.index]), GSymbol::n(hn)});
            }
        }
    }
    return nt;
}

}  // namespace pdcost::detail
