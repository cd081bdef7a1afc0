#include "pdcost/model_io.hpp"

#include "pdcost/error.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace pdcost {

namespace {

struct Token {
    std::string text;
    std::size_t line;
    std::size_t column;
};

using Line = std::vector<Token>;

const std::set<std::string> kSections = {"kind",    "states",    "initial",   "accepting",    "input",
                                         "stack",   "pricing",   "costs",     "buchi",        "trans",
                                         "terminals", "nonterminals", "start", "rules"};

[[noreturn]] void fail(const Token& t, const std::string& msg) { throw ParseError(t.line, t.column, msg); }

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++line_no;
        Line toks;
        std::size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            if (toks.empty() && raw[i] == '#') break;  // comment line
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
            toks.push_back(Token{std::string(raw.substr(i, j - i)), line_no, i + 1});
            i = j;
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

struct Section {
    Token header;
    std::vector<Token> values;  // list sections
    std::vector<Line> entries;  // trans / rules
};

bool is_entry_section(const std::string& name) { return name == "trans" || name == "rules"; }

std::map<std::string, Section> split_sections(const std::vector<Line>& lines) {
    std::map<std::string, Section> out;
    Section* current = nullptr;
    for (const auto& line : lines) {
        const auto& first = line.front().text;
        if (first.size() > 1 && first.back() == ':' && kSections.count(first.substr(0, first.size() - 1))) {
            std::string name = first.substr(0, first.size() - 1);
            if (out.count(name)) fail(line.front(), "duplicate section '" + name + "'");
            current = &out[name];
            current->header = line.front();
            Line rest(line.begin() + 1, line.end());
            if (is_entry_section(name)) {
                if (!rest.empty()) current->entries.push_back(std::move(rest));
            } else {
                current->values = std::move(rest);
            }
            continue;
        }
        if (!current) fail(line.front(), "expected a section header such as 'kind:'");
        if (is_entry_section(current->header.text.substr(0, current->header.text.size() - 1)))
            current->entries.push_back(line);
        else
            current->values.insert(current->values.end(), line.begin(), line.end());
    }
    return out;
}

class Names {
public:
    void declare(const Token& t, const std::string& what) {
        if (t.text == "_" || t.text == "-" || t.text == "->" || t.text == ":")
            fail(t, "'" + t.text + "' is reserved and cannot name a " + what);
        if (!ids_.emplace(t.text, static_cast<std::uint32_t>(names_.size())).second)
            fail(t, "duplicate " + what + " '" + t.text + "'");
        names_.push_back(t.text);
    }
    std::optional<std::uint32_t> find(const std::string& s) const {
        auto it = ids_.find(s);
        if (it == ids_.end()) return std::nullopt;
        return it->second;
    }
    std::uint32_t require(const Token& t, const std::string& what) const {
        auto id = find(t.text);
        if (!id) fail(t, "undeclared " + what + " '" + t.text + "'");
        return *id;
    }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::map<std::string, std::uint32_t> ids_;
    std::vector<std::string> names_;
};

class Parser {
public:
    explicit Parser(std::string_view text) : sections_(split_sections(tokenize(text))) {}

    ModelFile parse() {
        const Section& k = need("kind");
        if (k.values.size() != 1) fail(k.header, "kind takes exactly one value");
        const std::string kind = k.values[0].text;
        ModelFile file;
        if (kind == "pda" || kind == "omega-pda") {
            allow({"kind", "states", "initial", "accepting", "input", "stack", "pricing", "costs", "trans"});
            file.model = automaton(kind == "omega-pda");
            const auto& a = std::get<Pda>(file.model);
            file.pricing = pricing(a.stack_alphabet);
            file.costs = costs(a.input_alphabet);
        } else if (kind == "wps") {
            allow({"kind", "states", "initial", "stack", "pricing", "buchi", "trans"});
            file.model = wps();
            file.pricing = pricing(std::get<Wps>(file.model).pda.stack_alphabet);
        } else if (kind == "client-server") {
            allow({"kind", "states", "initial", "trans"});
            file.model = client_server();
        } else if (kind == "cfg") {
            allow({"kind", "terminals", "nonterminals", "start", "costs", "rules"});
            file.model = grammar();
            file.costs = costs(std::get<Cfg>(file.model).terminals);
        } else {
            fail(k.values[0], "unknown kind '" + kind + "'");
        }
        return file;
    }

private:
    const Section& need(const std::string& name) const {
        auto it = sections_.find(name);
        if (it == sections_.end()) throw ParseError(1, 1, "missing section '" + name + ":'");
        return it->second;
    }
    const Section* maybe(const std::string& name) const {
        auto it = sections_.find(name);
        return it == sections_.end() ? nullptr : &it->second;
    }
    void allow(std::set<std::string> names) const {
        for (const auto& [name, s] : sections_)
            if (!names.count(name)) fail(s.header, "section '" + name + ":' does not apply to this kind");
    }
    Names declare(const std::string& section, const std::string& what, bool required = true) const {
        Names n;
        const Section* s = required ? &need(section) : maybe(section);
        if (s)
            for (const auto& t : s->values) n.declare(t, what);
        return n;
    }
    std::vector<StateId> state_list(const std::string& section, const Names& states, bool required) const {
        std::vector<StateId> out;
        const Section* s = required ? &need(section) : maybe(section);
        if (!s) return out;
        std::set<StateId> seen;
        for (const auto& t : s->values) {
            auto id = states.require(t, "state");
            if (!seen.insert(id).second) fail(t, "state '" + t.text + "' listed twice");
            out.push_back(id);
        }
        return out;
    }
    static std::size_t arrow(const Line& l) {
        for (std::size_t i = 0; i < l.size(); ++i)
            if (l[i].text == "->") return i;
        fail(l.front(), "expected '->'");
    }
    static SymbolId top_symbol(const Token& t, const Names& stack) {
        if (t.text == "_") return kBottom;
        return stack.require(t, "stack symbol");
    }
    static std::vector<SymbolId> push_string(const Line& l, std::size_t from, std::size_t to, const Names& stack) {
        if (from >= to) fail(l.back(), "expected a push string or '-'");
        if (to - from == 1 && l[from].text == "-") return {};
        std::vector<SymbolId> push;
        for (std::size_t i = from; i < to; ++i) {
            if (l[i].text == "_") fail(l[i], "the bottom marker cannot be pushed");
            push.push_back(stack.require(l[i], "stack symbol"));
        }
        return push;
    }

    Pda automaton(bool omega) {
        Pda a;
        a.omega = omega;
        Names states = declare("states", "state");
        Names input = declare("input", "letter");
        Names stack = declare("stack", "stack symbol", false);
        a.states = states.names();
        a.input_alphabet = input.names();
        a.stack_alphabet = stack.names();
        a.initial_states = state_list("initial", states, true);
        a.accepting_states = state_list("accepting", states, false);
        if (const Section* s = maybe("trans")) {
            for (const auto& l : s->entries) {
                std::size_t ar = arrow(l);
                if (ar != 3) fail(l.front(), "expected 'state letter top -> state push'");
                if (ar + 1 >= l.size()) fail(l[ar], "expected a target state");
                Transition t;
                t.from = states.require(l[0], "state");
                t.letter = input.require(l[1], "letter");
                t.top = top_symbol(l[2], stack);
                t.to = states.require(l[ar + 1], "state");
                t.push = push_string(l, ar + 2, l.size(), stack);
                a.transitions.push_back(std::move(t));
            }
        }
        return a;
    }

    Wps wps() {
        Wps w;
        Names states = declare("states", "state");
        Names stack = declare("stack", "stack symbol", false);
        w.pda.omega = true;
        w.pda.states = states.names();
        w.pda.input_alphabet = {"a"};
        w.pda.stack_alphabet = stack.names();
        w.pda.initial_states = state_list("initial", states, true);
        for (StateId q = 0; q < w.pda.num_states(); ++q) w.pda.accepting_states.push_back(q);
        w.buchi = state_list("buchi", states, false);
        if (const Section* s = maybe("trans")) {
            for (const auto& l : s->entries) {
                std::size_t ar = arrow(l);
                if (ar != 2) fail(l.front(), "expected 'state top -> state push : weight'");
                std::size_t colon = l.size();
                for (std::size_t i = ar; i < l.size(); ++i)
                    if (l[i].text == ":") colon = i;
                if (colon + 2 != l.size()) fail(l.back(), "expected ': weight' at the end");
                if (ar + 1 >= colon) fail(l[ar], "expected a target state");
                Transition t;
                t.from = states.require(l[0], "state");
                t.letter = 0;
                t.top = top_symbol(l[1], stack);
                t.to = states.require(l[ar + 1], "state");
                t.push = push_string(l, ar + 2, colon, stack);
                Integer weight;
                if (weight.set_str(l[colon + 1].text, 10) != 0) fail(l[colon + 1], "weight must be an integer");
                w.pda.transitions.push_back(std::move(t));
                w.weights.push_back(weight);
            }
        }
        return w;
    }

    ClientServerSpec client_server() {
        ClientServerSpec spec;
        Names states = declare("states", "state");
        spec.states = states.names();
        auto init = state_list("initial", states, true);
        if (init.size() != 1) fail(need("initial").header, "a client-server model has one initial state");
        spec.initial = init[0];
        if (const Section* s = maybe("trans")) {
            for (const auto& l : s->entries) {
                std::size_t ar = arrow(l);
                if ((ar != 2 && ar != 3) || ar + 2 != l.size())
                    fail(l.front(), "expected 'state r|g|# [zero|nonzero] -> state'");
                CsTransition t;
                t.from = states.require(l[0], "state");
                const auto& lab = l[1].text;
                if (lab == "r")
                    t.label = CsLabel::Request;
                else if (lab == "g")
                    t.label = CsLabel::Grant;
                else if (lab == "#")
                    t.label = CsLabel::Null;
                else
                    fail(l[1], "label must be r, g or #");
                if (ar == 3) {
                    if (l[2].text == "zero")
                        t.guard = CsGuard::Zero;
                    else if (l[2].text == "nonzero")
                        t.guard = CsGuard::Nonzero;
                    else
                        fail(l[2], "guard must be zero or nonzero");
                }
                t.to = states.require(l[ar + 1], "state");
                spec.transitions.push_back(t);
            }
        }
        return spec;
    }

    Cfg grammar() {
        Cfg g;
        Names terms = declare("terminals", "terminal");
        Names nts = declare("nonterminals", "nonterminal");
        for (const auto& t : need("nonterminals").values)
            if (terms.find(t.text)) fail(t, "'" + t.text + "' is declared as terminal and nonterminal");
        g.terminals = terms.names();
        g.nonterminals = nts.names();
        const Section& st = need("start");
        if (st.values.size() != 1) fail(st.header, "start takes exactly one nonterminal");
        g.start = nts.require(st.values[0], "nonterminal");
        if (const Section* s = maybe("rules")) {
            for (const auto& l : s->entries) {
                if (arrow(l) != 1) fail(l.front(), "expected 'nonterminal -> body'");
                NonterminalId head = nts.require(l[0], "nonterminal");
                std::vector<GSymbol> body;
                if (l.size() < 3) fail(l[1], "expected a body or '-'");
                if (!(l.size() == 3 && l[2].text == "-")) {
                    for (std::size_t i = 2; i < l.size(); ++i) {
                        if (auto n = nts.find(l[i].text))
                            body.push_back(GSymbol::n(*n));
                        else if (auto t = terms.find(l[i].text))
                            body.push_back(GSymbol::t(*t));
                        else
                            fail(l[i], "undeclared symbol '" + l[i].text + "'");
                    }
                }
                g.add(head, std::move(body));
            }
        }
        return g;
    }

    std::optional<StackPricing> pricing(const std::vector<std::string>& stack) const {
        const Section* s = maybe("pricing");
        if (!s) return std::nullopt;
        Names names;
        for (const auto& sym : stack) names.declare(Token{sym, 0, 0}, "stack symbol");
        StackPricing c;
        c.cost.assign(stack.size(), 0);
        std::vector<bool> seen(stack.size(), false);
        for (const auto& t : s->values) {
            auto eq = t.text.find('=');
            if (eq == std::string::npos) fail(t, "expected symbol=cost");
            Token sym{t.text.substr(0, eq), t.line, t.column};
            auto id = names.require(sym, "stack symbol");
            if (seen[id]) fail(t, "stack symbol '" + sym.text + "' priced twice");
            seen[id] = true;
            Integer v;
            if (v.set_str(t.text.substr(eq + 1), 10) != 0 || sgn(v) < 0)
                fail(Token{"", t.line, t.column + eq + 1}, "price must be a natural number");
            c.cost[id] = to_u64(v);
        }
        for (std::size_t i = 0; i < stack.size(); ++i)
            if (!seen[i]) fail(s->header, "stack symbol '" + stack[i] + "' has no price");
        return c;
    }

    std::optional<LetterCost> costs(const std::vector<std::string>& letters) const {
        const Section* s = maybe("costs");
        if (!s) return std::nullopt;
        Names names;
        for (const auto& l : letters) names.declare(Token{l, 0, 0}, "letter");
        LetterCost lc;
        lc.cost.assign(letters.size(), Rational(0));
        std::vector<bool> seen(letters.size(), false);
        for (const auto& t : s->values) {
            auto eq = t.text.find('=');
            if (eq == std::string::npos) fail(t, "expected letter=cost");
            Token sym{t.text.substr(0, eq), t.line, t.column};
            auto id = names.require(sym, "letter");
            if (seen[id]) fail(t, "letter '" + sym.text + "' has two costs");
            seen[id] = true;
            auto v = parse_rational(t.text.substr(eq + 1));
            if (!v) fail(Token{"", t.line, t.column + eq + 1}, "cost must be a rational number");
            lc.cost[id] = *v;
        }
        for (std::size_t i = 0; i < letters.size(); ++i)
            if (!seen[i]) fail(s->header, "letter '" + letters[i] + "' has no cost");
        return lc;
    }

    std::map<std::string, Section> sections_;
};

std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (const auto& x : xs) out += " " + x;
    return out;
}

std::string state_line(const char* name, const std::vector<StateId>& ids, const std::vector<std::string>& states) {
    std::string out = name;
    for (auto id : ids) out += " " + states[id];
    return out + "\n";
}

std::string push_text(const Pda& a, const std::vector<SymbolId>& push) {
    if (push.empty()) return " -";
    std::string out;
    for (auto y : push) out += " " + a.stack_alphabet[y];
    return out;
}

std::string pricing_line(const std::vector<std::string>& stack, const StackPricing& c) {
    std::string out = "pricing:";
    for (std::size_t i = 0; i < stack.size(); ++i) out += " " + stack[i] + "=" + std::to_string(c.cost.at(i));
    return out + "\n";
}

std::string costs_line(const std::vector<std::string>& letters, const LetterCost& lc) {
    std::string out = "costs:";
    for (std::size_t i = 0; i < letters.size(); ++i) out += " " + letters[i] + "=" + to_string(lc[i]);
    return out + "\n";
}

}  // namespace

ModelFile parse_model(std::string_view text) { return Parser(text).parse(); }

std::string model_kind(const Model& m) {
    struct Visitor {
        std::string operator()(const Pda& a) const { return a.omega ? "omega-pda" : "pda"; }
        std::string operator()(const Wps&) const { return "wps"; }
        std::string operator()(const ClientServerSpec&) const { return "client-server"; }
        std::string operator()(const Cfg&) const { return "cfg"; }
    };
    return std::visit(Visitor{}, m);
}

std::string serialize(const ModelFile& file) {
    std::ostringstream out;
    out << "kind: " << model_kind(file.model) << "\n";
    if (const auto* a = std::get_if<Pda>(&file.model)) {
        out << "states:" << join(a->states) << "\n";
        out << state_line("initial:", a->initial_states, a->states);
        out << state_line("accepting:", a->accepting_states, a->states);
        out << "input:" << join(a->input_alphabet) << "\n";
        out << "stack:" << join(a->stack_alphabet) << "\n";
        if (file.pricing) out << pricing_line(a->stack_alphabet, *file.pricing);
        if (file.costs) out << costs_line(a->input_alphabet, *file.costs);
        out << "trans:\n";
        for (const auto& t : a->transitions)
            out << "  " << a->states[t.from] << " " << a->input_alphabet[t.letter] << " " << a->symbol_name(t.top)
                << " -> " << a->states[t.to] << push_text(*a, t.push) << "\n";
    } else if (const auto* w = std::get_if<Wps>(&file.model)) {
        const Pda& a = w->pda;
        out << "states:" << join(a.states) << "\n";
        out << state_line("initial:", a.initial_states, a.states);
        out << "stack:" << join(a.stack_alphabet) << "\n";
        out << state_line("buchi:", w->buchi, a.states);
        if (file.pricing) out << pricing_line(a.stack_alphabet, *file.pricing);
        out << "trans:\n";
        for (std::size_t i = 0; i < a.transitions.size(); ++i) {
            const auto& t = a.transitions[i];
            out << "  " << a.states[t.from] << " " << a.symbol_name(t.top) << " -> " << a.states[t.to]
                << push_text(a, t.push) << " : " << w->weights.at(i).get_str() << "\n";
        }
    } else if (const auto* s = std::get_if<ClientServerSpec>(&file.model)) {
        out << "states:" << join(s->states) << "\n";
        out << "initial: " << s->states.at(s->initial) << "\n";
        out << "trans:\n";
        for (const auto& t : s->transitions) {
            out << "  " << s->states[t.from] << " " << to_string(t.label);
            if (t.guard != CsGuard::None) out << " " << to_string(t.guard);
            out << " -> " << s->states[t.to] << "\n";
        }
    } else if (const auto* g = std::get_if<Cfg>(&file.model)) {
        out << "terminals:" << join(g->terminals) << "\n";
        out << "nonterminals:" << join(g->nonterminals) << "\n";
        out << "start: " << g->nonterminals.at(g->start) << "\n";
        if (file.costs) out << costs_line(g->terminals, *file.costs);
        out << "rules:\n";
        for (const auto& p : g->productions) {
            out << "  " << g->nonterminals[p.head] << " ->";
            if (p.body.empty()) out << " -";
            for (const auto& sym : p.body) out << " " << (sym.terminal ? g->terminals[sym.id] : g->nonterminals[sym.id]);
            out << "\n";
        }
    }
    return out.str();
}

ModelFile load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_model(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.column(), path + ": " + std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
    }
}

}  // namespace pdcost
