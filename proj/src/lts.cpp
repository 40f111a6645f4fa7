#include "ioco/lts.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

namespace ioco {

bool is_valid_label_name(const std::string& name) {
    if (name.empty()) return false;
    if (name == "tau" || name == "delta") return false;
    for (unsigned char c : name) {
        if (c < 0x21) return false; // control chars and whitespace
    }
    return true;
}

bool is_valid_state_name(const std::string& name) {
    if (name.empty()) return false;
    for (unsigned char c : name) {
        if (c < 0x21) return false;
    }
    return true;
}

std::set<std::string> Alphabet::all() const {
    std::set<std::string> r = inputs;
    r.insert(outputs.begin(), outputs.end());
    return r;
}

std::string Action::str() const {
    switch (kind) {
    case Kind::visible: return label;
    case Kind::tau: return "tau";
    case Kind::delta: return "delta";
    }
    return {};
}

void check_wellformed(const Iolts& a) {
    for (const auto& l : a.alphabet.inputs) {
        if (!is_valid_label_name(l)) throw AlphabetError("invalid input label '" + l + "'");
        if (a.alphabet.outputs.count(l))
            throw AlphabetError("label '" + l + "' declared both input and output");
    }
    for (const auto& l : a.alphabet.outputs) {
        if (!is_valid_label_name(l)) throw AlphabetError("invalid output label '" + l + "'");
    }
    for (const auto& q : a.states) {
        if (!is_valid_state_name(q)) throw StructuralError("invalid state name '" + q + "'");
    }
    if (!a.states.count(a.init)) throw StructuralError("initial state '" + a.init + "' not in state set");
    for (const auto& t : a.transitions) {
        if (!a.states.count(t.src)) throw StructuralError("transition source '" + t.src + "' not in state set");
        if (!a.states.count(t.dst)) throw StructuralError("transition target '" + t.dst + "' not in state set");
        if (t.action.is_delta())
            throw StructuralError("delta transitions may not be authored; suspension is computed");
        if (t.action.is_visible() && !a.alphabet.contains(t.action.label))
            throw AlphabetError("transition label '" + t.action.label + "' not in alphabet");
    }
}

StateSet tau_closure(const Iolts& a, const StateSet& src) {
    for (const auto& q : src)
        if (!a.states.count(q)) throw StructuralError("tau_closure: unknown state '" + q + "'");
    StateSet closed = src;
    std::deque<StateId> work(src.begin(), src.end());
    while (!work.empty()) {
        StateId q = work.front();
        work.pop_front();
        for (const auto& t : a.transitions) {
            if (t.src == q && t.action.is_tau() && closed.insert(t.dst).second) work.push_back(t.dst);
        }
    }
    return closed;
}

StateSet weak_step(const Iolts& a, const StateSet& src, const Label& l) {
    if (!a.alphabet.contains(l.name))
        throw AlphabetError("weak_step: label '" + l.name + "' not in alphabet");
    StateSet pre = tau_closure(a, src);
    StateSet post;
    for (const auto& t : a.transitions) {
        if (t.action.is_visible() && t.action.label == l.name && pre.count(t.src)) post.insert(t.dst);
    }
    if (post.empty()) return post;
    return tau_closure(a, post);
}

bool enabled_strong(const Iolts& a, const StateId& q, const std::string& label) {
    for (const auto& t : a.transitions)
        if (t.src == q && t.action.is_visible() && t.action.label == label) return true;
    return false;
}

bool enabled_weak(const Iolts& a, const StateId& q, const std::string& label) {
    return !weak_step(a, StateSet{q}, Label{label}).empty();
}

bool enabled(const Iolts& a, const StateId& q, const std::string& label, Enabledness mode) {
    return mode == Enabledness::strong ? enabled_strong(a, q, label) : enabled_weak(a, q, label);
}

bool is_quiescent(const Iolts& a, const StateId& q) {
    for (const auto& t : a.transitions) {
        if (t.src != q) continue;
        if (t.action.is_tau()) return false;
        if (t.action.is_visible() && a.alphabet.contains_output(t.action.label)) return false;
    }
    return true;
}

ValidationReport validate(const Iolts& a) {
    check_wellformed(a);
    ValidationReport r;

    r.receptive = true;
    r.weakly_receptive = true;
    for (const auto& q : a.states) {
        for (const auto& i : a.alphabet.inputs) {
            if (!enabled_strong(a, q, i)) r.receptive = false;
            if (!enabled_weak(a, q, i)) r.weakly_receptive = false;
        }
        if (is_quiescent(a, q)) r.quiescent_states.insert(q);
    }

    // tau-only cycle detection by DFS over the tau subgraph
    std::map<StateId, int> color; // 0 new, 1 on stack, 2 done
    r.strongly_convergent = true;
    auto dfs = [&](auto&& self, const StateId& q) -> bool {
        color[q] = 1;
        for (const auto& t : a.transitions) {
            if (t.src != q || !t.action.is_tau()) continue;
            int c = color.count(t.dst) ? color[t.dst] : 0;
            if (c == 1) return false;
            if (c == 0 && !self(self, t.dst)) return false;
        }
        color[q] = 2;
        return true;
    };
    for (const auto& q : a.states) {
        if (!color.count(q) && !dfs(dfs, q)) {
            r.strongly_convergent = false;
            break;
        }
    }

    r.deterministic = true;
    std::set<std::pair<StateId, std::string>> seen;
    for (const auto& t : a.transitions) {
        if (t.action.is_tau()) {
            r.deterministic = false;
            break;
        }
        if (!seen.insert({t.src, t.action.label}).second) {
            r.deterministic = false;
            break;
        }
    }

    StateSet reached{a.init};
    std::deque<StateId> work{a.init};
    while (!work.empty()) {
        StateId q = work.front();
        work.pop_front();
        for (const auto& t : a.transitions)
            if (t.src == q && reached.insert(t.dst).second) work.push_back(t.dst);
    }
    for (const auto& q : a.states)
        if (!reached.count(q)) r.unreachable_states.insert(q);

    return r;
}

bool is_composable(const Iolts& a, const Iolts& b) {
    for (const auto& l : a.alphabet.inputs)
        if (b.alphabet.inputs.count(l)) return false;
    for (const auto& l : a.alphabet.outputs)
        if (b.alphabet.outputs.count(l)) return false;
    return true;
}

std::set<std::string> shared_labels(const Iolts& a, const Iolts& b) {
    std::set<std::string> la = a.alphabet.all();
    std::set<std::string> lb = b.alphabet.all();
    std::set<std::string> r;
    std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(), std::inserter(r, r.begin()));
    return r;
}

} // namespace ioco
