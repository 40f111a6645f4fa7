#include "ioco/suspension.hpp"

#include <algorithm>
#include <deque>

namespace ioco {

SuspensionAutomaton suspend(const Iolts& a) {
    check_wellformed(a);
    SuspensionAutomaton s;
    s.base = a;
    for (const auto& q : a.states)
        if (is_quiescent(a, q)) s.delta_states.insert(q);
    return s;
}

std::string trace_str(const STrace& t, const std::string& sep) {
    std::string r;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) r += sep;
        r += t[i].str();
    }
    return r;
}

std::optional<int> DetView::step(int idx, const Action& act) const {
    const auto& m = det_transitions[static_cast<size_t>(idx)];
    auto it = m.find(act);
    if (it == m.end()) return std::nullopt;
    return it->second;
}

std::set<Action> DetView::out(int idx) const {
    std::set<Action> r;
    for (const auto& [act, dst] : det_transitions[static_cast<size_t>(idx)]) {
        (void)dst;
        if (act.is_delta() || (act.is_visible() && alphabet.contains_output(act.label))) r.insert(act);
    }
    return r;
}

namespace {

StateSet quiescent_members(const Iolts& a, const StateSet& p) {
    StateSet r;
    for (const auto& q : p)
        if (is_quiescent(a, q)) r.insert(q);
    return r;
}

} // namespace

DetView determinize(const Iolts& a, InputMode mode, Enabledness input_enabledness, bool with_delta) {
    check_wellformed(a);
    DetView v;
    v.mode = mode;
    v.with_delta = with_delta;
    v.alphabet = a.alphabet;

    std::map<StateSet, int> index;
    auto intern = [&](const StateSet& s) {
        auto it = index.find(s);
        if (it != index.end()) return std::pair{it->second, false};
        int idx = static_cast<int>(v.det_states.size());
        index.emplace(s, idx);
        v.det_states.push_back(s);
        v.det_transitions.emplace_back();
        return std::pair{idx, true};
    };

    StateSet init = tau_closure(a, StateSet{a.init});
    v.det_init = intern(init).first;

    std::deque<int> work{v.det_init};
    while (!work.empty()) {
        int cur = work.front();
        work.pop_front();
        StateSet p = v.det_states[static_cast<size_t>(cur)];

        for (const auto& l : a.alphabet.all()) {
            StateSet img = weak_step(a, p, Label{l});
            if (img.empty()) continue;
            if (mode == InputMode::universal && a.alphabet.contains_input(l)) {
                bool all = true;
                for (const auto& q : p) {
                    if (!enabled(a, q, l, input_enabledness)) {
                        all = false;
                        break;
                    }
                }
                if (!all) continue;
            }
            auto [dst, fresh] = intern(img);
            v.det_transitions[static_cast<size_t>(cur)].emplace(Action::make_visible(l), dst);
            if (fresh) work.push_back(dst);
        }

        if (with_delta) {
            // delta behaves like an output: the step exists when some member
            // is quiescent and lands on exactly the quiescent members (they
            // have no tau moves, so the set is already closed).
            StateSet img = quiescent_members(a, p);
            if (!img.empty()) {
                auto [dst, fresh] = intern(img);
                v.det_transitions[static_cast<size_t>(cur)].emplace(Action::make_delta(), dst);
                if (fresh) work.push_back(dst);
            }
        }
    }
    return v;
}

StateSet after(const Iolts& a, const STrace& sigma) {
    check_wellformed(a);
    for (const auto& act : sigma) {
        if (act.is_tau()) throw AlphabetError("after: suspension traces contain no tau");
        if (act.is_visible() && !a.alphabet.contains(act.label))
            throw AlphabetError("after: label '" + act.label + "' not in alphabet");
    }
    StateSet cur = tau_closure(a, StateSet{a.init});
    for (const auto& act : sigma) {
        if (cur.empty()) return cur;
        if (act.is_delta()) {
            cur = quiescent_members(a, cur);
        } else {
            cur = weak_step(a, cur, Label{act.label});
        }
    }
    return cur;
}

std::set<Action> out_of(const Iolts& a, const StateSet& p) {
    for (const auto& q : p)
        if (!a.states.count(q)) throw StructuralError("out_of: unknown state '" + q + "'");
    std::set<Action> r;
    for (const auto& q : p) {
        if (is_quiescent(a, q)) r.insert(Action::make_delta());
        for (const auto& t : a.transitions)
            if (t.src == q && t.action.is_visible() && a.alphabet.contains_output(t.action.label))
                r.insert(t.action);
    }
    return r;
}

std::set<STrace> straces_upto(const Iolts& a, int k) {
    if (k < 0) throw ParameterError("straces_upto: negative bound");
    DetView v = determinize(a, InputMode::existential);
    std::set<STrace> result;
    // BFS over the det view; duplicate label paths collapse by construction.
    std::deque<std::pair<int, STrace>> work;
    work.emplace_back(v.det_init, STrace{});
    while (!work.empty()) {
        auto [idx, trace] = work.front();
        work.pop_front();
        result.insert(trace);
        if (static_cast<int>(trace.size()) == k) continue;
        for (const auto& [act, dst] : v.det_transitions[static_cast<size_t>(idx)]) {
            STrace next = trace;
            next.push_back(act);
            work.emplace_back(dst, std::move(next));
        }
    }
    return result;
}

bool is_utrace(const Iolts& a, const STrace& sigma) {
    for (const auto& act : sigma) {
        if (act.is_tau()) throw AlphabetError("is_utrace: suspension traces contain no tau");
        if (act.is_visible() && !a.alphabet.contains(act.label))
            throw AlphabetError("is_utrace: label '" + act.label + "' not in alphabet");
    }
    DetView v = determinize(a, InputMode::universal);
    int cur = v.det_init;
    for (const auto& act : sigma) {
        auto nxt = v.step(cur, act);
        if (!nxt) return false;
        cur = *nxt;
    }
    return true;
}

} // namespace ioco
