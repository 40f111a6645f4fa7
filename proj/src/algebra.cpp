#include "ioco/algebra.hpp"

#include <algorithm>
#include <deque>

namespace ioco {

Product parallel_compose_product(const Iolts& a, const Iolts& b) {
    check_wellformed(a);
    check_wellformed(b);
    if (!is_composable(a, b))
        throw ComposabilityError("models '" + a.name + "' and '" + b.name + "' are not composable");

    std::set<std::string> shared = shared_labels(a, b);

    Product p;
    Iolts& c = p.composite;
    c.name = "(" + (a.name.empty() ? "A" : a.name) + "||" + (b.name.empty() ? "B" : b.name) + ")";
    for (const auto& l : a.alphabet.inputs)
        if (!b.alphabet.outputs.count(l)) c.alphabet.inputs.insert(l);
    for (const auto& l : b.alphabet.inputs)
        if (!a.alphabet.outputs.count(l)) c.alphabet.inputs.insert(l);
    c.alphabet.outputs = a.alphabet.outputs;
    c.alphabet.outputs.insert(b.alphabet.outputs.begin(), b.alphabet.outputs.end());

    CompositeId root{a.init, b.init};
    auto add_state = [&](const CompositeId& id) {
        StateId s = id.str();
        if (c.states.insert(s).second) p.parts.emplace(s, id);
        return s;
    };
    c.init = add_state(root);

    std::deque<CompositeId> work{root};
    std::set<CompositeId> seen{root};
    while (!work.empty()) {
        CompositeId cur = work.front();
        work.pop_front();
        StateId cur_id = cur.str();

        auto push = [&](const CompositeId& nxt, const Action& act) {
            StateId nxt_id = add_state(nxt);
            c.transitions.insert(Transition{cur_id, act, nxt_id});
            if (seen.insert(nxt).second) work.push_back(nxt);
        };

        for (const auto& t : a.transitions) {
            if (t.src != cur.left) continue;
            if (t.action.is_tau() || !shared.count(t.action.label)) {
                push(CompositeId{t.dst, cur.right}, t.action);
            } else {
                for (const auto& u : b.transitions)
                    if (u.src == cur.right && u.action == t.action)
                        push(CompositeId{t.dst, u.dst}, t.action);
            }
        }
        for (const auto& u : b.transitions) {
            if (u.src != cur.right) continue;
            if (u.action.is_tau() || !shared.count(u.action.label))
                push(CompositeId{cur.left, u.dst}, u.action);
            // shared moves were already paired from a's side
        }
    }
    check_wellformed(c);
    return p;
}

Iolts parallel_compose(const Iolts& a, const Iolts& b) {
    return parallel_compose_product(a, b).composite;
}

Iolts hide(const Iolts& a, const std::set<std::string>& sigma) {
    check_wellformed(a);
    for (const auto& l : sigma)
        if (!a.alphabet.contains_output(l))
            throw AlphabetError("hide: '" + l + "' is not an output of the model");

    Iolts h = a;
    h.name = a.name.empty() ? "hidden" : "hide(" + a.name + ")";
    for (const auto& l : sigma) h.alphabet.outputs.erase(l);
    h.transitions.clear();
    for (const auto& t : a.transitions) {
        if (t.action.is_visible() && sigma.count(t.action.label))
            h.transitions.insert(Transition{t.src, Action::make_tau(), t.dst});
        else
            h.transitions.insert(t);
    }
    return h;
}

namespace {

StateId fresh_state(const StateSet& taken, std::string base) {
    while (taken.count(base)) base += "_";
    return base;
}

std::set<std::pair<StateId, std::string>> missing_inputs(const Iolts& a) {
    std::set<std::pair<StateId, std::string>> missing;
    for (const auto& q : a.states)
        for (const auto& i : a.alphabet.inputs)
            if (!enabled_strong(a, q, i)) missing.insert({q, i});
    return missing;
}

} // namespace

Iolts demonic_complete(const Iolts& a) {
    check_wellformed(a);
    auto missing = missing_inputs(a);
    if (missing.empty()) return a;

    Iolts d = a;
    d.name = "d(" + (a.name.empty() ? "A" : a.name) + ")";
    StateId chi = fresh_state(d.states, "chi");
    d.states.insert(chi);
    StateId chi_omega = fresh_state(d.states, "chi_omega");
    d.states.insert(chi_omega);
    StateId chi_delta = fresh_state(d.states, "chi_delta");
    d.states.insert(chi_delta);

    d.transitions.insert(Transition{chi, Action::make_tau(), chi_omega});
    d.transitions.insert(Transition{chi, Action::make_tau(), chi_delta});
    for (const auto& l : d.alphabet.inputs) {
        d.transitions.insert(Transition{chi_omega, Action::make_visible(l), chi_omega});
        d.transitions.insert(Transition{chi_delta, Action::make_visible(l), chi_delta});
    }
    for (const auto& l : d.alphabet.outputs)
        d.transitions.insert(Transition{chi_omega, Action::make_visible(l), chi_omega});

    for (const auto& [q, i] : missing)
        d.transitions.insert(Transition{q, Action::make_visible(i), chi});

    check_wellformed(d);
    return d;
}

Iolts selfloop_complete(const Iolts& s) {
    check_wellformed(s);
    ValidationReport r = validate(s);
    if (!r.deterministic)
        throw PreconditionError("selfloop_complete: model must be deterministic and tau-free");

    Iolts c = s;
    for (const auto& [q, i] : missing_inputs(s))
        c.transitions.insert(Transition{q, Action::make_visible(i), q});
    return c;
}

} // namespace ioco
