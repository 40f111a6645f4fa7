#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ioco/errors.hpp"

namespace ioco {

using StateId = std::string;
using StateSet = std::set<StateId>;

// Visible label of an input/output transition system. Compares by name.
struct Label {
    std::string name;

    friend auto operator<=>(const Label&, const Label&) = default;
};

// True iff `name` is printable, non-empty, has no whitespace and is not one
// of the reserved tokens "tau" / "delta".
bool is_valid_label_name(const std::string& name);
bool is_valid_state_name(const std::string& name);

struct Alphabet {
    std::set<std::string> inputs;
    std::set<std::string> outputs;

    bool contains_input(const std::string& l) const { return inputs.count(l) > 0; }
    bool contains_output(const std::string& l) const { return outputs.count(l) > 0; }
    bool contains(const std::string& l) const { return contains_input(l) || contains_output(l); }

    std::set<std::string> all() const;

    friend auto operator<=>(const Alphabet&, const Alphabet&) = default;
};

// A transition action: a visible label, the internal action tau, or the
// quiescence observation delta. Delta never occurs inside an Iolts; it only
// appears in suspension-level artifacts (traces, det views, out-sets).
struct Action {
    enum class Kind { visible, tau, delta };

    Kind kind = Kind::tau;
    std::string label; // nonempty iff kind == visible

    static Action make_visible(std::string l) { return Action{Kind::visible, std::move(l)}; }
    static Action make_tau() { return Action{Kind::tau, {}}; }
    static Action make_delta() { return Action{Kind::delta, {}}; }

    bool is_visible() const { return kind == Kind::visible; }
    bool is_tau() const { return kind == Kind::tau; }
    bool is_delta() const { return kind == Kind::delta; }

    // Rendering used in traces, out-sets and diagnostics.
    std::string str() const;

    // Visible labels sort by name and precede tau and delta, so label-ordered
    // iteration sees real outputs before the quiescence observation.
    friend bool operator<(const Action& a, const Action& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.label < b.label;
    }
    friend bool operator==(const Action& a, const Action& b) {
        return a.kind == b.kind && a.label == b.label;
    }
};

struct Transition {
    StateId src;
    Action action;
    StateId dst;

    friend bool operator<(const Transition& a, const Transition& b) {
        if (a.src != b.src) return a.src < b.src;
        if (!(a.action == b.action)) return a.action < b.action;
        return a.dst < b.dst;
    }
    friend bool operator==(const Transition&, const Transition&) = default;
};

// Finite input/output labeled transition system with silent moves.
// Values are immutable by convention: every operation returns a fresh model.
struct Iolts {
    std::string name;
    Alphabet alphabet;
    StateSet states;
    StateId init;
    std::set<Transition> transitions;
};

// Throws StructuralError / AlphabetError if the model breaks the Iolts
// invariants (init and endpoints in the state set, visible labels drawn from
// the alphabet, disjoint inputs/outputs, no delta transitions).
void check_wellformed(const Iolts& a);

struct ValidationReport {
    bool receptive = false;          // every input enabled at every state, single-step
    bool weakly_receptive = false;   // every input weakly enabled at every state
    bool strongly_convergent = false; // no cycle of only tau transitions
    bool deterministic = false;      // tau-free and at most one successor per (state, label)
    StateSet quiescent_states;       // no outgoing output or tau transition
    StateSet unreachable_states;     // not forward-reachable from init
};

// Smallest superset of `src` closed under tau transitions.
StateSet tau_closure(const Iolts& a, const StateSet& src);

// tau_closure of the l-successors of tau_closure(src); empty means l is not
// weakly enabled anywhere in src.
StateSet weak_step(const Iolts& a, const StateSet& src, const Label& l);

// Structural diagnosis; never fails.
ValidationReport validate(const Iolts& a);

// Disjoint input sets and disjoint output sets.
bool is_composable(const Iolts& a, const Iolts& b);

// Shared visible labels of two models.
std::set<std::string> shared_labels(const Iolts& a, const Iolts& b);

// Single-step enabledness of a visible label at a state.
bool enabled_strong(const Iolts& a, const StateId& q, const std::string& label);
// Weak enabledness: q =l=> (some l-successor through tau moves).
bool enabled_weak(const Iolts& a, const StateId& q, const std::string& label);

// Reading of the single-step arrows in definitions that are applied to models
// with tau transitions. `weak` follows the after-operator; `strong` reads the
// arrows literally.
enum class Enabledness { weak, strong };

bool enabled(const Iolts& a, const StateId& q, const std::string& label, Enabledness mode);

// States with no outgoing output or tau transition.
bool is_quiescent(const Iolts& a, const StateId& q);

} // namespace ioco
