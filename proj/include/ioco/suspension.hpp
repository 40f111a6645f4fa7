#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ioco/lts.hpp"

namespace ioco {

// Suspension automaton A_delta: the base model plus a delta self-loop at
// every quiescent state. The loops are implicit; delta_states records where
// they sit.
struct SuspensionAutomaton {
    Iolts base;
    StateSet delta_states;
};

SuspensionAutomaton suspend(const Iolts& a);

// Suspension trace: visible labels and delta, never tau.
using STrace = std::vector<Action>;

std::string trace_str(const STrace& t, const std::string& sep = ".");

// Quantifier applied to input labels during determinization. Existential
// mode accepts the full suspension-trace language; universal mode takes an
// input step only when every member of the det state enables it, which
// yields exactly the underspecification-free traces.
enum class InputMode { existential, universal };

// Deterministic subset-construction view of a suspension automaton.
// Det states are after-closures of the source model, canonicalized as sorted
// id sets; only states reachable from det_init are kept.
struct DetView {
    InputMode mode = InputMode::existential;
    bool with_delta = true;
    Alphabet alphabet; // of the source model
    std::vector<StateSet> det_states;
    int det_init = 0;
    // det_transitions[s] maps each enabled action (labels and delta) to the
    // index of the successor det state.
    std::vector<std::map<Action, int>> det_transitions;

    const StateSet& state_of(int idx) const { return det_states[static_cast<size_t>(idx)]; }
    std::optional<int> step(int idx, const Action& act) const;
    // Output actions (outputs and delta) enabled at a det state.
    std::set<Action> out(int idx) const;
};

DetView determinize(const Iolts& a, InputMode mode, Enabledness input_enabledness = Enabledness::weak,
                    bool with_delta = true);

// States reachable from init by the suspension trace sigma; empty iff sigma
// is not a suspension trace of a.
StateSet after(const Iolts& a, const STrace& sigma);

// Single-step output labels of members of p, plus delta for quiescent ones.
std::set<Action> out_of(const Iolts& a, const StateSet& p);

// All suspension traces of length <= k, including the empty trace.
std::set<STrace> straces_upto(const Iolts& a, int k);

// Membership in Utraces: acceptance by the universal-input det view.
bool is_utrace(const Iolts& a, const STrace& sigma);

} // namespace ioco
