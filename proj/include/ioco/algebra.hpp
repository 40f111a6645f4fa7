#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "ioco/lts.hpp"

namespace ioco {

// Composite state ids render as "(left,right)" so diagnostics can name
// product states the way the source material does.
struct CompositeId {
    StateId left;
    StateId right;

    std::string str() const { return "(" + left + "," + right + ")"; }

    friend auto operator<=>(const CompositeId&, const CompositeId&) = default;
};

// Parallel product with the component decomposition kept alongside, for
// consumers that need to reason per component (ambiguity detection).
struct Product {
    Iolts composite;
    std::map<StateId, CompositeId> parts;
};

Product parallel_compose_product(const Iolts& a, const Iolts& b);

// Parallel composition: synchronization on shared labels, independent moves
// elsewhere; shared labels that are one side's outputs become outputs of the
// whole. Restricted to the part reachable from the initial pair.
// Throws ComposabilityError unless is_composable(a, b).
Iolts parallel_compose(const Iolts& a, const Iolts& b);

// Relabels every sigma-labeled output transition to tau and drops sigma from
// the output alphabet. Throws AlphabetError if sigma contains a non-output.
Iolts hide(const Iolts& a, const std::set<std::string>& sigma);

// Input-enables a model by routing every unspecified input to a three-state
// chaos gadget (tau-split into an all-looping state and a quiescent
// input-looping state). Already receptive models are returned unchanged.
Iolts demonic_complete(const Iolts& a);

// Input-enables a deterministic tau-free model by adding self-loops on the
// unspecified inputs; the result conforms to the original.
// Throws PreconditionError on nondeterministic or tau-bearing input.
Iolts selfloop_complete(const Iolts& s);

} // namespace ioco
