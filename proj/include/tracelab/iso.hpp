#pragma once

#include <vector>

#include "tracelab/family.hpp"

namespace tracelab {

/// Hard limit on non-isolated vertices for isomorphism decisions.
inline constexpr int kIsoMaxVertices = 8;

/// Canonical form of the family restricted to its non-isolated vertices:
/// the colex-least edge list over all relabelings that respect the degree /
/// level refinement classes. Equal canonical forms <=> isomorphic up to
/// isolated vertices. Throws resource_error above kIsoMaxVertices.
SetFamily canonical_form(const SetFamily& family);

/// True iff deleting isolated vertices from both families yields isomorphic
/// hypergraphs. Cheap invariants are compared first; the permutation search
/// only runs on refinement-compatible inputs.
bool iso_up_to_isolated(const SetFamily& f, const SetFamily& g);

}  // namespace tracelab
