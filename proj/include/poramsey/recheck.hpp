#pragma once

// Independent validators for counterexample colorings. Each one rebuilds its target family
// straight from the definitions (bitmask subsets, brute-force maps checked against the
// initial-segment definition of rigidity, brute-force embeddings), without the generators
// the engines use, and confirms that no target is monochromatic.

#include "poramsey/engines.hpp"
#include "poramsey/structure.hpp"

#include <span>
#include <vector>

namespace poramsey::recheck {

bool product(int n, int k, int l, int m, std::span<const SetTuple> objects, std::span<const int> coloring);

bool dual(const AnchoredSequence & i_anchor, const AnchoredSequence & a_anchor, const AnchoredSequence & b_anchor,
    std::span<const AnchoredRigidSurjection> objects, std::span<const int> coloring);

bool prop2(int n, const AnchoredSequence & i_anchor, const AnchoredSequence & a_anchor, const AnchoredSequence & b_anchor, int k, int l,
    std::span<const Tuple> objects, std::span<const int> coloring);

bool prop5(int n, const AnchoredSequence & i_anchor, const AnchoredOrderSet & a, const AnchoredOrderSet & b,
    std::span<const Tuple> objects, std::span<const int> coloring);

/// Also fails if `copies` is not exactly the set of copies of x in z.
bool witness(const Structure & z, const Structure & x, const Structure & y, std::span<const Copy> copies, std::span<const int> coloring);

/// Rigid surjections source -> target with the anchor constraint, checked against
/// "images of initial segments are initial segments" on every prefix.
std::vector<std::vector<int>> brute_force_rigid_maps(const AnchoredSequence & source_anchor, const AnchoredSequence & target_anchor);

/// Injective maps x -> z satisfying both embedding biconditionals, found by pairwise checks only.
std::vector<std::vector<int>> brute_force_embeddings(const Structure & x, const Structure & z);

} // namespace poramsey::recheck
