#pragma once

#include "poramsey/rigid_surjection.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace poramsey {

/// Feasibility ceilings and search switches shared by every verifier.
struct SearchLimits {
    /// Ceiling on the nominal number of colorings d^objects.
    BigInt max_colorings = BigInt(1) << 32;
    /// Ceiling on the size of a colored domain.
    std::size_t max_objects = 4096;
    /// Ceiling on the number of points of any structure the engines build.
    int max_ground_size = 1024;
    int jobs = 1;
    /// Only search colorings whose colors first appear in order 0, 1, 2, ...
    bool symmetry_breaking = true;
};

/// Objects 0..objects-1 to be colored; each cone must not end up monochromatic in a bad coloring.
struct ColoringProblem {
    std::size_t objects = 0;
    std::vector<std::vector<std::size_t>> cones;
};

enum class Verdict { witness_holds, counterexample };

const char * to_string(Verdict v);

/// Outcome of an exhaustive search. A counterexample carries the coloring, indexed like the
/// domain's canonical enumeration; witness-holds means every coloring has a monochromatic cone.
struct ColoringCertificate {
    Verdict verdict = Verdict::witness_holds;
    int colors = 1;
    std::size_t objects = 0;
    std::size_t targets = 0;
    std::optional<std::vector<int>> coloring;

    bool holds() const { return verdict == Verdict::witness_holds; }
    friend bool operator==(const ColoringCertificate &, const ColoringCertificate &) = default;
};

/// Throws InfeasibleError when colors^objects or the domain size passes a ceiling.
void check_feasible(const ColoringProblem & problem, int colors, const SearchLimits & limits);

/// Depth-first search for a coloring with no monochromatic cone. Returns the first one in
/// lexicographic order over the object enumeration, whatever limits.jobs is.
ColoringCertificate search_colorings(const ColoringProblem & problem, int colors, const SearchLimits & limits);

/// Plain enumeration of all colors^objects colorings, no pruning and no symmetry breaking.
/// Kept as the reference the pruned search is compared against.
ColoringCertificate search_colorings_naive(const ColoringProblem & problem, int colors, const SearchLimits & limits);

/// First cone that is monochromatic under `coloring`.
std::optional<std::size_t> find_monochromatic_cone(const ColoringProblem & problem, std::span<const int> coloring);

} // namespace poramsey
