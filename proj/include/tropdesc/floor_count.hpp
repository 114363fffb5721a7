#pragma once

#include <vector>

#include "tropdesc/context.hpp"
#include "tropdesc/invariant_key.hpp"
#include "tropdesc/rational.hpp"

/// Relative and absolute point counts of the plane via floor diagrams.
///
/// A floor diagram of degree d has floors 1..d ordered bottom to top, a
/// spanning tree of weighted elevators between them, and bottom ends carrying
/// the tangency profile. Each floor has divergence one: the weight leaving it
/// downwards (elevators to lower floors plus its ends) exceeds the weight
/// arriving from above by exactly one. On a tree this fixes every elevator
/// weight: the flow through elevator (i, j) equals the number of floors on the
/// side of j minus the end weight placed on that side.
namespace tropdesc::floors {

struct TreeEdge {
    int lower = 0;
    int upper = 0;
    int weight = 0;
    friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

struct EndPlacement {
    int floor = 0;
    int weight = 0;
    bool fixed = false;
    friend bool operator==(const EndPlacement&, const EndPlacement&) = default;
};

struct FloorDiagram {
    int d = 0;
    std::vector<TreeEdge> edges;
    std::vector<EndPlacement> ends;
    friend bool operator==(const FloorDiagram&, const FloorDiagram&) = default;
};

/// All floor diagrams of degree d realizing the profile, in a deterministic order.
/// Throws ProfileError when the profile does not fit d or has more than one fixed end.
std::vector<FloorDiagram> enumerate_floor_diagrams(int d, const TangencyProfile& profile);

/// prod over elevators of w^2 times prod over all ends of w.
BigInt diagram_multiplicity(const FloorDiagram& diagram);

/// Number of elements of the marking poset: floors, elevators and free ends.
int marking_poset_size(const FloorDiagram& diagram);

/// Number of linear extensions of the marking poset (floors form a chain,
/// an elevator sits strictly between its floors, a free end strictly below its floor).
BigInt count_markings(const FloorDiagram& diagram);

/// prod over (floor, weight) classes of free ends of (class size)!.
BigInt automorphism_order(const FloorDiagram& diagram);

/// Sum of mu * nu / |Aut| over all diagrams. Memoized in the context's store.
Rational relative_invariant(Context& ctx, int d, const TangencyProfile& profile);

/// Number of rational degree-d curves through 3d - 1 points.
Rational N(Context& ctx, int d);

/// Independent check on N: Kontsevich's recursion.
Rational kontsevich_N(int d);

/// Count with one free bottom end of weight w (w = 1 chooses one of the d ends).
Rational N_w(Context& ctx, int d, int w);

/// Count with one fixed bottom end of weight w.
Rational N_tilde(Context& ctx, int d, int w);

/// Count with two free bottom ends of weight 2; zero below degree 4.
Rational N_two_twos(Context& ctx, int d);

}  // namespace tropdesc::floors
