// Classical probability transformations of a mass function, used as
// comparison baselines. Formula sources are listed in docs/transforms.md.
#pragma once

#include "dst/mass_function.hpp"

namespace dst {

// Pignistic transformation (Smets' TBM): each mass is split equally among
// its set's members. BetP(w) = sum_{F : w in F} m(F) / |F|.
ProbabilityDistribution pignistic(const MassFunction& m);

// Normalized singleton plausibilities: p(w_i) = Pl({w_i}) / sum_j Pl({w_j}).
ProbabilityDistribution plausibility_transform(const MassFunction& m);

// Normalized singleton beliefs: p(w_i) = Bel({w_i}) / sum_j Bel({w_j}).
// Undefined when every singleton belief is zero.
ProbabilityDistribution relative_belief_transform(const MassFunction& m);

// Singleton masses plus each composite mass shared among its members in
// proportion to their singleton masses; a composite set whose members all
// have zero singleton mass is split uniformly among them.
ProbabilityDistribution proportional_transform(const MassFunction& m);

}  // namespace dst
