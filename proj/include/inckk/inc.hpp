#pragma once

#include "inckk/core.hpp"

// The action of the monoid of increasing self-maps of N (with pi(j) <= j+1)
// on d-sets and families, plus the combinatorial shifting operator S_i.

namespace inckk {

/// pi_i: j -> j for j < i, j -> j+1 for j >= i, applied coordinatewise.
/// Acts as the identity whenever i > largest element.
DSet apply_pi(int i, const DSet& u);

/// The image family {pi(u)} over the whole monoid: exactly the d+1 sets
/// obtained by adding 1 to each suffix of u (including the empty suffix).
Family inc_image(const DSet& u);

/// Union of inc_image over the members of f; always contains f.
Family inc_image(const Family& f);

/// t-fold application of the family Inc-image; t = 0 is the identity.
Family inc_iterate(Family f, int t);

/// Combinatorial shift S_i (i > 1): replaces i by 1 in each member when i is
/// present, 1 is absent, and the replacement is not already in f. All members
/// are shifted simultaneously against the original f.
Family comb_shift(int i, const Family& f);

}  // namespace inckk
