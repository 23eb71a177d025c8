#pragma once

#include "qtree/delta_matroid.hpp"
#include "qtree/ribbon_graph.hpp"

#include <random>

namespace qtree {

using Rng = std::mt19937_64;

/// Uniformly shuffled rotation of 1,1,...,n,n with every loop untwisted.
Bouquet random_orientable_bouquet(Rng& rng, int num_edges);

/// As above, then one uniformly chosen loop gets a half-twist. Needs n >= 1.
Bouquet random_one_twist_bouquet(Rng& rng, int num_edges);

/// Each loop twisted independently with probability 1/2.
Bouquet random_bouquet(Rng& rng, int num_edges);

/// Connected ribbon graph with `num_vertices` vertices and `num_edges`
/// edges (num_edges >= num_vertices - 1). A random spanning tree comes
/// first, remaining edges get uniform endpoints, rotations are shuffled and
/// every sign is a fair coin.
RibbonGraph random_ribbon_graph(Rng& rng, int num_vertices, int num_edges);

/// Ground set 1..n; each of the 2^n subsets is feasible with probability
/// 1/2, resampled until the family is nonempty.
SetSystem random_set_system(Rng& rng, int ground_size);

}  // namespace qtree
