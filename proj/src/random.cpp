#include "qtree/random.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qtree {

namespace {

std::vector<int> shuffled_pairs(Rng& rng, int n) {
    if (n < 0) throw std::invalid_argument("random bouquet: negative edge count");
    std::vector<int> tokens;
    for (int i = 1; i <= n; ++i) tokens.insert(tokens.end(), {i, i});
    std::shuffle(tokens.begin(), tokens.end(), rng);
    return tokens;
}

void twist_label(std::vector<int>& tokens, int label) {
    auto last = std::find(tokens.rbegin(), tokens.rend(), label);
    *last = -label;
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Bouquet random_orientable_bouquet(Rng& rng, int num_edges) {
    return bouquet_from_tokens(shuffled_pairs(rng, num_edges));
}

Bouquet random_one_twist_bouquet(Rng& rng, int num_edges) {
    if (num_edges < 1) throw std::invalid_argument("random bouquet: a twisted loop needs n >= 1");
    auto tokens = shuffled_pairs(rng, num_edges);
    twist_label(tokens, uniform(rng, 1, num_edges));
    return bouquet_from_tokens(tokens);
}

Bouquet random_bouquet(Rng& rng, int num_edges) {
    auto tokens = shuffled_pairs(rng, num_edges);
    for (int i = 1; i <= num_edges; ++i)
        if (uniform(rng, 0, 1)) twist_label(tokens, i);
    return bouquet_from_tokens(tokens);
}

RibbonGraph random_ribbon_graph(Rng& rng, int num_vertices, int num_edges) {
    if (num_vertices < 1 || num_edges < num_vertices - 1)
        throw std::invalid_argument("random_ribbon_graph: too few edges to connect the vertices");
    std::vector<std::vector<int>> rotations(static_cast<std::size_t>(num_vertices));
    std::vector<Edge> edges;
    for (int k = 0; k < num_edges; ++k) {
        int u = 0, v = 0;
        if (k + 1 < num_vertices) {
            u = k + 1;
            v = uniform(rng, 0, k);
        } else {
            u = uniform(rng, 0, num_vertices - 1);
            v = uniform(rng, 0, num_vertices - 1);
        }
        rotations[static_cast<std::size_t>(u)].push_back(2 * k);
        rotations[static_cast<std::size_t>(v)].push_back(2 * k + 1);
        edges.push_back(Edge{k + 1, 2 * k, 2 * k + 1, uniform(rng, 0, 1) ? 1 : -1});
    }
    for (auto& rotation : rotations) std::shuffle(rotation.begin(), rotation.end(), rng);
    return RibbonGraph(std::move(rotations), std::move(edges));
}

SetSystem random_set_system(Rng& rng, int ground_size) {
    if (ground_size < 0 || static_cast<std::size_t>(ground_size) > kMaxGround)
        throw std::invalid_argument("random_set_system: ground size out of range");
    std::vector<int> ground(static_cast<std::size_t>(ground_size));
    std::iota(ground.begin(), ground.end(), 1);
    const ElementMask limit = ElementMask{1} << ground_size;
    std::vector<ElementMask> feasible;
    while (feasible.empty())
        for (ElementMask m = 0; m < limit; ++m)
            if (uniform(rng, 0, 1)) feasible.push_back(m);
    return SetSystem(std::move(ground), std::move(feasible));
}

}  // namespace qtree
