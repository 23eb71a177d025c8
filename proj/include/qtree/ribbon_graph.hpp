#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qtree {

/// Subset of a ribbon graph's edges; bit k is the k-th label in
/// label-universe (sorted) order.
using EdgeMask = std::uint64_t;

inline constexpr std::size_t kMaxEdges = 63;

struct Edge {
    int label = 0;
    int first = 0;   ///< half-edge id
    int second = 0;  ///< half-edge id
    int sign = 1;    ///< -1 when the ribbon carries a half-twist

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// A ribbon graph as a signed rotation system.
///
/// Half-edge ids are always exactly 0..2|E|-1. Each vertex stores the cyclic
/// order of the half-edges around its disc; the stored sequence starts at the
/// smallest id. Vertices carrying half-edges are ordered by their smallest id,
/// bare vertices come last. Edges are sorted by label, which fixes the label
/// universe and hence the row order of every derived matrix.
class RibbonGraph {
public:
    RibbonGraph() = default;

    /// Validates and canonicalizes. Throws std::invalid_argument when a
    /// half-edge is missing or repeated, an edge reuses a half-edge, a label
    /// repeats or is non-positive, or a sign is not +-1.
    RibbonGraph(std::vector<std::vector<int>> rotations, std::vector<Edge> edges);

    /// `count` vertices and no edges.
    static RibbonGraph bare_vertices(std::size_t count);

    const std::vector<std::vector<int>>& rotations() const noexcept { return rotations_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::size_t num_vertices() const noexcept { return rotations_.size(); }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    std::size_t num_half_edges() const noexcept { return 2 * edges_.size(); }
    bool is_bouquet() const noexcept { return rotations_.size() == 1; }

    std::vector<int> labels() const;
    int max_label() const noexcept;

    /// Position of `label` in the label universe; throws std::out_of_range.
    std::size_t index_of(int label) const;
    const Edge& edge(int label) const { return edges_[index_of(label)]; }

    EdgeMask full_mask() const noexcept;
    EdgeMask mask_of(std::span<const int> labels) const;
    std::vector<int> labels_of(EdgeMask mask) const;

    friend bool operator==(const RibbonGraph&, const RibbonGraph&) = default;

private:
    std::vector<std::vector<int>> rotations_;
    std::vector<Edge> edges_;
};

/// A ribbon graph with exactly one vertex.
class Bouquet {
public:
    Bouquet() : graph_(RibbonGraph::bare_vertices(1)) {}
    /// Throws std::invalid_argument unless `graph` has exactly one vertex.
    explicit Bouquet(RibbonGraph graph);

    const RibbonGraph& graph() const noexcept { return graph_; }
    operator const RibbonGraph&() const noexcept { return graph_; }

    std::size_t num_edges() const noexcept { return graph_.num_edges(); }
    /// Number of loops carrying a half-twist.
    std::size_t num_non_orientable_loops() const;

    friend bool operator==(const Bouquet&, const Bouquet&) = default;

private:
    RibbonGraph graph_;
};

// ---------------------------------------------------------------------------
// Signed rotations

/// Builds a bouquet from signed tokens; a loop is twisted iff its two tokens
/// carry opposite signs. Labels must be exactly 1..n, each twice.
Bouquet bouquet_from_tokens(std::span<const int> tokens);

/// Parses "1,-2,1,2" (whitespace and optional surrounding parentheses are
/// ignored). Throws ParseError.
Bouquet parse_signed_rotation(std::string_view text);

/// Tokens of the single rotation; the first occurrence of each label is
/// positive, the second carries the edge sign.
std::vector<int> signed_rotation(const Bouquet& bouquet);
std::string format_signed_rotation(const Bouquet& bouquet);

// ---------------------------------------------------------------------------
// Boundary components

/// Precomputed corner structure for repeated boundary counts on one graph.
///
/// Every half-edge h contributes two corners, L(h) then R(h) in rotation
/// order. Around a vertex, R(h_i) is joined to L(h_{i+1}). An edge outside
/// the subset leaves its two attaching segments L(h)R(h) on the boundary; an
/// edge inside contributes its long sides instead, L(h)R(h') and R(h)L(h')
/// when untwisted, L(h)L(h') and R(h)R(h') when twisted. Boundary components
/// are the cycles of the resulting 2-regular corner graph, plus one per bare
/// vertex.
class BoundaryTracer {
public:
    explicit BoundaryTracer(const RibbonGraph& graph);

    int count(EdgeMask subset) const;
    std::size_t num_edges() const noexcept { return edges_.size(); }

private:
    struct EdgeCorners {
        int first;
        int second;
        bool twisted;
    };
    std::vector<int> arc_;
    std::vector<EdgeCorners> edges_;
    int bare_vertices_ = 0;
};

int boundary_components(const RibbonGraph& graph, EdgeMask subset);
int boundary_components(const RibbonGraph& graph, std::span<const int> labels);

/// Boundary count of every spanning subgraph, indexed by edge mask.
struct BoundaryProfile {
    std::vector<int> counts;

    /// f_n: number of subsets with exactly n boundary components.
    std::uint64_t with_components(int n) const;
    /// n -> f_n for every n that occurs.
    std::map<int, std::uint64_t> histogram() const;
};

/// Enumerates all 2^|E| subsets in increasing mask order; `threads` splits
/// the mask range. Throws ResourceError beyond 30 edges.
BoundaryProfile boundary_profile(const RibbonGraph& graph, unsigned threads = 1);

/// kappa(G): number of spanning quasi-trees, by exhaustive enumeration.
std::uint64_t quasi_tree_count(const RibbonGraph& graph, unsigned threads = 1);

/// kappa(G) by recursive deletion-contraction on the last edge.
std::uint64_t kappa_by_deletion_contraction(const RibbonGraph& graph);

// ---------------------------------------------------------------------------
// Operations

RibbonGraph delete_edge(const RibbonGraph& graph, int label);
RibbonGraph partial_dual(const RibbonGraph& graph, EdgeMask subset);
RibbonGraph partial_petrial(const RibbonGraph& graph, EdgeMask subset);
/// G/e := G^{delta(e)} \ e.
RibbonGraph contract_edge(const RibbonGraph& graph, int label);

/// Pastes vertex `vertex_p` of `p` to vertex `vertex_q` of `q` along the gaps
/// `gap_p` / `gap_q`. Gap g of a rotation of length k is the arc between
/// positions g and (g+1) mod k; a bare vertex has the single gap 0. Labels of
/// `q` are shifted by p.max_label(). Throws std::out_of_range.
RibbonGraph one_vertex_join(const RibbonGraph& p, const RibbonGraph& q, std::size_t vertex_p,
                            std::size_t vertex_q, std::size_t gap_p, std::size_t gap_q);

/// True iff the edge signs are switching-equivalent to all +1.
bool is_orientable(const RibbonGraph& graph);

/// Cheap ribbon-graph invariant used in place of isomorphism testing.
struct Fingerprint {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::map<int, std::uint64_t> profile;  ///< n -> f_n
    bool orientable = true;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const RibbonGraph& graph);

}  // namespace qtree
