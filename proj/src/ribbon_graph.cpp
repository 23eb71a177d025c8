#include "qtree/ribbon_graph.hpp"

#include "qtree/detail/parallel.hpp"
#include "qtree/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qtree {

namespace {

int min_element_or(const std::vector<int>& v, int fallback) {
    return v.empty() ? fallback : *std::min_element(v.begin(), v.end());
}

}  // namespace

RibbonGraph::RibbonGraph(std::vector<std::vector<int>> rotations, std::vector<Edge> edges)
    : rotations_(std::move(rotations)), edges_(std::move(edges)) {
    const std::size_t half_edges = 2 * edges_.size();
    if (edges_.size() > kMaxEdges) throw std::invalid_argument("ribbon graph: too many edges");

    std::vector<int> seen(half_edges, 0);
    for (const auto& rotation : rotations_) {
        for (int h : rotation) {
            if (h < 0 || static_cast<std::size_t>(h) >= half_edges)
                throw std::invalid_argument("ribbon graph: half-edge id " + std::to_string(h) +
                                            " out of range");
            if (seen[h]++) throw std::invalid_argument("ribbon graph: half-edge " +
                                                       std::to_string(h) + " appears twice");
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw std::invalid_argument("ribbon graph: half-edge missing from rotations");

    std::vector<int> owner(half_edges, -1);
    for (const auto& e : edges_) {
        if (e.label <= 0) throw std::invalid_argument("ribbon graph: labels must be positive");
        if (e.sign != 1 && e.sign != -1) throw std::invalid_argument("ribbon graph: sign must be +-1");
        if (e.first == e.second)
            throw std::invalid_argument("ribbon graph: edge needs two distinct half-edges");
        for (int h : {e.first, e.second}) {
            if (h < 0 || static_cast<std::size_t>(h) >= half_edges)
                throw std::invalid_argument("ribbon graph: edge references unknown half-edge");
            if (owner[h] != -1) throw std::invalid_argument("ribbon graph: half-edge shared by two edges");
            owner[h] = e.label;
        }
    }

    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.label < b.label; });
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i].label == edges_[i - 1].label)
            throw std::invalid_argument("ribbon graph: duplicate label " +
                                        std::to_string(edges_[i].label));

    for (auto& rotation : rotations_) {
        auto smallest = std::min_element(rotation.begin(), rotation.end());
        std::rotate(rotation.begin(), smallest, rotation.end());
    }
    const int none = static_cast<int>(half_edges);
    std::stable_sort(rotations_.begin(), rotations_.end(),
                     [none](const std::vector<int>& a, const std::vector<int>& b) {
                         return min_element_or(a, none) < min_element_or(b, none);
                     });
}

RibbonGraph RibbonGraph::bare_vertices(std::size_t count) {
    return RibbonGraph(std::vector<std::vector<int>>(count), {});
}

std::vector<int> RibbonGraph::labels() const {
    std::vector<int> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back(e.label);
    return out;
}

int RibbonGraph::max_label() const noexcept { return edges_.empty() ? 0 : edges_.back().label; }

std::size_t RibbonGraph::index_of(int label) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), label,
                               [](const Edge& e, int l) { return e.label < l; });
    if (it == edges_.end() || it->label != label)
        throw std::out_of_range("unknown edge label " + std::to_string(label));
    return static_cast<std::size_t>(it - edges_.begin());
}

EdgeMask RibbonGraph::full_mask() const noexcept {
    return edges_.size() >= 64 ? ~EdgeMask{0} : (EdgeMask{1} << edges_.size()) - 1;
}

EdgeMask RibbonGraph::mask_of(std::span<const int> labels) const {
    EdgeMask mask = 0;
    for (int l : labels) mask |= EdgeMask{1} << index_of(l);
    return mask;
}

std::vector<int> RibbonGraph::labels_of(EdgeMask mask) const {
    if (mask & ~full_mask()) throw std::out_of_range("edge mask exceeds the label universe");
    std::vector<int> out;
    for (std::size_t k = 0; k < edges_.size(); ++k)
        if (mask >> k & 1) out.push_back(edges_[k].label);
    return out;
}

Bouquet::Bouquet(RibbonGraph graph) : graph_(std::move(graph)) {
    if (!graph_.is_bouquet())
        throw std::invalid_argument("bouquet: expected exactly one vertex, got " +
                                    std::to_string(graph_.num_vertices()));
}

std::size_t Bouquet::num_non_orientable_loops() const {
    return static_cast<std::size_t>(std::count_if(graph_.edges().begin(), graph_.edges().end(),
                                                  [](const Edge& e) { return e.sign < 0; }));
}

// ---------------------------------------------------------------------------

Bouquet bouquet_from_tokens(std::span<const int> tokens) {
    if (tokens.size() % 2 != 0) throw ParseError("signed rotation: odd number of tokens");
    const int n = static_cast<int>(tokens.size() / 2);
    std::vector<std::vector<int>> where(n + 1);
    for (std::size_t pos = 0; pos < tokens.size(); ++pos) {
        const int t = tokens[pos];
        if (t == 0) throw ParseError("signed rotation: zero token");
        const int label = t < 0 ? -t : t;
        if (label > n)
            throw ParseError("signed rotation: label " + std::to_string(label) +
                             " outside 1.." + std::to_string(n));
        where[label].push_back(static_cast<int>(pos));
    }
    std::vector<Edge> edges;
    for (int label = 1; label <= n; ++label) {
        if (where[label].size() != 2)
            throw ParseError("signed rotation: label " + std::to_string(label) + " appears " +
                             std::to_string(where[label].size()) + " times");
        const int a = where[label][0];
        const int b = where[label][1];
        const int sign = (tokens[a] > 0) == (tokens[b] > 0) ? 1 : -1;
        edges.push_back({label, a, b, sign});
    }
    std::vector<int> rotation(tokens.size());
    std::iota(rotation.begin(), rotation.end(), 0);
    return Bouquet(RibbonGraph({std::move(rotation)}, std::move(edges)));
}

Bouquet parse_signed_rotation(std::string_view text) {
    std::vector<int> tokens;
    std::string cleaned;
    for (char c : text)
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r' && c != '(' && c != ')') cleaned += c;
    if (!cleaned.empty()) {
        std::size_t start = 0;
        while (start <= cleaned.size()) {
            const std::size_t comma = std::min(cleaned.find(',', start), cleaned.size());
            const std::string_view piece(cleaned.data() + start, comma - start);
            if (piece.empty()) throw ParseError("signed rotation: empty token");
            int value = 0;
            const char* first = piece.data();
            if (*first == '+') ++first;
            auto [ptr, ec] = std::from_chars(first, piece.data() + piece.size(), value);
            if (ec != std::errc{} || ptr != piece.data() + piece.size())
                throw ParseError("signed rotation: bad token '" + std::string(piece) + "'");
            tokens.push_back(value);
            start = comma + 1;
        }
    }
    return bouquet_from_tokens(tokens);
}

std::vector<int> signed_rotation(const Bouquet& bouquet) {
    const RibbonGraph& g = bouquet.graph();
    std::vector<int> label_of(g.num_half_edges()), sign_of(g.num_half_edges(), 1);
    for (const auto& e : g.edges()) {
        label_of[e.first] = e.label;
        label_of[e.second] = e.label;
    }
    std::vector<int> out;
    std::vector<bool> seen(g.max_label() + 1, false);
    for (int h : g.rotations().front()) {
        const int label = label_of[h];
        if (!seen[label]) {
            seen[label] = true;
            out.push_back(label);
        } else {
            out.push_back(g.edge(label).sign * label);
        }
    }
    return out;
}

std::string format_signed_rotation(const Bouquet& bouquet) {
    std::ostringstream os;
    const auto tokens = signed_rotation(bouquet);
    for (std::size_t i = 0; i < tokens.size(); ++i) os << (i ? "," : "") << tokens[i];
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

/// Vertex-arc partner of every corner: R(h_i) <-> L(h_{i+1}).
std::vector<int> vertex_arcs(const RibbonGraph& g) {
    std::vector<int> arc(2 * g.num_half_edges());
    for (const auto& rotation : g.rotations()) {
        const std::size_t k = rotation.size();
        for (std::size_t i = 0; i < k; ++i) {
            const int right = 2 * rotation[i] + 1;
            const int left = 2 * rotation[(i + 1) % k];
            arc[right] = left;
            arc[left] = right;
        }
    }
    return arc;
}

int count_bare(const RibbonGraph& g) {
    return static_cast<int>(std::count_if(g.rotations().begin(), g.rotations().end(),
                                          [](const auto& r) { return r.empty(); }));
}

/// Boundary links of the spanning subgraph on `subset`: attaching segments of
/// absent edges, long sides of present ones.
void subset_links(const RibbonGraph& g, EdgeMask subset, std::vector<int>& link) {
    link.resize(2 * g.num_half_edges());
    const auto& edges = g.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const int lf = 2 * edges[k].first, rf = lf + 1;
        const int ls = 2 * edges[k].second, rs = ls + 1;
        if (subset >> k & 1) {
            if (edges[k].sign > 0) {
                link[lf] = rs, link[rs] = lf;
                link[rf] = ls, link[ls] = rf;
            } else {
                link[lf] = ls, link[ls] = lf;
                link[rf] = rs, link[rs] = rf;
            }
        } else {
            link[lf] = rf, link[rf] = lf;
            link[ls] = rs, link[rs] = ls;
        }
    }
}

}  // namespace

BoundaryTracer::BoundaryTracer(const RibbonGraph& graph)
    : arc_(vertex_arcs(graph)), bare_vertices_(count_bare(graph)) {
    edges_.reserve(graph.num_edges());
    for (const auto& e : graph.edges()) edges_.push_back({e.first, e.second, e.sign < 0});
}

int BoundaryTracer::count(EdgeMask subset) const {
    thread_local std::vector<int> link;
    thread_local std::vector<unsigned char> visited;
    const std::size_t corners = arc_.size();
    link.resize(corners);
    visited.assign(corners, 0);
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        const int lf = 2 * edges_[k].first, rf = lf + 1;
        const int ls = 2 * edges_[k].second, rs = ls + 1;
        if (subset >> k & 1) {
            if (!edges_[k].twisted) {
                link[lf] = rs, link[rs] = lf;
                link[rf] = ls, link[ls] = rf;
            } else {
                link[lf] = ls, link[ls] = lf;
                link[rf] = rs, link[rs] = rf;
            }
        } else {
            link[lf] = rf, link[rf] = lf;
            link[ls] = rs, link[rs] = ls;
        }
    }
    int cycles = bare_vertices_;
    for (std::size_t start = 0; start < corners; ++start) {
        if (visited[start]) continue;
        ++cycles;
        int cur = static_cast<int>(start);
        do {
            visited[cur] = 1;
            const int other = link[cur];
            visited[other] = 1;
            cur = arc_[other];
        } while (cur != static_cast<int>(start));
    }
    return cycles;
}

int boundary_components(const RibbonGraph& graph, EdgeMask subset) {
    if (subset & ~graph.full_mask()) throw std::out_of_range("edge subset exceeds the label universe");
    return BoundaryTracer(graph).count(subset);
}

int boundary_components(const RibbonGraph& graph, std::span<const int> labels) {
    return BoundaryTracer(graph).count(graph.mask_of(labels));
}

std::uint64_t BoundaryProfile::with_components(int n) const {
    return static_cast<std::uint64_t>(std::count(counts.begin(), counts.end(), n));
}

std::map<int, std::uint64_t> BoundaryProfile::histogram() const {
    std::map<int, std::uint64_t> out;
    for (int c : counts) ++out[c];
    return out;
}

BoundaryProfile boundary_profile(const RibbonGraph& graph, unsigned threads) {
    if (graph.num_edges() > 30) throw ResourceError("boundary profile: more than 30 edges");
    const BoundaryTracer tracer(graph);
    const std::uint64_t total = std::uint64_t{1} << graph.num_edges();
    BoundaryProfile profile;
    profile.counts.resize(total);
    detail::for_each_chunk(total, threads, [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t m = begin; m < end; ++m) profile.counts[m] = tracer.count(m);
    });
    return profile;
}

std::uint64_t quasi_tree_count(const RibbonGraph& graph, unsigned threads) {
    if (graph.num_edges() >= 64) throw ResourceError("quasi-tree count: too many edges");
    const BoundaryTracer tracer(graph);
    const std::uint64_t total = std::uint64_t{1} << graph.num_edges();
    return detail::sum_chunks(total, threads, [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t found = 0;
        for (std::uint64_t m = begin; m < end; ++m) found += tracer.count(m) == 1;
        return found;
    });
}

std::uint64_t kappa_by_deletion_contraction(const RibbonGraph& graph) {
    if (graph.num_edges() == 0) return graph.num_vertices() == 1 ? 1 : 0;
    const int e = graph.edges().back().label;
    return kappa_by_deletion_contraction(delete_edge(graph, e)) +
           kappa_by_deletion_contraction(contract_edge(graph, e));
}

// ---------------------------------------------------------------------------

RibbonGraph delete_edge(const RibbonGraph& graph, int label) {
    const Edge& gone = graph.edge(label);
    const auto renumber = [&](int h) {
        return h - (h > gone.first ? 1 : 0) - (h > gone.second ? 1 : 0);
    };
    std::vector<std::vector<int>> rotations;
    rotations.reserve(graph.num_vertices());
    for (const auto& rotation : graph.rotations()) {
        std::vector<int> kept;
        for (int h : rotation)
            if (h != gone.first && h != gone.second) kept.push_back(renumber(h));
        rotations.push_back(std::move(kept));
    }
    std::vector<Edge> edges;
    for (const auto& e : graph.edges())
        if (e.label != label) edges.push_back({e.label, renumber(e.first), renumber(e.second), e.sign});
    return RibbonGraph(std::move(rotations), std::move(edges));
}

RibbonGraph partial_dual(const RibbonGraph& graph, EdgeMask subset) {
    if (subset & ~graph.full_mask()) throw std::out_of_range("edge subset exceeds the label universe");
    const auto& edges = graph.edges();
    const std::vector<int> arc = vertex_arcs(graph);
    std::vector<int> link;
    subset_links(graph, subset, link);

    // The segment starting at corner c becomes a half-edge of the dual. Ends
    // keep their half-edge id; of the two long sides of an edge, the one
    // through L(first) takes id `first`.
    std::vector<int> owner(graph.num_half_edges());
    for (std::size_t k = 0; k < edges.size(); ++k) owner[edges[k].first] = owner[edges[k].second] = k;
    const auto segment_id = [&](int corner) {
        const Edge& e = edges[owner[corner / 2]];
        if (!(subset >> owner[corner / 2] & 1)) return corner / 2;
        return (corner == 2 * e.first || link[corner] == 2 * e.first) ? e.first : e.second;
    };

    std::vector<std::pair<int, int>> segment(graph.num_half_edges());  // id -> (start, end)
    std::vector<std::vector<int>> rotations;
    std::vector<unsigned char> visited(arc.size(), 0);
    for (std::size_t start = 0; start < arc.size(); ++start) {
        if (visited[start]) continue;
        std::vector<int> rotation;
        int cur = static_cast<int>(start);
        do {
            const int next = link[cur];
            visited[cur] = visited[next] = 1;
            const int id = segment_id(cur);
            segment[id] = {cur, next};
            rotation.push_back(id);
            cur = arc[next];
        } while (cur != static_cast<int>(start));
        rotations.push_back(std::move(rotation));
    }
    for (const auto& rotation : graph.rotations())
        if (rotation.empty()) rotations.emplace_back();

    std::vector<Edge> dual_edges;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const Edge& e = edges[k];
        const int p1 = segment[e.first].first;
        const int q2 = segment[e.second].second;
        // The dual's free sides are the original attaching segments for edges
        // in the subset and the original long sides otherwise; the dual edge
        // is untwisted iff p1 and q2 share a free side.
        const int lf = 2 * e.first, rf = lf + 1, ls = 2 * e.second, rs = ls + 1;
        const auto joins = [](int a, int b, int x, int y) {
            return (a == x && b == y) || (a == y && b == x);
        };
        bool untwisted;
        if (subset >> k & 1)
            untwisted = joins(p1, q2, lf, rf) || joins(p1, q2, ls, rs);
        else if (e.sign > 0)
            untwisted = joins(p1, q2, lf, rs) || joins(p1, q2, rf, ls);
        else
            untwisted = joins(p1, q2, lf, ls) || joins(p1, q2, rf, rs);
        dual_edges.push_back({e.label, e.first, e.second, untwisted ? 1 : -1});
    }
    return RibbonGraph(std::move(rotations), std::move(dual_edges));
}

RibbonGraph partial_petrial(const RibbonGraph& graph, EdgeMask subset) {
    if (subset & ~graph.full_mask()) throw std::out_of_range("edge subset exceeds the label universe");
    std::vector<Edge> edges = graph.edges();
    for (std::size_t k = 0; k < edges.size(); ++k)
        if (subset >> k & 1) edges[k].sign = -edges[k].sign;
    return RibbonGraph(graph.rotations(), std::move(edges));
}

RibbonGraph contract_edge(const RibbonGraph& graph, int label) {
    const EdgeMask e = EdgeMask{1} << graph.index_of(label);
    return delete_edge(partial_dual(graph, e), label);
}

RibbonGraph one_vertex_join(const RibbonGraph& p, const RibbonGraph& q, std::size_t vertex_p,
                            std::size_t vertex_q, std::size_t gap_p, std::size_t gap_q) {
    if (vertex_p >= p.num_vertices() || vertex_q >= q.num_vertices())
        throw std::out_of_range("one-vertex join: vertex index out of range");
    const auto cut = [](const std::vector<int>& rotation, std::size_t gap, int offset) {
        const std::size_t k = rotation.size();
        if (gap >= std::max<std::size_t>(k, 1)) throw std::out_of_range("one-vertex join: gap out of range");
        std::vector<int> out;
        for (std::size_t i = 1; i <= k; ++i) out.push_back(rotation[(gap + i) % k] + offset);
        return out;
    };
    const int offset = static_cast<int>(p.num_half_edges());
    const int shift = p.max_label();

    std::vector<int> merged = cut(p.rotations()[vertex_p], gap_p, 0);
    const std::vector<int> tail = cut(q.rotations()[vertex_q], gap_q, offset);
    merged.insert(merged.end(), tail.begin(), tail.end());

    std::vector<std::vector<int>> rotations;
    for (std::size_t v = 0; v < p.num_vertices(); ++v)
        rotations.push_back(v == vertex_p ? merged : p.rotations()[v]);
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        if (v == vertex_q) continue;
        std::vector<int> r = q.rotations()[v];
        for (int& h : r) h += offset;
        rotations.push_back(std::move(r));
    }
    std::vector<Edge> edges = p.edges();
    for (const auto& e : q.edges())
        edges.push_back({e.label + shift, e.first + offset, e.second + offset, e.sign});
    return RibbonGraph(std::move(rotations), std::move(edges));
}

bool is_orientable(const RibbonGraph& graph) {
    const std::size_t nv = graph.num_vertices();
    std::vector<int> vertex_of(graph.num_half_edges());
    for (std::size_t v = 0; v < nv; ++v)
        for (int h : graph.rotations()[v]) vertex_of[h] = static_cast<int>(v);

    std::vector<std::vector<std::pair<int, int>>> adjacent(nv);
    for (const auto& e : graph.edges()) {
        const int u = vertex_of[e.first], w = vertex_of[e.second];
        adjacent[u].push_back({w, e.sign});
        adjacent[w].push_back({u, e.sign});
    }
    std::vector<int> side(nv, 0);
    for (std::size_t root = 0; root < nv; ++root) {
        if (side[root]) continue;
        side[root] = 1;
        std::vector<int> stack{static_cast<int>(root)};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (auto [w, sign] : adjacent[u]) {
                const int want = side[u] * sign;
                if (!side[w]) {
                    side[w] = want;
                    stack.push_back(w);
                } else if (side[w] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

Fingerprint fingerprint(const RibbonGraph& graph) {
    return {graph.num_vertices(), graph.num_edges(), boundary_profile(graph).histogram(),
            is_orientable(graph)};
}

}  // namespace qtree
