#include "qtree/delta_matroid.hpp"

#include "qtree/errors.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace qtree {

SetSystem::SetSystem(std::vector<int> ground, std::vector<ElementMask> feasible)
    : ground_(std::move(ground)), feasible_(std::move(feasible)) {
    if (ground_.size() > kMaxGround)
        throw std::invalid_argument("set system: ground set larger than " + std::to_string(kMaxGround));
    std::vector<int> sorted = ground_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("set system: repeated ground element");
    for (ElementMask f : feasible_)
        if (f & ~full_mask()) throw std::invalid_argument("set system: feasible set outside the ground set");
    std::sort(feasible_.begin(), feasible_.end());
    feasible_.erase(std::unique(feasible_.begin(), feasible_.end()), feasible_.end());
}

bool SetSystem::contains(ElementMask set) const {
    return std::binary_search(feasible_.begin(), feasible_.end(), set);
}

std::size_t SetSystem::index_of(int element) const {
    auto it = std::find(ground_.begin(), ground_.end(), element);
    if (it == ground_.end()) throw std::out_of_range("element " + std::to_string(element) + " not in ground set");
    return static_cast<std::size_t>(it - ground_.begin());
}

ElementMask SetSystem::mask_of(std::span<const int> elements) const {
    ElementMask mask = 0;
    for (int e : elements) mask |= ElementMask{1} << index_of(e);
    return mask;
}

std::vector<int> SetSystem::elements_of(ElementMask set) const {
    std::vector<int> out;
    for (std::size_t k = 0; k < ground_.size(); ++k)
        if (set >> k & 1) out.push_back(ground_[k]);
    return out;
}

SetSystem from_ribbon_graph(const RibbonGraph& graph, unsigned threads) {
    if (graph.num_edges() > kMaxGround)
        throw ResourceError("delta-matroid: more than " + std::to_string(kMaxGround) + " edges");
    const BoundaryProfile profile = boundary_profile(graph, threads);
    std::vector<ElementMask> feasible;
    for (std::size_t m = 0; m < profile.counts.size(); ++m)
        if (profile.counts[m] == 1) feasible.push_back(static_cast<ElementMask>(m));
    return SetSystem(graph.labels(), std::move(feasible));
}

std::optional<ExchangeViolation> find_exchange_violation(const SetSystem& system) {
    const std::size_t n = system.ground().size();
    std::vector<bool> member(std::size_t{1} << n, false);
    for (ElementMask f : system.feasible()) member[f] = true;
    for (ElementMask x : system.feasible()) {
        for (ElementMask y : system.feasible()) {
            const ElementMask diff = x ^ y;
            for (std::size_t u = 0; u < n; ++u) {
                if (!(diff >> u & 1)) continue;
                bool found = false;
                for (std::size_t v = 0; v < n && !found; ++v)
                    if (diff >> v & 1) found = member[x ^ (ElementMask{1} << u) ^ ((u == v) ? 0 : ElementMask{1} << v)];
                if (!found) return ExchangeViolation{x, y, system.ground()[u]};
            }
        }
    }
    return std::nullopt;
}

bool is_delta_matroid(const SetSystem& system) {
    return system.proper() && !find_exchange_violation(system);
}

bool is_even(const SetSystem& system) {
    const auto& f = system.feasible();
    if (f.empty()) return true;
    const int parity = std::popcount(f.front()) & 1;
    return std::all_of(f.begin(), f.end(), [parity](ElementMask s) { return (std::popcount(s) & 1) == parity; });
}

namespace {

/// F xor T with both as sorted mask arrays.
std::vector<ElementMask> symmetric_difference(const std::vector<ElementMask>& family,
                                              std::vector<ElementMask> term) {
    std::sort(term.begin(), term.end());
    term.erase(std::unique(term.begin(), term.end()), term.end());
    std::vector<ElementMask> out;
    std::set_symmetric_difference(family.begin(), family.end(), term.begin(), term.end(),
                                  std::back_inserter(out));
    return out;
}

std::pair<ElementMask, ElementMask> pair_bits(const SetSystem& system, int a, int b) {
    if (a == b) throw std::invalid_argument("handle operations need two distinct elements");
    return {ElementMask{1} << system.index_of(a), ElementMask{1} << system.index_of(b)};
}

std::vector<ElementMask> slide_term(const SetSystem& system, ElementMask a, ElementMask b) {
    std::vector<ElementMask> term;
    for (ElementMask f : system.feasible())
        if ((f & b) && !(f & a)) term.push_back((f & ~b) | a);
    return term;
}

std::vector<ElementMask> exchange_term(const SetSystem& system, ElementMask a, ElementMask b) {
    std::vector<ElementMask> term;
    for (ElementMask f : system.feasible())
        if (!(f & a) && !(f & b)) term.push_back(f | a | b);
    return term;
}

}  // namespace

SetSystem twist(const SetSystem& system, ElementMask subset) {
    if (subset & ~system.full_mask()) throw std::out_of_range("twist: subset outside the ground set");
    std::vector<ElementMask> out;
    out.reserve(system.num_feasible());
    for (ElementMask f : system.feasible()) out.push_back(f ^ subset);
    return SetSystem(system.ground(), std::move(out));
}

SetSystem loop_complementation(const SetSystem& system, int element) {
    const ElementMask e = ElementMask{1} << system.index_of(element);
    std::vector<ElementMask> term;
    for (ElementMask f : system.feasible())
        if (!(f & e)) term.push_back(f | e);
    return SetSystem(system.ground(), symmetric_difference(system.feasible(), std::move(term)));
}

SetSystem handle_slide(const SetSystem& system, int a, int b) {
    const auto [ma, mb] = pair_bits(system, a, b);
    return SetSystem(system.ground(), symmetric_difference(system.feasible(), slide_term(system, ma, mb)));
}

SetSystem exchange_handle_ends(const SetSystem& system, int a, int b) {
    const auto [ma, mb] = pair_bits(system, a, b);
    return SetSystem(system.ground(), symmetric_difference(system.feasible(), exchange_term(system, ma, mb)));
}

SetSystem exchange_then_slide(const SetSystem& system, int a, int b) {
    const auto [ma, mb] = pair_bits(system, a, b);
    auto once = symmetric_difference(system.feasible(), exchange_term(system, ma, mb));
    return SetSystem(system.ground(), symmetric_difference(once, slide_term(system, ma, mb)));
}

FourTermResult four_term_check(const SetSystem& system, int a, int b) {
    FourTermResult r;
    r.original = system.num_feasible();
    r.slid = handle_slide(system, a, b).num_feasible();
    r.exchanged = exchange_handle_ends(system, a, b).num_feasible();
    r.exchanged_slid = exchange_then_slide(system, a, b).num_feasible();
    r.holds = r.original + r.exchanged_slid == r.exchanged + r.slid;
    return r;
}

std::string format_set_system(const SetSystem& system) {
    std::ostringstream os;
    for (std::size_t i = 0; i < system.ground().size(); ++i) os << (i ? " " : "") << system.ground()[i];
    os << '\n';
    for (ElementMask f : system.feasible()) {
        const auto elements = system.elements_of(f);
        if (elements.empty()) os << '-';
        for (std::size_t i = 0; i < elements.size(); ++i) os << (i ? " " : "") << elements[i];
        os << '\n';
    }
    return os.str();
}

SetSystem parse_set_system(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw ParseError("set system: missing ground-set line");

    const auto read_ints = [](const std::string& s) {
        std::istringstream is(s);
        std::vector<int> out;
        std::string tok;
        while (is >> tok) {
            try {
                std::size_t used = 0;
                out.push_back(std::stoi(tok, &used));
                if (used != tok.size()) throw ParseError("set system: bad element '" + tok + "'");
            } catch (const std::logic_error&) {
                throw ParseError("set system: bad element '" + tok + "'");
            }
        }
        return out;
    };

    std::vector<int> ground = read_ints(lines.front());
    std::vector<ElementMask> feasible;
    try {
        SetSystem shape(ground, {});
        for (std::size_t i = 1; i < lines.size(); ++i) {
            std::istringstream is(lines[i]);
            std::string first;
            is >> first;
            if (first == "-") {
                std::string rest;
                if (is >> rest) throw ParseError("set system: '-' must stand alone");
                feasible.push_back(0);
                continue;
            }
            feasible.push_back(shape.mask_of(read_ints(lines[i])));
        }
        return SetSystem(std::move(ground), std::move(feasible));
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("set system: ") + e.what());
    }
}

// ---------------------------------------------------------------------------

namespace {

int label_at(const std::vector<int>& tokens, std::size_t i) { return tokens[i] < 0 ? -tokens[i] : tokens[i]; }

/// First position i with one of {a, b} at i and the other at i+1 (cyclic).
std::optional<std::size_t> neighbouring_position(const std::vector<int>& tokens, int a, int b) {
    const std::size_t m = tokens.size();
    for (std::size_t i = 0; i < m; ++i) {
        const int x = label_at(tokens, i), y = label_at(tokens, (i + 1) % m);
        if ((x == a && y == b) || (x == b && y == a)) return i;
    }
    return std::nullopt;
}

void check_pair(const Bouquet& bouquet, int a, int b) {
    if (a == b) throw std::invalid_argument("handle moves need two distinct edges");
    bouquet.graph().index_of(a);
    bouquet.graph().index_of(b);
}

}  // namespace

bool have_neighbouring_ends(const Bouquet& bouquet, int a, int b) {
    check_pair(bouquet, a, b);
    return neighbouring_position(signed_rotation(bouquet), a, b).has_value();
}

Bouquet ribbon_handle_slide(const Bouquet& bouquet, int a, int b) {
    check_pair(bouquet, a, b);
    std::vector<int> tokens = signed_rotation(bouquet);
    const std::size_t m = tokens.size();
    const auto at = neighbouring_position(tokens, a, b);
    if (!at) throw std::invalid_argument("handle slide: edges have no neighbouring ends");

    const std::size_t i = *at, j = (i + 1) % m;
    const bool a_before_b = label_at(tokens, i) == a;
    const std::size_t a_pos = a_before_b ? i : j;
    const std::size_t b_pos = a_before_b ? j : i;
    const bool b_twisted = bouquet.graph().edge(b).sign < 0;

    // Corner geometry: the a-end sits on L(p) when it precedes b's end p and
    // on R(p) when it follows. An untwisted ribbon joins L(p) to R(q) and
    // R(p) to L(q); a twisted one joins L to L and R to R, reversing a's end.
    const bool lands_after_q = a_before_b != b_twisted;
    int moved = tokens[a_pos];
    if (b_twisted) moved = -moved;

    tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(a_pos));
    std::size_t q = 0;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
        const std::size_t original = k >= a_pos ? k + 1 : k;
        if (label_at(tokens, k) == b && original != b_pos) q = k;
    }
    tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(lands_after_q ? q + 1 : q), moved);
    return bouquet_from_tokens(tokens);
}

Bouquet ribbon_exchange_handle_ends(const Bouquet& bouquet, int a, int b) {
    check_pair(bouquet, a, b);
    std::vector<int> tokens = signed_rotation(bouquet);
    const auto at = neighbouring_position(tokens, a, b);
    if (!at) throw std::invalid_argument("exchange handle ends: edges have no neighbouring ends");
    std::swap(tokens[*at], tokens[(*at + 1) % tokens.size()]);
    return bouquet_from_tokens(tokens);
}

}  // namespace qtree
