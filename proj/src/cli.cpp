#include "qtree/cli.hpp"

#include "qtree/chord_diagram.hpp"
#include "qtree/delta_matroid.hpp"
#include "qtree/detail/parallel.hpp"
#include "qtree/errors.hpp"
#include "qtree/families.hpp"
#include "qtree/linalg.hpp"
#include "qtree/matchings.hpp"
#include "qtree/matrix_quasi_tree.hpp"
#include "qtree/random.hpp"
#include "qtree/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

namespace qtree {

namespace {

constexpr std::size_t kBruteForceEdgeLimit = 24;

struct Options {
    std::string rotation;
    std::string family;
    std::string graph_file;
    int n = -1;
    std::string methods = "all";
    std::string format = "json";
    unsigned threads = 1;
    int max_n = 12;
    bool force = false;
    bool timing = false;
    bool inject_fault = false;
    std::uint64_t seed = 1;
    int count = 100;
    std::string op;
    std::string subset;
    std::string set_system_file;
    std::string edges_file;
    std::string graph_kind;
    bool product = false;
    int a = 0;
    int b = 0;
    int e = 0;
};

/// Input problem detected after option parsing; maps to exit code 2.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<int> parse_label_list(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw InputError("bad label '" + tok + "'");
        } catch (const std::logic_error&) {
            throw InputError("bad label '" + tok + "'");
        }
    }
    return out;
}

/// The object under study: a bouquet (from a rotation or family) or a
/// general ribbon graph read from a file.
struct Input {
    Json echo = Json::object();
    RibbonGraph graph;
    std::optional<Bouquet> bouquet;
    std::optional<FamilyId> family;
    int n = 0;
};

Input resolve_input(const Options& o) {
    const int sources = !o.rotation.empty() + !o.family.empty() + !o.graph_file.empty();
    if (sources != 1) throw InputError("give exactly one of --rotation, --family or --graph-file");
    Input in;
    if (!o.family.empty()) {
        if (o.n < 0) throw InputError("--family needs --n");
        in.family = parse_family(o.family);
        in.n = o.n;
        if (o.n < family_min_n(*in.family))
            throw InputError(o.family + "_n is defined for n >= " + std::to_string(family_min_n(*in.family)));
        in.bouquet = make_family(*in.family, o.n);
        in.echo["family"] = o.family;
        in.echo["n"] = o.n;
        in.echo["rotation"] = format_signed_rotation(*in.bouquet);
    } else if (!o.rotation.empty()) {
        in.bouquet = parse_signed_rotation(o.rotation);
        in.echo["rotation"] = format_signed_rotation(*in.bouquet);
    } else {
        in.graph = parse_ribbon_graph(read_file(o.graph_file));
        if (in.graph.is_bouquet()) in.bouquet = Bouquet(in.graph);
        in.echo["graph"] = to_json(in.graph);
    }
    if (in.bouquet) in.graph = in.bouquet->graph();
    in.echo["vertices"] = in.graph.num_vertices();
    in.echo["edges"] = in.graph.num_edges();
    return in;
}

const Bouquet& require_bouquet(const Input& in) {
    if (!in.bouquet) throw EligibilityError("this command needs a one-vertex ribbon graph (bouquet)");
    return *in.bouquet;
}

void guard_enumeration(const RibbonGraph& g, const Options& o) {
    if (g.num_edges() > kBruteForceEdgeLimit && !o.force)
        throw ResourceError("exhaustive enumeration over " + std::to_string(g.num_edges()) +
                            " edges refused (limit " + std::to_string(kBruteForceEdgeLimit) + ", pass --force)");
}

void emit(std::ostream& out, const Options& o, const Json& report, const std::function<void(std::ostream&)>& text,
          const std::function<void(std::ostream&)>& csv) {
    if (o.format == "json")
        out << report.dump(2) << '\n';
    else if (o.format == "csv")
        csv(out);
    else
        text(out);
}

// ---------------------------------------------------------------------------
// count

const std::vector<std::string> kMethods = {"brute", "det", "delcon", "closed"};

std::vector<std::string> parse_methods(const std::string& text, bool& all) {
    all = false;
    std::vector<std::string> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        if (tok == "all") {
            all = true;
            return kMethods;
        }
        if (std::find(kMethods.begin(), kMethods.end(), tok) == kMethods.end())
            throw InputError("unknown method '" + tok + "' (expected brute, det, delcon, closed or all)");
        if (std::find(out.begin(), out.end(), tok) == out.end()) out.push_back(tok);
    }
    if (out.empty()) throw InputError("--methods is empty");
    std::sort(out.begin(), out.end(), [](const std::string& x, const std::string& y) {
        return std::find(kMethods.begin(), kMethods.end(), x) < std::find(kMethods.begin(), kMethods.end(), y);
    });
    return out;
}

int cmd_count(const Options& o, std::ostream& out) {
    const Input in = resolve_input(o);
    bool all = false;
    const auto methods = parse_methods(o.methods, all);

    Json results = Json::object(), skipped = Json::object(), timing = Json::object();
    bool refused = false;
    for (const auto& m : methods) {
        Stopwatch clock;
        try {
            BigInt k;
            if (m == "brute") {
                guard_enumeration(in.graph, o);
                k = quasi_tree_count(in.graph, o.threads);
            } else if (m == "det") {
                k = kappa_by_determinant(require_bouquet(in));
            } else if (m == "delcon") {
                if (in.family) {
                    k = delcon_kappa(*in.family, in.n);
                } else {
                    guard_enumeration(in.graph, o);
                    k = kappa_by_deletion_contraction(in.graph);
                }
            } else {
                if (!in.family) throw EligibilityError("closed form needs --family");
                k = predicted_kappa(*in.family, in.n);
            }
            results[m] = to_json(k);
        } catch (const EligibilityError& e) {
            skipped[m] = e.what();
            if (!all) refused = true;
        }
        if (o.timing) timing[m] = clock.elapsed_ms();
    }

    bool agree = true;
    for (const auto& [name, value] : results.items())
        if (value != results.begin().value()) agree = false;

    Json report{{"command", "count"}, {"input", in.echo}, {"results", results}};
    if (!skipped.empty()) report["skipped"] = skipped;
    report["agree"] = agree;
    if (o.timing) report["timing_ms"] = timing;

    emit(
        out, o, report,
        [&](std::ostream& os) {
            for (const auto& [name, value] : results.items()) os << name << ' ' << value.dump() << '\n';
            for (const auto& [name, why] : skipped.items()) os << name << " skipped: " << why.get<std::string>() << '\n';
            os << "agree " << (agree ? "true" : "false") << '\n';
        },
        [&](std::ostream& os) {
            os << "method,kappa\n";
            for (const auto& [name, value] : results.items()) os << name << ',' << value.dump() << '\n';
        });
    if (!agree) return kExitDisagreement;
    return refused ? kExitIneligible : kExitOk;
}

// ---------------------------------------------------------------------------
// verify-table2

struct TableRow {
    FamilyId family;
    int n;
    BigInt brute, det, delcon, closed;
    bool ok = false;
};

int cmd_verify_table2(const Options& o, std::ostream& out) {
    if (o.max_n > static_cast<int>(kBruteForceEdgeLimit) && !o.force)
        throw ResourceError("--max-n above " + std::to_string(kBruteForceEdgeLimit) + " needs --force");
    std::vector<TableRow> rows;
    for (FamilyId id : kAllFamilies)
        for (int n = family_min_n(id); n <= o.max_n; ++n) rows.push_back(TableRow{id, n, 0, 0, 0, 0, false});

    Stopwatch clock;
    // Rows are dealt out round-robin so the large instances spread evenly;
    // each row is written by exactly one worker.
    const unsigned workers = std::max(1u, std::min<unsigned>(o.threads, static_cast<unsigned>(rows.size())));
    const auto fill = [&](unsigned w) {
        for (std::size_t i = w; i < rows.size(); i += workers) {
            TableRow& r = rows[i];
            const Bouquet bouquet = make_family(r.family, r.n);
            r.brute = quasi_tree_count(bouquet);
            r.det = kappa_by_determinant(bouquet);
            r.delcon = delcon_kappa(r.family, r.n);
            r.closed = predicted_kappa(r.family, r.n) + (o.inject_fault ? 1 : 0);
            r.ok = r.brute == r.det && r.det == r.delcon && r.delcon == r.closed;
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(fill, w);
        fill(0);
    }

    bool all_pass = true;
    Json table = Json::array();
    for (const auto& r : rows) {
        all_pass = all_pass && r.ok;
        table.push_back(Json{{"family", to_string(r.family)},
                             {"n", r.n},
                             {"brute", to_json(r.brute)},
                             {"det", to_json(r.det)},
                             {"delcon", to_json(r.delcon)},
                             {"closed", to_json(r.closed)},
                             {"ok", r.ok}});
    }
    Json report{{"command", "verify-table2"}, {"max_n", o.max_n}, {"rows", table}, {"all_pass", all_pass}};
    if (o.timing) report["timing_ms"] = clock.elapsed_ms();

    emit(
        out, o, report,
        [&](std::ostream& os) {
            os << std::left << std::setw(8) << "family" << std::setw(5) << "n" << std::setw(12) << "brute"
               << std::setw(12) << "det" << std::setw(12) << "delcon" << std::setw(12) << "closed" << "ok\n";
            for (const auto& r : rows)
                os << std::setw(8) << to_string(r.family) << std::setw(5) << r.n << std::setw(12) << r.brute
                   << std::setw(12) << r.det << std::setw(12) << r.delcon << std::setw(12) << r.closed
                   << (r.ok ? "yes" : "NO") << '\n';
            os << (all_pass ? "all rows agree\n" : "MISMATCH\n");
        },
        [&](std::ostream& os) {
            os << "family,n,brute,det,delcon,closed,ok\n";
            for (const auto& r : rows)
                os << to_string(r.family) << ',' << r.n << ',' << r.brute << ',' << r.det << ',' << r.delcon << ','
                   << r.closed << ',' << (r.ok ? "true" : "false") << '\n';
        });
    return all_pass ? kExitOk : kExitDisagreement;
}

// ---------------------------------------------------------------------------
// matrix / charpoly

int cmd_matrix(const Options& o, std::ostream& out) {
    const Input in = resolve_input(o);
    const Bouquet& b = require_bouquet(in);
    const FramedChordDiagram diagram = chord_diagram_from_bouquet(b);
    const SignMatrix a = intersection_matrix(diagram);
    const IntMatrix ipa = identity_plus_intersection(b);
    const BigInt det = unchecked_determinant(b);
    Json report{{"command", "matrix"},
                {"input", in.echo},
                {"chords", to_json(diagram)},
                {"intersection_matrix", matrix_to_json(a)},
                {"identity_plus_matrix", matrix_to_json(ipa)},
                {"det_identity_plus", to_json(det)},
                {"determinant_formula_applies", determinant_formula_applies(b)}};
    emit(
        out, o, report,
        [&](std::ostream& os) {
            for (Eigen::Index i = 0; i < a.rows(); ++i) {
                for (Eigen::Index j = 0; j < a.cols(); ++j) os << (j ? " " : "") << std::setw(2) << a(i, j);
                os << '\n';
            }
            os << "det(I+A) = " << det << '\n';
        },
        [&](std::ostream& os) { os << matrix_to_csv(a); });
    return kExitOk;
}

int cmd_charpoly(const Options& o, std::ostream& out) {
    const Input in = resolve_input(o);
    const Bouquet& b = require_bouquet(in);
    const IntPolynomial direct = char_poly(intersection_matrix(b));
    Json report{{"command", "charpoly"}, {"input", in.echo}, {"charpoly", to_json(direct)}};
    bool agree = true;
    if (in.family && has_predicted_charpoly(*in.family)) {
        const IntPolynomial predicted = predicted_charpoly(*in.family, in.n);
        agree = predicted == direct;
        report["predicted"] = to_json(predicted);
        report["agree"] = agree;
    }
    emit(
        out, o, report, [&](std::ostream& os) { os << to_string(direct, "t") << '\n'; },
        [&](std::ostream& os) {
            os << "degree,coefficient\n";
            for (std::size_t k = 0; k < direct.coefficients().size(); ++k)
                os << k << ',' << direct.coefficients()[k] << '\n';
        });
    return agree ? kExitOk : kExitDisagreement;
}

// ---------------------------------------------------------------------------
// dm

int cmd_dm(const Options& o, std::ostream& out) {
    SetSystem system;
    Json echo;
    if (!o.set_system_file.empty()) {
        if (!o.rotation.empty() || !o.family.empty() || !o.graph_file.empty())
            throw InputError("--set-system cannot be combined with another input");
        system = parse_set_system(read_file(o.set_system_file));
        echo = Json{{"set_system", o.set_system_file}};
    } else {
        const Input in = resolve_input(o);
        guard_enumeration(in.graph, o);
        system = from_ribbon_graph(in.graph, o.threads);
        echo = in.echo;
    }

    const std::string op = o.op.empty() ? "list" : o.op;
    Json report{{"command", "dm"}, {"op", op}, {"input", echo}};
    int code = kExitOk;
    std::optional<SetSystem> result;
    std::function<void(std::ostream&)> text;

    if (op == "list") {
        result = system;
    } else if (op == "check") {
        const auto violation = find_exchange_violation(system);
        const bool dm = system.proper() && !violation;
        report["proper"] = system.proper();
        report["delta_matroid"] = dm;
        report["even"] = is_even(system);
        if (violation)
            report["violation"] = Json{{"x", system.elements_of(violation->x)},
                                       {"y", system.elements_of(violation->y)},
                                       {"u", violation->u}};
        text = [dm, &system](std::ostream& os) {
            os << "delta_matroid " << (dm ? "true" : "false") << "\neven " << (is_even(system) ? "true" : "false")
               << '\n';
        };
    } else if (op == "twist") {
        result = twist(system, system.mask_of(parse_label_list(o.subset)));
    } else if (op == "loop-complement") {
        result = loop_complementation(system, o.e);
    } else if (op == "slide") {
        result = handle_slide(system, o.a, o.b);
    } else if (op == "exchange") {
        result = exchange_handle_ends(system, o.a, o.b);
    } else if (op == "four-term") {
        const FourTermResult r = four_term_check(system, o.a, o.b);
        report["a"] = o.a;
        report["b"] = o.b;
        report["original"] = r.original;
        report["slid"] = r.slid;
        report["exchanged"] = r.exchanged;
        report["exchanged_slid"] = r.exchanged_slid;
        report["holds"] = r.holds;
        if (!r.holds) code = kExitDisagreement;
        text = [r](std::ostream& os) {
            os << r.original << " + " << r.exchanged_slid << " - " << r.exchanged << " - " << r.slid << " = 0 "
               << (r.holds ? "holds" : "FAILS") << '\n';
        };
    } else {
        throw InputError("unknown --op '" + op +
                         "' (expected list, check, twist, loop-complement, slide, exchange or four-term)");
    }

    if (result) {
        report["num_feasible"] = result->num_feasible();
        report["set_system"] = to_json(*result);
        text = [&result](std::ostream& os) { os << format_set_system(*result); };
    }
    emit(out, o, report, text, text);
    return code;
}

// ---------------------------------------------------------------------------
// matchings

int cmd_matchings(const Options& o, std::ostream& out) {
    SimpleGraph base;
    bool product = o.product;
    Json report{{"command", "matchings"}};
    std::optional<BigInt> expected;
    if (!o.edges_file.empty()) {
        if (!o.graph_kind.empty()) throw InputError("give either --graph or --edges, not both");
        base = parse_edge_list(read_file(o.edges_file));
        report["input"] = Json{{"edges", o.edges_file}};
    } else {
        if (o.n < 0) throw InputError("--graph needs --n");
        product = true;
        if (o.graph_kind == "path") {
            base = path_graph(o.n);
            expected = fibonacci(o.n + 1);
        } else if (o.graph_kind == "caterpillar") {
            if (o.n < 3) throw InputError("caterpillar needs --n >= 3");
            base = caterpillar(o.n);
            expected = lucas(o.n - 1);
        } else {
            throw InputError("--graph must be path or caterpillar (or use --edges FILE)");
        }
        report["input"] = Json{{"graph", o.graph_kind}, {"n", o.n}};
    }
    const SimpleGraph g = product ? grid_product(base) : base;
    if (g.num_vertices() > 64) throw ResourceError("matching count limited to 64 vertices");
    const BigInt count = count_perfect_matchings(g);
    report["product_with_p2"] = product;
    report["vertices"] = g.num_vertices();
    report["edges"] = g.edges().size();
    report["perfect_matchings"] = to_json(count);
    bool agree = true;
    if (expected) {
        agree = *expected == count;
        report["expected"] = to_json(*expected);
        report["agree"] = agree;
    }
    const auto line = [&](std::ostream& os) { os << count << '\n'; };
    emit(out, o, report, line, [&](std::ostream& os) { os << "perfect_matchings\n" << count << '\n'; });
    return agree ? kExitOk : kExitDisagreement;
}

// ---------------------------------------------------------------------------
// graph

int cmd_graph(const Options& o, std::ostream& out) {
    const Input in = resolve_input(o);
    const std::string op = o.op.empty() ? "show" : o.op;
    const std::vector<int> labels = parse_label_list(o.subset);
    RibbonGraph g;
    if (op == "show")
        g = in.graph;
    else if (op == "dual")
        g = partial_dual(in.graph, in.graph.mask_of(labels));
    else if (op == "petrial")
        g = partial_petrial(in.graph, in.graph.mask_of(labels));
    else if (op == "delete" || op == "contract") {
        g = in.graph;
        for (int label : labels) g = op == "delete" ? delete_edge(g, label) : contract_edge(g, label);
    } else {
        throw InputError("unknown --op '" + op + "' (expected show, dual, petrial, delete or contract)");
    }
    guard_enumeration(g, o);
    const Fingerprint fp = fingerprint(g);
    Json histogram = Json::object();
    for (const auto& [k, count] : fp.profile) histogram[std::to_string(k)] = count;
    Json report{{"command", "graph"}, {"op", op}, {"subset", labels}, {"input", in.echo},
                {"result", to_json(g)},  {"orientable", fp.orientable}, {"boundary_histogram", histogram},
                {"kappa", fp.profile.count(1) ? fp.profile.at(1) : 0}};
    emit(
        out, o, report, [&](std::ostream& os) { os << format_ribbon_graph(g); },
        [&](std::ostream& os) {
            os << "components,subsets\n";
            for (const auto& [k, count] : fp.profile) os << k << ',' << count << '\n';
        });
    return kExitOk;
}

// ---------------------------------------------------------------------------
// property

int cmd_property(const Options& o, std::ostream& out) {
    if (o.n < 1) throw InputError("property needs --n >= 1");
    if (o.count < 0) throw InputError("--count must be non-negative");
    if (o.n > static_cast<int>(kBruteForceEdgeLimit) && !o.force)
        throw ResourceError("--n above " + std::to_string(kBruteForceEdgeLimit) + " needs --force");

    // Instances are drawn serially so the corpus depends only on the seed.
    Rng rng(o.seed);
    std::vector<Bouquet> corpus;
    for (int i = 0; i < o.count; ++i) {
        const int edges = std::uniform_int_distribution<int>(1, o.n)(rng);
        corpus.push_back(i % 2 == 0 ? random_orientable_bouquet(rng, edges) : random_one_twist_bouquet(rng, edges));
    }
    std::vector<std::uint64_t> brute(corpus.size());
    std::vector<BigInt> det(corpus.size());
    detail::for_each_chunk(corpus.size(), o.threads, [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            brute[i] = quasi_tree_count(corpus[i]);
            det[i] = kappa_by_determinant(corpus[i]);
        }
    });
    Json failures = Json::array();
    for (std::size_t i = 0; i < corpus.size(); ++i)
        if (BigInt(brute[i]) != det[i])
            failures.push_back(Json{{"rotation", format_signed_rotation(corpus[i])},
                                    {"brute", brute[i]},
                                    {"det", to_json(det[i])}});
    const bool pass = failures.empty();
    Json report{{"command", "property"}, {"seed", o.seed},     {"count", o.count},
                {"max_edges", o.n},       {"failures", failures}, {"all_pass", pass}};
    emit(
        out, o, report,
        [&](std::ostream& os) {
            os << corpus.size() << " bouquets, " << failures.size() << " disagreements\n";
        },
        [&](std::ostream& os) {
            os << "rotation,brute,det\n";
            for (const auto& f : failures)
                os << '"' << f["rotation"].get<std::string>() << "\"," << f["brute"].dump() << ','
                   << f["det"].dump() << '\n';
        });
    return pass ? kExitOk : kExitDisagreement;
}

// ---------------------------------------------------------------------------

void add_input_options(CLI::App* sub, Options& o) {
    sub->add_option("--rotation", o.rotation, "signed rotation, e.g. \"-1,2,1,2\"");
    sub->add_option("--family", o.family, "family id: F, W, Fp, F1, Fp1, Fpn, W1");
    sub->add_option("--n", o.n, "family index");
    sub->add_option("--graph-file", o.graph_file, "ribbon graph in text format");
}

void add_common_options(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_flag("--force", o.force, "lift the exhaustive-enumeration guard");
    sub->add_flag("--timing", o.timing, "include wall-clock timings in the report");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Quasi-tree counting for ribbon graphs and bouquets", "qtree"};
    app.require_subcommand(1);

    auto* count = app.add_subcommand("count", "count spanning quasi-trees by several methods");
    add_input_options(count, o);
    add_common_options(count, o);
    count->add_option("--methods", o.methods, "comma list of brute, det, delcon, closed, all");

    auto* table = app.add_subcommand("verify-table2", "cross-check every family against its closed form");
    add_common_options(table, o);
    table->add_option("--max-n", o.max_n, "largest family index");
    table->add_flag("--inject-fault", o.inject_fault, "perturb the closed forms (negative control)");

    auto* matrix = app.add_subcommand("matrix", "intersection matrix of a bouquet");
    add_input_options(matrix, o);
    add_common_options(matrix, o);

    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial of the intersection matrix");
    add_input_options(charpoly, o);
    add_common_options(charpoly, o);

    auto* dm = app.add_subcommand("dm", "delta-matroid of quasi-trees and its operations");
    add_input_options(dm, o);
    add_common_options(dm, o);
    dm->add_option("--set-system", o.set_system_file, "set system in text format");
    dm->add_option("--op", o.op, "list, check, twist, loop-complement, slide, exchange, four-term");
    dm->add_option("--subset", o.subset, "comma list of elements (twist)");
    dm->add_option("--a", o.a, "first element (slide, exchange, four-term)");
    dm->add_option("--b", o.b, "second element (slide, exchange, four-term)");
    dm->add_option("--e", o.e, "element (loop-complement)");

    auto* matchings = app.add_subcommand("matchings", "perfect matchings of ladder-like graphs");
    add_common_options(matchings, o);
    matchings->add_option("--graph", o.graph_kind, "path or caterpillar (counted as P2 x G)");
    matchings->add_option("--n", o.n, "number of vertices of the base graph");
    matchings->add_option("--edges", o.edges_file, "edge list file");
    matchings->add_flag("--product", o.product, "count P2 x G for an edge-list graph");

    auto* graph = app.add_subcommand("graph", "ribbon-graph operations");
    add_input_options(graph, o);
    add_common_options(graph, o);
    graph->add_option("--op", o.op, "show, dual, petrial, delete, contract");
    graph->add_option("--subset", o.subset, "comma list of edge labels");

    auto* property = app.add_subcommand("property", "seeded random check of det(I+A) against brute force");
    add_common_options(property, o);
    property->add_option("--seed", o.seed, "random seed");
    property->add_option("--count", o.count, "number of bouquets");
    property->add_option("--n", o.n, "maximum number of loops");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "qtree: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (count->parsed()) return cmd_count(o, out);
        if (table->parsed()) return cmd_verify_table2(o, out);
        if (matrix->parsed()) return cmd_matrix(o, out);
        if (charpoly->parsed()) return cmd_charpoly(o, out);
        if (dm->parsed()) return cmd_dm(o, out);
        if (matchings->parsed()) return cmd_matchings(o, out);
        if (graph->parsed()) return cmd_graph(o, out);
        if (property->parsed()) return cmd_property(o, out);
    } catch (const EligibilityError& e) {
        err << "qtree: not applicable: " << e.what() << '\n';
        return kExitIneligible;
    } catch (const ResourceError& e) {
        err << "qtree: " << e.what() << '\n';
        return kExitResourceGuard;
    } catch (const std::invalid_argument& e) {
        err << "qtree: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "qtree: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace qtree
