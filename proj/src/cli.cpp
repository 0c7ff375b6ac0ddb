#include "homreconf/cli.hpp"
#include "homreconf/bundle.hpp"
#include "homreconf/csp.hpp"
#include "homreconf/families.hpp"
#include "homreconf/freezer.hpp"
#include "homreconf/frozen_search.hpp"
#include "homreconf/gadget.hpp"
#include "homreconf/io.hpp"
#include "homreconf/reduction.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>

namespace homreconf {

namespace {

// Collects the report body and the facts every report ends with.
class Report {
public:
    Report(std::vector<std::string> args) : args_(std::move(args)) {}

    std::ostringstream body;

    // Returns the file content and folds it into the input digest.
    std::string input(const std::string & path)
    {
        std::string text = read_file(path);
        digest_ = fnv1a(std::to_string(text.size()) + ":", digest_);
        digest_ = fnv1a(text, digest_);
        return text;
    }

    void cap_hit(const std::string & what) { caps_.push_back(what); }
    bool any_cap() const { return !caps_.empty(); }

    void emit(std::ostream & out) const
    {
        out << "command:";
        for (const auto & a : args_)
            out << ' ' << a;
        out << "\ninputs: " << hex64(digest_) << '\n' << body.str() << "caps-hit:";
        if (caps_.empty())
            out << " none";
        for (const auto & c : caps_)
            out << ' ' << c;
        out << '\n';
    }

private:
    std::vector<std::string> args_;
    std::uint64_t digest_ = 14695981039346656037ull;
    std::vector<std::string> caps_;
};

struct Settings {
    std::size_t cap = default_enumeration_cap;
    std::size_t budget = default_state_budget;
    std::string dot;
    bool timing = false;
};

void maybe_dot(const Settings & s, const EdgeColouredGraph & g)
{
    if (!s.dot.empty())
        write_file(s.dot, write_dot(g));
}

void print_hom(std::ostream & out, const Graph & source, const Graph & target, const Hom & f, const char * indent = "  ")
{
    std::istringstream lines(write_hom(source, target, f));
    std::string line;
    while (std::getline(lines, line))
        out << indent << line << '\n';
}

const char * yes_no(bool b) { return b ? "yes" : "no"; }

struct Loaded {
    EdgeColouredGraph g{std::vector<Graph>{Graph{}}};
    EdgeColouredGraph h{std::vector<Graph>{Graph{}}};
};

Loaded load_pair(Report & r, const std::string & gfile, const std::string & hfile)
{
    Loaded l;
    l.g = read_any_graph(r.input(gfile));
    l.h = read_any_graph(r.input(hfile));
    if (l.g.layer_count() != l.h.layer_count())
        throw std::invalid_argument("source and target have different layer counts");
    return l;
}

int cmd_hom(Report & r, const Settings & s, const std::string & gfile, const std::string & hfile, bool count, bool enumerate)
{
    Loaded l = load_pair(r, gfile, hfile);
    HomInstance inst(l.g, l.h);
    maybe_dot(s, l.g);
    const Graph & g0 = l.g.layer(0);
    const Graph & h0 = l.h.layer(0);
    if (count || enumerate) {
        std::size_t n = 0;
        auto res = enumerate_homs(
            inst,
            [&](const Hom & f) {
                if (enumerate) {
                    r.body << "hom " << n << ":\n";
                    print_hom(r.body, g0, h0, f);
                }
                ++n;
                return true;
            },
            {}, s.cap);
        r.body << "count: " << res.emitted << (res.truncated ? " (truncated)" : "") << '\n';
        if (res.truncated)
            r.cap_hit("enumeration-cap");
        return res.truncated ? exit_budget : exit_answered;
    }
    auto f = first_hom(inst);
    r.body << "exists: " << yes_no(f.has_value()) << '\n';
    if (f) {
        r.body << "witness:\n";
        print_hom(r.body, g0, h0, *f);
    }
    return exit_answered;
}

int cmd_recolour(Report & r, const Settings & s, const std::string & gfile, const std::string & hfile,
                 const std::string & ffile, const std::string & tfile, const std::string & path_out)
{
    Loaded l = load_pair(r, gfile, hfile);
    HomInstance inst(l.g, l.h);
    const Graph & g0 = l.g.layer(0);
    const Graph & h0 = l.h.layer(0);
    Hom from = read_hom(r.input(ffile), g0, h0);
    Hom to = read_hom(r.input(tfile), g0, h0);
    inst.check(from);
    inst.check(to);
    maybe_dot(s, l.g);
    SearchOptions opts;
    opts.state_budget = s.budget;
    auto res = reconfigures(inst, from, to, opts);
    r.body << "states: " << res.states << '\n';
    switch (res.status) {
    case SearchStatus::found:
        r.body << "reconfigures: yes\nlength: " << res.path->length() << '\n';
        if (!path_out.empty())
            write_file(path_out, write_path(g0, h0, *res.path));
        else
            for (std::size_t i = 0; i < res.path->steps.size(); ++i) {
                r.body << "step " << i << ":\n";
                print_hom(r.body, g0, h0, res.path->steps[i]);
            }
        return exit_answered;
    case SearchStatus::none:
        r.body << "reconfigures: no\n";
        return exit_answered;
    case SearchStatus::budget_exhausted:
        break;
    }
    r.body << "reconfigures: unknown\n";
    r.cap_hit("state-budget");
    return exit_budget;
}

int cmd_mixing(Report & r, const Settings & s, const std::string & gfile, const std::string & hfile, bool diameters)
{
    Loaded l = load_pair(r, gfile, hfile);
    HomInstance inst(l.g, l.h);
    auto hg = analyse_hom_graph(inst, s.cap);
    if (hg.truncated) {
        r.body << "mixing: unknown\n";
        r.cap_hit("enumeration-cap");
        return exit_budget;
    }
    r.body << "homomorphisms: " << hg.homs.size() << "\ncomponents: " << hg.component_count << '\n'
           << "mixing: " << yes_no(hg.component_count <= 1) << '\n';
    if (diameters) {
        std::vector<bool> done(hg.component_count, false);
        for (std::size_t i = 0; i < hg.homs.size(); ++i) {
            std::size_t c = hg.component[i];
            if (done[c])
                continue;
            done[c] = true;
            auto d = component_diameter(inst, hg.homs[i], s.budget);
            r.body << "component " << c << " diameter: " << d.value << (d.exact ? "" : " (lower bound)") << '\n';
            if (d.truncated)
                r.cap_hit("state-budget");
        }
    }
    return r.any_cap() ? exit_budget : exit_answered;
}

int cmd_frozen(Report & r, const Settings & s, const std::string & gfile, const std::string & hfile, long time_ms,
               std::size_t nodes)
{
    Graph g = read_graph(r.input(gfile));
    Graph h = read_graph(r.input(hfile));
    maybe_dot(s, EdgeColouredGraph({g}));
    FrozenSearchOptions opts;
    opts.time_budget = std::chrono::milliseconds(time_ms);
    opts.node_budget = nodes;
    auto res = frozen_hom_search(g, h, opts);
    auto verdict = classify(h);
    r.body << "classification: " << verdict.summary() << '\n';
    std::optional<bool> poly;
    if (verdict.polynomial() && !g.has_loops()) {
        poly = decide_frozen_poly(h, g);
        r.body << "polynomial-decision: " << yes_no(*poly) << '\n';
    }
    // Node counts are printed only for conclusive runs, where they do not depend on the clock.
    if (res.status == SearchStatus::budget_exhausted) {
        r.body << "frozen: unknown\n";
        r.cap_hit("search-budget");
        return exit_budget;
    }
    bool found = res.status == SearchStatus::found;
    if (poly && *poly != found)
        throw std::logic_error("the search and the polynomial decision disagree");
    r.body << "frozen: " << (found ? "found" : "none") << "\nnodes: " << res.nodes << '\n';
    if (found) {
        r.body << "witness:\n";
        print_hom(r.body, g, h, *res.witness);
    }
    return exit_answered;
}

int cmd_classify(Report & r, const std::string & hfile)
{
    Graph h = read_graph(r.input(hfile));
    auto v = classify(h);
    r.body << "verdict: " << v.summary() << "\nevidence:";
    for (auto c : v.evidence)
        r.body << ' ' << c;
    r.body << '\n';
    return exit_answered;
}

int cmd_freezer(Report & r, const Settings & s, const std::string & hfile)
{
    Graph h = read_graph(r.input(hfile));
    auto rep = analyse_freezer(h);
    for (std::size_t i = 0; i < rep.components.size(); ++i) {
        const auto & c = rep.components[i];
        r.body << "component " << i << ":\n  vertices:";
        for (Vertex v : c.vertices)
            r.body << ' ' << h.label(v);
        r.body << "\n  thermal: " << yes_no(c.thermal) << "\n  s_f:";
        c.s_f.for_each([&](Vertex v) { r.body << ' ' << h.label(v); });
        r.body << "\n  eliminations:";
        for (const auto & e : c.eliminations)
            r.body << ' ' << h.label(e.vertex) << '/' << h.label(e.witness);
        r.body << '\n';
    }
    r.body << "freezer:\n";
    std::istringstream lines(write_graph(rep.freezer));
    std::string line;
    while (std::getline(lines, line))
        r.body << "  " << line << '\n';
    maybe_dot(s, EdgeColouredGraph({rep.freezer}));
    return exit_answered;
}

struct ReduceArgs {
    std::string kind;
    std::vector<std::string> files;
    std::size_t k = 2;
    std::string path_file;
    std::string out;
    bool composed = false;
};

void describe_graph(Report & r, const char * name, const Graph & g)
{
    r.body << name << ": " << g.order() << " vertices, " << g.size() << " edges, digest " << hex64(fnv1a(write_graph(g)))
           << '\n';
}

int cmd_reduce(Report & r, const Settings & s, const ReduceArgs & a)
{
    Sections bundle;
    if (a.kind == "clique") {
        if (a.files.size() != 3)
            throw std::invalid_argument("reduce clique expects GRAPH PHI PSI");
        const Graph g = read_graph(r.input(a.files[0]));
        const Graph colours = clique(2 * a.k + 1);
        const Hom phi = read_hom(r.input(a.files[1]), g, colours);
        const Hom psi = read_hom(r.input(a.files[2]), g, colours);
        std::optional<ReconfigPath> path;
        if (!a.path_file.empty())
            path = read_path(r.input(a.path_file), g, colours);
        CliqueReduction red = reduce_clique_to_ecol(a.k, g, phi, psi);
        r.body << "kind: " << (a.composed ? "composed" : "clique") << "\nk: " << a.k << '\n';
        describe_graph(r, "layer-1", red.ec.graph.layer(0));
        describe_graph(r, "layer-2", red.ec.graph.layer(1));
        std::unique_ptr<WheelReduction> wheel_red;
        if (a.composed) {
            wheel_red = std::make_unique<WheelReduction>(reduce_ecol_to_wheel(red.ec));
            describe_graph(r, "wheel-instance", wheel_red->graph);
            maybe_dot(s, EdgeColouredGraph({wheel_red->graph}));
        }
        else
            maybe_dot(s, red.ec.graph);
        bundle = clique_bundle(red, wheel_red.get(), path);
    }
    else if (a.kind == "wheel") {
        if (a.files.size() != 3)
            throw std::invalid_argument("reduce wheel expects EC-GRAPH START END");
        EcInstance ec;
        ec.k = a.k;
        ec.graph = read_ec_graph(r.input(a.files[0]));
        const Graph w = wheel(2 * a.k + 1);
        ec.start = read_hom(r.input(a.files[1]), ec.graph.layer(0), w);
        ec.end = read_hom(r.input(a.files[2]), ec.graph.layer(0), w);
        std::optional<ReconfigPath> path;
        if (!a.path_file.empty())
            path = read_path(r.input(a.path_file), ec.graph.layer(0), w);
        WheelReduction red = reduce_ecol_to_wheel(ec);
        r.body << "kind: wheel\nk: " << a.k << "\ngadgets: " << red.placements.size() << '\n';
        describe_graph(r, "wheel-instance", red.graph);
        maybe_dot(s, EdgeColouredGraph({red.graph}));
        bundle = wheel_bundle(red, path);
    }
    else if (a.kind == "csp") {
        if (a.files.size() != 2)
            throw std::invalid_argument("reduce csp expects INSTANCE TARGET");
        KRelation inst = read_relation(r.input(a.files[0]));
        Graph h = read_graph(r.input(a.files[1]));
        FrozenReduction red = reduce_csp_to_frozen(inst, h);
        r.body << "kind: csp\narity: " << red.rel.relation.arity() << "\ntemplate-tuples: " << red.rel.relation.tuples().size()
               << '\n';
        describe_graph(r, "reduced", red.graph);
        auto sol = csp_hom(inst, red.rel.relation, s.budget);
        std::optional<Hom> solution;
        if (sol.status == SearchStatus::budget_exhausted) {
            r.body << "solution: unknown\n";
            r.cap_hit("csp-budget");
        }
        else {
            r.body << "solution: " << (sol.assignment ? "found" : "none") << '\n';
            solution = sol.assignment;
        }
        maybe_dot(s, EdgeColouredGraph({red.graph}));
        bundle = csp_bundle(red, solution);
    }
    else
        throw std::invalid_argument("reduce kind must be wheel, clique or csp");
    std::string text = write_sections(bundle);
    r.body << "bundle-digest: " << hex64(fnv1a(text)) << '\n';
    if (!a.out.empty())
        write_file(a.out, text);
    return r.any_cap() ? exit_budget : exit_answered;
}

int cmd_verify(Report & r, const std::string & file)
{
    VerifyReport rep = verify_bundle(read_sections(r.input(file)));
    r.body << "kind: " << rep.kind << '\n';
    for (const auto & c : rep.checks) {
        r.body << (c.passed ? "pass: " : "FAIL: ") << c.name;
        if (!c.detail.empty())
            r.body << " (" << c.detail << ')';
        r.body << '\n';
    }
    r.body << "verified: " << yes_no(rep.ok()) << '\n';
    return rep.ok() ? exit_answered : exit_input_error;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    GraphBuilder b;
    for (std::size_t i = 0; i < n; ++i)
        b.add_vertex(std::to_string(i));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                b.add_edge(u, v);
    return b.build();
}

int cmd_gen(Report & r, const Settings & s, const std::string & family, const std::vector<std::size_t> & args, double p,
            std::uint64_t seed, const std::string & out)
{
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw std::invalid_argument(family + " expects " + std::to_string(n) + " size argument(s)");
    };
    std::string text;
    EdgeColouredGraph shown{std::vector<Graph>{Graph{}}};
    auto plain = [&](Graph g) {
        text = write_graph(g);
        shown = EdgeColouredGraph({std::move(g)});
    };
    if (family == "cycle")
        need(1), plain(cycle(args[0]));
    else if (family == "path")
        need(1), plain(path(args[0]));
    else if (family == "wheel")
        need(1), plain(wheel(args[0]));
    else if (family == "z")
        need(1), plain(z_graph(args[0]));
    else if (family == "clique")
        need(1), plain(clique(args[0]));
    else if (family == "multipartite")
        plain(complete_multipartite(args));
    else if (family == "gadget")
        need(1), plain(freezing_gadget(args[0]).graph);
    else if (family == "random")
        need(1), plain(random_graph(args[0], p, seed));
    else if (family == "wheel-z") {
        need(1);
        shown = wheel_z_target(args[0]);
        text = write_ec_graph(shown);
    }
    else
        throw std::invalid_argument("unknown family '" + family + "'");
    maybe_dot(s, shown);
    r.body << "family: " << family << "\nvertices: " << shown.order() << "\ndigest: " << hex64(fnv1a(text)) << '\n';
    if (out.empty())
        r.body << text;
    else
        write_file(out, text);
    return exit_answered;
}

} // namespace

int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"H-colouring reconfiguration and frozen colouring toolkit", "homreconf"};
    app.require_subcommand(1);
    Settings s;
    app.add_option("--cap", s.cap, "Enumeration cap")->capture_default_str();
    app.add_option("--budget", s.budget, "State budget for breadth-first searches and CSP nodes")->capture_default_str();
    app.add_option("--dot", s.dot, "Write the main graph as DOT to this file");
    app.add_flag("--timing", s.timing, "Print the elapsed time to stderr");

    std::string gfile, hfile, ffile, tfile, path_out, file, family;
    bool count = false, enumerate = false, diameters = false;
    long time_ms = 60'000;
    std::size_t nodes = 0;
    std::vector<std::size_t> sizes;
    double p = 0.5;
    std::uint64_t seed = 1;
    ReduceArgs ra;

    auto * hom = app.add_subcommand("hom", "Existence, count or list of homomorphisms G -> H");
    hom->add_option("G", gfile)->required();
    hom->add_option("H", hfile)->required();
    hom->add_flag("--count", count);
    hom->add_flag("--enumerate", enumerate);

    auto * rec = app.add_subcommand("recolour", "Shortest recolouring path between two homomorphisms");
    rec->add_option("G", gfile)->required();
    rec->add_option("H", hfile)->required();
    rec->add_option("FROM", ffile)->required();
    rec->add_option("TO", tfile)->required();
    rec->add_option("--path-out", path_out);

    auto * mix = app.add_subcommand("mixing", "Components of the reconfiguration graph");
    mix->add_option("G", gfile)->required();
    mix->add_option("H", hfile)->required();
    mix->add_flag("--diameters", diameters);

    auto * frz = app.add_subcommand("frozen", "Search for a frozen H-colouring of G");
    frz->add_option("G", gfile)->required();
    frz->add_option("H", hfile)->required();
    frz->add_option("--time-ms", time_ms)->capture_default_str();
    frz->add_option("--nodes", nodes, "Node budget, 0 for none");

    auto * cls = app.add_subcommand("classify", "Dichotomy case of frozen H-colouring");
    cls->add_option("H", hfile)->required();

    auto * fzr = app.add_subcommand("freezer", "Elimination report and freezer of H");
    fzr->add_option("H", hfile)->required();

    auto * red = app.add_subcommand("reduce", "Build a reduction instance and write a bundle");
    red->add_option("KIND", ra.kind)->required()->check(CLI::IsMember({"wheel", "clique", "csp"}));
    red->add_option("FILES", ra.files)->required();
    red->add_option("--k", ra.k)->capture_default_str();
    red->add_option("--path", ra.path_file, "Source path to translate");
    red->add_option("--out", ra.out, "Bundle file");
    red->add_flag("--composed", ra.composed, "Chain the clique reduction into the wheel reduction");

    auto * ver = app.add_subcommand("verify", "Replay the invariants of a bundle");
    ver->add_option("BUNDLE", file)->required();

    auto * gen = app.add_subcommand("gen", "Write a standard graph");
    gen->add_option("FAMILY", family)->required();
    gen->add_option("SIZES", sizes);
    gen->add_option("--p", p)->capture_default_str();
    gen->add_option("--seed", seed)->capture_default_str();
    gen->add_option("--out", file);

    std::vector<std::string> argv_store{"homreconf"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto & a : argv_store)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_answered : exit_input_error;
    }

    const auto start = std::chrono::steady_clock::now();
    Report report(args);
    int code = exit_answered;
    try {
        if (*hom)
            code = cmd_hom(report, s, gfile, hfile, count, enumerate);
        else if (*rec)
            code = cmd_recolour(report, s, gfile, hfile, ffile, tfile, path_out);
        else if (*mix)
            code = cmd_mixing(report, s, gfile, hfile, diameters);
        else if (*frz)
            code = cmd_frozen(report, s, gfile, hfile, time_ms, nodes);
        else if (*cls)
            code = cmd_classify(report, hfile);
        else if (*fzr)
            code = cmd_freezer(report, s, hfile);
        else if (*red)
            code = cmd_reduce(report, s, ra);
        else if (*ver)
            code = cmd_verify(report, file);
        else if (*gen)
            code = cmd_gen(report, s, family, sizes, p, seed, file);
    }
    catch (const std::logic_error & e) {
        // invalid_argument and length_error derive from logic_error but are input problems.
        if (dynamic_cast<const std::invalid_argument *>(&e) || dynamic_cast<const std::length_error *>(&e) ||
            dynamic_cast<const std::out_of_range *>(&e)) {
            err << "error: " << e.what() << '\n';
            return exit_input_error;
        }
        err << "internal error: " << e.what() << '\n';
        return exit_input_error;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
    report.emit(out);
    if (s.timing)
        err << "elapsed-ms: "
            << std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count()
            << '\n';
    return code;
}

} // namespace homreconf
