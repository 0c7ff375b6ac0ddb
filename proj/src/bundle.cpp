#include "homreconf/bundle.hpp"
#include "homreconf/families.hpp"
#include "homreconf/freezer.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace homreconf {

namespace {

std::string header(const std::string & kind, std::size_t k)
{
    std::string out = "kind " + kind + "\n";
    if (k != 0)
        out += "k " + std::to_string(k) + "\n";
    return out;
}

void add_wheel_sections(Sections & s, const WheelReduction & red, const std::optional<ReconfigPath> & ec_path)
{
    const Graph target = wheel(2 * red.k + 1);
    s.emplace_back("wheel-graph", write_graph(red.graph));
    s.emplace_back("wheel-start", write_hom(red.graph, target, red.start));
    s.emplace_back("wheel-end", write_hom(red.graph, target, red.end));
    if (ec_path)
        s.emplace_back("wheel-path", write_path(red.graph, target, translate_ecol_to_wheel(red, *ec_path)));
}

struct BundleHeader {
    std::string kind;
    std::size_t k = 0;
};

BundleHeader read_header(const Sections & bundle)
{
    BundleHeader h;
    std::istringstream in(section(bundle, "bundle"));
    std::string key;
    while (in >> key) {
        if (key == "kind")
            in >> h.kind;
        else if (key == "k")
            in >> h.k;
        else
            throw ParseError("unknown bundle key '" + key + "'");
    }
    if (h.kind.empty())
        throw ParseError("bundle does not name its kind");
    if (h.kind != "csp" && h.k < 2)
        throw ParseError("bundle needs k >= 2");
    return h;
}

class Checker {
public:
    explicit Checker(VerifyReport & report) : report_(report) {}

    // Runs one named check; exceptions count as failures.
    void operator()(const std::string & name, const std::function<bool()> & check)
    {
        CheckOutcome c{name, false, {}};
        try {
            c.passed = check();
        }
        catch (const std::exception & e) {
            c.detail = e.what();
        }
        report_.checks.push_back(std::move(c));
    }

private:
    VerifyReport & report_;
};

// Shared checks for a stored edge-coloured to wheel step. ec is the edge-coloured instance
// the wheel part must be rebuilt from.
void check_wheel_part(Checker & check, const Sections & bundle, const EcInstance & ec,
                      const std::optional<ReconfigPath> & ec_path)
{
    std::optional<WheelReduction> red;
    check("wheel instance rebuilds", [&] {
        red = reduce_ecol_to_wheel(ec);
        return true;
    });
    if (!red)
        return;
    const Graph target = wheel(2 * red->k + 1);
    check("wheel graph matches the construction", [&] { return read_graph(section(bundle, "wheel-graph")) == red->graph; });
    check("wheel endpoints match the gadget extensions", [&] {
        return read_hom(section(bundle, "wheel-start"), red->graph, target) == red->start &&
               read_hom(section(bundle, "wheel-end"), red->graph, target) == red->end;
    });
    HomInstance inst = red->hom_instance();
    check("wheel endpoints are homomorphisms", [&] { return inst.is_hom(red->start) && inst.is_hom(red->end); });
    check("gadget colourings put alpha only where allowed", [&] {
        for (const auto & p : red->placements)
            for (const Hom * f : {&red->start, &red->end}) {
                Hom local(std::vector<Vertex>(p.globals.size()));
                for (Vertex u = 0; u < p.globals.size(); ++u)
                    local.image[u] = (*f)[p.globals[u]];
                if (!only_alpha_check(red->gadget, local))
                    return false;
            }
        return true;
    });
    check("wheel instance has the expected size", [&] {
        return red->graph.order() == ec.graph.order() + 10 * ec.k * ec.graph.layer(1).size();
    });
    if (!has_section(bundle, "wheel-path"))
        return;
    check("stored wheel path is valid", [&] {
        ReconfigPath p = read_path(section(bundle, "wheel-path"), red->graph, target);
        if (path_defect(inst, p))
            return false;
        if (ec_path && (p.front() != wheel_extension(*red, ec_path->front()) || p.back() != wheel_extension(*red, ec_path->back())))
            return false;
        ReconfigPath back = restrict_wheel_to_ecol(*red, p);
        return back.front() == Hom(std::vector<Vertex>(p.front().image.begin(), p.front().image.begin() + ec.graph.order())) &&
               back.back() == Hom(std::vector<Vertex>(p.back().image.begin(), p.back().image.begin() + ec.graph.order()));
    });
    if (ec_path)
        check("wheel path translation is reproducible", [&] {
            return read_path(section(bundle, "wheel-path"), red->graph, target) == translate_ecol_to_wheel(*red, *ec_path);
        });
}

std::optional<ReconfigPath> read_ec_path(Checker & check, const Sections & bundle, const EcInstance & ec, const char * name)
{
    std::optional<ReconfigPath> p;
    if (!has_section(bundle, name))
        return p;
    check(std::string("stored ") + name + " is valid", [&] {
        ReconfigPath q = read_path(section(bundle, name), ec.graph.layer(0), wheel(2 * ec.k + 1));
        if (path_defect(ec.hom_instance(), q))
            return false;
        p = std::move(q);
        return true;
    });
    return p;
}

void verify_clique(Checker & check, const Sections & bundle, const BundleHeader & h)
{
    const Graph colours = clique(2 * h.k + 1);
    const Graph source = read_graph(section(bundle, "source"));
    const Hom phi = read_hom(section(bundle, "phi"), source, colours);
    const Hom psi = read_hom(section(bundle, "psi"), source, colours);

    std::optional<CliqueReduction> red;
    check("edge-coloured instance rebuilds", [&] {
        red = reduce_clique_to_ecol(h.k, source, phi, psi);
        return true;
    });
    if (!red)
        return;
    const Graph w = wheel(2 * h.k + 1);
    const Graph & layer1 = red->ec.graph.layer(0);
    check("edge-coloured graph matches the construction",
          [&] { return read_ec_graph(section(bundle, "ec-graph")) == red->ec.graph; });
    check("edge-coloured endpoints match the extensions", [&] {
        return read_hom(section(bundle, "ec-start"), layer1, w) == red->ec.start &&
               read_hom(section(bundle, "ec-end"), layer1, w) == red->ec.end;
    });
    HomInstance inst = red->ec.hom_instance();
    check("edge-coloured endpoints are homomorphisms", [&] { return inst.is_hom(red->ec.start) && inst.is_hom(red->ec.end); });
    check("endpoints avoid alpha outside the wheel copy", [&] {
        const Vertex alpha = static_cast<Vertex>(2 * h.k + 1);
        for (Vertex v = 0; v < layer1.order(); ++v)
            if (layer1.tag(v) != "W" && (red->ec.start[v] == alpha || red->ec.end[v] == alpha))
                return false;
        return true;
    });
    check("originals are joined to the hub of the wheel copy", [&] {
        for (Vertex v = 0; v < source.order(); ++v)
            if (!layer1.adjacent(v, red->hub()))
                return false;
        return true;
    });
    check("vertex counts follow the construction", [&] {
        const std::size_t n = source.order(), m = source.size();
        return layer1.order() == n + (2 * h.k - 2) * m + 2 * h.k * n + 2 * h.k + 2;
    });

    std::optional<ReconfigPath> source_path, ec_path;
    if (has_section(bundle, "source-path")) {
        check("stored source path is valid", [&] {
            ReconfigPath p = read_path(section(bundle, "source-path"), source, colours);
            if (path_defect(HomInstance(source, colours), p))
                return false;
            source_path = std::move(p);
            return true;
        });
        ec_path = read_ec_path(check, bundle, red->ec, "ec-path");
        if (source_path && ec_path) {
            check("edge-coloured path joins the extended endpoints", [&] {
                return ec_path->front() == clique_extension(*red, source_path->front()) &&
                       ec_path->back() == clique_extension(*red, source_path->back());
            });
            check("edge-coloured path restricts to a source path with the same endpoints", [&] {
                ReconfigPath back = restrict_ecol_to_clique(*red, *ec_path);
                return back.front() == source_path->front() && back.back() == source_path->back();
            });
            check("edge-coloured translation is reproducible",
                  [&] { return translate_clique_to_ecol(*red, *source_path) == *ec_path; });
        }
    }
    if (h.kind == "composed")
        check_wheel_part(check, bundle, red->ec, ec_path);
}

EcInstance read_ec_instance(const Sections & bundle, std::size_t k)
{
    EcInstance ec;
    ec.k = k;
    ec.graph = read_ec_graph(section(bundle, "ec-graph"));
    if (ec.graph.layer_count() != 2)
        throw ParseError("the edge-coloured graph must have two layers");
    const Graph w = wheel(2 * k + 1);
    ec.start = read_hom(section(bundle, "ec-start"), ec.graph.layer(0), w);
    ec.end = read_hom(section(bundle, "ec-end"), ec.graph.layer(0), w);
    return ec;
}

void verify_wheel(Checker & check, const Sections & bundle, const BundleHeader & h)
{
    EcInstance ec = read_ec_instance(bundle, h.k);
    check("edge-coloured endpoints are homomorphisms",
          [&] { return ec.hom_instance().is_hom(ec.start) && ec.hom_instance().is_hom(ec.end); });
    auto ec_path = read_ec_path(check, bundle, ec, "ec-path");
    check_wheel_part(check, bundle, ec, ec_path);
}

void verify_csp(Checker & check, const Sections & bundle)
{
    const KRelation instance = read_relation(section(bundle, "instance"));
    const Graph h = read_graph(section(bundle, "target"));
    std::optional<FrozenReduction> red;
    check("reduced instance rebuilds", [&] {
        red = reduce_csp_to_frozen(instance, h);
        return true;
    });
    if (!red)
        return;
    check("template matches the relation built from the target",
          [&] { return read_relation(section(bundle, "template")) == red->rel.relation; });
    check("template is totally symmetric without constant tuples", [&] {
        return is_totally_symmetric(red->rel.relation) && !has_constant_tuple(red->rel.relation) &&
               red->rel.relation.arity() >= 3;
    });
    check("reduced graph matches the construction", [&] { return read_graph(section(bundle, "reduced-graph")) == red->graph; });
    check("every product block is locally surjective", [&] {
        const Graph & jt = red->j_tilde.graph;
        for (std::size_t i = 0; i < red->j_tilde.factor_count(); ++i)
            for (Vertex u = 0; u < jt.order(); ++u) {
                VertexSet seen(red->j.order());
                for (Vertex x : jt.neighbours(u))
                    seen.insert(red->j_tilde.coordinate(x, i));
                if (seen != red->j.neighbourhood(red->j_tilde.coordinate(u, i)))
                    return false;
            }
        return true;
    });
    if (!has_section(bundle, "solution"))
        return;
    const Graph vars = label_graph(instance.domain());
    const Graph values = label_graph(red->rel.relation.domain());
    std::optional<Hom> f;
    check("stored solution satisfies the instance", [&] {
        f = read_hom(section(bundle, "solution"), vars, values);
        return is_csp_hom(instance, red->rel.relation, *f);
    });
    if (!f)
        return;
    Hom g = csp_to_frozen(*red, *f);
    check("stored frozen colouring matches the translation",
          [&] { return read_hom(section(bundle, "frozen"), red->graph, h) == g; });
    check("translated colouring passes the distinguishing test",
          [&] { return is_frozen_via_distinguishing(red->graph, h, g); });
    check("translated colouring admits no move", [&] { return HomInstance(red->graph, h).is_frozen(g); });
    check("restriction recovers the solution", [&] { return frozen_to_csp(*red, g) == *f; });
}

} // namespace

Graph label_graph(const std::vector<std::string> & labels)
{
    GraphBuilder b;
    for (const auto & l : labels)
        b.add_vertex(l);
    return b.build();
}

Sections clique_bundle(const CliqueReduction & red, const WheelReduction * wheel_red,
                       const std::optional<ReconfigPath> & source_path)
{
    Sections s;
    const Graph colours = clique(2 * red.k + 1);
    const Graph w = wheel(2 * red.k + 1);
    const Graph & layer1 = red.ec.graph.layer(0);
    s.emplace_back("bundle", header(wheel_red ? "composed" : "clique", red.k));
    s.emplace_back("source", write_graph(red.source));
    s.emplace_back("phi", write_hom(red.source, colours, red.phi));
    s.emplace_back("psi", write_hom(red.source, colours, red.psi));
    std::optional<ReconfigPath> ec_path;
    if (source_path) {
        s.emplace_back("source-path", write_path(red.source, colours, *source_path));
        ec_path = translate_clique_to_ecol(red, *source_path);
    }
    s.emplace_back("ec-graph", write_ec_graph(red.ec.graph));
    s.emplace_back("ec-start", write_hom(layer1, w, red.ec.start));
    s.emplace_back("ec-end", write_hom(layer1, w, red.ec.end));
    if (ec_path)
        s.emplace_back("ec-path", write_path(layer1, w, *ec_path));
    if (wheel_red)
        add_wheel_sections(s, *wheel_red, ec_path);
    return s;
}

Sections wheel_bundle(const WheelReduction & red, const std::optional<ReconfigPath> & ec_path)
{
    Sections s;
    const Graph w = wheel(2 * red.k + 1);
    const Graph & layer1 = red.ec.graph.layer(0);
    s.emplace_back("bundle", header("wheel", red.k));
    s.emplace_back("ec-graph", write_ec_graph(red.ec.graph));
    s.emplace_back("ec-start", write_hom(layer1, w, red.ec.start));
    s.emplace_back("ec-end", write_hom(layer1, w, red.ec.end));
    if (ec_path)
        s.emplace_back("ec-path", write_path(layer1, w, *ec_path));
    add_wheel_sections(s, red, ec_path);
    return s;
}

Sections csp_bundle(const FrozenReduction & red, const std::optional<Hom> & solution)
{
    Sections s;
    s.emplace_back("bundle", header("csp", 0));
    s.emplace_back("instance", write_relation(red.instance));
    s.emplace_back("target", write_graph(red.h));
    s.emplace_back("template", write_relation(red.rel.relation));
    s.emplace_back("reduced-graph", write_graph(red.graph));
    if (solution) {
        s.emplace_back("solution", write_hom(label_graph(red.instance.domain()), label_graph(red.rel.relation.domain()), *solution));
        s.emplace_back("frozen", write_hom(red.graph, red.h, csp_to_frozen(red, *solution)));
    }
    return s;
}

bool VerifyReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome & c) { return c.passed; });
}

VerifyReport verify_bundle(const Sections & bundle)
{
    VerifyReport report;
    const BundleHeader h = read_header(bundle);
    report.kind = h.kind;
    Checker check(report);
    if (h.kind == "clique" || h.kind == "composed")
        verify_clique(check, bundle, h);
    else if (h.kind == "wheel")
        verify_wheel(check, bundle, h);
    else if (h.kind == "csp")
        verify_csp(check, bundle);
    else
        throw ParseError("unknown bundle kind '" + h.kind + "'");
    return report;
}

} // namespace homreconf
