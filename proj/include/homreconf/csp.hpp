#pragma once

#include "homreconf/freezer.hpp"
#include "homreconf/graph.hpp"
#include "homreconf/hom.hpp"
#include "homreconf/product.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace homreconf {

using Tuple = std::vector<Vertex>;

/// A finite domain with one k-ary relation. Tuples are kept sorted and free of duplicates.
/// CSP instances use the same type, with the variables as the domain.
class KRelation {
public:
    KRelation() = default;
    /// Validates every tuple (length k, entries inside the domain) and canonicalises the set.
    KRelation(std::vector<std::string> domain, std::size_t arity, std::vector<Tuple> tuples);

    std::size_t arity() const { return arity_; }
    std::size_t domain_size() const { return domain_.size(); }
    const std::vector<std::string> & domain() const { return domain_; }
    const std::string & label(Vertex v) const { return domain_[v]; }
    const std::vector<Tuple> & tuples() const { return tuples_; }
    bool contains(const Tuple & t) const;

    friend bool operator==(const KRelation &, const KRelation &) = default;

private:
    std::vector<std::string> domain_;
    std::size_t arity_ = 0;
    std::vector<Tuple> tuples_;
};

/// Labels "0".."n-1".
std::vector<std::string> numbered_labels(std::size_t n);

/// Sorted support of a tuple.
std::vector<Vertex> support(const Tuple & t);

bool is_totally_symmetric(const KRelation & r);
bool has_constant_tuple(const KRelation & r);

/// Every k-tuple over the domain whose support is one of the given sets.
/// Throws std::invalid_argument if a set is larger than k or leaves the domain.
KRelation symmetric_relation_from_sets(const std::vector<std::string> & domain, std::size_t k,
                                       const std::vector<VertexSet> & sets);

struct CspResult {
    SearchStatus status = SearchStatus::none;
    std::optional<Hom> assignment;  // variable -> domain element
    std::size_t nodes = 0;
};

/// Lexicographically first homomorphism from the instance to the template, by backtracking
/// over variables in index order with per-tuple support filtering. node_budget 0 is unlimited.
CspResult csp_hom(const KRelation & instance, const KRelation & templ, std::size_t node_budget = 0);

bool is_csp_hom(const KRelation & instance, const KRelation & templ, const Hom & f);

/// A 4-ary operation on {0..n-1}, stored with the last argument varying fastest.
struct Polymorphism4 {
    std::size_t n = 0;
    std::vector<Vertex> table;

    Vertex operator()(Vertex a, Vertex b, Vertex c, Vertex d) const
    {
        return table[((a * n + b) * n + c) * n + d];
    }
};

bool is_polymorphism(const KRelation & r, const Polymorphism4 & p);
/// p(a,r,e,a) = p(r,a,r,e) for all a, r, e.
bool satisfies_siggers(const Polymorphism4 & p);

inline constexpr std::size_t siggers_constraint_limit = 50'000'000;

struct SiggersResult {
    SearchStatus status = SearchStatus::none;
    std::optional<Polymorphism4> witness;
    std::size_t classes = 0;  // cells left after merging by the identity
    std::size_t nodes = 0;
};

/// Searches for a 4-ary polymorphism satisfying the identity above. Constant operations are
/// tried first; otherwise cells forced equal are merged and the classes assigned by forward
/// checking. Throws std::length_error if |R|^4 exceeds siggers_constraint_limit.
SiggersResult siggers_search(const KRelation & r, std::size_t node_budget = 0);

/// The relation built from a graph in the NP-complete case of the dichotomy.
struct RelationFromGraph {
    Graph h_prime;                         // induced subgraph of H
    std::vector<Vertex> to_h;              // H' vertex -> H vertex
    std::vector<DistinguishingSet> family; // over H' vertices
    KRelation relation;                    // domain = labels of H'
};

/// Throws std::invalid_argument when classify(H) is polynomial, and std::logic_error when
/// the result is not totally symmetric, has arity below 3 or contains a constant tuple.
RelationFromGraph relation_from_graph(const Graph & h);

/// Incidence graph of the instance with a copy of J^|V(J)| hung from every variable, where J
/// is the freezer of H'. Vertex order: variables, tuple vertices, then the blocks variable by
/// variable (skipping the vertex identified with the variable). Tags "variable", "tuple", "block".
struct FrozenReduction {
    RelationFromGraph rel;
    KRelation instance;
    Graph h;
    Graph j;
    std::vector<Vertex> j_to_h_prime;  // J vertex -> H' vertex
    ProductGraph j_tilde;
    Vertex z_tilde = 0;                // all coordinates distinct
    Graph graph;
    std::vector<Vertex> tuple_vertex;          // one per instance tuple
    std::vector<std::vector<Vertex>> blocks;   // blocks[v][u]: vertex of graph for J~ vertex u in v's copy
};

/// The instance arity must equal the template arity.
FrozenReduction reduce_csp_to_frozen(const KRelation & instance, const Graph & h);

/// Extends a CSP solution to a frozen H-colouring of the reduced graph. Variables in no tuple
/// whose value lies outside J are sent to the first vertex of J.
Hom csp_to_frozen(const FrozenReduction & red, const Hom & f);

/// Restriction of an H-colouring to the variables, read as H' vertices. A variable coloured
/// outside H' (possible only for variables in no tuple) gets H' vertex 0.
Hom frozen_to_csp(const FrozenReduction & red, const Hom & g);

/// Triples (phi(x), phi(y), phi(z)) over all homomorphisms phi: C_{3d} -> H, where x, y, z
/// are the cycle vertices 0, d, 2d.
KRelation cycle_triple_relation(const Graph & h, std::size_t d);

/// Smallest odd d with odd girth g <= 3d. H must be loop-free and non-bipartite.
std::size_t odd_girth_parameter(const Graph & h);

/// cycle_triple_relation at odd_girth_parameter(H).
KRelation odd_girth_relation(const Graph & h);

/// Replaces every tuple (a,b,c) by a fresh C_{3d} whose vertices 0, d, 2d are a, b, c.
/// The variables keep indices 0..n-1 (tag "variable"); cycle interiors follow (tag "cycle").
Graph csp_to_hcol(const KRelation & instance, std::size_t d);

} // namespace homreconf
