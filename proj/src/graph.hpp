#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ghopf {

// Ordered tuple of 1-based vertex indices; length = arity of the graph.
using EdgeTuple = std::vector<int>;

// One entry per distinct tuple, multiplicity > 0, sorted by tuple.
using EdgeList = std::vector<std::pair<EdgeTuple, int>>;

struct VariantFlags {
    bool oriented = true;
    bool loops = true;
    bool multiedges = true;

    // "abc" with a=oriented, b=loops, c=multiedges, e.g. "111", "011".
    static VariantFlags parse(const std::string& abc);
    std::string str() const;
    bool operator==(const VariantFlags&) const = default;
};

// A labeled graph of fixed arity: a finite multiset of ordered arity-tuples
// over vertices 1..num_vertices. For arity 2 this is an adjacency matrix
// with entry (i,j) = multiplicity of edge i->j. Instances are immutable and
// keep their edge list normalized (sorted, merged, positive multiplicities).
// Isolated vertices are representable (restrictions produce them) but such
// graphs are not valid basis indices; see has_isolated_vertex().
class LabeledGraph {
public:
    LabeledGraph() = default;  // degree-0 graph of arity 2

    LabeledGraph(int arity, int num_vertices, EdgeList edges);

    static LabeledGraph empty(int arity = 2);
    static LabeledGraph from_adjacency(const std::vector<std::vector<int>>& a);
    // Single edge tuple; num_vertices defaults to the largest entry.
    static LabeledGraph single(EdgeTuple t, int mult = 1, int num_vertices = 0);

    int arity() const { return arity_; }
    int num_vertices() const { return num_vertices_; }
    const EdgeList& edges() const { return edges_; }
    int degree() const { return degree_; }
    int multiplicity(const EdgeTuple& t) const;
    bool has_isolated_vertex() const;
    std::vector<std::vector<int>> adjacency() const;  // arity-2 only

    std::strong_ordering operator<=>(const LabeledGraph& o) const;
    bool operator==(const LabeledGraph& o) const;

    // Compact text form "m; v1->v2->...:mult, ...", e.g. "2; 1->2:1".
    std::string to_text() const;
    static LabeledGraph parse_text(const std::string& s, int arity_hint = 2);

private:
    int arity_ = 2;
    int num_vertices_ = 0;
    int degree_ = 0;
    EdgeList edges_;
};

// Wrapper marking a graph as the canonical representative of its
// relabeling orbit (lexicographically minimal edge multiset).
struct UnlabeledGraph {
    LabeledGraph canonical;

    std::strong_ordering operator<=>(const UnlabeledGraph& o) const {
        return canonical <=> o.canonical;
    }
    bool operator==(const UnlabeledGraph& o) const {
        return canonical == o.canonical;
    }
};

// Positions i in 0..m such that no edge joins [1,i] with [i+1,m].
// Always contains 0 and m.
std::vector<int> admissible_cuts(const LabeledGraph& g);

struct Restriction {
    LabeledGraph graph;
    bool valid;  // false iff the restriction has an isolated vertex
};

// Keep the edges contained in `subset` (1-based vertex indices), relabeling
// the kept vertices to 1..|subset| in increasing order.
Restriction restrict_to(const LabeledGraph& g, const std::vector<int>& subset);

// Block union: b's vertices shifted up by a.num_vertices().
LabeledGraph concatenate(const LabeledGraph& a, const LabeledGraph& b);

bool is_irreducible(const LabeledGraph& g);

// Split at every admissible cut; concatenating the factors restores g.
std::vector<LabeledGraph> factor_irreducible(const LabeledGraph& g);

UnlabeledGraph canonicalize(const LabeledGraph& g);

// The full relabeling orbit of the class, sorted.
std::vector<LabeledGraph> labelings_of(const UnlabeledGraph& u);

// True iff some |p|-subset D of g's vertices, matched to p's vertices in
// increasing order, carries every edge of p with at least p's multiplicity.
bool contains_pattern(const LabeledGraph& g, const LabeledGraph& p);

// Full predicate (all three flags); degree-0 graphs satisfy everything.
bool satisfies_flags(const LabeledGraph& g, const VariantFlags& v);

// All valid graphs of the given degree satisfying v, in canonical order
// (num_vertices ascending, then lexicographic edge multiset). Partitioned
// over vertex counts; GHOPF_THREADS caps the worker count.
std::vector<LabeledGraph> enumerate_graphs(int degree, const VariantFlags& v,
                                           int arity = 2);

}  // namespace ghopf
