#include "graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace ghopf {

VariantFlags VariantFlags::parse(const std::string& abc) {
    if (abc.size() != 3 || abc.find_first_not_of("01") != std::string::npos)
        throw ParseError("variant must be three binary digits, got '" + abc + "'");
    return VariantFlags{abc[0] == '1', abc[1] == '1', abc[2] == '1'};
}

std::string VariantFlags::str() const {
    std::string s(3, '0');
    s[0] = oriented ? '1' : '0';
    s[1] = loops ? '1' : '0';
    s[2] = multiedges ? '1' : '0';
    return s;
}

LabeledGraph::LabeledGraph(int arity, int num_vertices, EdgeList edges)
    : arity_(arity), num_vertices_(num_vertices) {
    if (arity < 2) throw InvalidArgument("arity must be >= 2");
    if (num_vertices < 0) throw InvalidArgument("negative vertex count");
    std::sort(edges.begin(), edges.end());
    EdgeList merged;
    for (auto& [t, mult] : edges) {
        if (mult <= 0) throw InvalidArgument("edge multiplicity must be positive");
        if (static_cast<int>(t.size()) != arity)
            throw InvalidArgument("edge tuple length differs from arity");
        for (int v : t)
            if (v < 1 || v > num_vertices)
                throw InvalidArgument("edge vertex out of range 1.." +
                                      std::to_string(num_vertices));
        if (!merged.empty() && merged.back().first == t)
            merged.back().second += mult;
        else
            merged.emplace_back(std::move(t), mult);
        degree_ += mult;
    }
    edges_ = std::move(merged);
}

LabeledGraph LabeledGraph::empty(int arity) { return LabeledGraph(arity, 0, {}); }

LabeledGraph LabeledGraph::from_adjacency(const std::vector<std::vector<int>>& a) {
    const int m = static_cast<int>(a.size());
    EdgeList edges;
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(a[i].size()) != m)
            throw InvalidArgument("adjacency matrix must be square");
        for (int j = 0; j < m; ++j)
            if (a[i][j] != 0) edges.push_back({{i + 1, j + 1}, a[i][j]});
    }
    return LabeledGraph(2, m, std::move(edges));
}

LabeledGraph LabeledGraph::single(EdgeTuple t, int mult, int num_vertices) {
    int m = num_vertices;
    for (int v : t) m = std::max(m, v);
    return LabeledGraph(static_cast<int>(t.size()), m, {{std::move(t), mult}});
}

int LabeledGraph::multiplicity(const EdgeTuple& t) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), t,
                               [](const auto& e, const EdgeTuple& key) {
                                   return e.first < key;
                               });
    return (it != edges_.end() && it->first == t) ? it->second : 0;
}

bool LabeledGraph::has_isolated_vertex() const {
    std::vector<char> covered(num_vertices_, 0);
    for (const auto& [t, mult] : edges_)
        for (int v : t) covered[v - 1] = 1;
    return std::find(covered.begin(), covered.end(), 0) != covered.end();
}

std::vector<std::vector<int>> LabeledGraph::adjacency() const {
    if (arity_ != 2) throw InvalidArgument("adjacency view requires arity 2");
    std::vector<std::vector<int>> a(num_vertices_, std::vector<int>(num_vertices_, 0));
    for (const auto& [t, mult] : edges_) a[t[0] - 1][t[1] - 1] = mult;
    return a;
}

// Flat lexicographic comparison of sorted edge lists viewed as tuple
// multisets (each tuple repeated by its multiplicity).
static std::strong_ordering compare_edge_lists(const EdgeList& a, const EdgeList& b) {
    size_t ia = 0, ib = 0;
    int consumed_a = 0, consumed_b = 0;
    while (ia < a.size() && ib < b.size()) {
        if (a[ia].first != b[ib].first)
            return a[ia].first < b[ib].first ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
        const int take = std::min(a[ia].second - consumed_a, b[ib].second - consumed_b);
        consumed_a += take;
        consumed_b += take;
        if (consumed_a == a[ia].second) { ++ia; consumed_a = 0; }
        if (consumed_b == b[ib].second) { ++ib; consumed_b = 0; }
    }
    if (ia < a.size()) return std::strong_ordering::greater;
    if (ib < b.size()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::strong_ordering LabeledGraph::operator<=>(const LabeledGraph& o) const {
    if (auto c = arity_ <=> o.arity_; c != 0) return c;
    if (auto c = degree_ <=> o.degree_; c != 0) return c;
    if (auto c = num_vertices_ <=> o.num_vertices_; c != 0) return c;
    return compare_edge_lists(edges_, o.edges_);
}

bool LabeledGraph::operator==(const LabeledGraph& o) const {
    return arity_ == o.arity_ && num_vertices_ == o.num_vertices_ && edges_ == o.edges_;
}

std::string LabeledGraph::to_text() const {
    std::ostringstream out;
    out << num_vertices_ << ";";
    bool first = true;
    for (const auto& [t, mult] : edges_) {
        out << (first ? " " : ", ");
        first = false;
        for (size_t i = 0; i < t.size(); ++i) out << (i ? "->" : "") << t[i];
        out << ":" << mult;
    }
    return out.str();
}

LabeledGraph LabeledGraph::parse_text(const std::string& s, int arity_hint) {
    auto fail = [&](const std::string& why) {
        throw ParseError("bad graph text '" + s + "': " + why);
    };
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos; };
    auto read_int = [&]() -> int {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) fail("expected integer at position " + std::to_string(start));
        return std::stoi(s.substr(start, pos - start));
    };
    const int m = read_int();
    skip_ws();
    if (pos >= s.size() || s[pos] != ';') fail("expected ';' after vertex count");
    ++pos;
    EdgeList edges;
    skip_ws();
    while (pos < s.size()) {
        EdgeTuple t{read_int()};
        skip_ws();
        while (pos + 1 < s.size() && s[pos] == '-' && s[pos + 1] == '>') {
            pos += 2;
            t.push_back(read_int());
            skip_ws();
        }
        int mult = 1;
        if (pos < s.size() && s[pos] == ':') {
            ++pos;
            mult = read_int();
            skip_ws();
        }
        edges.emplace_back(std::move(t), mult);
        if (pos < s.size()) {
            if (s[pos] != ',') fail("expected ',' between edges");
            ++pos;
            skip_ws();
        }
    }
    const int arity = edges.empty() ? arity_hint : static_cast<int>(edges[0].first.size());
    return LabeledGraph(arity, m, std::move(edges));
}

std::vector<int> admissible_cuts(const LabeledGraph& g) {
    const int m = g.num_vertices();
    std::vector<char> blocked(m + 1, 0);  // blocked[i]: an edge joins [1,i] and [i+1,m]
    for (const auto& [t, mult] : g.edges()) {
        auto [lo, hi] = std::minmax_element(t.begin(), t.end());
        for (int i = *lo; i < *hi; ++i) blocked[i] = 1;
    }
    std::vector<int> cuts;
    for (int i = 0; i <= m; ++i)
        if (!blocked[i]) cuts.push_back(i);
    return cuts;
}

Restriction restrict_to(const LabeledGraph& g, const std::vector<int>& subset) {
    std::vector<int> d(subset);
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    for (int v : d)
        if (v < 1 || v > g.num_vertices())
            throw InvalidArgument("restriction subset out of range");
    std::vector<int> rank(g.num_vertices() + 1, 0);  // old vertex -> new, 0 = dropped
    for (size_t i = 0; i < d.size(); ++i) rank[d[i]] = static_cast<int>(i) + 1;
    EdgeList edges;
    for (const auto& [t, mult] : g.edges()) {
        EdgeTuple mapped(t.size());
        bool keep = true;
        for (size_t i = 0; i < t.size(); ++i) {
            mapped[i] = rank[t[i]];
            if (mapped[i] == 0) { keep = false; break; }
        }
        if (keep) edges.emplace_back(std::move(mapped), mult);
    }
    LabeledGraph r(g.arity(), static_cast<int>(d.size()), std::move(edges));
    const bool valid = !r.has_isolated_vertex();
    return {std::move(r), valid};
}

LabeledGraph concatenate(const LabeledGraph& a, const LabeledGraph& b) {
    if (a.arity() != b.arity())
        throw BasisMismatch("concatenate: arity mismatch");
    const int shift = a.num_vertices();
    EdgeList edges = a.edges();
    for (const auto& [t, mult] : b.edges()) {
        EdgeTuple shifted(t.size());
        for (size_t i = 0; i < t.size(); ++i) shifted[i] = t[i] + shift;
        edges.emplace_back(std::move(shifted), mult);
    }
    return LabeledGraph(a.arity(), shift + b.num_vertices(), std::move(edges));
}

bool is_irreducible(const LabeledGraph& g) {
    return g.num_vertices() > 0 && admissible_cuts(g).size() == 2;
}

std::vector<LabeledGraph> factor_irreducible(const LabeledGraph& g) {
    if (g.has_isolated_vertex())
        throw InvalidArgument("factor_irreducible: graph has an isolated vertex");
    const auto cuts = admissible_cuts(g);
    std::vector<LabeledGraph> factors;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        std::vector<int> block(cuts[i + 1] - cuts[i]);
        std::iota(block.begin(), block.end(), cuts[i] + 1);
        factors.push_back(restrict_to(g, block).graph);
    }
    return factors;
}

static EdgeList relabel_edges(const LabeledGraph& g, const std::vector<int>& perm) {
    EdgeList edges;
    edges.reserve(g.edges().size());
    for (const auto& [t, mult] : g.edges()) {
        EdgeTuple mapped(t.size());
        for (size_t i = 0; i < t.size(); ++i) mapped[i] = perm[t[i] - 1];
        edges.emplace_back(std::move(mapped), mult);
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

UnlabeledGraph canonicalize(const LabeledGraph& g) {
    const int m = g.num_vertices();
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 1);
    EdgeList best = g.edges();
    while (std::next_permutation(perm.begin(), perm.end())) {
        EdgeList candidate = relabel_edges(g, perm);
        if (compare_edge_lists(candidate, best) < 0) best = std::move(candidate);
    }
    return {LabeledGraph(g.arity(), m, std::move(best))};
}

std::vector<LabeledGraph> labelings_of(const UnlabeledGraph& u) {
    const LabeledGraph& g = u.canonical;
    const int m = g.num_vertices();
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 1);
    std::set<LabeledGraph> orbit;
    do {
        orbit.insert(LabeledGraph(g.arity(), m, relabel_edges(g, perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {orbit.begin(), orbit.end()};
}

bool contains_pattern(const LabeledGraph& g, const LabeledGraph& p) {
    if (g.arity() != p.arity())
        throw BasisMismatch("contains_pattern: arity mismatch");
    const int mg = g.num_vertices(), mp = p.num_vertices();
    if (mp > mg) return false;
    std::vector<int> subset(mp);  // subset[i] = vertex of g matched to pattern vertex i+1
    std::iota(subset.begin(), subset.end(), 1);
    auto matches = [&] {
        for (const auto& [t, mult] : p.edges()) {
            EdgeTuple mapped(t.size());
            for (size_t i = 0; i < t.size(); ++i) mapped[i] = subset[t[i] - 1];
            if (g.multiplicity(mapped) < mult) return false;
        }
        return true;
    };
    // iterate mp-subsets of [1..mg] in lexicographic order
    while (true) {
        if (matches()) return true;
        int i = mp - 1;
        while (i >= 0 && subset[i] == mg - (mp - 1 - i)) --i;
        if (i < 0) return false;
        ++subset[i];
        for (int j = i + 1; j < mp; ++j) subset[j] = subset[j - 1] + 1;
    }
}

bool satisfies_flags(const LabeledGraph& g, const VariantFlags& v) {
    if (!v.multiedges)
        for (const auto& [t, mult] : g.edges())
            if (mult > 1) return false;
    if (!v.loops)
        for (const auto& [t, mult] : g.edges()) {
            EdgeTuple sorted = t;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                return false;
        }
    if (!v.oriented) {
        // multiplicity must be constant on the permutation orbit of each
        // tuple; for arity 2 this is symmetry of the adjacency matrix
        for (const auto& [t, mult] : g.edges()) {
            EdgeTuple s = t;
            std::sort(s.begin(), s.end());
            do {
                if (g.multiplicity(s) != mult) return false;
            } while (std::next_permutation(s.begin(), s.end()));
        }
    }
    return true;
}

namespace {

// All arity-tuples over 1..m in lexicographic order, pre-filtered for the
// loops flag (a loop-free graph uses only tuples with distinct entries).
std::vector<EdgeTuple> tuple_alphabet(int m, int arity, bool allow_loops) {
    std::vector<EdgeTuple> tuples;
    EdgeTuple t(arity, 1);
    if (m == 0) return tuples;
    while (true) {
        bool ok = true;
        if (!allow_loops) {
            EdgeTuple s = t;
            std::sort(s.begin(), s.end());
            ok = std::adjacent_find(s.begin(), s.end()) == s.end();
        }
        if (ok) tuples.push_back(t);
        int i = arity - 1;
        while (i >= 0 && t[i] == m) { t[i] = 1; --i; }
        if (i < 0) break;
        ++t[i];
    }
    return tuples;
}

void enumerate_for_m(int degree, const VariantFlags& v, int arity, int m,
                     std::vector<LabeledGraph>& out) {
    const auto tuples = tuple_alphabet(m, arity, v.loops);
    EdgeList chosen;
    std::vector<int> cover_count(m, 0);
    int covered = 0;
    auto rec = [&](auto&& self, size_t idx, int remaining) -> void {
        if (remaining == 0) {
            if (covered == m) {
                LabeledGraph g(arity, m, chosen);
                if (satisfies_flags(g, v)) out.push_back(std::move(g));
            }
            return;
        }
        if (idx == tuples.size()) return;
        if (m - covered > arity * remaining) return;  // cannot cover the rest
        const int max_mult = v.multiedges ? remaining : 1;
        // mult = 0 first keeps the emit order lexicographic
        self(self, idx + 1, remaining);
        const EdgeTuple& t = tuples[idx];
        for (int mult = 1; mult <= max_mult; ++mult) {
            for (int x : t)
                if (cover_count[x - 1]++ == 0) ++covered;
            chosen.emplace_back(t, mult);
            self(self, idx + 1, remaining - mult);
            chosen.pop_back();
        }
        for (int round = 0; round < max_mult; ++round)
            for (int x : t)
                if (--cover_count[x - 1] == 0) --covered;
    };
    rec(rec, 0, degree);
}

int worker_limit() {
    if (const char* env = std::getenv("GHOPF_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

std::vector<LabeledGraph> enumerate_graphs(int degree, const VariantFlags& v, int arity) {
    if (degree < 0) throw InvalidArgument("degree must be nonnegative");
    if (arity < 2) throw InvalidArgument("arity must be >= 2");
    if (degree == 0) return {LabeledGraph::empty(arity)};
    const int max_m = arity * degree;
    std::vector<std::vector<LabeledGraph>> by_m(max_m + 1);
    const int threads = std::min(worker_limit(), max_m);
    if (threads <= 1) {
        for (int m = 1; m <= max_m; ++m) enumerate_for_m(degree, v, arity, m, by_m[m]);
    } else {
        std::vector<std::future<void>> jobs;
        for (int m = 1; m <= max_m; ++m)
            jobs.push_back(std::async(std::launch::async, [&, m] {
                enumerate_for_m(degree, v, arity, m, by_m[m]);
            }));
        for (auto& j : jobs) j.get();
    }
    std::vector<LabeledGraph> all;
    for (auto& part : by_m)
        all.insert(all.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    return all;
}

}  // namespace ghopf
