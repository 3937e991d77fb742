#include "stabreg/types.hpp"

#include "stabreg/stability.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace stabreg {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

// Unites vertices whose keys compare equal.
void unite_equal_keys(const std::vector<VertexSet>& keys, const std::vector<Vertex>& among, DisjointSets& sets) {
    std::vector<Vertex> order = among;
    auto key_less = [&](Vertex a, Vertex b) {
        const auto wa = keys[a].words();
        const auto wb = keys[b].words();
        return std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end());
    };
    std::stable_sort(order.begin(), order.end(), key_less);
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (keys[order[i]] == keys[order[i - 1]]) sets.unite(order[i], order[i - 1]);
    }
}

std::vector<TypeClass> collect_classes(const Graph& g, DisjointSets& sets, const std::vector<Vertex>& among,
                                       const VertexSet* restrict_to) {
    std::vector<TypeClass> classes;
    std::vector<std::size_t> slot(g.order(), static_cast<std::size_t>(-1));
    for (Vertex v : among) {
        const std::size_t root = sets.find(v);
        if (slot[root] == static_cast<std::size_t>(-1)) {
            slot[root] = classes.size();
            VertexSet signature = g.adjacency(v);
            if (restrict_to != nullptr) signature &= *restrict_to;
            classes.push_back({std::move(signature), VertexSet(g.order())});
        }
        classes[slot[root]].members.insert(v);
    }
    return classes;
}

std::string join(const std::vector<std::size_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace

const char* to_string(TypeRule rule) { return rule == TypeRule::twin ? "twin" : "exact"; }

TypeRule parse_type_rule(const std::string& text) {
    if (text == "twin") return TypeRule::twin;
    if (text == "exact") return TypeRule::exact;
    throw InputError("unknown type rule '" + text + "' (expected twin or exact)");
}

TypeSpectrum type_spectrum(const Graph& g, TypeRule rule) {
    const std::size_t n = g.order();
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    DisjointSets sets(n);
    std::vector<VertexSet> open(n);
    for (Vertex v = 0; v < n; ++v) open[v] = g.adjacency(v);
    unite_equal_keys(open, all, sets);
    if (rule == TypeRule::twin) {
        // Twins under the self-excluded rule have equal open neighborhoods
        // (non-adjacent) or equal closed neighborhoods (adjacent), and no
        // vertex has twins of both kinds.
        std::vector<VertexSet> closed = open;
        for (Vertex v = 0; v < n; ++v) closed[v].insert(v);
        unite_equal_keys(closed, all, sets);
    }
    TypeSpectrum spectrum;
    spectrum.rule = rule;
    spectrum.classes = collect_classes(g, sets, all, nullptr);
    std::stable_sort(spectrum.classes.begin(), spectrum.classes.end(), [](const TypeClass& a, const TypeClass& b) {
        if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
        return a.members.first() < b.members.first();
    });
    for (const auto& c : spectrum.classes) {
        spectrum.masses.emplace_back(static_cast<std::int64_t>(c.members.size()), static_cast<std::int64_t>(n));
    }
    return spectrum;
}

std::vector<TypeClass> side_type_classes(const Graph& g, const VertexSet& side, const VertexSet& other) {
    const auto members = side.members();
    std::vector<VertexSet> keys(g.order());
    for (Vertex v : members) keys[v] = g.adjacency(v) & other;
    DisjointSets sets(g.order());
    unite_equal_keys(keys, members, sets);
    return collect_classes(g, sets, members, &other);
}

std::size_t DefinabilityWitnesses::votes(const Relation& r, std::size_t b) const {
    std::size_t count = 0;
    for (auto a : witnesses) count += r.holds(a, b) ? 1 : 0;
    return count;
}

std::string DefinabilityWitnesses::formula() const {
    std::ostringstream out;
    out << "at least " << k << " of {";
    for (std::size_t t = 0; t < witnesses.size(); ++t) {
        if (t) out << ", ";
        out << "E(" << witnesses[t] << ",y)";
    }
    out << "}";
    return out.str();
}

DefinabilityDefect::DefinabilityDefect(std::size_t parameter_, std::size_t votes_, std::size_t k_, bool expected_,
                                       std::optional<std::vector<std::size_t>> vs,
                                       std::optional<std::vector<std::size_t>> ws)
    : Error("definability_defect",
            "majority vote fails at parameter " + std::to_string(parameter_) + " (" + std::to_string(votes_) +
                " of " + std::to_string(2 * k_) + " votes, type " + (expected_ ? "contains" : "omits") +
                " it); " +
                (vs ? "ladder of length " + std::to_string(k_) + " found: vs=[" + join(*vs) + "] ws=[" +
                          join(*ws) + "]"
                    : std::string("no ladder of length ") + std::to_string(k_) + " found")),
      parameter(parameter_),
      vote_count(votes_),
      k(k_),
      expected(expected_),
      ladder_vs(std::move(vs)),
      ladder_ws(std::move(ws)) {}

DefinabilityRun define_type(const Relation& r, std::size_t k, const VertexSet& answers, RandomStream rng) {
    if (k == 0) throw InputError("stability parameter k must be at least 1");
    if (k > 12) throw CapacityError("definability construction supports k <= 12");
    if (answers.universe() != r.cols()) throw InputError("type answers must range over the parameter side");
    if (r.rows() == 0) throw InputError("relation has no objects");

    const std::size_t cols = r.cols();
    const std::size_t width = 2 * k;
    DefinabilityRun run;
    run.result.k = k;
    run.result.witnesses.push_back(static_cast<std::size_t>(rng.below(r.rows())));

    VertexSet parameters(cols);  // D
    for (std::size_t n = 1; n < width; ++n) {
        const auto& chosen = run.result.witnesses;
        // Pattern of each parameter on a_1..a_n: bit t set iff R(a_t, b).
        std::vector<std::uint32_t> pattern(cols, 0);
        for (std::size_t t = 0; t < n; ++t) {
            r.row(chosen[t]).for_each([&](std::size_t b) { pattern[b] |= std::uint32_t{1} << t; });
        }
        const std::uint32_t all = (std::uint32_t{1} << n) - 1;
        // I_n: X ⊆ [n] with some b outside the type related to every a_t, t in X.
        // J_n: Y ⊆ [n] with some c in the type unrelated to every a_t, t in Y.
        std::vector<bool> in_i(std::size_t{1} << n, false);
        std::vector<bool> in_j(std::size_t{1} << n, false);
        DefinabilityStage stage;
        for (std::size_t b = 0; b < cols; ++b) {
            const bool in_type = answers.contains(b);
            const std::uint32_t covered = in_type ? (~pattern[b] & all) : pattern[b];
            auto& marks = in_type ? in_j : in_i;
            auto& count = in_type ? stage.j_sets : stage.i_sets;
            // Every subset of `covered` is witnessed by b unless an earlier b
            // already witnesses it. Marked sets are closed under subsets.
            if (marks[covered]) continue;
            std::uint32_t sub = covered;
            while (true) {
                if (!marks[sub]) {
                    marks[sub] = true;
                    ++count;
                    parameters.insert(b);
                }
                if (sub == 0) break;
                sub = (sub - 1) & covered;
            }
        }
        stage.parameters = parameters.size();

        const VertexSet wanted = answers & parameters;
        std::vector<std::size_t> candidates;
        for (std::size_t a = 0; a < r.rows(); ++a) {
            if ((r.row(a) & parameters) == wanted) candidates.push_back(a);
        }
        stage.candidates = candidates.size();
        if (candidates.empty()) {
            throw PreconditionError("no object agrees with the type on the " + std::to_string(parameters.size()) +
                                        " accumulated parameters; the type is not realized",
                                    "type_not_realized");
        }
        stage.chosen = candidates[static_cast<std::size_t>(rng.below(candidates.size()))];
        run.result.witnesses.push_back(stage.chosen);
        run.stages.push_back(stage);
    }

    for (std::size_t b = 0; b < cols; ++b) {
        const std::size_t v = run.result.votes(r, b);
        const bool expected = answers.contains(b);
        if ((v >= k) != expected) {
            auto ladder = find_ladder(r, k);
            throw DefinabilityDefect(b, v, k, expected, ladder ? std::optional(ladder->vs) : std::nullopt,
                                     ladder ? std::optional(ladder->ws) : std::nullopt);
        }
    }
    return run;
}

DefinabilityWitnesses definability_witnesses(const Graph& g, std::size_t k, const TypeClass& p, std::uint64_t seed) {
    if (p.members.empty() || p.members.universe() != g.order()) {
        throw InputError("type class must be a nonempty set of vertices of the graph");
    }
    const VertexSet answers = g.adjacency(p.representative());
    return define_type(g.relation(), k, answers, RandomStream(seed).derive("definability")).result;
}

Relation bipartite_relation(const Graph& g, const VertexSet& left, const VertexSet& right) {
    if (left.universe() != g.order() || right.universe() != g.order()) {
        throw InputError("bipartition sides must be vertex sets of the graph");
    }
    if (left.intersects(right) || (left | right) != g.vertices() || left.empty() || right.empty()) {
        throw InputError("L and R must be nonempty and partition V", "not_bipartite");
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        const VertexSet& own = left.contains(v) ? left : right;
        if (g.adjacency(v).intersects(own)) {
            throw InputError("edge inside one side at vertex " + std::to_string(v), "not_bipartite");
        }
    }
    const auto ls = left.members();
    const auto rs = right.members();
    return Relation::from_predicate(ls.size(), rs.size(),
                                    [&](std::size_t i, std::size_t j) { return g.adjacent(ls[i], rs[j]); });
}

HarringtonResult harrington_check(const Graph& g, const VertexSet& left, const VertexSet& right, std::size_t k,
                                  const TypeClass& p, const TypeClass& q, std::uint64_t seed) {
    const Relation rel = bipartite_relation(g, left, right);
    const Relation dual = rel.transposed();
    if (p.members.empty() || !p.members.is_subset_of(left)) throw InputError("p must be realized in L");
    if (q.members.empty() || !q.members.is_subset_of(right)) throw InputError("q must be realized in R");
    const auto ls = left.members();
    const auto rs = right.members();
    auto index_of = [](const std::vector<Vertex>& side, Vertex v) {
        return static_cast<std::size_t>(std::lower_bound(side.begin(), side.end(), v) - side.begin());
    };
    const std::size_t p_row = index_of(ls, p.representative());
    const std::size_t q_col = index_of(rs, q.representative());

    const RandomStream root = RandomStream(seed).derive("harrington");
    const auto psi = define_type(rel, k, rel.row(p_row), root.derive("psi")).result;
    const auto theta = define_type(dual, k, dual.row(q_col), root.derive("theta")).result;

    HarringtonResult out;
    out.psi_in_q = psi.defines(rel, q_col);
    out.theta_in_p = theta.defines(dual, p_row);
    out.agree = out.psi_in_q == out.theta_in_p;
    out.psi.k = k;
    out.theta.k = k;
    for (auto a : psi.witnesses) out.psi.witnesses.push_back(ls[a]);
    for (auto b : theta.witnesses) out.theta.witnesses.push_back(rs[b]);

    std::ostringstream t;
    t << "p realized by " << p.representative() << ", q realized by " << q.representative() << "; psi = "
      << out.psi.formula() << " has " << psi.votes(rel, q_col) << " votes at q; theta = " << out.theta.formula()
      << " has " << theta.votes(dual, p_row) << " votes at p; E(p,q) = "
      << (g.adjacent(p.representative(), q.representative()) ? "true" : "false");
    out.transcript = t.str();
    return out;
}

}  // namespace stabreg
