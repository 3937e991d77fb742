#include "stabreg/group.hpp"

#include "stabreg/errors.hpp"
#include "stabreg/random.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace stabreg {

namespace {

constexpr std::size_t kExhaustiveAssociativity = 128;
constexpr std::size_t kSampledTriples = 20000;

std::int64_t count(std::size_t c) { return static_cast<std::int64_t>(c); }

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Element>> rows, std::string name) {
    const std::size_t n = rows.size();
    if (n == 0) throw InputError("a group needs at least one element", "group");
    FiniteGroup g;
    g.order_ = n;
    g.name_ = std::move(name);
    g.table_.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        if (rows[a].size() != n) {
            throw InputError("Cayley table row " + std::to_string(a) + " has " + std::to_string(rows[a].size()) +
                                 " entries, expected " + std::to_string(n),
                             "group");
        }
        for (Element c : rows[a]) {
            if (c >= n) throw InputError("Cayley table entry " + std::to_string(c) + " out of range", "group");
            g.table_.push_back(c);
        }
    }
    bool found_identity = false;
    for (Element e = 0; e < n && !found_identity; ++e) {
        bool ok = true;
        for (Element a = 0; a < n && ok; ++a) ok = g.multiply(e, a) == a && g.multiply(a, e) == a;
        if (ok) {
            g.identity_ = e;
            found_identity = true;
        }
    }
    if (!found_identity) throw InputError("Cayley table has no identity element", "group");
    g.inverses_.assign(n, n);
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            if (g.multiply(a, b) == g.identity_ && g.multiply(b, a) == g.identity_) {
                g.inverses_[a] = b;
                break;
            }
        }
        if (g.inverses_[a] == n) throw InputError("element " + std::to_string(a) + " has no inverse", "group");
    }
    auto associative = [&](Element a, Element b, Element c) {
        return g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c));
    };
    if (n <= kExhaustiveAssociativity) {
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b)
                for (Element c = 0; c < n; ++c)
                    if (!associative(a, b, c)) {
                        throw InputError("Cayley table is not associative at (" + std::to_string(a) + ", " +
                                             std::to_string(b) + ", " + std::to_string(c) + ")",
                                         "group");
                    }
    } else {
        RandomStream rng = RandomStream(n).derive("associativity");
        for (std::size_t s = 0; s < kSampledTriples; ++s) {
            const Element a = rng.below(n), b = rng.below(n), c = rng.below(n);
            if (!associative(a, b, c)) throw InputError("Cayley table is not associative (sampled)", "group");
        }
    }
    return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0) throw InputError("cyclic(n) needs n >= 1", "group");
    std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return from_table(std::move(t), "Z_" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
    if (n == 0) throw InputError("dihedral(n) needs n >= 1", "group");
    const std::size_t size = 2 * n;
    std::vector<std::vector<Element>> t(size, std::vector<Element>(size));
    for (Element x = 0; x < size; ++x) {
        for (Element y = 0; y < size; ++y) {
            const std::size_t a = x % n, b = x / n, c = y % n, d = y / n;
            // r^a s^b r^c s^d = r^(a + (-1)^b c) s^(b + d)
            const std::size_t rot = b == 0 ? (a + c) % n : (a + n - c) % n;
            t[x][y] = rot + n * ((b + d) % 2);
        }
    }
    return from_table(std::move(t), "D_" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
    if (n == 0 || n > 5) throw InputError("symmetric(n) supports 1 <= n <= 5", "group");
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const std::size_t size = perms.size();
    std::vector<std::vector<Element>> t(size, std::vector<Element>(size));
    for (Element x = 0; x < size; ++x) {
        for (Element y = 0; y < size; ++y) {
            std::vector<std::size_t> composed(n);
            for (std::size_t i = 0; i < n; ++i) composed[i] = perms[x][perms[y][i]];
            t[x][y] = static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), composed) - perms.begin());
        }
    }
    return from_table(std::move(t), "S_" + std::to_string(n));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const std::size_t size = g.order() * h.order();
    std::vector<std::vector<Element>> t(size, std::vector<Element>(size));
    for (Element x = 0; x < size; ++x) {
        for (Element y = 0; y < size; ++y) {
            t[x][y] = g.multiply(x / h.order(), y / h.order()) * h.order() + h.multiply(x % h.order(), y % h.order());
        }
    }
    return from_table(std::move(t), g.name() + "x" + h.name());
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
    std::vector<std::vector<Element>> rows(order_);
    for (Element a = 0; a < order_; ++a)
        rows[a].assign(table_.begin() + static_cast<std::ptrdiff_t>(a * order_),
                       table_.begin() + static_cast<std::ptrdiff_t>((a + 1) * order_));
    return rows;
}

VertexSet FiniteGroup::closure(const VertexSet& generators) const {
    VertexSet closed(order_);
    closed.insert(identity_);
    std::vector<Element> frontier{identity_};
    const auto gens = generators.members();
    while (!frontier.empty()) {
        const Element x = frontier.back();
        frontier.pop_back();
        for (Element s : gens) {
            const Element y = multiply(x, s);
            if (!closed.contains(y)) {
                closed.insert(y);
                frontier.push_back(y);
            }
        }
    }
    return closed;
}

bool FiniteGroup::is_subgroup(const VertexSet& s) const {
    if (s.universe() != order_ || !s.contains(identity_)) return false;
    const auto members = s.members();
    for (Element a : members) {
        if (!s.contains(inverse(a))) return false;
        for (Element b : members)
            if (!s.contains(multiply(a, b))) return false;
    }
    return true;
}

bool FiniteGroup::is_normal(const VertexSet& subgroup) const {
    const auto members = subgroup.members();
    for (Element g = 0; g < order_; ++g)
        for (Element h : members)
            if (!subgroup.contains(multiply(multiply(g, h), inverse(g)))) return false;
    return true;
}

Relation translate_relation(const FiniteGroup& g, const VertexSet& a) {
    if (a.universe() != g.order()) throw InputError("A must be a subset of G");
    return Relation::from_predicate(g.order(), g.order(),
                                    [&](std::size_t x, std::size_t y) { return a.contains(g.multiply(x, y)); });
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Limits& limits) {
    const std::size_t n = g.order();
    if (n > limits.group_max) {
        throw CapacityError("subgroup enumeration needs |G| <= " + std::to_string(limits.group_max) + ", got " +
                            std::to_string(n));
    }
    auto key = [](const VertexSet& s) { return std::vector<std::uint64_t>(s.words().begin(), s.words().end()); };
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<VertexSet> found;
    std::vector<VertexSet> cyclics;
    for (Element x = 0; x < n; ++x) {
        VertexSet c = g.closure(VertexSet::of(n, {x}));
        if (seen.insert(key(c)).second) {
            found.push_back(c);
            cyclics.push_back(std::move(c));
        }
    }
    // Every subgroup is the join of the cyclic subgroups it contains.
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (const auto& c : cyclics) {
            if (c.is_subset_of(found[i])) continue;
            VertexSet joined = g.closure(found[i] | c);
            if (seen.insert(key(joined)).second) found.push_back(std::move(joined));
        }
    }
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto& s : found) {
        Subgroup h;
        h.index = n / s.size();
        h.normal = g.is_normal(s);
        h.elements = std::move(s);
        out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.index != b.index) return a.index < b.index;
        return lex_less(a.elements, b.elements);
    });
    return out;
}

std::vector<Subgroup> normal_subgroups_up_to_index(const FiniteGroup& g, std::size_t max_index,
                                                   const Limits& limits) {
    std::vector<Subgroup> out;
    for (auto& h : all_subgroups(g, limits)) {
        if (h.normal && h.index <= max_index) out.push_back(std::move(h));
    }
    return out;
}

CosetReport coset_report(const FiniteGroup& g, const VertexSet& a, const Subgroup& h, const ErrorFunction& sigma) {
    if (a.universe() != g.order()) throw InputError("A must be a subset of G");
    if (!g.is_subgroup(h.elements)) throw InputError("H is not a subgroup");
    if (!g.is_normal(h.elements)) throw InputError("H is not normal");
    CosetReport report;
    report.subgroup = h;
    report.subgroup.normal = true;
    report.threshold = sigma(h.index);
    report.exceptional = VertexSet(g.order());
    const Threshold t(report.threshold);
    const auto hs = h.elements.members();
    const auto size = count(hs.size());
    VertexSet covered(g.order());
    bool first = true;
    for (Element x = 0; x < g.order(); ++x) {
        if (covered.contains(x)) continue;
        CosetEntry entry;
        entry.representative = x;
        entry.elements = VertexSet(g.order());
        for (Element y : hs) entry.elements.insert(g.multiply(x, y));
        covered |= entry.elements;
        entry.hits = entry.elements.intersection_size(a);
        entry.fraction = Rational(count(entry.hits), size);
        if (t.below(count(entry.hits), size)) {
            entry.verdict = PairCheck::low;
        } else if (t.above_complement(count(entry.hits), size)) {
            entry.verdict = PairCheck::high;
        } else {
            ++report.failing;
        }
        const Rational low_margin = report.threshold - entry.fraction;
        const Rational high_margin = entry.fraction - (1 - report.threshold);
        const Rational margin = low_margin > high_margin ? low_margin : high_margin;
        const Rational off = entry.fraction < 1 - entry.fraction ? entry.fraction : 1 - entry.fraction;
        if (first || margin < report.min_margin) report.min_margin = margin;
        if (first || off > report.error) report.error = off;
        first = false;
        report.cosets.push_back(std::move(entry));
    }
    report.pass = report.failing == 0;
    return report;
}

CosetReport coset_regularity(const FiniteGroup& g, const VertexSet& a, const ErrorFunction& sigma,
                             std::size_t max_index, const Limits& limits) {
    std::optional<CosetReport> best;
    for (const auto& h : normal_subgroups_up_to_index(g, max_index, limits)) {
        CosetReport report = coset_report(g, a, h, sigma);
        if (report.pass) {
            report.certified = true;
            return report;
        }
        if (!best || report.failing < best->failing ||
            (report.failing == best->failing && report.min_margin > best->min_margin)) {
            best = std::move(report);
        }
    }
    if (!best) throw InputError("no normal subgroup of index <= " + std::to_string(max_index));
    return *best;
}

Partition coset_partition(const FiniteGroup& g, const Subgroup& h) {
    Partition p;
    p.exceptional = VertexSet(g.order());
    p.params.construction = "cosets";
    VertexSet covered(g.order());
    const auto hs = h.elements.members();
    for (Element x = 0; x < g.order(); ++x) {
        if (covered.contains(x)) continue;
        VertexSet coset(g.order());
        for (Element y : hs) coset.insert(g.multiply(x, y));
        covered |= coset;
        p.parts.push_back(std::move(coset));
    }
    return p;
}

}  // namespace stabreg
