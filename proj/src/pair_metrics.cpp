#include "stabreg/pair_metrics.hpp"

#include "stabreg/errors.hpp"

#include <bit>
#include <string>

namespace stabreg {

namespace {

void require_nonempty(const VertexSet& s, const char* name) {
    if (s.empty()) {
        throw InputError(std::string(name) + " must be nonempty");
    }
}

void require_positive(const Rational& eps, const char* name) {
    if (eps <= 0) {
        throw InputError(std::string(name) + " must be positive, got " + to_string(eps));
    }
}

std::int64_t count(std::size_t c) { return static_cast<std::int64_t>(c); }

// Vertices a of `from` whose |E(a, target)| is lopsided toward `side`.
VertexSet one_sided(const Graph& g, const VertexSet& from, const VertexSet& target, const Threshold& t,
                    Side side) {
    VertexSet out(g.order());
    const auto total = count(target.size());
    from.for_each([&](Vertex a) {
        const auto c = count(g.adjacency(a).intersection_size(target));
        if (side == Side::low ? t.below(c, total) : t.above_complement(c, total)) out.insert(a);
    });
    return out;
}

VertexSet lopsided_members(const Graph& g, const VertexSet& from, const VertexSet& target, const Threshold& t) {
    VertexSet out(g.order());
    const auto total = count(target.size());
    from.for_each([&](Vertex a) {
        if (t.lopsided(count(g.adjacency(a).intersection_size(target)), total)) out.insert(a);
    });
    return out;
}

}  // namespace

std::optional<Vertex> goodness_violation(const Graph& g, const VertexSet& x, const Rational& eps) {
    require_nonempty(x, "X");
    require_positive(eps, "epsilon");
    const Threshold t(eps);
    const auto total = count(x.size());
    for (Vertex b = 0; b < g.order(); ++b) {
        if (!t.lopsided(count(g.adjacency(b).intersection_size(x)), total)) return b;
    }
    return std::nullopt;
}

bool is_good_set(const Graph& g, const VertexSet& x, const Rational& eps) {
    return !goodness_violation(g, x, eps).has_value();
}

Rational goodness_slack(const Graph& g, const VertexSet& x, const Rational& eps) {
    require_nonempty(x, "X");
    const auto total = count(x.size());
    // Only the distinct neighborhood counts matter.
    std::vector<bool> seen(x.size() + 1, false);
    for (Vertex b = 0; b < g.order(); ++b) seen[g.adjacency(b).intersection_size(x)] = true;
    std::optional<Rational> worst;
    for (std::size_t c = 0; c < seen.size(); ++c) {
        if (!seen[c]) continue;
        const Rational frac(count(c), total);
        const Rational low_margin = eps - frac;
        const Rational high_margin = frac - (1 - eps);
        const Rational margin = low_margin > high_margin ? low_margin : high_margin;
        if (!worst || margin < *worst) worst = margin;
    }
    return *worst;
}

ThresholdSets threshold_sets(const Graph& g, const VertexSet& x, const VertexSet& y, const Rational& delta,
                             const Rational& eps) {
    require_nonempty(x, "X");
    require_nonempty(y, "Y");
    return {one_sided(g, x, y, Threshold(delta), Side::low),
            one_sided(g, y, x, Threshold(eps), Side::high)};
}

const char* to_string(PairKind kind) {
    switch (kind) {
        case PairKind::homogeneous_low: return "homogeneous-low";
        case PairKind::homogeneous_high: return "homogeneous-high";
        case PairKind::not_homogeneous: return "not-homogeneous";
    }
    return "";
}

PairVerdict homogeneity(const Graph& g, const VertexSet& x, const VertexSet& y, const Rational& eps) {
    require_positive(eps, "epsilon");
    PairVerdict verdict;
    verdict.density = density(g, x, y);
    verdict.threshold = eps;
    const Threshold t(eps);
    if (t.below(verdict.density.edges, verdict.density.pairs)) {
        verdict.kind = PairKind::homogeneous_low;
    } else if (t.above_complement(verdict.density.edges, verdict.density.pairs)) {
        verdict.kind = PairKind::homogeneous_high;
    }
    return verdict;
}

bool is_homogeneous(const Graph& g, const VertexSet& x, const VertexSet& y, const Rational& eps) {
    return homogeneity(g, x, y, eps).kind != PairKind::not_homogeneous;
}

std::optional<SpecialWitness> special_witness(const Graph& g, const VertexSet& x, const VertexSet& y,
                                              const Rational& eps) {
    require_nonempty(x, "X");
    require_nonempty(y, "Y");
    require_positive(eps, "epsilon");
    const Threshold t(eps);
    const auto nx = count(x.size());
    const auto ny = count(y.size());
    for (Side side : {Side::low, Side::high}) {
        SpecialWitness w{one_sided(g, x, y, t, side), one_sided(g, y, x, t, side), side};
        if (t.above_complement(count(w.x_prime.size()), nx) && t.above_complement(count(w.y_prime.size()), ny)) {
            return w;
        }
    }
    return std::nullopt;
}

bool is_special(const Graph& g, const VertexSet& x, const VertexSet& y, const Rational& eps) {
    return special_witness(g, x, y, eps).has_value();
}

bool is_good_pair(const Graph& g, const VertexSet& x, const VertexSet& y, const Rational& eps) {
    require_nonempty(x, "X");
    require_nonempty(y, "Y");
    require_positive(eps, "epsilon");
    const Threshold t(eps);
    return lopsided_members(g, x, y, t) == x && lopsided_members(g, y, x, t) == y;
}

bool is_almost_good(const Graph& g, const VertexSet& x, const VertexSet& y, const Rational& eps,
                    const Rational& largeness) {
    require_nonempty(x, "X");
    require_nonempty(y, "Y");
    require_positive(eps, "epsilon");
    require_positive(largeness, "largeness");
    const Threshold t(eps);
    const Threshold big(largeness);
    return big.above_complement(count(lopsided_members(g, x, y, t).size()), count(x.size())) &&
           big.above_complement(count(lopsided_members(g, y, x, t).size()), count(y.size()));
}

ExcellenceContext::ExcellenceContext(const Graph& g, const Rational& delta, const Limits& limits)
    : graph_(&g), delta_(delta), exhaustive_(true) {
    require_positive(delta, "delta");
    const std::size_t n = g.order();
    if (n > limits.exhaustive_max || n > 30) {
        throw CapacityError("exhaustive excellence check over all subsets needs n <= " +
                            std::to_string(limits.exhaustive_max < 30 ? limits.exhaustive_max : 30) +
                            ", got n = " + std::to_string(n));
    }
    std::vector<std::uint64_t> rows(n);
    for (Vertex v = 0; v < n; ++v) rows[v] = g.adjacency(v).words()[0];
    const Threshold t(delta);
    std::vector<std::int64_t> counts(n);
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t ymask = 1; ymask < end; ++ymask) {
        const auto ysize = static_cast<std::int64_t>(std::popcount(ymask));
        bool good = true;
        for (Vertex v = 0; v < n && good; ++v) {
            counts[v] = std::popcount(rows[v] & ymask);
            good = t.lopsided(counts[v], ysize);
        }
        if (!good) continue;
        std::uint64_t low = 0;
        for (Vertex a = 0; a < n; ++a) {
            if (t.below(counts[a], ysize)) low |= std::uint64_t{1} << a;
        }
        low_sets_.push_back(VertexSet::from_mask(n, low));
    }
}

ExcellenceContext::ExcellenceContext(const Graph& g, const Rational& delta, const std::vector<VertexSet>& candidates)
    : graph_(&g), delta_(delta) {
    require_positive(delta, "delta");
    const Threshold t(delta);
    for (const auto& y : candidates) {
        if (y.empty() || !is_good_set(g, y, delta)) continue;
        low_sets_.push_back(one_sided(g, VertexSet::full(g.order()), y, t, Side::low));
    }
}

bool ExcellenceContext::check(const VertexSet& x, const Rational& eps) const {
    if (!is_good_set(*graph_, x, eps)) return false;
    const Threshold t(eps);
    const auto nx = count(x.size());
    for (const auto& low : low_sets_) {
        if (!t.lopsided(count(x.intersection_size(low)), nx)) return false;
    }
    return true;
}

bool is_excellent(const Graph& g, const VertexSet& x, const Rational& eps, const Rational& delta,
                  const Limits& limits) {
    return ExcellenceContext(g, delta, limits).check(x, eps);
}

}  // namespace stabreg
