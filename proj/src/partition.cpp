#include "stabreg/partition.hpp"

#include "stabreg/errors.hpp"
#include "stabreg/pair_metrics.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace stabreg {

namespace {

void require_unit_epsilon(const Rational& eps) {
    if (eps <= 0 || eps >= 1) {
        throw InputError("epsilon must lie strictly between 0 and 1, got " + to_string(eps));
    }
}

std::int64_t count(std::size_t c) { return static_cast<std::int64_t>(c); }

class ExactSearch {
public:
    ExactSearch(const Graph& g, const Rational& eps) : n_(g.order()), eps_(eps), rows_(n_) {
        for (Vertex v = 0; v < n_; ++v) rows_[v] = g.adjacency(v).words()[0];
    }

    std::optional<std::vector<std::uint64_t>> run(std::size_t m, const Rational& gamma) {
        m_ = m;
        goodness_ = Threshold(gamma);
        cache_.clear();
        parts_.assign(m + 1, 0);
        if (descend(0, 0, 0)) return parts_;
        return std::nullopt;
    }

private:
    bool good(std::uint64_t part) {
        auto [it, inserted] = cache_.try_emplace(part, false);
        if (inserted) {
            const auto size = static_cast<std::int64_t>(std::popcount(part));
            bool ok = true;
            for (Vertex b = 0; b < n_ && ok; ++b) ok = goodness_.lopsided(std::popcount(rows_[b] & part), size);
            it->second = ok;
        }
        return it->second;
    }

    bool descend(Vertex v, std::size_t used, std::size_t exceptional) {
        if (m_ - used > n_ - v) return false;
        if (v == n_) {
            for (std::size_t i = 1; i <= m_; ++i)
                if (!good(parts_[i])) return false;
            return true;
        }
        const std::uint64_t bit = std::uint64_t{1} << v;
        if (eps_.below(count(exceptional + 1), count(n_))) {
            parts_[0] |= bit;
            if (descend(v + 1, used, exceptional + 1)) return true;
            parts_[0] &= ~bit;
        }
        const std::size_t top = used < m_ ? used + 1 : used;
        for (std::size_t label = 1; label <= top; ++label) {
            parts_[label] |= bit;
            if (descend(v + 1, label > used ? label : used, exceptional)) return true;
            parts_[label] &= ~bit;
        }
        return false;
    }

    std::size_t n_;
    Threshold eps_;
    Threshold goodness_{Rational(0)};
    std::vector<std::uint64_t> rows_;
    std::vector<std::uint64_t> parts_;
    std::size_t m_ = 0;
    std::unordered_map<std::uint64_t, bool> cache_;
};

Partition exact_search(const Graph& g, const Rational& eps, const ErrorFunction& sigma, const Limits& limits) {
    const std::size_t n = g.order();
    if (n > limits.exact_partition_max || n > 64) {
        throw CapacityError("exact partition search needs n <= " + std::to_string(limits.exact_partition_max) +
                            ", got n = " + std::to_string(n));
    }
    ExactSearch search(g, eps);
    for (std::size_t m = 1; m <= n; ++m) {
        const Rational gamma = sigma(m);
        if (auto parts = search.run(m, gamma)) {
            Partition p;
            p.exceptional = VertexSet::from_mask(n, (*parts)[0]);
            for (std::size_t i = 1; i <= m; ++i) p.parts.push_back(VertexSet::from_mask(n, (*parts)[i]));
            p.params.construction = "exact";
            p.params.epsilon = eps;
            p.params.sigma = sigma.to_string();
            p.params.goodness = gamma;
            return p;
        }
    }
    // Unreachable for 0 < eps < 1: all singletons is always a certificate.
    throw std::logic_error("exact partition search found no certificate");
}

bool all_good(const Graph& g, const std::vector<VertexSet>& parts, const Rational& gamma) {
    for (const auto& part : parts)
        if (!is_good_set(g, part, gamma)) return false;
    return true;
}

Partition greedy_search(const Graph& g, const Rational& eps, const ErrorFunction& sigma) {
    Partition p = type_mass_partition(g, eps, TypeRule::exact);
    p.params.construction = "greedy";
    p.params.sigma = sigma.to_string();
    while (p.parts.size() > 1) {
        const std::size_t m = p.parts.size();
        const Rational gamma = sigma(m - 1);
        std::vector<Rational> slack;
        slack.reserve(m);
        for (const auto& part : p.parts) slack.push_back(goodness_slack(g, part, gamma));

        std::optional<Rational> best;
        std::size_t best_i = 0;
        std::size_t best_j = 0;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                Rational worst = goodness_slack(g, p.parts[i] | p.parts[j], gamma);
                if (worst <= 0) continue;
                for (std::size_t t = 0; t < m; ++t) {
                    if (t != i && t != j && slack[t] < worst) worst = slack[t];
                }
                if (worst <= 0) continue;
                if (!best || worst > *best) {
                    best = worst;
                    best_i = i;
                    best_j = j;
                }
            }
        }
        if (!best) break;
        p.parts[best_i] |= p.parts[best_j];
        p.parts.erase(p.parts.begin() + static_cast<std::ptrdiff_t>(best_j));
    }
    const Rational gamma = sigma(p.parts.size());
    p.params.goodness = gamma;
    p.certified = all_good(g, p.parts, gamma) &&
                  Threshold(eps).below(count(p.exceptional.size()), count(g.order()));
    return p;
}

}  // namespace

void validate_partition(const Graph& g, const Partition& p) {
    const std::size_t n = g.order();
    if (p.exceptional.universe() != n) throw InputError("exceptional block has the wrong universe", "partition");
    VertexSet seen = p.exceptional;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        const auto& part = p.parts[i];
        if (part.universe() != n) {
            throw InputError("part " + std::to_string(i + 1) + " has the wrong universe", "partition");
        }
        if (part.empty()) throw InputError("part " + std::to_string(i + 1) + " is empty", "partition");
        if (part.intersects(seen)) {
            throw InputError("part " + std::to_string(i + 1) + " overlaps an earlier block", "partition");
        }
        seen |= part;
    }
    if (seen.size() != n) throw InputError("blocks do not cover every vertex", "partition");
}

Partition type_mass_partition(const Graph& g, const Rational& eps, TypeRule rule) {
    require_unit_epsilon(eps);
    const TypeSpectrum spectrum = type_spectrum(g, rule);
    Partition p;
    p.exceptional = VertexSet(g.order());
    p.params.construction = "type_mass";
    p.params.epsilon = eps;
    const Rational target = 1 - eps;
    Rational covered = 0;
    for (std::size_t i = 0; i < spectrum.classes.size(); ++i) {
        if (covered > target) {
            p.exceptional |= spectrum.classes[i].members;
        } else {
            p.parts.push_back(spectrum.classes[i].members);
            covered += spectrum.masses[i];
        }
    }
    return p;
}

SearchMode parse_search_mode(const std::string& text) {
    if (text == "exact") return SearchMode::exact;
    if (text == "greedy") return SearchMode::greedy;
    throw InputError("unknown search mode '" + text + "' (expected exact or greedy)");
}

Partition good_partition_search(const Graph& g, const Rational& eps, const ErrorFunction& sigma, SearchMode mode,
                                const Limits& limits) {
    require_unit_epsilon(eps);
    return mode == SearchMode::exact ? exact_search(g, eps, sigma, limits) : greedy_search(g, eps, sigma);
}

Partition equipartition_refine(const Graph& g, const Partition& base, const Rational& eps,
                               const ErrorFunction& sigma_in) {
    require_unit_epsilon(eps);
    validate_partition(g, base);
    const std::size_t n = g.order();
    const std::size_t m = base.parts.size();
    if (m == 0) throw PreconditionError("base partition has no parts", "no_parts");
    const std::uint64_t part_bound = refinement_part_bound(m, eps);
    const bool decreasing = sigma_in.is_decreasing(part_bound);
    const ErrorFunction sigma = decreasing ? sigma_in : sigma_in.running_min();

    if (!Threshold(eps / 2).below(count(base.exceptional.size()), count(n))) {
        throw PreconditionError("|X_0| = " + std::to_string(base.exceptional.size()) + " is not below (eps/2)|V| = " +
                                    to_string(eps / 2 * Rational(count(n))),
                                "exceptional_too_large");
    }
    const Rational tau = refinement_tau(m, eps, sigma);
    for (std::size_t i = 0; i < m; ++i) {
        if (auto b = goodness_violation(g, base.parts[i], tau)) {
            const auto e = g.adjacency(*b).intersection_size(base.parts[i]);
            throw PreconditionError("part " + std::to_string(i + 1) + " (size " +
                                        std::to_string(base.parts[i].size()) + ") is not tau(m)-good for tau(" +
                                        std::to_string(m) + ") = " + to_string(tau) + ": vertex " +
                                        std::to_string(*b) + " sees " + std::to_string(e) + " of its members",
                                    "base_not_tau_good");
        }
    }

    const std::size_t chunk =
        static_cast<std::size_t>(to_int64(ceil(eps * Rational(count(n)) / Rational(2 * count(m)))));
    Partition out;
    out.exceptional = base.exceptional;
    for (const auto& part : base.parts) {
        const auto members = part.members();
        const std::size_t full_chunks = members.size() / chunk;
        for (std::size_t j = 0; j < full_chunks; ++j) {
            VertexSet y(n);
            for (std::size_t t = j * chunk; t < (j + 1) * chunk; ++t) y.insert(members[t]);
            out.parts.push_back(std::move(y));
        }
        for (std::size_t t = full_chunks * chunk; t < members.size(); ++t) out.exceptional.insert(members[t]);
    }
    if (out.parts.size() > part_bound) {
        throw std::logic_error("refinement produced more than floor(2m^2/eps) parts");
    }
    if (Rational(count(out.exceptional.size())) > eps * Rational(count(n))) {
        throw std::logic_error("refinement produced |Y_0| > eps|V|");
    }
    out.params.construction = "refine";
    out.params.epsilon = eps;
    out.params.sigma = sigma.to_string();
    out.params.tau = tau;
    out.params.base_parts = m;
    out.params.chunk_size = chunk;
    out.params.sigma_running_min = !decreasing;
    out.params.goodness = sigma(out.parts.size()) * sigma(out.parts.size()) / 4;
    return out;
}

const char* to_string(PairCheck verdict) {
    switch (verdict) {
        case PairCheck::low: return "low";
        case PairCheck::high: return "high";
        case PairCheck::fail: return "fail";
    }
    return "";
}

RegularityReport verify_regularity(const Graph& g, const Partition& p, const Rational& eps,
                                   const ErrorFunction& sigma) {
    validate_partition(g, p);
    RegularityReport report;
    report.n = p.parts.size();
    report.exceptional_fraction = Rational(count(p.exceptional.size()), count(g.order()));
    report.exceptional_check = report.exceptional_fraction <= eps;
    for (const auto& part : p.parts) {
        if (part.size() != p.parts.front().size()) report.size_check = false;
    }
    report.threshold = sigma(report.n);
    const Threshold t(report.threshold);
    report.pair_matrix.assign(report.n, std::vector<PairCheck>(report.n, PairCheck::fail));
    report.densities.assign(report.n, std::vector<Density>(report.n));
    for (std::size_t i = 0; i < report.n; ++i) {
        for (std::size_t j = 0; j < report.n; ++j) {
            const Density d = density(g, p.parts[i], p.parts[j]);
            report.densities[i][j] = d;
            PairCheck verdict = PairCheck::fail;
            if (t.below(d.edges, d.pairs)) {
                verdict = PairCheck::low;
            } else if (t.above_complement(d.edges, d.pairs)) {
                verdict = PairCheck::high;
            }
            report.pair_matrix[i][j] = verdict;
            if (verdict == PairCheck::fail) (i == j ? report.diagonal_pass : report.off_diagonal_pass) = false;
        }
    }
    report.pass = report.exceptional_check && report.size_check && report.diagonal_pass && report.off_diagonal_pass;
    return report;
}

}  // namespace stabreg
