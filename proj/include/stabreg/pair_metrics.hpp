#pragma once

#include "stabreg/graph.hpp"
#include "stabreg/limits.hpp"
#include "stabreg/rational.hpp"

#include <optional>
#include <vector>

namespace stabreg {

// All comparisons below are strict and exact: a count equal to eps*|X| (or to
// (1-eps)*|X|) satisfies neither clause.

/// X is eps-good: for every b in V, |E(X,b)| < eps|X| or |E(X,b)| > (1-eps)|X|.
bool is_good_set(const Graph& g, const VertexSet& x, const Rational& eps);

/// The least b at which eps-goodness of X fails, if any.
std::optional<Vertex> goodness_violation(const Graph& g, const VertexSet& x, const Rational& eps);

/// Smallest margin by which X clears the eps-goodness test, over all b:
/// min_b max(eps - |E(X,b)|/|X|, |E(X,b)|/|X| - (1 - eps)). Positive iff good.
Rational goodness_slack(const Graph& g, const VertexSet& x, const Rational& eps);

struct ThresholdSets {
    VertexSet x0;  // { a in X : |E(a,Y)| < delta|Y| }
    VertexSet y1;  // { b in Y : |E(X,b)| > (1-eps)|X| }
};

ThresholdSets threshold_sets(const Graph& g, const VertexSet& x, const VertexSet& y, const Rational& delta,
                             const Rational& eps);

enum class PairKind { homogeneous_low, homogeneous_high, not_homogeneous };

const char* to_string(PairKind kind);

struct PairVerdict {
    PairKind kind = PairKind::not_homogeneous;
    Density density;
    Rational threshold;
};

/// eps-homogeneity: d(X,Y) < eps (low) or d(X,Y) > 1 - eps (high).
PairVerdict homogeneity(const Graph& g, const VertexSet& x, const VertexSet& y, const Rational& eps);
bool is_homogeneous(const Graph& g, const VertexSet& x, const VertexSet& y, const Rational& eps);

enum class Side { low, high };

struct SpecialWitness {
    VertexSet x_prime;
    VertexSet y_prime;
    Side side = Side::low;
};

/// eps-special witness. The per-element conditions only refer to X and Y, so
/// the maximal sets of qualifying elements witness whenever any sets do; the
/// low side is tried first.
std::optional<SpecialWitness> special_witness(const Graph& g, const VertexSet& x, const VertexSet& y,
                                              const Rational& eps);
bool is_special(const Graph& g, const VertexSet& x, const VertexSet& y, const Rational& eps);

/// Every a in X has |E(a,Y)| lopsided at eps, and every b in Y has |E(X,b)|
/// lopsided at eps.
bool is_good_pair(const Graph& g, const VertexSet& x, const VertexSet& y, const Rational& eps);

/// As is_good_pair, but only over some X' ⊆ X, Y' ⊆ Y with
/// |X'| > (1-largeness)|X| and |Y'| > (1-largeness)|Y|.
bool is_almost_good(const Graph& g, const VertexSet& x, const VertexSet& y, const Rational& eps,
                    const Rational& largeness);

/// All delta-good subsets Y of V with their threshold sets
/// Low(Y) = { a in V : |E(a,Y)| < delta|Y| }, enumerated once so that many X
/// can be tested for (eps, delta)-excellence against the same family.
class ExcellenceContext {
public:
    /// Exhaustive: every nonempty Y ⊆ V. Throws CapacityError for
    /// n > limits.exhaustive_max (and always above 30).
    ExcellenceContext(const Graph& g, const Rational& delta, const Limits& limits = {});
    /// Relative to a caller-supplied candidate family; non-good candidates
    /// are discarded.
    ExcellenceContext(const Graph& g, const Rational& delta, const std::vector<VertexSet>& candidates);

    bool exhaustive() const { return exhaustive_; }
    std::size_t good_family_size() const { return low_sets_.size(); }

    /// X is eps-good, and for every delta-good Y in the family,
    /// X0 = X ∩ Low(Y) has |X0| < eps|X| or |X0| > (1-eps)|X|.
    bool check(const VertexSet& x, const Rational& eps) const;

private:
    const Graph* graph_;
    Rational delta_;
    bool exhaustive_ = false;
    std::vector<VertexSet> low_sets_;
};

/// Exhaustive-mode (eps, delta)-excellence.
bool is_excellent(const Graph& g, const VertexSet& x, const Rational& eps, const Rational& delta,
                  const Limits& limits = {});

}  // namespace stabreg
