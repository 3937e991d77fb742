#pragma once

#include "stabreg/error_function.hpp"
#include "stabreg/graph.hpp"
#include "stabreg/limits.hpp"
#include "stabreg/rational.hpp"
#include "stabreg/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stabreg {

/// The parameters a partition was built with, echoed into its JSON form.
struct PartitionParams {
    std::string construction;             // type_mass | exact | greedy | refine | input
    std::optional<Rational> epsilon;
    std::optional<std::string> sigma;
    std::optional<Rational> goodness;     // sigma(m) the parts were certified at
    std::optional<Rational> tau;          // refine: tau(m) required of the base
    std::optional<std::size_t> base_parts;  // refine: m
    std::optional<std::size_t> chunk_size;  // refine: ceil(eps |V| / 2m)
    bool sigma_running_min = false;       // refine replaced sigma by its running minimum
};

/// V = exceptional ∪ parts[0] ∪ ... ∪ parts[n-1], blocks pairwise disjoint,
/// parts nonempty. The exceptional block may be empty.
struct Partition {
    VertexSet exceptional;
    std::vector<VertexSet> parts;
    PartitionParams params;
    bool certified = true;

    std::size_t universe() const { return exceptional.universe(); }
};

/// Throws InputError unless P is a partition of V(g) as described above.
void validate_partition(const Graph& g, const Partition& p);

/// Classes of the type spectrum by decreasing mass; the shortest prefix
/// with total mass > 1 - eps becomes X_1..X_m and the rest is pooled into
/// X_0, so mass(X_0) < eps. Under TypeRule::exact every X_i answers each
/// parameter uniformly and is gamma-good for every gamma > 0; under
/// TypeRule::twin only for gamma > 2/|X_i|.
Partition type_mass_partition(const Graph& g, const Rational& eps, TypeRule rule = TypeRule::exact);

enum class SearchMode { exact, greedy };

SearchMode parse_search_mode(const std::string& text);

/// Looks for X_0..X_m with mass(X_0) < eps and every X_i (i >= 1)
/// sigma(m)-good.
///
/// exact: enumerates labelings of vertices by {X_0, X_1, ...} in
/// restricted-growth form for m = 1, 2, ...; within each m the labelings are
/// visited in lexicographic order of the label vector (label 0 = X_0). The
/// first success therefore has minimal m. Needs n <= limits.exact_partition_max.
///
/// greedy: starts from type_mass_partition and merges pairs of parts while
/// every part stays sigma(m')-good at the reduced count, preferring the
/// merge with the largest minimum goodness slack (ties: smallest indices).
/// The result is re-verified; `certified` is false if verification fails.
Partition good_partition_search(const Graph& g, const Rational& eps, const ErrorFunction& sigma, SearchMode mode,
                                const Limits& limits = {});

/// Cuts each base part X_i into chunks of size ceil(eps|V| / 2m), in
/// increasing vertex order, pooling remainders and X_0 into Y_0.
/// Preconditions (PreconditionError naming the culprit otherwise): base has
/// m >= 1 parts, |X_0| < (eps/2)|V|, and every X_i is tau(m)-good. A sigma
/// that is not non-increasing up to floor(2m^2/eps) is replaced by its
/// running minimum.
Partition equipartition_refine(const Graph& g, const Partition& base, const Rational& eps,
                               const ErrorFunction& sigma);

enum class PairCheck { low, high, fail };

const char* to_string(PairCheck verdict);

struct RegularityReport {
    std::size_t n = 0;
    bool size_check = true;
    Rational exceptional_fraction;
    bool exceptional_check = true;
    Rational threshold;  // sigma(n)
    std::vector<std::vector<PairCheck>> pair_matrix;
    std::vector<std::vector<Density>> densities;
    bool diagonal_pass = true;
    bool off_diagonal_pass = true;
    bool pass = false;
};

/// Checks |Y_0| <= eps|V|, |Y_i| = |Y_j|, and that every ordered pair
/// (Y_i, Y_j), i = j included, has density < sigma(n) or > 1 - sigma(n).
RegularityReport verify_regularity(const Graph& g, const Partition& p, const Rational& eps,
                                   const ErrorFunction& sigma);

}  // namespace stabreg
