#pragma once

#include "stabreg/graph.hpp"
#include "stabreg/errors.hpp"
#include "stabreg/random.hpp"
#include "stabreg/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stabreg {

/// How vertices are grouped into neighborhood types.
///  - twin: u ~ v iff adj(u) \ {u,v} = adj(v) \ {u,v}. The self cell is
///    excluded symmetrically, so true twins (e.g. the vertices of a clique)
///    share a class.
///  - exact: u ~ v iff adj(u) = adj(v), i.e. tp(u) = tp(v) as sets of
///    parameters. Every class is then an independent set on which each
///    parameter answers uniformly.
enum class TypeRule { twin, exact };

const char* to_string(TypeRule rule);
TypeRule parse_type_rule(const std::string& text);

struct TypeClass {
    /// Answers of the least member: b is in the signature iff E(rep, b).
    VertexSet signature;
    VertexSet members;

    Vertex representative() const { return members.first(); }
};

struct TypeSpectrum {
    TypeRule rule = TypeRule::twin;
    std::vector<TypeClass> classes;  // decreasing mass, ties by least member
    std::vector<Rational> masses;    // |members| / n, summing to 1
};

TypeSpectrum type_spectrum(const Graph& g, TypeRule rule = TypeRule::twin);

/// Witnesses a_1..a_{2k} whose k-of-2k majority vote defines a type:
/// phi(x, b) is in the type iff at least k of the a_t are related to b.
/// Equivalently the disjunction over k-subsets X of [2k] of the
/// conjunction of phi(a_t, y) for t in X.
struct DefinabilityWitnesses {
    std::size_t k = 0;
    std::vector<std::size_t> witnesses;

    /// Number of witnesses t with R(a_t, b).
    std::size_t votes(const Relation& r, std::size_t b) const;
    bool defines(const Relation& r, std::size_t b) const { return votes(r, b) >= k; }
    /// Rendered threshold formula, e.g. "at least 2 of {E(3,y), E(0,y), ...}".
    std::string formula() const;
};

/// Bookkeeping of one round of the witness construction.
struct DefinabilityStage {
    std::size_t chosen = 0;        // index of a_{n+1} chosen after this stage
    std::size_t i_sets = 0;        // |I_n|
    std::size_t j_sets = 0;        // |J_n|
    std::size_t parameters = 0;    // |D| after this stage
    std::size_t candidates = 0;    // vertices agreeing with the type on D
};

struct DefinabilityRun {
    DefinabilityWitnesses result;
    std::vector<DefinabilityStage> stages;
};

/// Raised when the majority vote disagrees with the type at some parameter.
/// By the contrapositive of the construction's correctness argument this
/// means the relation is not k-stable; `ladder` holds the cross-check.
class DefinabilityDefect : public Error {
public:
    DefinabilityDefect(std::size_t parameter, std::size_t votes, std::size_t k, bool expected,
                       std::optional<std::vector<std::size_t>> ladder_vs,
                       std::optional<std::vector<std::size_t>> ladder_ws);

    std::size_t parameter;
    std::size_t vote_count;
    std::size_t k;
    bool expected;
    std::optional<std::vector<std::size_t>> ladder_vs;
    std::optional<std::vector<std::size_t>> ladder_ws;
};

/// Runs the inductive witness construction for the type whose answers are
/// `answers` (a subset of the column side), with the relation read as
/// phi(x, y) = R(x, y). a_1 is drawn from all rows; a_{n+1} is drawn
/// uniformly from all rows agreeing with the type on the accumulated
/// parameter set D. For each stage n the sets I_n, J_n of subsets of [n] get
/// one fixed witness each (the least qualifying parameter).
/// Throws PreconditionError if no row agrees with the type on D (the type is
/// not realized) and DefinabilityDefect if the final vote is wrong.
DefinabilityRun define_type(const Relation& r, std::size_t k, const VertexSet& answers, RandomStream rng);

/// Graph form: defines the type of `p`'s representative.
DefinabilityWitnesses definability_witnesses(const Graph& g, std::size_t k, const TypeClass& p,
                                             std::uint64_t seed);

/// Bipartite instance split: rows are L (relabelled increasingly), columns R.
/// Throws InputError if L, R do not partition V or an edge lies inside a side.
Relation bipartite_relation(const Graph& g, const VertexSet& left, const VertexSet& right);

struct HarringtonResult {
    bool agree = false;
    bool psi_in_q = false;    // definition of p holds at q
    bool theta_in_p = false;  // definition of q holds at p
    DefinabilityWitnesses psi;    // witnesses in L, indices in g
    DefinabilityWitnesses theta;  // witnesses in R, indices in g
    std::string transcript;
};

/// p is a type of L-vertices over parameters R (given by a realizing
/// class), q a type of R-vertices over parameters L. Builds psi defining p
/// and theta defining q, then compares psi in q against theta in p.
HarringtonResult harrington_check(const Graph& g, const VertexSet& left, const VertexSet& right, std::size_t k,
                                  const TypeClass& p, const TypeClass& q, std::uint64_t seed);

/// Classes of `side` vertices with identical neighborhoods into `other`.
std::vector<TypeClass> side_type_classes(const Graph& g, const VertexSet& side, const VertexSet& other);

}  // namespace stabreg
