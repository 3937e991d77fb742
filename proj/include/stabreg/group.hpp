#pragma once

#include "stabreg/error_function.hpp"
#include "stabreg/graph.hpp"
#include "stabreg/limits.hpp"
#include "stabreg/partition.hpp"

#include <string>
#include <vector>

namespace stabreg {

using Element = std::size_t;

/// A finite group on elements 0..n-1 given by its Cayley table.
class FiniteGroup {
public:
    /// Validates closure, identity, inverses and associativity (exhaustive
    /// up to 128 elements, 20000 sampled triples above).
    static FiniteGroup from_table(std::vector<std::vector<Element>> table, std::string name = {});

    static FiniteGroup cyclic(std::size_t n);
    /// Symmetries of the n-gon, order 2n; r^i s^j is element i + n*j.
    static FiniteGroup dihedral(std::size_t n);
    /// Permutations of {0..n-1} in lexicographic order, n <= 5.
    static FiniteGroup symmetric(std::size_t n);
    /// (a, b) is element a * |h| + b.
    static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

    std::size_t order() const { return order_; }
    Element identity() const { return identity_; }
    Element multiply(Element a, Element b) const { return table_[a * order_ + b]; }
    Element inverse(Element a) const { return inverses_[a]; }
    const std::string& name() const { return name_; }
    std::vector<std::vector<Element>> table() const;

    VertexSet elements() const { return VertexSet::full(order_); }
    /// Smallest subgroup containing `generators`.
    VertexSet closure(const VertexSet& generators) const;
    bool is_subgroup(const VertexSet& s) const;
    bool is_normal(const VertexSet& subgroup) const;

private:
    FiniteGroup() = default;

    std::size_t order_ = 0;
    std::vector<Element> table_;
    Element identity_ = 0;
    std::vector<Element> inverses_;
    std::string name_;
};

struct Subgroup {
    VertexSet elements;
    std::size_t index = 0;
    bool normal = false;
};

/// R(x, y) iff x * y in A, rows and columns both indexed by G. No symmetry
/// or irreflexivity is imposed.
Relation translate_relation(const FiniteGroup& g, const VertexSet& a);

/// Every subgroup, by increasing index then lexicographic element list.
/// Throws CapacityError above limits.group_max.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Limits& limits = {});

/// Normal subgroups of index <= max_index in the same order.
std::vector<Subgroup> normal_subgroups_up_to_index(const FiniteGroup& g, std::size_t max_index,
                                                   const Limits& limits = {});

struct CosetEntry {
    Element representative = 0;  // least element of the coset
    VertexSet elements;
    std::size_t hits = 0;        // |A ∩ gH|
    Rational fraction;           // hits / |H|
    PairCheck verdict = PairCheck::fail;
};

struct CosetReport {
    Subgroup subgroup;
    Rational threshold;          // sigma(index)
    std::vector<CosetEntry> cosets;
    std::size_t failing = 0;
    Rational min_margin;         // min over cosets of max(sigma - f, f - (1 - sigma))
    Rational error;              // max over cosets of min(f, 1 - f)
    VertexSet exceptional;       // always empty: cosets cover G
    bool pass = false;
    bool certified = false;      // set by coset_regularity
};

/// Left cosets gH of a normal H scored at sigma(index).
CosetReport coset_report(const FiniteGroup& g, const VertexSet& a, const Subgroup& h, const ErrorFunction& sigma);

/// First normal subgroup (by increasing index) whose report passes; if none
/// of index <= max_index passes, the best candidate (fewest failing cosets,
/// then largest minimum margin) with certified = false.
CosetReport coset_regularity(const FiniteGroup& g, const VertexSet& a, const ErrorFunction& sigma,
                             std::size_t max_index, const Limits& limits = {});

/// The coset blocks of H as a partition of G (empty exceptional block).
Partition coset_partition(const FiniteGroup& g, const Subgroup& h);

}  // namespace stabreg
