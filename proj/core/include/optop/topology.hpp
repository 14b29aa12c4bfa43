#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "optop/errors.hpp"
#include "optop/subset.hpp"

namespace optop {

/// Raised by make_topology when the candidate family is not a topology.
class AxiomViolation : public Error {
public:
    enum class Kind { MissingEmpty, MissingFull, UnionEscape, IntersectionEscape };

    AxiomViolation(Kind kind, Subset first, Subset second, const std::string& what);

    Kind kind() const { return kind_; }
    /// For the escape kinds, the pair of opens whose union/intersection is not open.
    Subset first() const { return first_; }
    Subset second() const { return second_; }

private:
    Kind kind_;
    Subset first_;
    Subset second_;
};

/// A validated topology on a finite ground set. Immutable once built.
///
/// Interior and closure of every subset are tabulated at construction, so
/// lookups are O(1). Tables are computed from the definitions: interior is
/// the union of the opens inside s, closure the intersection of the closed
/// sets containing s.
class Topology {
public:
    const GroundSet& ground() const { return ground_; }
    int points() const { return ground_.size(); }
    Subset full() const { return ground_.full(); }
    Subset complement(Subset s) const { return ground_.complement(s); }

    /// Opens in ascending mask order.
    const std::vector<Subset>& opens() const { return opens_; }
    /// Complements of the opens, ascending.
    const std::vector<Subset>& closeds() const { return closeds_; }
    const std::vector<Subset>& clopens() const { return clopens_; }
    /// S = Int(Cl(S)), ascending.
    const std::vector<Subset>& regular_opens() const { return regular_opens_; }
    /// S = Cl(Int(S)), ascending.
    const std::vector<Subset>& regular_closeds() const { return regular_closeds_; }

    bool is_open(Subset s) const { return open_flags_[index(s)] != 0; }
    bool is_closed(Subset s) const { return is_open(complement(s)); }
    Subset interior(Subset s) const { return interior_[index(s)]; }
    Subset closure(Subset s) const { return closure_[index(s)]; }

    friend bool operator==(const Topology& a, const Topology& b)
    {
        return a.ground_ == b.ground_ && a.opens_ == b.opens_;
    }

private:
    friend Topology make_topology(GroundSet ground, const std::vector<Subset>& opens);
    Topology(GroundSet ground, std::vector<Subset> opens);

    std::size_t index(Subset s) const
    {
        ground_.require_valid(s);
        return s.bits();
    }

    GroundSet ground_;
    std::vector<Subset> opens_;
    std::vector<Subset> closeds_;
    std::vector<Subset> clopens_;
    std::vector<Subset> regular_opens_;
    std::vector<Subset> regular_closeds_;
    std::vector<char> open_flags_;
    std::vector<Subset> interior_;
    std::vector<Subset> closure_;
};

/// Validates the topology axioms and deduplicates the family.
/// Throws AxiomViolation or InvalidSubset.
Topology make_topology(GroundSet ground, const std::vector<Subset>& opens);

Topology discrete_topology(const GroundSet& ground);
Topology indiscrete_topology(const GroundSet& ground);

Subset interior(const Topology& t, Subset s);
Subset closure(const Topology& t, Subset s);
std::vector<Subset> clopen_sets(const Topology& t);

/// Calls visit for every topology on n labelled points (standard labels),
/// each exactly once, in a fixed order.
///
/// Topologies are built from their minimal neighbourhoods: a point-by-point
/// choice of U_x containing x, kept only while y in U_x implies U_y within
/// U_x. Opens are the unions of the chosen neighbourhoods. The order is
/// lexicographic in (U_0, ..., U_{n-1}).
///
/// When first_neighbourhood is set only topologies whose minimal open set
/// around point 0 equals it are produced; the union over all candidate
/// values partitions the full stream.
void for_each_topology(int n, const std::function<void(const Topology&)>& visit,
                       std::optional<Subset> first_neighbourhood = std::nullopt);

/// Materialised for_each_topology. Throws BoundsExceeded when n > kMaxEnumerationPoints.
std::vector<Topology> enumerate_topologies(int n);

/// Candidate values for first_neighbourhood, ascending.
std::vector<Subset> first_neighbourhood_candidates(int n);

} // namespace optop
