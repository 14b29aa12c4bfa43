#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "optop/topology.hpp"

namespace optop {

enum class OperatorKind { Identity, IntCl, ClInt, Cl, IntClInt, ClIntCl, Custom };

inline constexpr std::array kBuiltinOperatorKinds = {
    OperatorKind::Identity, OperatorKind::IntCl,    OperatorKind::ClInt,
    OperatorKind::Cl,       OperatorKind::IntClInt, OperatorKind::ClIntCl,
};

/// A map P(X) -> P(X) parameterised by the topology it is bound to.
class Operator {
public:
    using Map = std::function<Subset(const Topology&, Subset)>;

    Operator() : Operator(OperatorKind::Identity) {}
    explicit Operator(OperatorKind builtin);
    /// User-defined operator; the name is reported as "dsl:<name>".
    static Operator custom(std::string name, Map map);

    OperatorKind kind() const { return kind_; }
    /// Wire name: identity, int_cl, cl_int, cl, int_cl_int, cl_int_cl or dsl:<name>.
    const std::string& name() const { return name_; }

    Subset apply(const Topology& t, Subset s) const;

    friend bool operator==(const Operator& a, const Operator& b) { return a.name_ == b.name_; }

private:
    OperatorKind kind_;
    std::string name_;
    std::shared_ptr<const Map> map_;
};

std::optional<Operator> builtin_operator(std::string_view name);

/// Raised by bind_operator when some open U is not contained in T(U).
class NotAssociated : public Error {
public:
    NotAssociated(Subset witness, const std::string& what) : Error(what), witness_(witness) {}
    Subset witness() const { return witness_; }

private:
    Subset witness_;
};

/// (X, tau, T) with T associated with tau. Immutable; T, T*-openness and
/// T*-closure are tabulated for every subset when the space is bound.
class OperatorSpace {
public:
    const Topology& topology() const { return *topology_; }
    std::shared_ptr<const Topology> shared_topology() const { return topology_; }
    const Operator& op() const { return op_; }
    int points() const { return topology_->points(); }

    Subset apply(Subset s) const { return image_[index(s)]; }
    bool is_tstar_open(Subset s) const { return tstar_open_[index(s)] != 0; }
    bool is_tstar_closed(Subset s) const { return is_tstar_open(topology_->complement(s)); }
    Subset tstar_closure(Subset s) const { return tstar_closure_[index(s)]; }

private:
    friend OperatorSpace bind_operator(std::shared_ptr<const Topology> t, Operator op);
    OperatorSpace(std::shared_ptr<const Topology> t, Operator op);

    std::size_t index(Subset s) const
    {
        topology_->ground().require_valid(s);
        return s.bits();
    }

    std::shared_ptr<const Topology> topology_;
    Operator op_;
    std::vector<Subset> image_;
    std::vector<char> tstar_open_;
    std::vector<Subset> tstar_closure_;
};

/// Throws NotAssociated with the lowest-mask offending open set.
OperatorSpace bind_operator(std::shared_ptr<const Topology> t, Operator op);
OperatorSpace bind_operator(const Topology& t, Operator op);

Subset apply_operator(const OperatorSpace& os, Subset s);
/// s is a subset of T(s).
bool is_tstar_open(const OperatorSpace& os, Subset s);
bool is_tstar_closed(const OperatorSpace& os, Subset s);
/// Intersection of every T*-closed superset of s. Need not be T*-closed
/// itself when T is not monotone.
Subset tstar_closure(const OperatorSpace& os, Subset s);

} // namespace optop
