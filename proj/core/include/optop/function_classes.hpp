#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "optop/operator_space.hpp"
#include "optop/set_classes.hpp"

namespace optop {

/// f : (X, tau, T) -> (Y, delta) given by the image of each domain point.
class FunctionInstance {
public:
    /// Throws InvalidSubset when the map is not total or leaves the codomain.
    FunctionInstance(std::shared_ptr<const OperatorSpace> domain,
                     std::shared_ptr<const Topology> codomain, std::vector<int> map);

    const OperatorSpace& domain() const { return *domain_; }
    const Topology& codomain() const { return *codomain_; }
    std::shared_ptr<const OperatorSpace> shared_domain() const { return domain_; }
    std::shared_ptr<const Topology> shared_codomain() const { return codomain_; }

    const std::vector<int>& map() const { return map_; }
    int image_of(int point) const { return map_.at(point); }
    void set_image(int point, int image);

    Subset preimage(Subset v) const;
    Subset image(Subset s) const;
    bool is_surjective() const;

private:
    void rebuild_fibers();

    std::shared_ptr<const OperatorSpace> domain_;
    std::shared_ptr<const Topology> codomain_;
    std::vector<int> map_;
    std::vector<Subset> fibers_;
};

enum class FunctionClassId {
    Continuous,
    PreCont,
    SemiCont,
    AlphaCont,
    BetaCont,
    ContraCont,
    ContraPre,
    ContraSemi,
    ContraAlpha,
    ContraBeta,
    AlmostContraCont,
    AlmostContraPre,
    AlmostContraSemi,
    AlmostContraAlpha,
    AlmostContraBeta,
    WeaklyContraCont,
    WeaklyContraPre,
    WeaklyContraBeta,
    TstarCont,
    AlmostTstarCont,
    ContraTstarCont,
    AlmostContraTstarCont,
    SlightlyContraTstarCont,
    WeaklyContraTstarCont,
    WeaklyAlmostContraTstarCont,
    AlmostGtsrCont,
    AtsrIrresolute,
};

inline constexpr std::array kAllFunctionClasses = {
    FunctionClassId::Continuous,
    FunctionClassId::PreCont,
    FunctionClassId::SemiCont,
    FunctionClassId::AlphaCont,
    FunctionClassId::BetaCont,
    FunctionClassId::ContraCont,
    FunctionClassId::ContraPre,
    FunctionClassId::ContraSemi,
    FunctionClassId::ContraAlpha,
    FunctionClassId::ContraBeta,
    FunctionClassId::AlmostContraCont,
    FunctionClassId::AlmostContraPre,
    FunctionClassId::AlmostContraSemi,
    FunctionClassId::AlmostContraAlpha,
    FunctionClassId::AlmostContraBeta,
    FunctionClassId::WeaklyContraCont,
    FunctionClassId::WeaklyContraPre,
    FunctionClassId::WeaklyContraBeta,
    FunctionClassId::TstarCont,
    FunctionClassId::AlmostTstarCont,
    FunctionClassId::ContraTstarCont,
    FunctionClassId::AlmostContraTstarCont,
    FunctionClassId::SlightlyContraTstarCont,
    FunctionClassId::WeaklyContraTstarCont,
    FunctionClassId::WeaklyAlmostContraTstarCont,
    FunctionClassId::AlmostGtsrCont,
    FunctionClassId::AtsrIrresolute,
};

/// lower_snake_case wire name, e.g. "weakly_almost_contra_tstar_cont".
std::string_view name_of(FunctionClassId c);
/// Accepts the wire name or the upper-case id spelling (case-insensitive).
std::optional<FunctionClassId> function_class_from_name(std::string_view name);
std::string_view formula_of(FunctionClassId c);

Subset preimage(const FunctionInstance& f, Subset v);

/// Decides c by quantifying over every qualifying subset of Y (and of X where
/// the definition needs it).
bool satisfies(const FunctionInstance& f, FunctionClassId c);

/// T*Cl(s) lies inside every regular open superset of s.
bool is_gtsr_closed(const OperatorSpace& os, Subset s);

/// f(A) is regular closed in Y for every gT*r-closed A of X.
bool images_of_gtsr_closed_sets_are_regular_closed(const FunctionInstance& f);

enum class GraphPropertyId { TstarRegular, ContraTstarRegular };

std::string_view name_of(GraphPropertyId p);

/// Every (x, y) off the graph is separated by a T*-closed U containing x and
/// a regular open (TstarRegular) or regular closed (ContraTstarRegular) V
/// containing y with f(U) and V disjoint.
bool graph_has(const FunctionInstance& f, GraphPropertyId p);

/// Always true for finite spaces. Extracts an irredundant finite subcover
/// from the cover by all T*-closed sets to make the claim concrete.
bool is_contra_tstar_compact(const OperatorSpace& os);

} // namespace optop
