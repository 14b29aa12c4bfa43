#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "optop/topology.hpp"

namespace optop {

enum class SetClassId {
    Open,
    Closed,
    RegularOpen,
    RegularClosed,
    Preopen,
    Preclosed,
    Semiopen,
    Semiclosed,
    AlphaOpen,
    AlphaClosed,
    BetaOpen,
    BetaClosed,
};

inline constexpr std::array kAllSetClasses = {
    SetClassId::Open,      SetClassId::Closed,      SetClassId::RegularOpen,
    SetClassId::RegularClosed, SetClassId::Preopen, SetClassId::Preclosed,
    SetClassId::Semiopen,  SetClassId::Semiclosed,  SetClassId::AlphaOpen,
    SetClassId::AlphaClosed, SetClassId::BetaOpen,  SetClassId::BetaClosed,
};

/// lower_snake_case wire name, e.g. "regular_open".
std::string_view name_of(SetClassId c);
std::optional<SetClassId> set_class_from_name(std::string_view name);
/// Defining condition as a human-readable formula.
std::string_view formula_of(SetClassId c);

/// Literal evaluation of the class formula. *-closed classes test the
/// complement against the matching *-open formula; RegularClosed tests
/// S = Cl(Int(S)) directly.
bool is_in_class(const Topology& t, Subset s, SetClassId c);

/// Closure/interior flavours generated by the class families.
enum class ClosureKind { Ordinary, Pre, Semi, Alpha, Beta };

SetClassId open_class_of(ClosureKind k);
SetClassId closed_class_of(ClosureKind k);

/// Intersection of every k-closed superset of s, found by scanning all subsets.
Subset class_closure(const Topology& t, Subset s, ClosureKind k);
/// Union of every k-open subset of s.
Subset class_interior(const Topology& t, Subset s, ClosureKind k);

bool is_extremally_disconnected(const Topology& t);
bool is_urysohn(const Topology& t);
bool is_sigma_space(const Topology& t);
/// Always true on finite spaces: every cover is a finite family. The check
/// still walks the regular-open family and extracts an irredundant subcover
/// from the cover formed by all regular opens.
bool is_r_compact(const Topology& t);

} // namespace optop
