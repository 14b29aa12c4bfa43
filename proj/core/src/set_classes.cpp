#include "optop/set_classes.hpp"

#include <stdexcept>

namespace optop {

namespace {

struct SetClassInfo {
    SetClassId id;
    std::string_view name;
    std::string_view formula;
};

constexpr std::array<SetClassInfo, 12> kSetClassTable{{
    {SetClassId::Open, "open", "S = Int(S)"},
    {SetClassId::Closed, "closed", "S = Cl(S)"},
    {SetClassId::RegularOpen, "regular_open", "S = Int(Cl(S))"},
    {SetClassId::RegularClosed, "regular_closed", "S = Cl(Int(S))"},
    {SetClassId::Preopen, "preopen", "S <= Int(Cl(S))"},
    {SetClassId::Preclosed, "preclosed", "~S is preopen"},
    {SetClassId::Semiopen, "semiopen", "S <= Cl(Int(S))"},
    {SetClassId::Semiclosed, "semiclosed", "~S is semiopen"},
    {SetClassId::AlphaOpen, "alpha_open", "S <= Int(Cl(Int(S)))"},
    {SetClassId::AlphaClosed, "alpha_closed", "~S is alpha_open"},
    {SetClassId::BetaOpen, "beta_open", "S <= Cl(Int(Cl(S)))"},
    {SetClassId::BetaClosed, "beta_closed", "~S is beta_open"},
}};

const SetClassInfo& info(SetClassId c)
{
    for (const auto& i : kSetClassTable)
        if (i.id == c)
            return i;
    throw std::logic_error("unknown SetClassId");
}

bool open_formula(const Topology& t, Subset s, SetClassId open_kind)
{
    switch (open_kind) {
    case SetClassId::Open:
        return s == t.interior(s);
    case SetClassId::RegularOpen:
        return s == t.interior(t.closure(s));
    case SetClassId::Preopen:
        return s.subset_of(t.interior(t.closure(s)));
    case SetClassId::Semiopen:
        return s.subset_of(t.closure(t.interior(s)));
    case SetClassId::AlphaOpen:
        return s.subset_of(t.interior(t.closure(t.interior(s))));
    case SetClassId::BetaOpen:
        return s.subset_of(t.closure(t.interior(t.closure(s))));
    default:
        throw std::logic_error("not an open-type class");
    }
}

} // namespace

std::string_view name_of(SetClassId c) { return info(c).name; }

std::string_view formula_of(SetClassId c) { return info(c).formula; }

std::optional<SetClassId> set_class_from_name(std::string_view name)
{
    for (const auto& i : kSetClassTable)
        if (i.name == name)
            return i.id;
    return std::nullopt;
}

bool is_in_class(const Topology& t, Subset s, SetClassId c)
{
    t.ground().require_valid(s);
    switch (c) {
    case SetClassId::Open:
    case SetClassId::RegularOpen:
    case SetClassId::Preopen:
    case SetClassId::Semiopen:
    case SetClassId::AlphaOpen:
    case SetClassId::BetaOpen:
        return open_formula(t, s, c);
    case SetClassId::Closed:
        return open_formula(t, t.complement(s), SetClassId::Open);
    case SetClassId::RegularClosed:
        return s == t.closure(t.interior(s));
    case SetClassId::Preclosed:
        return open_formula(t, t.complement(s), SetClassId::Preopen);
    case SetClassId::Semiclosed:
        return open_formula(t, t.complement(s), SetClassId::Semiopen);
    case SetClassId::AlphaClosed:
        return open_formula(t, t.complement(s), SetClassId::AlphaOpen);
    case SetClassId::BetaClosed:
        return open_formula(t, t.complement(s), SetClassId::BetaOpen);
    }
    return false;
}

SetClassId open_class_of(ClosureKind k)
{
    switch (k) {
    case ClosureKind::Ordinary: return SetClassId::Open;
    case ClosureKind::Pre: return SetClassId::Preopen;
    case ClosureKind::Semi: return SetClassId::Semiopen;
    case ClosureKind::Alpha: return SetClassId::AlphaOpen;
    case ClosureKind::Beta: return SetClassId::BetaOpen;
    }
    throw std::logic_error("unknown ClosureKind");
}

SetClassId closed_class_of(ClosureKind k)
{
    switch (k) {
    case ClosureKind::Ordinary: return SetClassId::Closed;
    case ClosureKind::Pre: return SetClassId::Preclosed;
    case ClosureKind::Semi: return SetClassId::Semiclosed;
    case ClosureKind::Alpha: return SetClassId::AlphaClosed;
    case ClosureKind::Beta: return SetClassId::BetaClosed;
    }
    throw std::logic_error("unknown ClosureKind");
}

Subset class_closure(const Topology& t, Subset s, ClosureKind k)
{
    t.ground().require_valid(s);
    const SetClassId closed = closed_class_of(k);
    Subset result = t.full();
    for (Mask m = 0; m < subset_count(t.points()); ++m) {
        const Subset c{m};
        if (s.subset_of(c) && is_in_class(t, c, closed))
            result &= c;
    }
    return result;
}

Subset class_interior(const Topology& t, Subset s, ClosureKind k)
{
    t.ground().require_valid(s);
    const SetClassId open = open_class_of(k);
    Subset result;
    for (Mask m = 0; m < subset_count(t.points()); ++m) {
        const Subset u{m};
        if (u.subset_of(s) && is_in_class(t, u, open))
            result |= u;
    }
    return result;
}

bool is_extremally_disconnected(const Topology& t)
{
    for (Subset u : t.opens())
        if (!t.is_open(t.closure(u)))
            return false;
    return true;
}

bool is_urysohn(const Topology& t)
{
    const int n = t.points();
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            bool separated = false;
            for (Subset u : t.opens()) {
                if (!u.contains(x))
                    continue;
                for (Subset v : t.opens()) {
                    if (v.contains(y) && !t.closure(u).intersects(t.closure(v))) {
                        separated = true;
                        break;
                    }
                }
                if (separated)
                    break;
            }
            if (!separated)
                return false;
        }
    }
    return true;
}

bool is_sigma_space(const Topology& t)
{
    for (Subset u : t.opens()) {
        Subset covered;
        for (Mask m = 0; m < subset_count(t.points()); ++m) {
            const Subset r{m};
            if (r.subset_of(u) && is_in_class(t, r, SetClassId::RegularClosed))
                covered |= r;
        }
        if (covered != u)
            return false;
    }
    return true;
}

bool is_r_compact(const Topology& t)
{
    std::vector<Subset> cover;
    for (Mask m = 0; m < subset_count(t.points()); ++m)
        if (is_in_class(t, Subset{m}, SetClassId::RegularOpen))
            cover.emplace_back(m);
    // Drop members whose points are covered by the rest; what remains is
    // a finite subcover of the largest regular-open cover.
    std::vector<Subset> subcover = cover;
    for (std::size_t i = subcover.size(); i-- > 0;) {
        Subset rest;
        for (std::size_t j = 0; j < subcover.size(); ++j)
            if (j != i)
                rest |= subcover[j];
        if (rest == t.full())
            subcover.erase(subcover.begin() + static_cast<std::ptrdiff_t>(i));
    }
    Subset covered;
    for (Subset u : subcover)
        covered |= u;
    return covered == t.full();
}

} // namespace optop
