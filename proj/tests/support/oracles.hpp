#pragma once

// Brute-force reference model. Everything here works on raw open families
// and recomputes every notion from its definition, sharing no code with the
// library beyond the enum ids used to name things.

#include <cstdint>
#include <functional>
#include <vector>

#include "optop/function_classes.hpp"

namespace oracle {

using Mask = std::uint32_t;

struct Space {
    int n = 0;
    std::vector<bool> open;  // indexed by mask

    Mask full() const { return (Mask{1} << n) - 1; }
    Mask comp(Mask s) const { return full() & ~s; }
    bool is_open(Mask s) const { return open[s]; }
    bool is_closed(Mask s) const { return open[comp(s)]; }
};

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline Space from(const optop::Topology& t)
{
    Space sp;
    sp.n = t.points();
    sp.open.assign(std::size_t{1} << sp.n, false);
    for (auto s : t.opens())
        sp.open[s.bits()] = true;
    return sp;
}

/// Every family of subsets of an n-point set satisfying the axioms, by a scan
/// over all 2^(2^n) families.
inline std::vector<Space> all_topologies(int n)
{
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<Space> out;
    for (std::uint64_t family = 0; family < (std::uint64_t{1} << subsets); ++family) {
        auto in = [&](Mask s) { return ((family >> s) & 1) != 0; };
        const Mask full = static_cast<Mask>(subsets - 1);
        if (!in(0) || !in(full))
            continue;
        bool ok = true;
        for (Mask a = 0; a < subsets && ok; ++a)
            for (Mask b = 0; b < subsets && ok; ++b)
                if (in(a) && in(b) && (!in(a | b) || !in(a & b)))
                    ok = false;
        if (!ok)
            continue;
        Space sp;
        sp.n = n;
        sp.open.resize(subsets);
        for (Mask s = 0; s < subsets; ++s)
            sp.open[s] = in(s);
        out.push_back(std::move(sp));
    }
    return out;
}

inline Mask interior(const Space& sp, Mask s)
{
    Mask out = 0;
    for (Mask u = 0; u <= sp.full(); ++u)
        if (sp.is_open(u) && subset(u, s))
            out |= u;
    return out;
}

inline Mask closure(const Space& sp, Mask s)
{
    Mask out = sp.full();
    for (Mask c = 0; c <= sp.full(); ++c)
        if (sp.is_closed(c) && subset(s, c))
            out &= c;
    return out;
}

/// Membership in each generalized open class, from its defining inclusion.
inline bool in_open_class(const Space& sp, Mask s, optop::SetClassId c)
{
    using optop::SetClassId;
    auto I = [&](Mask m) { return interior(sp, m); };
    auto C = [&](Mask m) { return closure(sp, m); };
    switch (c) {
    case SetClassId::Open: return sp.is_open(s);
    case SetClassId::RegularOpen: return s == I(C(s));
    case SetClassId::Preopen: return subset(s, I(C(s)));
    case SetClassId::Semiopen: return subset(s, C(I(s)));
    case SetClassId::AlphaOpen: return subset(s, I(C(I(s))));
    case SetClassId::BetaOpen: return subset(s, C(I(C(s))));
    default: break;
    }
    throw std::logic_error("not an open class");
}

inline bool in_class(const Space& sp, Mask s, optop::SetClassId c)
{
    using optop::SetClassId;
    switch (c) {
    case SetClassId::Closed: return in_open_class(sp, sp.comp(s), SetClassId::Open);
    case SetClassId::RegularClosed: return s == closure(sp, interior(sp, s));
    case SetClassId::Preclosed: return in_open_class(sp, sp.comp(s), SetClassId::Preopen);
    case SetClassId::Semiclosed: return in_open_class(sp, sp.comp(s), SetClassId::Semiopen);
    case SetClassId::AlphaClosed: return in_open_class(sp, sp.comp(s), SetClassId::AlphaOpen);
    case SetClassId::BetaClosed: return in_open_class(sp, sp.comp(s), SetClassId::BetaOpen);
    default: return in_open_class(sp, s, c);
    }
}

/// Intersection of the supersets of s lying in the given closed class.
inline Mask class_closure(const Space& sp, Mask s, optop::SetClassId closed_class)
{
    Mask out = sp.full();
    for (Mask c = 0; c <= sp.full(); ++c)
        if (subset(s, c) && in_class(sp, c, closed_class))
            out &= c;
    return out;
}

inline Mask apply(optop::OperatorKind k, const Space& sp, Mask s)
{
    using optop::OperatorKind;
    auto I = [&](Mask m) { return interior(sp, m); };
    auto C = [&](Mask m) { return closure(sp, m); };
    switch (k) {
    case OperatorKind::Identity: return s;
    case OperatorKind::IntCl: return I(C(s));
    case OperatorKind::ClInt: return C(I(s));
    case OperatorKind::Cl: return C(s);
    case OperatorKind::IntClInt: return I(C(I(s)));
    case OperatorKind::ClIntCl: return C(I(C(s)));
    case OperatorKind::Custom: break;
    }
    throw std::logic_error("oracle has no custom operators");
}

struct OpSpace {
    Space sp;
    optop::OperatorKind op;

    bool tstar_open(Mask s) const { return subset(s, apply(op, sp, s)); }
    bool tstar_closed(Mask s) const { return tstar_open(sp.comp(s)); }
    Mask tcl(Mask s) const
    {
        Mask out = sp.full();
        for (Mask c = 0; c <= sp.full(); ++c)
            if (subset(s, c) && tstar_closed(c))
                out &= c;
        return out;
    }
    bool gtsr_closed(Mask s) const
    {
        for (Mask u = 0; u <= sp.full(); ++u)
            if (in_class(sp, u, optop::SetClassId::RegularOpen) && subset(s, u) && !subset(tcl(s), u))
                return false;
        return true;
    }
};

struct Instance {
    OpSpace x;
    Space y;
    std::vector<int> map;

    Mask pre(Mask v) const
    {
        Mask out = 0;
        for (int i = 0; i < x.sp.n; ++i)
            if ((v >> map[i]) & 1)
                out |= Mask{1} << i;
        return out;
    }
    Mask img(Mask s) const
    {
        Mask out = 0;
        for (int i = 0; i < x.sp.n; ++i)
            if ((s >> i) & 1)
                out |= Mask{1} << map[i];
        return out;
    }
};

/// Every subset of Y (or X) meeting a predicate.
inline bool all_y(const Instance& f, const std::function<bool(Mask)>& qual, const std::function<bool(Mask)>& body)
{
    for (Mask v = 0; v <= f.y.full(); ++v)
        if (qual(v) && !body(v))
            return false;
    return true;
}

inline bool satisfies(const Instance& f, optop::FunctionClassId c)
{
    using optop::FunctionClassId;
    using optop::SetClassId;
    const Space& x = f.x.sp;
    const Space& y = f.y;
    auto open_y = [&](Mask v) { return y.is_open(v); };
    auto closed_y = [&](Mask v) { return y.is_closed(v); };
    auto regopen_y = [&](Mask v) { return in_class(y, v, SetClassId::RegularOpen); };
    auto regclosed_y = [&](Mask v) { return in_class(y, v, SetClassId::RegularClosed); };
    auto pre_in = [&](auto qual, SetClassId k) {
        return all_y(f, qual, [&](Mask v) { return in_class(x, f.pre(v), k); });
    };
    auto pre_tstar = [&](auto qual, bool closed) {
        return all_y(f, qual, [&](Mask v) {
            return closed ? f.x.tstar_closed(f.pre(v)) : f.x.tstar_open(f.pre(v));
        });
    };
    auto nested = [&](auto qs, auto qv, const std::function<Mask(Mask)>& cl) {
        return all_y(f, qs, [&](Mask s) {
            return all_y(f, qv, [&](Mask v) { return !subset(s, v) || subset(cl(f.pre(s)), f.pre(v)); });
        });
    };

    switch (c) {
    case FunctionClassId::Continuous: return pre_in(open_y, SetClassId::Open);
    case FunctionClassId::PreCont: return pre_in(open_y, SetClassId::Preopen);
    case FunctionClassId::SemiCont: return pre_in(open_y, SetClassId::Semiopen);
    case FunctionClassId::AlphaCont: return pre_in(open_y, SetClassId::AlphaOpen);
    case FunctionClassId::BetaCont: return pre_in(open_y, SetClassId::BetaOpen);
    case FunctionClassId::ContraCont: return pre_in(open_y, SetClassId::Closed);
    case FunctionClassId::ContraPre: return pre_in(open_y, SetClassId::Preclosed);
    case FunctionClassId::ContraSemi: return pre_in(open_y, SetClassId::Semiclosed);
    case FunctionClassId::ContraAlpha: return pre_in(open_y, SetClassId::AlphaClosed);
    case FunctionClassId::ContraBeta: return pre_in(open_y, SetClassId::BetaClosed);
    case FunctionClassId::AlmostContraCont: return pre_in(regopen_y, SetClassId::Closed);
    case FunctionClassId::AlmostContraPre: return pre_in(regopen_y, SetClassId::Preclosed);
    case FunctionClassId::AlmostContraSemi: return pre_in(regopen_y, SetClassId::Semiclosed);
    case FunctionClassId::AlmostContraAlpha: return pre_in(regopen_y, SetClassId::AlphaClosed);
    case FunctionClassId::AlmostContraBeta: return pre_in(regopen_y, SetClassId::BetaClosed);
    case FunctionClassId::WeaklyContraCont:
        return nested(closed_y, open_y, [&](Mask a) { return closure(x, a); });
    case FunctionClassId::WeaklyContraPre:
        return nested(closed_y, open_y, [&](Mask a) { return class_closure(x, a, SetClassId::Preclosed); });
    case FunctionClassId::WeaklyContraBeta:
        return nested(closed_y, open_y, [&](Mask a) { return class_closure(x, a, SetClassId::BetaClosed); });
    case FunctionClassId::TstarCont: return pre_tstar(open_y, false);
    case FunctionClassId::AlmostTstarCont: return pre_tstar(regopen_y, false);
    case FunctionClassId::ContraTstarCont: return pre_tstar(open_y, true);
    case FunctionClassId::AlmostContraTstarCont: return pre_tstar(regopen_y, true);
    case FunctionClassId::SlightlyContraTstarCont:
        return pre_tstar([&](Mask v) { return y.is_open(v) && y.is_closed(v); }, true);
    case FunctionClassId::WeaklyContraTstarCont:
        return nested(closed_y, open_y, [&](Mask a) { return f.x.tcl(a); });
    case FunctionClassId::WeaklyAlmostContraTstarCont:
        return nested(regclosed_y, regopen_y, [&](Mask a) { return f.x.tcl(a); });
    case FunctionClassId::AlmostGtsrCont:
        return all_y(f, regclosed_y, [&](Mask s) { return f.x.gtsr_closed(f.pre(s)); });
    case FunctionClassId::AtsrIrresolute:
        return all_y(f, regopen_y, [&](Mask v) {
            for (Mask s = 0; s <= x.full(); ++s)
                if (f.x.gtsr_closed(s) && subset(s, f.pre(v)) && !subset(f.x.tcl(s), f.pre(v)))
                    return false;
            return true;
        });
    }
    throw std::logic_error("unknown class");
}

/// regular_open selects the T*-regular variant, otherwise contra-T*-regular.
inline bool graph_property(const Instance& f, bool regular_open)
{
    const auto kind = regular_open ? optop::SetClassId::RegularOpen : optop::SetClassId::RegularClosed;
    for (int x = 0; x < f.x.sp.n; ++x) {
        for (int yp = 0; yp < f.y.n; ++yp) {
            if (f.map[x] == yp)
                continue;
            bool separated = false;
            for (Mask u = 0; u <= f.x.sp.full() && !separated; ++u) {
                if (!((u >> x) & 1) || !f.x.tstar_closed(u))
                    continue;
                for (Mask v = 0; v <= f.y.full() && !separated; ++v)
                    if (((v >> yp) & 1) && in_class(f.y, v, kind) && (f.img(u) & v) == 0)
                        separated = true;
            }
            if (!separated)
                return false;
        }
    }
    return true;
}

inline bool extremally_disconnected(const Space& sp)
{
    for (Mask u = 0; u <= sp.full(); ++u)
        if (sp.is_open(u) && !sp.is_open(closure(sp, u)))
            return false;
    return true;
}

inline bool urysohn(const Space& sp)
{
    for (int a = 0; a < sp.n; ++a)
        for (int b = a + 1; b < sp.n; ++b) {
            bool found = false;
            for (Mask u = 0; u <= sp.full() && !found; ++u)
                for (Mask v = 0; v <= sp.full() && !found; ++v)
                    if (sp.is_open(u) && sp.is_open(v) && ((u >> a) & 1) && ((v >> b) & 1) &&
                        (closure(sp, u) & closure(sp, v)) == 0)
                        found = true;
            if (!found)
                return false;
        }
    return true;
}

inline bool sigma_space(const Space& sp)
{
    for (Mask u = 0; u <= sp.full(); ++u) {
        if (!sp.is_open(u))
            continue;
        Mask cover = 0;
        for (Mask r = 0; r <= sp.full(); ++r)
            if (subset(r, u) && in_class(sp, r, optop::SetClassId::RegularClosed))
                cover |= r;
        if (cover != u)
            return false;
    }
    return true;
}

} // namespace oracle
