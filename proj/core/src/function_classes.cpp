#include "optop/function_classes.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace optop {

FunctionInstance::FunctionInstance(std::shared_ptr<const OperatorSpace> domain,
                                   std::shared_ptr<const Topology> codomain, std::vector<int> map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map))
{
    if (static_cast<int>(map_.size()) != domain_->points())
        throw InvalidSubset("map has " + std::to_string(map_.size()) + " entries for a " +
                            std::to_string(domain_->points()) + "-point domain");
    for (int y : map_)
        if (y < 0 || y >= codomain_->points())
            throw InvalidSubset("map image " + std::to_string(y) + " outside the codomain");
    rebuild_fibers();
}

void FunctionInstance::set_image(int point, int image)
{
    if (point < 0 || point >= domain_->points())
        throw InvalidSubset("domain point " + std::to_string(point) + " out of range");
    if (image < 0 || image >= codomain_->points())
        throw InvalidSubset("map image " + std::to_string(image) + " outside the codomain");
    fibers_[map_[point]] = fibers_[map_[point]] - Subset::singleton(point);
    map_[point] = image;
    fibers_[image] = fibers_[image].with(point);
}

void FunctionInstance::rebuild_fibers()
{
    fibers_.assign(codomain_->points(), Subset{});
    for (int x = 0; x < static_cast<int>(map_.size()); ++x)
        fibers_[map_[x]] = fibers_[map_[x]].with(x);
}

Subset FunctionInstance::preimage(Subset v) const
{
    codomain_->ground().require_valid(v);
    Subset out;
    for (int y = 0; y < codomain_->points(); ++y)
        if (v.contains(y))
            out |= fibers_[y];
    return out;
}

Subset FunctionInstance::image(Subset s) const
{
    domain_->topology().ground().require_valid(s);
    Subset out;
    for (int x = 0; x < static_cast<int>(map_.size()); ++x)
        if (s.contains(x))
            out = out.with(map_[x]);
    return out;
}

bool FunctionInstance::is_surjective() const
{
    return std::all_of(fibers_.begin(), fibers_.end(), [](Subset s) { return !s.is_empty(); });
}

namespace {

struct FunctionClassInfo {
    FunctionClassId id;
    std::string_view name;
    std::string_view formula;
};

constexpr std::array<FunctionClassInfo, 27> kFunctionClassTable{{
    {FunctionClassId::Continuous, "continuous", "f^-1(V) open for every open V"},
    {FunctionClassId::PreCont, "pre_cont", "f^-1(V) preopen for every open V"},
    {FunctionClassId::SemiCont, "semi_cont", "f^-1(V) semiopen for every open V"},
    {FunctionClassId::AlphaCont, "alpha_cont", "f^-1(V) alpha-open for every open V"},
    {FunctionClassId::BetaCont, "beta_cont", "f^-1(V) beta-open for every open V"},
    {FunctionClassId::ContraCont, "contra_cont", "f^-1(V) closed for every open V"},
    {FunctionClassId::ContraPre, "contra_pre", "f^-1(V) preclosed for every open V"},
    {FunctionClassId::ContraSemi, "contra_semi", "f^-1(V) semiclosed for every open V"},
    {FunctionClassId::ContraAlpha, "contra_alpha", "f^-1(V) alpha-closed for every open V"},
    {FunctionClassId::ContraBeta, "contra_beta", "f^-1(V) beta-closed for every open V"},
    {FunctionClassId::AlmostContraCont, "almost_contra_cont", "f^-1(V) closed for every regular open V"},
    {FunctionClassId::AlmostContraPre, "almost_contra_pre", "f^-1(V) preclosed for every regular open V"},
    {FunctionClassId::AlmostContraSemi, "almost_contra_semi", "f^-1(V) semiclosed for every regular open V"},
    {FunctionClassId::AlmostContraAlpha, "almost_contra_alpha", "f^-1(V) alpha-closed for every regular open V"},
    {FunctionClassId::AlmostContraBeta, "almost_contra_beta", "f^-1(V) beta-closed for every regular open V"},
    {FunctionClassId::WeaklyContraCont, "weakly_contra_cont", "Cl(f^-1(S)) <= f^-1(V) for closed S <= open V"},
    {FunctionClassId::WeaklyContraPre, "weakly_contra_pre", "pCl(f^-1(S)) <= f^-1(V) for closed S <= open V"},
    {FunctionClassId::WeaklyContraBeta, "weakly_contra_beta", "betaCl(f^-1(S)) <= f^-1(V) for closed S <= open V"},
    {FunctionClassId::TstarCont, "tstar_cont", "f^-1(V) T*-open for every open V"},
    {FunctionClassId::AlmostTstarCont, "almost_tstar_cont", "f^-1(V) T*-open for every regular open V"},
    {FunctionClassId::ContraTstarCont, "contra_tstar_cont", "f^-1(V) T*-closed for every open V"},
    {FunctionClassId::AlmostContraTstarCont, "almost_contra_tstar_cont", "f^-1(V) T*-closed for every regular open V"},
    {FunctionClassId::SlightlyContraTstarCont, "slightly_contra_tstar_cont", "f^-1(V) T*-closed for every clopen V"},
    {FunctionClassId::WeaklyContraTstarCont, "weakly_contra_tstar_cont", "T*Cl(f^-1(S)) <= f^-1(V) for closed S <= open V"},
    {FunctionClassId::WeaklyAlmostContraTstarCont, "weakly_almost_contra_tstar_cont",
     "T*Cl(f^-1(S)) <= f^-1(V) for regular closed S <= regular open V"},
    {FunctionClassId::AlmostGtsrCont, "almost_gtsr_cont", "f^-1(S) gT*r-closed for every regular closed S"},
    {FunctionClassId::AtsrIrresolute, "atsr_irresolute",
     "T*Cl(A) <= f^-1(V) for gT*r-closed A <= f^-1(V), V regular open"},
}};

const FunctionClassInfo& info(FunctionClassId c)
{
    for (const auto& i : kFunctionClassTable)
        if (i.id == c)
            return i;
    throw std::logic_error("unknown FunctionClassId");
}

std::string lowered(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return out;
}

template <class Pred>
bool all_preimages(const FunctionInstance& f, const std::vector<Subset>& family, Pred pred)
{
    return std::all_of(family.begin(), family.end(),
                       [&](Subset v) { return pred(f.preimage(v)); });
}

// For every S in inner, V in outer with S <= V: close(f^-1(S)) <= f^-1(V).
template <class Close>
bool nested_pairs(const FunctionInstance& f, const std::vector<Subset>& inner,
                  const std::vector<Subset>& outer, Close close)
{
    for (Subset s : inner) {
        const Subset closed_preimage = close(f.preimage(s));
        for (Subset v : outer)
            if (s.subset_of(v) && !closed_preimage.subset_of(f.preimage(v)))
                return false;
    }
    return true;
}

} // namespace

std::string_view name_of(FunctionClassId c) { return info(c).name; }

std::string_view formula_of(FunctionClassId c) { return info(c).formula; }

std::optional<FunctionClassId> function_class_from_name(std::string_view name)
{
    const std::string key = lowered(name);
    for (const auto& i : kFunctionClassTable)
        if (i.name == key)
            return i.id;
    return std::nullopt;
}

Subset preimage(const FunctionInstance& f, Subset v) { return f.preimage(v); }

bool satisfies(const FunctionInstance& f, FunctionClassId c)
{
    const Topology& x = f.domain().topology();
    const Topology& y = f.codomain();
    const OperatorSpace& os = f.domain();
    auto in = [&](SetClassId k) { return [&x, k](Subset s) { return is_in_class(x, s, k); }; };
    auto tstar_open = [&](Subset s) { return os.is_tstar_open(s); };
    auto tstar_closed = [&](Subset s) { return os.is_tstar_closed(s); };

    switch (c) {
    case FunctionClassId::Continuous: return all_preimages(f, y.opens(), in(SetClassId::Open));
    case FunctionClassId::PreCont: return all_preimages(f, y.opens(), in(SetClassId::Preopen));
    case FunctionClassId::SemiCont: return all_preimages(f, y.opens(), in(SetClassId::Semiopen));
    case FunctionClassId::AlphaCont: return all_preimages(f, y.opens(), in(SetClassId::AlphaOpen));
    case FunctionClassId::BetaCont: return all_preimages(f, y.opens(), in(SetClassId::BetaOpen));

    case FunctionClassId::ContraCont: return all_preimages(f, y.opens(), in(SetClassId::Closed));
    case FunctionClassId::ContraPre: return all_preimages(f, y.opens(), in(SetClassId::Preclosed));
    case FunctionClassId::ContraSemi: return all_preimages(f, y.opens(), in(SetClassId::Semiclosed));
    case FunctionClassId::ContraAlpha: return all_preimages(f, y.opens(), in(SetClassId::AlphaClosed));
    case FunctionClassId::ContraBeta: return all_preimages(f, y.opens(), in(SetClassId::BetaClosed));

    case FunctionClassId::AlmostContraCont: return all_preimages(f, y.regular_opens(), in(SetClassId::Closed));
    case FunctionClassId::AlmostContraPre: return all_preimages(f, y.regular_opens(), in(SetClassId::Preclosed));
    case FunctionClassId::AlmostContraSemi: return all_preimages(f, y.regular_opens(), in(SetClassId::Semiclosed));
    case FunctionClassId::AlmostContraAlpha: return all_preimages(f, y.regular_opens(), in(SetClassId::AlphaClosed));
    case FunctionClassId::AlmostContraBeta: return all_preimages(f, y.regular_opens(), in(SetClassId::BetaClosed));

    case FunctionClassId::WeaklyContraCont:
        return nested_pairs(f, y.closeds(), y.opens(), [&](Subset s) { return x.closure(s); });
    case FunctionClassId::WeaklyContraPre:
        return nested_pairs(f, y.closeds(), y.opens(),
                            [&](Subset s) { return class_closure(x, s, ClosureKind::Pre); });
    case FunctionClassId::WeaklyContraBeta:
        return nested_pairs(f, y.closeds(), y.opens(),
                            [&](Subset s) { return class_closure(x, s, ClosureKind::Beta); });

    case FunctionClassId::TstarCont: return all_preimages(f, y.opens(), tstar_open);
    case FunctionClassId::AlmostTstarCont: return all_preimages(f, y.regular_opens(), tstar_open);
    case FunctionClassId::ContraTstarCont: return all_preimages(f, y.opens(), tstar_closed);
    case FunctionClassId::AlmostContraTstarCont: return all_preimages(f, y.regular_opens(), tstar_closed);
    case FunctionClassId::SlightlyContraTstarCont: return all_preimages(f, y.clopens(), tstar_closed);

    case FunctionClassId::WeaklyContraTstarCont:
        return nested_pairs(f, y.closeds(), y.opens(), [&](Subset s) { return os.tstar_closure(s); });
    case FunctionClassId::WeaklyAlmostContraTstarCont:
        return nested_pairs(f, y.regular_closeds(), y.regular_opens(),
                            [&](Subset s) { return os.tstar_closure(s); });

    case FunctionClassId::AlmostGtsrCont:
        return all_preimages(f, y.regular_closeds(), [&](Subset s) { return is_gtsr_closed(os, s); });
    case FunctionClassId::AtsrIrresolute:
        for (Subset v : y.regular_opens()) {
            const Subset pre = f.preimage(v);
            for (Mask m = 0; m < subset_count(x.points()); ++m) {
                const Subset a{m};
                if (a.subset_of(pre) && is_gtsr_closed(os, a) && !os.tstar_closure(a).subset_of(pre))
                    return false;
            }
        }
        return true;
    }
    throw std::logic_error("unknown FunctionClassId");
}

bool is_gtsr_closed(const OperatorSpace& os, Subset s)
{
    const Topology& t = os.topology();
    const Subset closure = os.tstar_closure(s);
    for (Subset u : t.regular_opens())
        if (s.subset_of(u) && !closure.subset_of(u))
            return false;
    return true;
}

bool images_of_gtsr_closed_sets_are_regular_closed(const FunctionInstance& f)
{
    const OperatorSpace& os = f.domain();
    for (Mask m = 0; m < subset_count(os.points()); ++m) {
        const Subset a{m};
        if (is_gtsr_closed(os, a) && !is_in_class(f.codomain(), f.image(a), SetClassId::RegularClosed))
            return false;
    }
    return true;
}

std::string_view name_of(GraphPropertyId p)
{
    switch (p) {
    case GraphPropertyId::TstarRegular: return "tstar_regular";
    case GraphPropertyId::ContraTstarRegular: return "contra_tstar_regular";
    }
    throw std::logic_error("unknown GraphPropertyId");
}

bool graph_has(const FunctionInstance& f, GraphPropertyId p)
{
    const OperatorSpace& os = f.domain();
    const Topology& y = f.codomain();
    const std::vector<Subset>& separators =
        p == GraphPropertyId::TstarRegular ? y.regular_opens() : y.regular_closeds();
    const int nx = os.points();
    for (int px = 0; px < nx; ++px) {
        for (int py = 0; py < y.points(); ++py) {
            if (py == f.image_of(px))
                continue;
            bool separated = false;
            for (Mask m = 0; m < subset_count(nx) && !separated; ++m) {
                const Subset u{m};
                if (!u.contains(px) || !os.is_tstar_closed(u))
                    continue;
                const Subset fu = f.image(u);
                for (Subset v : separators) {
                    if (v.contains(py) && !fu.intersects(v)) {
                        separated = true;
                        break;
                    }
                }
            }
            if (!separated)
                return false;
        }
    }
    return true;
}

bool is_contra_tstar_compact(const OperatorSpace& os)
{
    const Topology& t = os.topology();
    std::vector<Subset> subcover;
    for (Mask m = 0; m < subset_count(t.points()); ++m)
        if (os.is_tstar_closed(Subset{m}))
            subcover.emplace_back(m);
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
