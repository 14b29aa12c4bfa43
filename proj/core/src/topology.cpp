#include "optop/topology.hpp"

#include <algorithm>
#include <set>

namespace optop {

AxiomViolation::AxiomViolation(Kind kind, Subset first, Subset second, const std::string& what)
    : Error(what), kind_(kind), first_(first), second_(second)
{
}

Topology::Topology(GroundSet ground, std::vector<Subset> opens)
    : ground_(std::move(ground)), opens_(std::move(opens))
{
    const Mask count = subset_count(points());
    open_flags_.assign(count, 0);
    for (Subset u : opens_)
        open_flags_[u.bits()] = 1;

    interior_.resize(count);
    closure_.resize(count);
    for (Mask m = 0; m < count; ++m) {
        const Subset s{m};
        Subset in;
        for (Subset u : opens_)
            if (u.subset_of(s))
                in |= u;
        interior_[m] = in;

        Subset cl = full();
        for (Subset u : opens_) {
            const Subset c = complement(u);
            if (s.subset_of(c))
                cl &= c;
        }
        closure_[m] = cl;
    }

    for (Subset u : opens_)
        closeds_.push_back(complement(u));
    std::sort(closeds_.begin(), closeds_.end());

    for (Mask m = 0; m < count; ++m) {
        const Subset s{m};
        if (open_flags_[m] && open_flags_[complement(s).bits()])
            clopens_.push_back(s);
        if (interior_[closure_[m].bits()] == s)
            regular_opens_.push_back(s);
        if (closure_[interior_[m].bits()] == s)
            regular_closeds_.push_back(s);
    }
}

Topology make_topology(GroundSet ground, const std::vector<Subset>& opens)
{
    for (Subset u : opens)
        ground.require_valid(u);

    std::set<Subset> family(opens.begin(), opens.end());
    if (!family.contains(Subset::empty()))
        throw AxiomViolation(AxiomViolation::Kind::MissingEmpty, {}, {},
                             "family of opens does not contain the empty set");
    if (!family.contains(ground.full()))
        throw AxiomViolation(AxiomViolation::Kind::MissingFull, ground.full(), {},
                             "family of opens does not contain the whole space " +
                                 ground.format(ground.full()));

    std::vector<Subset> sorted(family.begin(), family.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            const Subset a = sorted[i];
            const Subset b = sorted[j];
            if (!family.contains(a | b))
                throw AxiomViolation(AxiomViolation::Kind::UnionEscape, a, b,
                                     "union of opens " + ground.format(a) + " and " +
                                         ground.format(b) + " is not open");
            if (!family.contains(a & b))
                throw AxiomViolation(AxiomViolation::Kind::IntersectionEscape, a, b,
                                     "intersection of opens " + ground.format(a) + " and " +
                                         ground.format(b) + " is not open");
        }
    }
    return Topology(std::move(ground), std::move(sorted));
}

Topology discrete_topology(const GroundSet& ground)
{
    std::vector<Subset> opens;
    for (Mask m = 0; m < subset_count(ground.size()); ++m)
        opens.emplace_back(m);
    return make_topology(ground, opens);
}

Topology indiscrete_topology(const GroundSet& ground)
{
    return make_topology(ground, {Subset::empty(), ground.full()});
}

Subset interior(const Topology& t, Subset s) { return t.interior(s); }

Subset closure(const Topology& t, Subset s) { return t.closure(s); }

std::vector<Subset> clopen_sets(const Topology& t) { return t.clopens(); }

namespace {

void check_enumeration_bounds(int n)
{
    if (n < 0 || n > kMaxEnumerationPoints)
        throw BoundsExceeded("topology enumeration supports 0.." +
                             std::to_string(kMaxEnumerationPoints) + " points, got " +
                             std::to_string(n));
}

std::vector<Subset> unions_of(const std::vector<Subset>& generators)
{
    std::set<Subset> opens{Subset::empty()};
    for (Subset g : generators) {
        std::vector<Subset> current(opens.begin(), opens.end());
        for (Subset u : current)
            opens.insert(u | g);
    }
    return {opens.begin(), opens.end()};
}

// Neighbourhood choices for the point at `point`, ascending.
std::vector<Subset> neighbourhood_candidates(int n, int point)
{
    std::vector<Subset> out;
    for (Mask m = 0; m < subset_count(n); ++m)
        if (Subset{m}.contains(point))
            out.emplace_back(m);
    return out;
}

struct NeighbourhoodSearch {
    int n;
    GroundSet ground;
    std::vector<std::vector<Subset>> candidates;
    std::vector<Subset> chosen;
    const std::function<void(const Topology&)>& visit;

    bool consistent(int k, Subset u) const
    {
        for (int j = 0; j < k; ++j) {
            if (u.contains(j) && !chosen[j].subset_of(u))
                return false;
            if (chosen[j].contains(k) && !u.subset_of(chosen[j]))
                return false;
        }
        return true;
    }

    void extend(int k)
    {
        if (k == n) {
            visit(make_topology(ground, unions_of(chosen)));
            return;
        }
        for (Subset u : candidates[k]) {
            if (!consistent(k, u))
                continue;
            chosen[k] = u;
            extend(k + 1);
        }
    }
};

} // namespace

std::vector<Subset> first_neighbourhood_candidates(int n)
{
    check_enumeration_bounds(n);
    if (n == 0)
        return {};
    return neighbourhood_candidates(n, 0);
}

void for_each_topology(int n, const std::function<void(const Topology&)>& visit,
                       std::optional<Subset> first_neighbourhood)
{
    check_enumeration_bounds(n);
    NeighbourhoodSearch search{n, GroundSet::standard(n), {}, std::vector<Subset>(n), visit};
    for (int k = 0; k < n; ++k)
        search.candidates.push_back(neighbourhood_candidates(n, k));
    if (first_neighbourhood) {
        if (n == 0 || !first_neighbourhood->contains(0) ||
            !first_neighbourhood->subset_of(Subset::full(n)))
            return;
        search.candidates[0] = {*first_neighbourhood};
    }
    search.extend(0);
}

std::vector<Topology> enumerate_topologies(int n)
{
    std::vector<Topology> out;
    for_each_topology(n, [&](const Topology& t) { out.push_back(t); });
    return out;
}

} // namespace optop
