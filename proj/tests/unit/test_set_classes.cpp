#include <doctest.h>

#include "fixtures.hpp"
#include "optop/set_classes.hpp"

using namespace optop;
using fixture::set;
using fixture::space;

TEST_CASE("class membership examples")
{
    const Topology ab = fixture::tau_ab();
    CHECK(is_in_class(ab, set(ab, {"a"}), SetClassId::RegularOpen));
    const Topology d = fixture::delta_c_star();
    CHECK_FALSE(is_in_class(d, set(d, {"c"}), SetClassId::RegularOpen));
    for (auto c : {SetClassId::Open, SetClassId::RegularOpen, SetClassId::Preopen, SetClassId::Semiopen,
                   SetClassId::AlphaOpen, SetClassId::BetaOpen})
        CHECK(is_in_class(ab, Subset::empty(), c));
}

TEST_CASE("class names round-trip")
{
    for (auto c : kAllSetClasses) {
        CHECK(set_class_from_name(name_of(c)) == c);
        CHECK_FALSE(formula_of(c).empty());
    }
    CHECK_FALSE(set_class_from_name("nonsense").has_value());
}

TEST_CASE("membership agrees with the definitions, exhaustive to three points")
{
    std::size_t failures = 0;
    for (int n = 1; n <= 3; ++n)
        for (const Topology& t : enumerate_topologies(n)) {
            const oracle::Space o = oracle::from(t);
            for (Mask m = 0; m < subset_count(n); ++m)
                for (auto c : kAllSetClasses)
                    failures += is_in_class(t, Subset{m}, c) != oracle::in_class(o, m, c);
        }
    CHECK(failures == 0);
}

TEST_CASE("closed classes are complement duals of open classes")
{
    std::size_t failures = 0;
    for (int n = 1; n <= 3; ++n)
        for (const Topology& t : enumerate_topologies(n))
            for (Mask m = 0; m < subset_count(n); ++m)
                for (auto k : {ClosureKind::Ordinary, ClosureKind::Pre, ClosureKind::Semi, ClosureKind::Alpha,
                               ClosureKind::Beta})
                    failures += is_in_class(t, Subset{m}, closed_class_of(k)) !=
                                is_in_class(t, t.complement(Subset{m}), open_class_of(k));
    CHECK(failures == 0);
}

TEST_CASE("class closure and interior")
{
    const Topology a = fixture::tau_a();
    const Topology ab = fixture::tau_ab();
    CHECK(class_closure(a, set(a, {"a"}), ClosureKind::Pre) == a.full());
    CHECK(class_closure(ab, set(ab, {"a"}), ClosureKind::Ordinary) == set(ab, {"a", "c"}));
    for (auto k : {ClosureKind::Ordinary, ClosureKind::Pre, ClosureKind::Semi, ClosureKind::Alpha, ClosureKind::Beta}) {
        CHECK(class_closure(ab, ab.full(), k) == ab.full());
        CHECK(class_interior(ab, Subset::empty(), k) == Subset::empty());
    }
    CHECK(class_interior(a, set(a, {"b", "c"}), ClosureKind::Pre) ==
          a.complement(class_closure(a, set(a, {"a"}), ClosureKind::Pre)));

    // Union of the semi-open subsets of {a,c}.
    Subset expected;
    for (Mask m = 0; m < 8; ++m)
        if (Subset{m}.subset_of(set(ab, {"a", "c"})) && is_in_class(ab, Subset{m}, SetClassId::Semiopen))
            expected |= Subset{m};
    CHECK(class_interior(ab, set(ab, {"a", "c"}), ClosureKind::Semi) == expected);
    CHECK(expected == set(ab, {"a", "c"}));
}

TEST_CASE("class closures agree with the oracle, and pCl(S) = S | Cl(Int(S))")
{
    std::size_t failures = 0;
    for (int n = 1; n <= 3; ++n)
        for (const Topology& t : enumerate_topologies(n)) {
            const oracle::Space o = oracle::from(t);
            for (Mask m = 0; m < subset_count(n); ++m) {
                const Subset s{m};
                for (auto k : {ClosureKind::Ordinary, ClosureKind::Pre, ClosureKind::Semi, ClosureKind::Alpha,
                               ClosureKind::Beta})
                    failures += class_closure(t, s, k).bits() != oracle::class_closure(o, m, closed_class_of(k));
                failures += class_closure(t, s, ClosureKind::Pre) != (s | t.closure(t.interior(s)));
                failures += class_closure(t, s, ClosureKind::Semi) != (s | t.interior(t.closure(s)));
            }
        }
    CHECK(failures == 0);
}

TEST_CASE("space predicates")
{
    const auto two = GroundSet::standard(2);
    const auto three = GroundSet::standard(3);
    const Topology sierpinski = space(2, {{}, {"a"}, {"a", "b"}});

    CHECK(is_extremally_disconnected(fixture::tau_a()));
    CHECK(is_extremally_disconnected(discrete_topology(three)));
    CHECK_FALSE(is_extremally_disconnected(fixture::tau_ab()));

    CHECK(is_urysohn(discrete_topology(two)));
    CHECK_FALSE(is_urysohn(sierpinski));
    CHECK_FALSE(is_urysohn(indiscrete_topology(two)));

    CHECK(is_sigma_space(discrete_topology(three)));
    CHECK(is_sigma_space(indiscrete_topology(two)));
    CHECK_FALSE(is_sigma_space(sierpinski));

    CHECK(is_r_compact(discrete_topology(three)));
    CHECK(is_r_compact(indiscrete_topology(GroundSet::standard(1))));
}

TEST_CASE("space predicates agree with the oracle; finite Urysohn spaces are discrete")
{
    std::size_t failures = 0;
    std::size_t urysohn = 0;
    for (int n = 1; n <= 4; ++n)
        for (const Topology& t : enumerate_topologies(n)) {
            const oracle::Space o = oracle::from(t);
            failures += is_extremally_disconnected(t) != oracle::extremally_disconnected(o);
            failures += is_sigma_space(t) != oracle::sigma_space(o);
            failures += !is_r_compact(t);
            const bool u = is_urysohn(t);
            failures += u != oracle::urysohn(o);
            if (u) {
                ++urysohn;
                failures += t.opens().size() != subset_count(n);
            }
        }
    CHECK(failures == 0);
    CHECK(urysohn == 4);
}
