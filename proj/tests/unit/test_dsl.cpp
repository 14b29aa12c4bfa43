#include <doctest.h>

#include "fixtures.hpp"
#include "optop/dsl.hpp"

using namespace optop;
using namespace optop::dsl;

TEST_CASE("parsing the basic definitions")
{
    const auto p = Program::parse("setclass preopen(S) := S <= Int(Cl(S));");
    REQUIRE(p.definitions().size() == 1);
    CHECK(p.definitions()[0]->kind == DefinitionKind::SetClass);
    CHECK(p.definitions()[0]->name == "preopen");

    const auto w = Program::parse(
        "funclass wact(f) := forall S: regclosed@Y, V: regopen@Y . S <= V -> TCl(inv(f,S)) <= inv(f,V);");
    REQUIRE(w.definitions().size() == 1);
    CHECK(w.definitions()[0]->kind == DefinitionKind::FunClass);
}

TEST_CASE("unknown identifiers are type errors")
{
    try {
        Program::parse("setclass bad(S) := S <= Q;");
        FAIL("accepted an unbound name");
    } catch (const TypeError& e) {
        CHECK(std::string(e.what()).find("unknown identifier Q") != std::string::npos);
        CHECK(e.line() == 1);
        CHECK(e.column() == 25);
    }
}

TEST_CASE("syntax errors report position and expectations")
{
    try {
        Program::parse("setclass s(S) :=\n  S <= ;");
        FAIL("accepted a missing operand");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 8);
        CHECK_FALSE(e.expected().empty());
    }
    CHECK_THROWS_AS(Program::parse("setclass s(S) := S <= S"), SyntaxError);
    CHECK_THROWS_AS(Program::parse("setclass s(S) := S $ S;"), SyntaxError);
    CHECK_THROWS_AS(Program::parse("funclass g(f) := forall V: fuzzy@Y . V <= V;"), SyntaxError);
}

TEST_CASE("side checking")
{
    // inv takes a Y-side set; image takes an X-side set.
    CHECK_THROWS_AS(Program::parse("funclass g(f) := forall V: open@X . inv(f, V) <= FULLX;"), TypeError);
    CHECK_THROWS_AS(Program::parse("funclass g(f) := forall V: open@Y . V <= FULLX;"), TypeError);
    CHECK_THROWS_AS(Program::parse("funclass g(f) := forall V: open@Y . image(f, V) <= FULLY;"), TypeError);
    CHECK_NOTHROW(Program::parse("funclass g(f) := forall A: any@X . image(f, A) <= FULLY;"));
    CHECK_THROWS_AS(Program::parse("setclass s(S) := S <= FULLY;"), TypeError);
    CHECK_THROWS_AS(Program::parse("operator t(S) := TCl(S);"), TypeError);
    CHECK_THROWS_AS(Program::parse("setclass s(S) := forall S: open@X . S <= S;"), TypeError);
    CHECK_THROWS_AS(Program::parse("setclass s(S) := later(S); setclass later(S) := S <= S;"), TypeError);
    CHECK_THROWS_AS(Program::parse("setclass s(S) := s(S);"), TypeError);
}

TEST_CASE("setclass evaluation")
{
    const auto p = Program::parse("setclass preopen(S) := S <= Int(Cl(S));");
    const Topology ab = fixture::tau_ab();
    const auto os = fixture::bind(ab, OperatorKind::IntCl);
    const auto& d = *p.definitions()[0];
    CHECK(eval_setclass(d, *os, fixture::set(ab, {"a"})));
    CHECK(eval_setclass(d, *os, Subset::empty()));
}

TEST_CASE("a regular open rendition agrees with the native decider")
{
    const auto p = Program::parse("setclass regopen(S) := S = Int(Cl(S));");
    const auto& d = *p.definitions()[0];
    std::size_t failures = 0;
    for (int n = 1; n <= 3; ++n)
        for (const Topology& t : enumerate_topologies(n)) {
            const auto os = fixture::bind(t, OperatorKind::IntCl);
            for (Mask m = 0; m < subset_count(n); ++m)
                failures += eval_setclass(d, *os, Subset{m}) != is_in_class(t, Subset{m}, SetClassId::RegularOpen);
        }
    CHECK(failures == 0);
}

TEST_CASE("funclass evaluation")
{
    const auto p = Program::parse(
        "funclass wact(f) := forall S: regclosed@Y, V: regopen@Y . S <= V -> TCl(inv(f,S)) <= inv(f,V);\n"
        "funclass const_true(f) := EMPTY <= EMPTY;");
    const auto wact = p.find("wact");
    const auto yes = p.find("const_true");
    REQUIRE(wact);
    REQUIRE(yes);
    CHECK(eval_funclass(*wact, fixture::second_example()));
    CHECK(eval_funclass(*yes, fixture::fourth_example()));

    std::size_t failures = 0;
    fixture::for_each_instance(3, {OperatorKind::IntCl}, [&](const FunctionInstance& f, const oracle::Instance&) {
        failures += eval_funclass(*wact, f) != satisfies(f, FunctionClassId::WeaklyAlmostContraTstarCont);
    });
    CHECK(failures == 0);
}

TEST_CASE("operator definitions bind as operators")
{
    const auto p = Program::parse("operator ic(S) := Int(Cl(S)); operator nothing(S) := EMPTY;");
    const Topology a = fixture::tau_a();
    const Operator ic = as_operator(p.find("ic"));
    CHECK(ic.name() == "dsl:ic");
    const auto os = bind_operator(a, ic);
    const auto native = bind_operator(a, Operator(OperatorKind::IntCl));
    for (Mask m = 0; m < 8; ++m)
        CHECK(os.tstar_closure(Subset{m}) == native.tstar_closure(Subset{m}));
    CHECK_THROWS_AS(bind_operator(a, as_operator(p.find("nothing"))), NotAssociated);
}

TEST_CASE("targets name classes and combine them")
{
    const auto t = Target::parse("ALMOST_TSTAR_CONT and not ALMOST_CONTRA_TSTAR_CONT");
    CHECK(t(fixture::third_example()));
    CHECK_FALSE(t(fixture::second_example()));
    const auto never = Target::parse("not (X <= X)");
    CHECK_FALSE(never(fixture::second_example()));
    const auto member = Target::parse("exists x: point@X . forall V: open@Y . x in inv(f, V) or not (x in inv(f, V))");
    CHECK(member(fixture::second_example()));
}

TEST_CASE("stdlib covers the native catalogue")
{
    const Program& lib = stdlib();
    for (auto c : kAllSetClasses) {
        const auto d = lib.find(name_of(c));
        REQUIRE_MESSAGE(d, name_of(c));
        CHECK(d->kind == DefinitionKind::SetClass);
    }
    for (auto c : kAllFunctionClasses) {
        const auto d = lib.find(name_of(c));
        REQUIRE_MESSAGE(d, name_of(c));
        CHECK(d->kind == DefinitionKind::FunClass);
    }
}

TEST_CASE("printing then reparsing the stdlib is a fixpoint")
{
    const std::string once = stdlib().print();
    const std::string twice = Program::parse(once).print();
    CHECK(once == twice);
    const auto a = stdlib().definitions();
    const auto b = Program::parse(once).definitions();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(print(*a[i]) == print(*b[i]));
}

TEST_CASE("stdlib renditions agree with the native deciders on every instance up to three points")
{
    const Program& lib = stdlib();
    std::size_t failures = 0;
    std::size_t instances = 0;
    fixture::for_each_instance(3, {OperatorKind::IntCl, OperatorKind::ClInt},
                               [&](const FunctionInstance& f, const oracle::Instance&) {
                                   ++instances;
                                   for (auto c : kAllFunctionClasses)
                                       failures += eval_funclass(*lib.find(name_of(c)), f) != satisfies(f, c);
                               });
    CHECK(instances == 2 * 24872);
    CHECK(failures == 0);

    for (int n = 1; n <= 3; ++n)
        for (const Topology& t : enumerate_topologies(n))
            for (auto k : {OperatorKind::IntCl, OperatorKind::ClInt}) {
                const auto os = fixture::bind(t, k);
                for (Mask m = 0; m < subset_count(n); ++m)
                    for (auto c : kAllSetClasses)
                        failures += eval_setclass(*lib.find(name_of(c)), *os, Subset{m}) !=
                                    is_in_class(t, Subset{m}, c);
            }
    CHECK(failures == 0);
}
