#include <doctest.h>

#include "fixtures.hpp"
#include "optop/io.hpp"
#include "optop/search.hpp"

using namespace optop;
using Fc = FunctionClassId;

namespace {

std::uint64_t expected_instances(int max_points, int operators)
{
    const std::uint64_t tops[] = {1, 1, 4, 29};
    std::uint64_t total = 0;
    for (int nx = 1; nx <= max_points; ++nx)
        for (int ny = 1; ny <= max_points; ++ny) {
            std::uint64_t maps = 1;
            for (int i = 0; i < nx; ++i)
                maps *= ny;
            total += tops[nx] * tops[ny] * maps;
        }
    return total * operators;
}

} // namespace

TEST_CASE("bounds are validated")
{
    SearchBounds b;
    b.max_points_x = kMaxSearchPoints + 1;
    CHECK_THROWS_AS(b.validate(), BoundsExceeded);
    b = SearchBounds{};
    b.operators.clear();
    CHECK_THROWS_AS(b.validate(), BoundsExceeded);
    b = SearchBounds{};
    b.min_points_y = 0;
    CHECK_THROWS_AS(run_search({}, b), BoundsExceeded);
}

TEST_CASE("reflexive implication holds with the full instance count")
{
    const auto v = verify_implication(Condition::of(Fc::AlmostTstarCont), Condition::of(Fc::AlmostTstarCont), {},
                                      SearchBounds::up_to(3));
    CHECK(v.outcome == Outcome::HoldsExhaustively);
    CHECK_FALSE(v.witness.has_value());
    CHECK(v.stats.checked == expected_instances(3, 1));
}

TEST_CASE("exactly three points gives 29 x 29 x 27 instances")
{
    const auto v = verify_proposition(Proposition::PreclosureLemma, SearchBounds::exactly(3));
    CHECK(v.outcome == Outcome::HoldsExhaustively);
    CHECK(v.stats.checked == 22707);
}

TEST_CASE("almost T* implies weakly almost contra-T*")
{
    const auto v = verify_implication(Condition::of(Fc::AlmostTstarCont),
                                      Condition::of(Fc::WeaklyAlmostContraTstarCont), {}, SearchBounds::up_to(3));
    CHECK(v.outcome == Outcome::HoldsExhaustively);
}

TEST_CASE("weakly almost does not imply weakly contra-T*; the witness is canonical")
{
    const auto v = verify_implication(Condition::of(Fc::WeaklyAlmostContraTstarCont),
                                      Condition::of(Fc::WeaklyContraTstarCont), {}, SearchBounds::up_to(3));
    REQUIRE(v.outcome == Outcome::Counterexample);
    REQUIRE(v.witness.has_value());
    const auto& f = v.witness->instance;
    CHECK(satisfies(f, Fc::WeaklyAlmostContraTstarCont));
    CHECK_FALSE(satisfies(f, Fc::WeaklyContraTstarCont));

    // No instance earlier in canonical order violates the implication.
    std::uint64_t seen = 0;
    bool earlier = false;
    const auto b = SearchBounds::up_to(3);
    SearchPlan probe;
    probe.check = [&](const FunctionInstance& g, std::span<std::uint64_t>) {
        ++seen;
        InstanceReport r;
        if (seen < v.stats.checked && satisfies(g, Fc::WeaklyAlmostContraTstarCont) &&
            !satisfies(g, Fc::WeaklyContraTstarCont))
            earlier = true;
        return r;
    };
    run_search(probe, b);
    CHECK_FALSE(earlier);

    // The second worked instance is one of the witnesses, later in order.
    CHECK(satisfies(fixture::second_example(), Fc::WeaklyAlmostContraTstarCont));
}

TEST_CASE("find_counterexample on an unsatisfiable target")
{
    SearchBounds b = SearchBounds::up_to(2);
    const auto v = find_counterexample(Condition::of(dsl::Target::parse("not (X <= X)"), "never"), b);
    CHECK(v.outcome == Outcome::HoldsExhaustively);
    CHECK(v.stats.hypotheses_satisfied == 0);
}

TEST_CASE("a false implication yields a re-checkable witness; every proposition holds on two points")
{
    // A deliberately false statement exercises the witness path end to end.
    const auto v = verify_implication(Condition::of(Fc::AlmostContraTstarCont), Condition::of(Fc::AlmostTstarCont),
                                      {}, SearchBounds::up_to(3));
    REQUIRE(v.outcome == Outcome::Counterexample);
    CHECK(satisfies(v.witness->instance, Fc::AlmostContraTstarCont));
    CHECK_FALSE(satisfies(v.witness->instance, Fc::AlmostTstarCont));

    for (auto p : kAllPropositions) {
        const auto verdict = verify_proposition(p, SearchBounds::up_to(2));
        CHECK_MESSAGE(verdict.outcome == Outcome::HoldsExhaustively, name_of(p));
    }
}

TEST_CASE("proposition names")
{
    for (auto p : kAllPropositions) {
        CHECK(proposition_from_name(name_of(p)) == p);
        CHECK_FALSE(statement_of(p).empty());
    }
    CHECK(name_of(Proposition::PreclosureLemma) == "LEMMA_3_1");
    CHECK(name_of(Proposition::ContraImpliesWeakly) == "REM_3_2a");
    CHECK_FALSE(proposition_from_name("P9_9").has_value());
}

TEST_CASE("the lemma condition under int_cl matches the oracle directly")
{
    std::size_t failures = 0;
    fixture::for_each_instance(3, {OperatorKind::IntCl}, [&](const FunctionInstance& f, const oracle::Instance& o) {
        const bool wact = oracle::satisfies(o, Fc::WeaklyAlmostContraTstarCont);
        failures += preclosure_lemma_condition(f) != wact;
    });
    CHECK(failures == 0);
}

TEST_CASE("results do not depend on the number of jobs")
{
    for (auto p : {Proposition::ExtremalEquivalence, Proposition::RegularGraphs}) {
        SearchBounds one = SearchBounds::up_to(3);
        SearchBounds many = one;
        many.jobs = 5;
        CHECK(io::to_json(verify_proposition(p, one)).dump() == io::to_json(verify_proposition(p, many)).dump());
    }
    SearchBounds one = SearchBounds::up_to(3);
    one.operators = {Operator(OperatorKind::Identity), Operator(OperatorKind::IntCl), Operator(OperatorKind::ClInt)};
    SearchBounds many = one;
    many.jobs = 4;
    const auto a = Condition::of(Fc::WeaklyAlmostContraTstarCont);
    const auto c = Condition::of(Fc::AlmostContraTstarCont);
    CHECK(io::to_json(verify_implication(a, c, {}, one)).dump() ==
          io::to_json(verify_implication(a, c, {}, many)).dump());
}

TEST_CASE("instance limits give INCONCLUSIVE with exact counts")
{
    SearchBounds b = SearchBounds::up_to(3);
    b.instance_limit = 1000;
    const auto v = verify_implication(Condition::of(Fc::AlmostTstarCont),
                                      Condition::of(Fc::WeaklyAlmostContraTstarCont), {}, b);
    CHECK(v.outcome == Outcome::Inconclusive);
    CHECK(v.stats.checked <= 1000);
    b.jobs = 3;
    const auto w = verify_implication(Condition::of(Fc::AlmostTstarCont),
                                      Condition::of(Fc::WeaklyAlmostContraTstarCont), {}, b);
    CHECK(io::to_json(v).dump() == io::to_json(w).dump());
}

TEST_CASE("surjective-only bounds skip non-surjective maps")
{
    SearchBounds b = SearchBounds::exactly(2);
    b.surjective_only = true;
    const auto v = find_counterexample(Condition::of(dsl::Target::parse("not (X <= X)"), "never"), b);
    CHECK(v.stats.checked == 4 * 4 * 2);
}
