#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "optop/dsl.hpp"
#include "optop/function_classes.hpp"

namespace optop {

/// Largest ground set on either side of a search.
inline constexpr int kMaxSearchPoints = 4;

struct SearchBounds {
    int min_points_x = 1;
    int max_points_x = 3;
    int min_points_y = 1;
    int max_points_y = 3;
    std::vector<Operator> operators{Operator(OperatorKind::IntCl)};
    bool surjective_only = false;
    /// Worker threads; results do not depend on it.
    unsigned jobs = 1;
    /// Stop with INCONCLUSIVE once this many instances have been examined.
    std::optional<std::uint64_t> instance_limit;

    /// Ground sets of exactly n points on both sides.
    static SearchBounds exactly(int n);
    /// 1..n points on both sides.
    static SearchBounds up_to(int n);

    /// Throws BoundsExceeded on sizes outside 1..kMaxSearchPoints or an
    /// empty operator list.
    void validate() const;
};

/// Named predicate on a function instance.
struct Condition {
    std::string name;
    std::function<bool(const FunctionInstance&)> test;

    static Condition of(FunctionClassId c);
    static Condition of(dsl::Target target, std::string name);
};

/// Named predicate on the domain or codomain topology; instances whose
/// spaces fail it are enumerated but never evaluated.
struct SpaceCondition {
    enum class Side { Domain, Codomain };
    std::string name;
    Side side;
    std::function<bool(const Topology&)> test;

    static SpaceCondition codomain(std::string name, std::function<bool(const Topology&)> test);
};

enum class Outcome { HoldsExhaustively, Counterexample, Inconclusive };

std::string_view name_of(Outcome o);

struct Witness {
    FunctionInstance instance;
    /// Truth values of the named conditions on the witness.
    std::vector<std::pair<std::string, bool>> assignments;
};

struct SearchStats {
    /// Instances enumerated in canonical order up to the verdict.
    std::uint64_t checked = 0;
    /// Instances whose spaces passed every SpaceCondition.
    std::uint64_t qualifying = 0;
    /// Qualifying instances that also met the instance-level hypotheses.
    std::uint64_t hypotheses_satisfied = 0;
    std::map<std::string, std::uint64_t> counters;
    double elapsed_ms = 0;
};

struct Verdict {
    Outcome outcome = Outcome::HoldsExhaustively;
    std::optional<Witness> witness;
    SearchStats stats;
};

/// Result of evaluating one instance.
struct InstanceReport {
    bool hypotheses = false;
    bool violated = false;
    std::vector<std::pair<std::string, bool>> assignments;
};

/// A fully custom check: counters are indexed like counter_names.
struct SearchPlan {
    std::vector<SpaceCondition> space_conditions;
    std::vector<std::string> counter_names;
    std::function<InstanceReport(const FunctionInstance&, std::span<std::uint64_t> counters)> check;
};

/// Runs a plan over every instance in bounds, in canonical order: domain
/// size, domain topology, codomain size, codomain topology, map in
/// lexicographic order, operator in declared order. Work is split by domain
/// topology; the reported violation is always the first in canonical order
/// and every statistic is independent of bounds.jobs.
Verdict run_search(const SearchPlan& plan, const SearchBounds& b);

/// antecedent => consequent on every instance satisfying the side conditions.
Verdict verify_implication(const Condition& antecedent, const Condition& consequent,
                           const std::vector<SpaceCondition>& side_conditions, const SearchBounds& b);

/// First instance satisfying target; HOLDS_EXHAUSTIVELY means its negation
/// holds on every instance in bounds.
Verdict find_counterexample(const Condition& target, const SearchBounds& b);

enum class Proposition {
    PreclosureLemma,            // LEMMA_3_1
    ContraImpliesWeakly,        // REM_3_2a
    WeaklyImpliesWeaklyAlmost,  // REM_3_2b
    AlmostImpliesWeaklyAlmost,  // P3_3
    ExtremalConverse,           // P3_4
    ExtremalEquivalence,        // COR_3_5
    AlmostContraImpliesWeaklyAlmost,  // P3_6
    WeaklyAlmostImpliesSlightly,      // P3_7
    Compactness,                // P_COMPACT
    RegularGraphs,              // P_GRAPH
    Irresolute,                 // P_IRRESOLUTE
    GtsrConverse,               // P_GTSR
};

inline constexpr std::array kAllPropositions = {
    Proposition::PreclosureLemma,
    Proposition::ContraImpliesWeakly,
    Proposition::WeaklyImpliesWeaklyAlmost,
    Proposition::AlmostImpliesWeaklyAlmost,
    Proposition::ExtremalConverse,
    Proposition::ExtremalEquivalence,
    Proposition::AlmostContraImpliesWeaklyAlmost,
    Proposition::WeaklyAlmostImpliesSlightly,
    Proposition::Compactness,
    Proposition::RegularGraphs,
    Proposition::Irresolute,
    Proposition::GtsrConverse,
};

/// Wire id, e.g. "LEMMA_3_1".
std::string_view name_of(Proposition p);
std::optional<Proposition> proposition_from_name(std::string_view name);
std::string_view statement_of(Proposition p);

/// Checks the statement's conclusion on every in-bounds instance meeting its
/// hypotheses. PreclosureLemma always runs with the int_cl operator only.
Verdict verify_proposition(Proposition p, const SearchBounds& b);

/// For every regular closed S inside a regular open V: Cl(Int(f^-1(S))) <= f^-1(V).
bool preclosure_lemma_condition(const FunctionInstance& f);
/// Same with Int(Cl(f^-1(S))) in place of Cl(Int(f^-1(S))).
bool preclosure_lemma_variant(const FunctionInstance& f);

/// Re-evaluates a proposition's conclusion on one instance; used to re-check witnesses.
InstanceReport check_proposition_instance(Proposition p, const FunctionInstance& f);

} // namespace optop
