#include "optop/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace optop {

SearchBounds SearchBounds::exactly(int n)
{
    SearchBounds b;
    b.min_points_x = b.max_points_x = n;
    b.min_points_y = b.max_points_y = n;
    return b;
}

SearchBounds SearchBounds::up_to(int n)
{
    SearchBounds b;
    b.max_points_x = b.max_points_y = n;
    return b;
}

void SearchBounds::validate() const
{
    auto check = [](int lo, int hi, const char* side) {
        if (lo < 1 || hi > kMaxSearchPoints || lo > hi)
            throw BoundsExceeded(std::string("search bounds for ") + side + " must satisfy 1 <= min <= max <= " +
                                 std::to_string(kMaxSearchPoints) + ", got " + std::to_string(lo) + ".." +
                                 std::to_string(hi));
    };
    check(min_points_x, max_points_x, "X");
    check(min_points_y, max_points_y, "Y");
    if (operators.empty())
        throw BoundsExceeded("search bounds need at least one operator");
}

Condition Condition::of(FunctionClassId c)
{
    return {std::string(name_of(c)), [c](const FunctionInstance& f) { return satisfies(f, c); }};
}

Condition Condition::of(dsl::Target target, std::string name)
{
    return {std::move(name), [t = std::move(target)](const FunctionInstance& f) { return t(f); }};
}

SpaceCondition SpaceCondition::codomain(std::string name, std::function<bool(const Topology&)> test)
{
    return {std::move(name), Side::Codomain, std::move(test)};
}

std::string_view name_of(Outcome o)
{
    switch (o) {
    case Outcome::HoldsExhaustively: return "HOLDS_EXHAUSTIVELY";
    case Outcome::Counterexample: return "COUNTEREXAMPLE";
    case Outcome::Inconclusive: return "INCONCLUSIVE";
    }
    throw std::logic_error("unknown Outcome");
}

namespace {

using TopologyList = std::vector<std::shared_ptr<const Topology>>;

const TopologyList& topologies_on(int n)
{
    static const std::array<TopologyList, kMaxSearchPoints + 1> cache = [] {
        std::array<TopologyList, kMaxSearchPoints + 1> out;
        for (int k = 0; k <= kMaxSearchPoints; ++k)
            for_each_topology(k, [&](const Topology& t) { out[k].push_back(std::make_shared<const Topology>(t)); });
        return out;
    }();
    return cache.at(n);
}

struct Unit {
    int points;
    std::shared_ptr<const Topology> topology;
};

struct UnitResult {
    std::uint64_t checked = 0;
    std::uint64_t qualifying = 0;
    std::uint64_t hypotheses = 0;
    std::vector<std::uint64_t> counters;
    std::optional<Witness> witness;
    bool truncated = false;
    bool skipped = false;
};

bool spaces_pass(const std::vector<SpaceCondition>& conditions, SpaceCondition::Side side, const Topology& t)
{
    for (const auto& c : conditions)
        if (c.side == side && !c.test(t))
            return false;
    return true;
}

// Advances the map odometer (last point fastest). Returns false after the last map.
bool next_map(std::vector<int>& map, int codomain_points)
{
    for (std::size_t i = map.size(); i-- > 0;) {
        if (++map[i] < codomain_points)
            return true;
        map[i] = 0;
    }
    return false;
}

bool surjective(const std::vector<int>& map, int codomain_points)
{
    Mask seen = 0;
    for (int y : map)
        seen |= Mask{1} << y;
    return seen == Subset::full(codomain_points).bits();
}

void run_unit(const SearchPlan& plan, const SearchBounds& b, const Unit& unit, UnitResult& out)
{
    out.counters.assign(plan.counter_names.size(), 0);
    const bool domain_ok = spaces_pass(plan.space_conditions, SpaceCondition::Side::Domain, *unit.topology);

    std::vector<std::shared_ptr<const OperatorSpace>> spaces;
    for (const Operator& op : b.operators) {
        try {
            spaces.push_back(std::make_shared<const OperatorSpace>(bind_operator(unit.topology, op)));
        } catch (const NotAssociated&) {
            // Not an operator topological space; excluded from the bounds.
        }
    }

    const std::uint64_t limit = b.instance_limit.value_or(UINT64_MAX);
    for (int ny = b.min_points_y; ny <= b.max_points_y; ++ny) {
        for (const auto& codomain : topologies_on(ny)) {
            const bool qualifies =
                domain_ok && spaces_pass(plan.space_conditions, SpaceCondition::Side::Codomain, *codomain);
            std::vector<int> map(unit.points, 0);
            std::vector<FunctionInstance> instances;
            for (const auto& os : spaces)
                instances.emplace_back(os, codomain, map);
            do {
                if (b.surjective_only && !surjective(map, ny))
                    continue;
                for (auto& f : instances) {
                    if (out.checked >= limit) {
                        out.truncated = true;
                        return;
                    }
                    for (int i = 0; i < unit.points; ++i)
                        if (f.image_of(i) != map[i])
                            f.set_image(i, map[i]);
                    ++out.checked;
                    if (!qualifies)
                        continue;
                    ++out.qualifying;
                    InstanceReport r = plan.check(f, out.counters);
                    if (r.hypotheses)
                        ++out.hypotheses;
                    if (r.violated) {
                        out.witness = Witness{f, std::move(r.assignments)};
                        return;
                    }
                }
            } while (next_map(map, ny));
        }
    }
}

} // namespace

Verdict run_search(const SearchPlan& plan, const SearchBounds& b)
{
    b.validate();
    const auto start = std::chrono::steady_clock::now();

    std::vector<Unit> units;
    for (int nx = b.min_points_x; nx <= b.max_points_x; ++nx)
        for (const auto& t : topologies_on(nx))
            units.push_back({nx, t});

    std::vector<UnitResult> results(units.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_witness{units.size()};
    std::mutex error_mutex;
    std::exception_ptr error;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= units.size())
                return;
            if (i > first_witness.load()) {
                results[i].skipped = true;
                continue;
            }
            try {
                run_unit(plan, b, units[i], results[i]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                first_witness.store(0);
                return;
            }
            if (results[i].witness) {
                std::size_t current = first_witness.load();
                while (i < current && !first_witness.compare_exchange_weak(current, i)) {
                }
            }
        }
    };

    const unsigned jobs = std::max(1U, b.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (error)
        std::rethrow_exception(error);

    Verdict v;
    std::vector<std::uint64_t> counters(plan.counter_names.size(), 0);
    const std::uint64_t limit = b.instance_limit.value_or(UINT64_MAX);
    auto finish = [&](Outcome o) {
        v.outcome = o;
        for (std::size_t k = 0; k < counters.size(); ++k)
            v.stats.counters[plan.counter_names[k]] = counters[k];
        v.stats.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return v;
    };
    auto absorb = [&](const UnitResult& r) {
        v.stats.checked += r.checked;
        v.stats.qualifying += r.qualifying;
        v.stats.hypotheses_satisfied += r.hypotheses;
        for (std::size_t k = 0; k < counters.size(); ++k)
            counters[k] += r.counters[k];
    };

    for (const UnitResult& r : results) {
        if (r.skipped)
            throw std::logic_error("search skipped a unit ahead of the first witness");
        const bool over_limit = r.truncated || v.stats.checked + r.checked > limit;
        if (r.witness && !over_limit) {
            absorb(r);
            v.witness = r.witness;
            return finish(Outcome::Counterexample);
        }
        if (over_limit)
            return finish(Outcome::Inconclusive);
        absorb(r);
    }
    return finish(Outcome::HoldsExhaustively);
}

Verdict verify_implication(const Condition& antecedent, const Condition& consequent,
                           const std::vector<SpaceCondition>& side_conditions, const SearchBounds& b)
{
    SearchPlan plan;
    plan.space_conditions = side_conditions;
    plan.check = [&](const FunctionInstance& f, std::span<std::uint64_t>) {
        InstanceReport r;
        r.hypotheses = antecedent.test(f);
        if (r.hypotheses && !consequent.test(f)) {
            r.violated = true;
            r.assignments = {{antecedent.name, true}, {consequent.name, false}};
        }
        return r;
    };
    return run_search(plan, b);
}

Verdict find_counterexample(const Condition& target, const SearchBounds& b)
{
    SearchPlan plan;
    plan.check = [&](const FunctionInstance& f, std::span<std::uint64_t>) {
        InstanceReport r;
        r.hypotheses = target.test(f);
        r.violated = r.hypotheses;
        if (r.violated)
            r.assignments = {{target.name, true}};
        return r;
    };
    return run_search(plan, b);
}

// ------------------------------------------------------------ propositions

namespace {

struct PropositionInfo {
    Proposition id;
    std::string_view wire;
    std::string_view statement;
};

constexpr std::array<PropositionInfo, 12> kPropositionTable{{
    {Proposition::PreclosureLemma, "LEMMA_3_1",
     "with T = Int∘Cl: weakly almost contra-T* iff Cl(Int(f^-1(S))) <= f^-1(V) for regular closed S <= regular open V"},
    {Proposition::ContraImpliesWeakly, "REM_3_2a", "contra-T*-continuous => weakly contra-T*-continuous"},
    {Proposition::WeaklyImpliesWeaklyAlmost, "REM_3_2b",
     "weakly contra-T*-continuous => weakly almost contra-T*-continuous"},
    {Proposition::AlmostImpliesWeaklyAlmost, "P3_3", "almost T*-continuous => weakly almost contra-T*-continuous"},
    {Proposition::ExtremalConverse, "P3_4",
     "Y extremally disconnected: weakly almost contra-T*-continuous => almost T*-continuous"},
    {Proposition::ExtremalEquivalence, "COR_3_5",
     "Y extremally disconnected: weakly almost contra-T*-continuous <=> almost T*-continuous"},
    {Proposition::AlmostContraImpliesWeaklyAlmost, "P3_6",
     "almost contra-T*-continuous => weakly almost contra-T*-continuous"},
    {Proposition::WeaklyAlmostImpliesSlightly, "P3_7",
     "weakly almost contra-T*-continuous => slightly contra-T*-continuous"},
    {Proposition::Compactness, "P_COMPACT",
     "surjective weakly almost contra-T*, Y Sigma-space, X contra-T*-compact => Y R-compact"},
    {Proposition::RegularGraphs, "P_GRAPH",
     "weakly almost contra-T*, Y Urysohn => T*-regular and contra-T*-regular graph"},
    {Proposition::Irresolute, "P_IRRESOLUTE",
     "weakly almost contra-T*, images of gT*r-closed sets regular closed => aT*r-irresolute"},
    {Proposition::GtsrConverse, "P_GTSR",
     "almost gT*r-continuous and aT*r-irresolute => weakly almost contra-T*-continuous"},
}};

const PropositionInfo& info(Proposition p)
{
    for (const auto& i : kPropositionTable)
        if (i.id == p)
            return i;
    throw std::logic_error("unknown Proposition");
}

using Fc = FunctionClassId;

struct PropositionPlan {
    std::vector<SpaceCondition> spaces;
    std::vector<std::string> counters;
    std::function<InstanceReport(const FunctionInstance&, std::span<std::uint64_t>)> check;
};

InstanceReport implication(const FunctionInstance& f, std::initializer_list<Fc> hypotheses, Fc conclusion)
{
    InstanceReport r;
    r.hypotheses = true;
    for (Fc h : hypotheses) {
        if (!satisfies(f, h)) {
            r.hypotheses = false;
            return r;
        }
        r.assignments.emplace_back(std::string(name_of(h)), true);
    }
    const bool c = satisfies(f, conclusion);
    r.assignments.emplace_back(std::string(name_of(conclusion)), c);
    r.violated = !c;
    return r;
}

PropositionPlan plan_for(Proposition p)
{
    PropositionPlan plan;
    const auto extremal = SpaceCondition::codomain("extremally_disconnected_codomain", is_extremally_disconnected);
    switch (p) {
    case Proposition::PreclosureLemma:
        plan.counters = {"weakly_almost_contra_tstar_cont", "proof_line_variant_discrepancies"};
        plan.check = [](const FunctionInstance& f, std::span<std::uint64_t> counters) {
            InstanceReport r;
            r.hypotheses = true;
            const bool wact = satisfies(f, Fc::WeaklyAlmostContraTstarCont);
            const bool lemma = preclosure_lemma_condition(f);
            counters[0] += wact ? 1 : 0;
            counters[1] += wact != preclosure_lemma_variant(f) ? 1 : 0;
            r.violated = wact != lemma;
            r.assignments = {{"weakly_almost_contra_tstar_cont", wact}, {"lemma_condition", lemma}};
            return r;
        };
        break;
    case Proposition::ContraImpliesWeakly:
        plan.check = [](const FunctionInstance& f, auto) {
            return implication(f, {Fc::ContraTstarCont}, Fc::WeaklyContraTstarCont);
        };
        break;
    case Proposition::WeaklyImpliesWeaklyAlmost:
        plan.check = [](const FunctionInstance& f, auto) {
            return implication(f, {Fc::WeaklyContraTstarCont}, Fc::WeaklyAlmostContraTstarCont);
        };
        break;
    case Proposition::AlmostImpliesWeaklyAlmost:
        plan.check = [](const FunctionInstance& f, auto) {
            return implication(f, {Fc::AlmostTstarCont}, Fc::WeaklyAlmostContraTstarCont);
        };
        break;
    case Proposition::ExtremalConverse:
        plan.spaces = {extremal};
        plan.check = [](const FunctionInstance& f, auto) {
            return implication(f, {Fc::WeaklyAlmostContraTstarCont}, Fc::AlmostTstarCont);
        };
        break;
    case Proposition::ExtremalEquivalence:
        plan.spaces = {extremal};
        plan.check = [](const FunctionInstance& f, auto) {
            InstanceReport r;
            r.hypotheses = true;
            const bool wact = satisfies(f, Fc::WeaklyAlmostContraTstarCont);
            const bool almost = satisfies(f, Fc::AlmostTstarCont);
            r.violated = wact != almost;
            r.assignments = {{"weakly_almost_contra_tstar_cont", wact}, {"almost_tstar_cont", almost}};
            return r;
        };
        break;
    case Proposition::AlmostContraImpliesWeaklyAlmost:
        plan.check = [](const FunctionInstance& f, auto) {
            return implication(f, {Fc::AlmostContraTstarCont}, Fc::WeaklyAlmostContraTstarCont);
        };
        break;
    case Proposition::WeaklyAlmostImpliesSlightly:
        plan.check = [](const FunctionInstance& f, auto) {
            return implication(f, {Fc::WeaklyAlmostContraTstarCont}, Fc::SlightlyContraTstarCont);
        };
        break;
    case Proposition::Compactness:
        plan.spaces = {SpaceCondition::codomain("sigma_space_codomain", is_sigma_space)};
        plan.check = [](const FunctionInstance& f, auto) {
            InstanceReport r;
            r.hypotheses = f.is_surjective() && satisfies(f, Fc::WeaklyAlmostContraTstarCont) &&
                           is_contra_tstar_compact(f.domain());
            if (!r.hypotheses)
                return r;
            const bool compact = is_r_compact(f.codomain());
            r.violated = !compact;
            r.assignments = {{"surjective", true},
                             {"weakly_almost_contra_tstar_cont", true},
                             {"contra_tstar_compact_domain", true},
                             {"r_compact_codomain", compact}};
            return r;
        };
        break;
    case Proposition::RegularGraphs:
        plan.spaces = {SpaceCondition::codomain("urysohn_codomain", is_urysohn)};
        plan.check = [](const FunctionInstance& f, auto) {
            InstanceReport r;
            r.hypotheses = satisfies(f, Fc::WeaklyAlmostContraTstarCont);
            if (!r.hypotheses)
                return r;
            const bool regular = graph_has(f, GraphPropertyId::TstarRegular);
            const bool contra = graph_has(f, GraphPropertyId::ContraTstarRegular);
            r.violated = !(regular && contra);
            r.assignments = {{"weakly_almost_contra_tstar_cont", true},
                             {std::string(name_of(GraphPropertyId::TstarRegular)), regular},
                             {std::string(name_of(GraphPropertyId::ContraTstarRegular)), contra}};
            return r;
        };
        break;
    case Proposition::Irresolute:
        plan.check = [](const FunctionInstance& f, auto) {
            InstanceReport r;
            r.hypotheses = satisfies(f, Fc::WeaklyAlmostContraTstarCont) &&
                           images_of_gtsr_closed_sets_are_regular_closed(f);
            if (!r.hypotheses)
                return r;
            const bool irresolute = satisfies(f, Fc::AtsrIrresolute);
            r.violated = !irresolute;
            r.assignments = {{"weakly_almost_contra_tstar_cont", true},
                             {"gtsr_images_regular_closed", true},
                             {"atsr_irresolute", irresolute}};
            return r;
        };
        break;
    case Proposition::GtsrConverse:
        plan.check = [](const FunctionInstance& f, auto) {
            return implication(f, {Fc::AlmostGtsrCont, Fc::AtsrIrresolute}, Fc::WeaklyAlmostContraTstarCont);
        };
        break;
    }
    return plan;
}

} // namespace

std::string_view name_of(Proposition p) { return info(p).wire; }

std::string_view statement_of(Proposition p) { return info(p).statement; }

std::optional<Proposition> proposition_from_name(std::string_view name)
{
    for (const auto& i : kPropositionTable)
        if (i.wire == name)
            return i.id;
    return std::nullopt;
}

bool preclosure_lemma_condition(const FunctionInstance& f)
{
    const Topology& x = f.domain().topology();
    const Topology& y = f.codomain();
    for (Subset s : y.regular_closeds()) {
        const Subset inner = x.closure(x.interior(f.preimage(s)));
        for (Subset v : y.regular_opens())
            if (s.subset_of(v) && !inner.subset_of(f.preimage(v)))
                return false;
    }
    return true;
}

bool preclosure_lemma_variant(const FunctionInstance& f)
{
    const Topology& x = f.domain().topology();
    const Topology& y = f.codomain();
    for (Subset s : y.regular_closeds()) {
        const Subset inner = x.interior(x.closure(f.preimage(s)));
        for (Subset v : y.regular_opens())
            if (s.subset_of(v) && !inner.subset_of(f.preimage(v)))
                return false;
    }
    return true;
}

Verdict verify_proposition(Proposition p, const SearchBounds& b)
{
    SearchBounds bounds = b;
    if (p == Proposition::PreclosureLemma)
        bounds.operators = {Operator(OperatorKind::IntCl)};
    PropositionPlan pp = plan_for(p);
    SearchPlan plan{pp.spaces, pp.counters, pp.check};
    return run_search(plan, bounds);
}

InstanceReport check_proposition_instance(Proposition p, const FunctionInstance& f)
{
    PropositionPlan pp = plan_for(p);
    for (const auto& c : pp.spaces) {
        const Topology& t = c.side == SpaceCondition::Side::Domain ? f.domain().topology() : f.codomain();
        if (!c.test(t))
            return {};
    }
    std::vector<std::uint64_t> scratch(pp.counters.size(), 0);
    return pp.check(f, scratch);
}

} // namespace optop
