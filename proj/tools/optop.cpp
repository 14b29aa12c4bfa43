// optop: command-line front end for the operator-topology deciders.
//
// Exit codes: 0 holds/true, 1 counterexample/false, 2 usage or input error,
// 3 search stopped by --instance-limit before reaching a verdict.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "optop/io.hpp"

namespace {

using optop::io::Json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct Options {
    bool json = false;
    bool timing = false;
    bool list_classes = false;
    unsigned jobs = 1;
    std::string defs_path;

    std::string instance_path;
    std::vector<std::string> class_names;
    bool all_classes = false;

    std::string proposition;
    std::string antecedent;
    std::string consequent;
    std::string target;
    int max_points = -1;
    int min_points = 1;
    std::vector<std::string> operators;
    bool surjective = false;
    std::optional<std::uint64_t> instance_limit;

    int points = 0;
    bool count_only = false;

    std::string name;
    std::string subset;
};

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::optional<optop::dsl::Program> load_defs(const Options& o)
{
    if (o.defs_path.empty())
        return std::nullopt;
    return optop::dsl::Program::load(o.defs_path);
}

const optop::dsl::Program* ptr(const std::optional<optop::dsl::Program>& p) { return p ? &*p : nullptr; }

optop::SearchBounds bounds_from(const Options& o, int default_max, const optop::dsl::Program* defs)
{
    const int max = o.max_points < 0 ? default_max : o.max_points;
    optop::SearchBounds b;
    b.min_points_x = b.min_points_y = o.min_points;
    b.max_points_x = b.max_points_y = max;
    b.surjective_only = o.surjective;
    b.jobs = o.jobs;
    b.instance_limit = o.instance_limit;
    if (!o.operators.empty()) {
        b.operators.clear();
        for (const auto& name : o.operators)
            b.operators.push_back(optop::io::operator_from_name(name, defs));
    }
    return b;
}

int report(const optop::Verdict& v, const Options& o)
{
    if (o.json) {
        print_json(optop::io::to_json(v, o.timing));
    } else {
        std::cout << optop::name_of(v.outcome) << '\n'
                  << "checked: " << v.stats.checked << '\n'
                  << "qualifying: " << v.stats.qualifying << '\n'
                  << "hypotheses_satisfied: " << v.stats.hypotheses_satisfied << '\n';
        for (const auto& [name, value] : v.stats.counters)
            std::cout << name << ": " << value << '\n';
        if (o.timing)
            std::cout << "elapsed_ms: " << v.stats.elapsed_ms << '\n';
        if (v.witness) {
            for (const auto& [name, value] : v.witness->assignments)
                std::cout << "  " << name << " = " << (value ? "true" : "false") << '\n';
            std::cout << optop::io::to_json(v.witness->instance).dump(2) << '\n';
        }
    }
    switch (v.outcome) {
    case optop::Outcome::HoldsExhaustively: return kExitTrue;
    case optop::Outcome::Counterexample: return kExitFalse;
    case optop::Outcome::Inconclusive: return kExitInconclusive;
    }
    return kExitUsage;
}

int list_classes(const Options& o)
{
    if (o.json) {
        Json j;
        Json sets = Json::array();
        for (auto c : optop::kAllSetClasses)
            sets.push_back({{"name", optop::name_of(c)}, {"formula", optop::formula_of(c)}});
        Json funs = Json::array();
        for (auto c : optop::kAllFunctionClasses)
            funs.push_back({{"name", optop::name_of(c)}, {"formula", optop::formula_of(c)}});
        Json props = Json::array();
        for (auto p : optop::kAllPropositions)
            props.push_back({{"id", optop::name_of(p)}, {"statement", optop::statement_of(p)}});
        j["set_classes"] = std::move(sets);
        j["function_classes"] = std::move(funs);
        j["propositions"] = std::move(props);
        print_json(j);
        return kExitTrue;
    }
    std::cout << "set classes:\n";
    for (auto c : optop::kAllSetClasses)
        std::cout << "  " << optop::name_of(c) << "  " << optop::formula_of(c) << '\n';
    std::cout << "function classes:\n";
    for (auto c : optop::kAllFunctionClasses)
        std::cout << "  " << optop::name_of(c) << "  " << optop::formula_of(c) << '\n';
    std::cout << "propositions:\n";
    for (auto p : optop::kAllPropositions)
        std::cout << "  " << optop::name_of(p) << "  " << optop::statement_of(p) << '\n';
    return kExitTrue;
}

int cmd_check(const Options& o)
{
    auto defs = load_defs(o);
    const auto f = optop::io::instance_from_json(optop::io::read_file(o.instance_path), ptr(defs));
    std::vector<optop::FunctionClassId> classes;
    if (o.all_classes) {
        classes.assign(optop::kAllFunctionClasses.begin(), optop::kAllFunctionClasses.end());
    } else {
        if (o.class_names.empty())
            throw CLI::RequiredError("--class or --all");
        for (const auto& name : o.class_names) {
            auto c = optop::function_class_from_name(name);
            if (!c)
                throw optop::FormatError("unknown function class " + name);
            classes.push_back(*c);
        }
    }
    bool all = true;
    Json j = Json::object();
    for (auto c : classes) {
        const bool value = optop::satisfies(f, c);
        all = all && value;
        if (o.json)
            j[std::string(optop::name_of(c))] = value;
        else if (classes.size() == 1)
            std::cout << (value ? "true" : "false") << '\n';
        else
            std::cout << optop::name_of(c) << ": " << (value ? "true" : "false") << '\n';
    }
    if (o.json)
        print_json(j);
    return all ? kExitTrue : kExitFalse;
}

int cmd_verify(const Options& o)
{
    auto defs = load_defs(o);
    const auto b = bounds_from(o, 3, ptr(defs));
    if (!o.proposition.empty()) {
        if (!o.antecedent.empty() || !o.consequent.empty())
            throw CLI::ValidationError("--proposition excludes --antecedent/--consequent");
        auto p = optop::proposition_from_name(o.proposition);
        if (!p)
            throw optop::FormatError("unknown proposition " + o.proposition);
        return report(optop::verify_proposition(*p, b), o);
    }
    if (o.antecedent.empty() || o.consequent.empty())
        throw CLI::RequiredError("--proposition, or both --antecedent and --consequent");
    const auto a = optop::Condition::of(optop::dsl::Target::parse(o.antecedent, ptr(defs)), "antecedent");
    const auto c = optop::Condition::of(optop::dsl::Target::parse(o.consequent, ptr(defs)), "consequent");
    return report(optop::verify_implication(a, c, {}, b), o);
}

int cmd_search(const Options& o)
{
    auto defs = load_defs(o);
    const auto b = bounds_from(o, 4, ptr(defs));
    const auto t = optop::Condition::of(optop::dsl::Target::parse(o.target, ptr(defs)), "target");
    return report(optop::find_counterexample(t, b), o);
}

int cmd_enumerate(const Options& o)
{
    if (o.count_only) {
        std::uint64_t count = 0;
        optop::for_each_topology(o.points, [&](const optop::Topology&) { ++count; });
        if (o.json)
            print_json({{"points", o.points}, {"count", count}});
        else
            std::cout << count << '\n';
        return kExitTrue;
    }
    bool first = true;
    if (o.json)
        std::cout << "[";
    optop::for_each_topology(o.points, [&](const optop::Topology& t) {
        if (o.json) {
            std::cout << (first ? "\n  " : ",\n  ") << optop::io::to_json(t).dump();
        } else {
            const char* sep = "";
            for (auto s : t.opens()) {
                std::cout << sep << t.ground().format(s);
                sep = " ";
            }
            std::cout << '\n';
        }
        first = false;
    });
    if (o.json)
        std::cout << (first ? "]\n" : "\n]\n");
    return kExitTrue;
}

std::vector<std::string> split_labels(const std::string& text)
{
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '{' || c == '}') {
            if (!current.empty())
                out.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty())
        out.push_back(std::move(current));
    return out;
}

int cmd_eval(const Options& o)
{
    const auto defs = optop::dsl::Program::load(o.defs_path);
    const auto f = optop::io::instance_from_json(optop::io::read_file(o.instance_path), &defs);
    const auto d = defs.find(o.name);
    if (!d)
        throw optop::FormatError("no definition named " + o.name + " in " + o.defs_path);
    const auto& x = f.domain().topology();

    switch (d->kind) {
    case optop::dsl::DefinitionKind::FunClass: {
        const bool value = optop::dsl::eval_funclass(*d, f);
        if (o.json)
            print_json({{o.name, value}});
        else
            std::cout << (value ? "true" : "false") << '\n';
        return value ? kExitTrue : kExitFalse;
    }
    case optop::dsl::DefinitionKind::SetClass: {
        if (!o.subset.empty()) {
            const auto s = x.ground().subset_of_labels(split_labels(o.subset));
            const bool value = optop::dsl::eval_setclass(*d, f.domain(), s);
            if (o.json)
                print_json({{o.name, value}});
            else
                std::cout << (value ? "true" : "false") << '\n';
            return value ? kExitTrue : kExitFalse;
        }
        Json members = Json::array();
        for (optop::Mask m = 0; m < optop::subset_count(x.points()); ++m) {
            const optop::Subset s{m};
            if (!optop::dsl::eval_setclass(*d, f.domain(), s))
                continue;
            if (o.json)
                members.push_back(x.ground().labels_of(s));
            else
                std::cout << x.ground().format(s) << '\n';
        }
        if (o.json)
            print_json({{o.name, members}});
        return kExitTrue;
    }
    case optop::dsl::DefinitionKind::Operator: {
        Json table = Json::array();
        for (optop::Mask m = 0; m < optop::subset_count(x.points()); ++m) {
            const optop::Subset s{m};
            const auto image = optop::dsl::eval_operator(*d, x, s);
            if (o.json)
                table.push_back({{"set", x.ground().labels_of(s)}, {"image", x.ground().labels_of(image)}});
            else
                std::cout << x.ground().format(s) << " -> " << x.ground().format(image) << '\n';
        }
        if (o.json)
            print_json({{o.name, table}});
        return kExitTrue;
    }
    }
    return kExitUsage;
}

void add_search_flags(CLI::App* cmd, Options& o, const char* default_max)
{
    cmd->add_option("--max-points", o.max_points, std::string("Largest ground set on either side (default ") +
                                                      default_max + ")")
        ->check(CLI::Range(1, optop::kMaxSearchPoints));
    cmd->add_option("--min-points", o.min_points, "Smallest ground set on either side")
        ->check(CLI::Range(1, optop::kMaxSearchPoints));
    cmd->add_option("--operator", o.operators, "Operators to bind, in order (default int_cl)");
    cmd->add_flag("--surjective", o.surjective, "Only surjective maps");
    cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--instance-limit", o.instance_limit, "Stop INCONCLUSIVE after this many instances");
    cmd->add_flag("--timing", o.timing, "Report elapsed time");
    cmd->add_option("--defs", o.defs_path, "DSL definitions visible to formulas")->check(CLI::ExistingFile);
}

} // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Deciders and exhaustive searches for operator topological spaces"};
    app.require_subcommand(0, 1);
    app.add_flag("--json", o.json, "Write JSON to stdout");
    app.add_flag("--list-classes", o.list_classes, "Print the class and proposition catalogue");

    auto* check = app.add_subcommand("check", "Decide function classes on an instance file");
    check->add_option("--instance", o.instance_path, "Instance JSON")->required()->check(CLI::ExistingFile);
    check->add_option("--class", o.class_names, "Function class name(s)");
    check->add_flag("--all", o.all_classes, "Every function class");
    check->add_option("--defs", o.defs_path, "DSL file providing dsl:<name> operators")->check(CLI::ExistingFile);

    auto* verify = app.add_subcommand("verify", "Verify a proposition or implication exhaustively");
    verify->add_option("--proposition", o.proposition, "Proposition id, e.g. LEMMA_3_1");
    verify->add_option("--antecedent", o.antecedent, "Formula over f");
    verify->add_option("--consequent", o.consequent, "Formula over f");
    add_search_flags(verify, o, "3");

    auto* search = app.add_subcommand("search", "Find the first instance satisfying a formula");
    search->add_option("--target", o.target, "Formula over f")->required();
    add_search_flags(search, o, "4");

    auto* enumerate = app.add_subcommand("enumerate", "List or count the topologies on n points");
    enumerate->add_option("--points", o.points, "Number of points")
        ->required()
        ->check(CLI::Range(0, optop::kMaxEnumerationPoints));
    enumerate->add_flag("--count-only", o.count_only, "Print only the count");

    auto* eval = app.add_subcommand("eval", "Evaluate a DSL definition on an instance");
    eval->add_option("--defs", o.defs_path, "DSL file")->required()->check(CLI::ExistingFile);
    eval->add_option("--instance", o.instance_path, "Instance JSON")->required()->check(CLI::ExistingFile);
    eval->add_option("--name", o.name, "Definition name")->required();
    eval->add_option("--subset", o.subset, "Domain subset for a setclass, e.g. a,b");

    for (auto* sub : {check, verify, search, enumerate, eval})
        sub->add_flag("--json", o.json, "Write JSON to stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cerr, std::cerr);
        return kExitUsage;
    }

    try {
        if (o.list_classes)
            return list_classes(o);
        if (check->parsed())
            return cmd_check(o);
        if (verify->parsed())
            return cmd_verify(o);
        if (search->parsed())
            return cmd_search(o);
        if (enumerate->parsed())
            return cmd_enumerate(o);
        if (eval->parsed())
            return cmd_eval(o);
        std::cerr << app.help();
        return kExitUsage;
    } catch (const optop::dsl::Error& e) {
        std::cerr << "optop: " << e.what() << '\n';
    } catch (const optop::Error& e) {
        std::cerr << "optop: " << e.what() << '\n';
    } catch (const CLI::Error& e) {
        std::cerr << "optop: " << e.what() << '\n';
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "optop: " << e.what() << '\n';
    }
    return kExitUsage;
}
