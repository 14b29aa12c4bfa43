#include "optop/io.hpp"

#include <fstream>
#include <sstream>

namespace optop::io {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object())
        throw FormatError(std::string("expected an object holding \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end())
        throw FormatError(std::string("missing field \"") + key + "\"");
    return *it;
}

std::string as_string(const Json& j, const char* what)
{
    if (!j.is_string())
        throw FormatError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

Subset subset_from_json(const GroundSet& g, const Json& j)
{
    if (!j.is_array())
        throw FormatError("an open set must be an array of point names");
    std::vector<std::string> names;
    for (const Json& e : j)
        names.push_back(as_string(e, "point name"));
    try {
        return g.subset_of_labels(names);
    } catch (const InvalidSubset& e) {
        throw FormatError(e.what());
    }
}

} // namespace

Json to_json(const Topology& t)
{
    Json j;
    j["points"] = t.ground().labels();
    Json opens = Json::array();
    for (Subset s : t.opens())
        opens.push_back(t.ground().labels_of(s));
    j["opens"] = std::move(opens);
    return j;
}

Topology topology_from_json(const Json& j)
{
    const Json& points = field(j, "points");
    if (!points.is_array())
        throw FormatError("\"points\" must be an array");
    std::vector<std::string> labels;
    for (const Json& p : points)
        labels.push_back(as_string(p, "point name"));
    GroundSet g(std::move(labels));

    const Json& opens = field(j, "opens");
    if (!opens.is_array())
        throw FormatError("\"opens\" must be an array");
    std::vector<Subset> family;
    for (const Json& o : opens)
        family.push_back(subset_from_json(g, o));
    return make_topology(std::move(g), family);
}

Operator operator_from_name(const std::string& name, const dsl::Program* defs)
{
    if (auto op = builtin_operator(name))
        return *op;
    constexpr std::string_view prefix = "dsl:";
    if (name.starts_with(prefix)) {
        const std::string def_name = name.substr(prefix.size());
        if (!defs)
            throw FormatError("operator " + name + " needs a definitions file");
        auto d = defs->find(def_name);
        if (!d || d->kind != dsl::DefinitionKind::Operator)
            throw FormatError("no operator definition named " + def_name);
        return dsl::as_operator(d);
    }
    throw FormatError("unknown operator " + name);
}

Json to_json(const FunctionInstance& f)
{
    const Topology& x = f.domain().topology();
    const Topology& y = f.codomain();
    Json j;
    j["domain"] = to_json(x);
    j["codomain"] = to_json(y);
    j["operator"] = f.domain().op().name();
    Json map = Json::object();
    for (int i = 0; i < x.points(); ++i)
        map[x.ground().label(i)] = y.ground().label(f.image_of(i));
    j["map"] = std::move(map);
    return j;
}

FunctionInstance instance_from_json(const Json& j, const dsl::Program* defs)
{
    auto domain = std::make_shared<const Topology>(topology_from_json(field(j, "domain")));
    auto codomain = std::make_shared<const Topology>(topology_from_json(field(j, "codomain")));
    const Operator op = operator_from_name(as_string(field(j, "operator"), "\"operator\""), defs);

    const Json& map = field(j, "map");
    if (!map.is_object())
        throw FormatError("\"map\" must be an object from domain points to codomain points");
    std::vector<int> images(domain->points(), -1);
    for (auto it = map.begin(); it != map.end(); ++it) {
        auto from = domain->ground().index_of(it.key());
        if (!from)
            throw FormatError("map key " + it.key() + " is not a domain point");
        auto to = codomain->ground().index_of(as_string(it.value(), "map value"));
        if (!to)
            throw FormatError("map value for " + it.key() + " is not a codomain point");
        images[*from] = *to;
    }
    for (int i = 0; i < domain->points(); ++i)
        if (images[i] < 0)
            throw FormatError("map has no image for " + domain->ground().label(i));

    auto space = std::make_shared<const OperatorSpace>(bind_operator(domain, op));
    return FunctionInstance(space, codomain, std::move(images));
}

Json to_json(const Verdict& v, bool include_timing)
{
    Json j;
    j["outcome"] = std::string(name_of(v.outcome));
    if (v.witness) {
        j["witness"] = to_json(v.witness->instance);
        Json a = Json::object();
        for (const auto& [name, value] : v.witness->assignments)
            a[name] = value;
        j["assignments"] = std::move(a);
    } else {
        j["witness"] = nullptr;
    }
    j["checked"] = v.stats.checked;
    j["qualifying"] = v.stats.qualifying;
    j["hypotheses_satisfied"] = v.stats.hypotheses_satisfied;
    Json counters = Json::object();
    for (const auto& [name, value] : v.stats.counters)
        counters[name] = value;
    j["counters"] = std::move(counters);
    if (include_timing)
        j["elapsed_ms"] = v.stats.elapsed_ms;
    return j;
}

Json parse_text(const std::string& text, const std::string& origin)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(origin + ": " + e.what());
    }
}

Json read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), path);
}

} // namespace optop::io
