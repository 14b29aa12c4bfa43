#include "optop/operator_space.hpp"

#include <stdexcept>

namespace optop {

namespace {

std::string_view builtin_name(OperatorKind k)
{
    switch (k) {
    case OperatorKind::Identity: return "identity";
    case OperatorKind::IntCl: return "int_cl";
    case OperatorKind::ClInt: return "cl_int";
    case OperatorKind::Cl: return "cl";
    case OperatorKind::IntClInt: return "int_cl_int";
    case OperatorKind::ClIntCl: return "cl_int_cl";
    case OperatorKind::Custom: break;
    }
    throw std::logic_error("custom operators have no builtin name");
}

} // namespace

Operator::Operator(OperatorKind builtin) : kind_(builtin), name_(builtin_name(builtin)) {}

Operator Operator::custom(std::string name, Map map)
{
    Operator op;
    op.kind_ = OperatorKind::Custom;
    op.name_ = "dsl:" + std::move(name);
    op.map_ = std::make_shared<const Map>(std::move(map));
    return op;
}

Subset Operator::apply(const Topology& t, Subset s) const
{
    switch (kind_) {
    case OperatorKind::Identity: return s;
    case OperatorKind::IntCl: return t.interior(t.closure(s));
    case OperatorKind::ClInt: return t.closure(t.interior(s));
    case OperatorKind::Cl: return t.closure(s);
    case OperatorKind::IntClInt: return t.interior(t.closure(t.interior(s)));
    case OperatorKind::ClIntCl: return t.closure(t.interior(t.closure(s)));
    case OperatorKind::Custom: {
        const Subset out = (*map_)(t, s);
        t.ground().require_valid(out);
        return out;
    }
    }
    throw std::logic_error("unknown OperatorKind");
}

std::optional<Operator> builtin_operator(std::string_view name)
{
    for (OperatorKind k : kBuiltinOperatorKinds)
        if (builtin_name(k) == name)
            return Operator(k);
    return std::nullopt;
}

OperatorSpace::OperatorSpace(std::shared_ptr<const Topology> t, Operator op)
    : topology_(std::move(t)), op_(std::move(op))
{
    const int n = topology_->points();
    const Mask count = subset_count(n);
    image_.resize(count);
    tstar_open_.resize(count);
    for (Mask m = 0; m < count; ++m) {
        image_[m] = op_.apply(*topology_, Subset{m});
        tstar_open_[m] = Subset{m}.subset_of(image_[m]) ? 1 : 0;
    }
    tstar_closure_.resize(count);
    for (Mask m = 0; m < count; ++m) {
        Subset result = topology_->full();
        for (Mask c = 0; c < count; ++c) {
            const Subset candidate{c};
            if (Subset{m}.subset_of(candidate) && tstar_open_[topology_->complement(candidate).bits()])
                result &= candidate;
        }
        tstar_closure_[m] = result;
    }
}

OperatorSpace bind_operator(std::shared_ptr<const Topology> t, Operator op)
{
    for (Subset u : t->opens()) {
        const Subset image = op.apply(*t, u);
        if (!u.subset_of(image))
            throw NotAssociated(u, "operator " + op.name() + " is not associated with the topology: open set " +
                                       t->ground().format(u) + " is not contained in T" +
                                       t->ground().format(u) + " = " + t->ground().format(image));
    }
    return OperatorSpace(std::move(t), std::move(op));
}

OperatorSpace bind_operator(const Topology& t, Operator op)
{
    return bind_operator(std::make_shared<const Topology>(t), std::move(op));
}

Subset apply_operator(const OperatorSpace& os, Subset s) { return os.apply(s); }

bool is_tstar_open(const OperatorSpace& os, Subset s) { return os.is_tstar_open(s); }

bool is_tstar_closed(const OperatorSpace& os, Subset s) { return os.is_tstar_closed(s); }

Subset tstar_closure(const OperatorSpace& os, Subset s) { return os.tstar_closure(s); }

} // namespace optop
