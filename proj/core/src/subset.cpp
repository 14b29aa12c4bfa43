#include "optop/subset.hpp"

#include <set>
#include <sstream>

#include "optop/errors.hpp"

namespace optop {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels))
{
    if (static_cast<int>(labels_.size()) > kMaxPoints) {
        throw BoundsExceeded("ground set has " + std::to_string(labels_.size()) +
                             " points; at most " + std::to_string(kMaxPoints) + " are supported");
    }
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty())
            throw FormatError("point labels must be non-empty");
        if (!seen.insert(l).second)
            throw FormatError("duplicate point label '" + l + "'");
    }
}

GroundSet GroundSet::standard(int n)
{
    if (n < 0 || n > kMaxPoints)
        throw BoundsExceeded("ground set size " + std::to_string(n) + " out of range");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        labels.emplace_back(1, static_cast<char>('a' + i));
    return GroundSet(std::move(labels));
}

std::optional<int> GroundSet::index_of(std::string_view label) const
{
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label)
            return i;
    return std::nullopt;
}

void GroundSet::require_valid(Subset s) const
{
    if (!valid(s)) [[unlikely]]
        throw InvalidSubset("subset mask " + std::to_string(s.bits()) + " has bits outside a " +
                            std::to_string(size()) + "-point ground set");
}

Subset GroundSet::subset_of_labels(const std::vector<std::string>& names) const
{
    Subset s;
    for (const auto& n : names) {
        auto i = index_of(n);
        if (!i)
            throw FormatError("unknown point '" + n + "'");
        s = s.with(*i);
    }
    return s;
}

std::vector<std::string> GroundSet::labels_of(Subset s) const
{
    require_valid(s);
    std::vector<std::string> out;
    for (int i = 0; i < size(); ++i)
        if (s.contains(i))
            out.push_back(labels_[i]);
    return out;
}

std::string GroundSet::format(Subset s) const
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& l : labels_of(s)) {
        if (!first)
            os << ',';
        os << l;
        first = false;
    }
    os << '}';
    return os.str();
}

} // namespace optop
