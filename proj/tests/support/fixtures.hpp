#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "optop/function_classes.hpp"
#include "oracles.hpp"

namespace fixture {

using Sets = std::vector<std::vector<std::string>>;

inline optop::Topology space(int n, const Sets& opens)
{
    auto g = optop::GroundSet::standard(n);
    std::vector<optop::Subset> family;
    for (const auto& o : opens)
        family.push_back(g.subset_of_labels(o));
    return optop::make_topology(g, family);
}

inline optop::Subset set(const optop::Topology& t, const std::vector<std::string>& labels)
{
    return t.ground().subset_of_labels(labels);
}

inline std::shared_ptr<const optop::OperatorSpace> bind(const optop::Topology& t, optop::OperatorKind k)
{
    return std::make_shared<const optop::OperatorSpace>(
        optop::bind_operator(std::make_shared<const optop::Topology>(t), optop::Operator(k)));
}

inline optop::FunctionInstance identity(const optop::Topology& x, const optop::Topology& y,
                                        optop::OperatorKind k = optop::OperatorKind::IntCl)
{
    std::vector<int> map(x.points());
    for (int i = 0; i < x.points(); ++i)
        map[i] = i;
    return {bind(x, k), std::make_shared<const optop::Topology>(y), map};
}

// The three finite worked instances, on {a,b,c}.
inline optop::Topology tau_a() { return space(3, {{}, {"a"}, {"a", "b", "c"}}); }
inline optop::Topology delta_c_star() { return space(3, {{}, {"c"}, {"a", "c"}, {"b", "c"}, {"a", "b", "c"}}); }
inline optop::Topology tau_ab() { return space(3, {{}, {"a"}, {"b"}, {"a", "b"}, {"a", "b", "c"}}); }
inline optop::Topology tau_c() { return space(3, {{}, {"c"}, {"a", "b", "c"}}); }

inline optop::FunctionInstance second_example() { return identity(tau_a(), delta_c_star()); }
inline optop::FunctionInstance third_example() { return identity(tau_ab(), tau_ab()); }
inline optop::FunctionInstance fourth_example() { return identity(tau_c(), tau_ab()); }

/// Visits every instance with 1..max_points points on each side, pairing
/// the library object with its oracle twin.
template <typename Visit>
void for_each_instance(int max_points, std::initializer_list<optop::OperatorKind> ops, Visit&& visit)
{
    std::vector<std::vector<std::shared_ptr<const optop::Topology>>> tops(max_points + 1);
    for (int n = 1; n <= max_points; ++n)
        for (const auto& t : optop::enumerate_topologies(n))
            tops[n].push_back(std::make_shared<const optop::Topology>(t));

    for (auto k : ops)
        for (int nx = 1; nx <= max_points; ++nx)
            for (const auto& x : tops[nx]) {
                auto os = std::make_shared<const optop::OperatorSpace>(optop::bind_operator(x, optop::Operator(k)));
                const oracle::OpSpace ox{oracle::from(*x), k};
                for (int ny = 1; ny <= max_points; ++ny)
                    for (const auto& y : tops[ny]) {
                        const oracle::Space oy = oracle::from(*y);
                        std::vector<int> map(nx, 0);
                        for (;;) {
                            const optop::FunctionInstance f(os, y, map);
                            const oracle::Instance of{ox, oy, map};
                            visit(f, of);
                            int i = nx - 1;
                            while (i >= 0 && ++map[i] == ny)
                                map[i--] = 0;
                            if (i < 0)
                                break;
                        }
                    }
            }
}

} // namespace fixture
