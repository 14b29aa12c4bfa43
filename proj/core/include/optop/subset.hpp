#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace optop {

using Mask = std::uint32_t;

/// Largest ground set any decider accepts.
inline constexpr int kMaxPoints = 10;
/// Largest ground set enumerate_topologies accepts.
inline constexpr int kMaxEnumerationPoints = 5;

/// A subset of a ground set {0, ..., n-1}, stored as a bitmask.
/// Equality is mask equality. The ground set size is not stored; callers
/// that need complements go through GroundSet or pass n explicitly.
class Subset {
public:
    constexpr Subset() = default;
    constexpr explicit Subset(Mask bits) : bits_(bits) {}

    static constexpr Subset empty() { return Subset{}; }
    static constexpr Subset full(int n) { return Subset{n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1}; }
    static constexpr Subset singleton(int point) { return Subset{Mask{1} << point}; }

    constexpr Mask bits() const { return bits_; }
    constexpr bool is_empty() const { return bits_ == 0; }
    constexpr bool contains(int point) const { return (bits_ >> point) & 1U; }
    constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr Subset with(int point) const { return Subset{bits_ | (Mask{1} << point)}; }

    friend constexpr Subset operator|(Subset a, Subset b) { return Subset{a.bits_ | b.bits_}; }
    friend constexpr Subset operator&(Subset a, Subset b) { return Subset{a.bits_ & b.bits_}; }
    /// Set difference.
    friend constexpr Subset operator-(Subset a, Subset b) { return Subset{a.bits_ & ~b.bits_}; }
    constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
    constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }

    friend constexpr auto operator<=>(Subset, Subset) = default;

private:
    Mask bits_ = 0;
};

constexpr Subset complement(Subset s, int n) { return Subset::full(n) - s; }

/// Number of subsets of an n-point set.
constexpr Mask subset_count(int n) { return Mask{1} << n; }

/// Ordered, named points. Names are presentation only; all math is on indices.
class GroundSet {
public:
    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> labels);

    /// Points labelled a, b, c, ...
    static GroundSet standard(int n);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int point) const { return labels_.at(point); }
    std::optional<int> index_of(std::string_view label) const;

    Subset full() const { return Subset::full(size()); }
    Subset complement(Subset s) const { return optop::complement(s, size()); }
    bool valid(Subset s) const { return s.subset_of(full()); }
    /// Throws InvalidSubset when s has bits outside the ground set.
    void require_valid(Subset s) const;

    Subset subset_of_labels(const std::vector<std::string>& names) const;
    std::vector<std::string> labels_of(Subset s) const;
    /// "{a,c}" style rendering.
    std::string format(Subset s) const;

    friend bool operator==(const GroundSet&, const GroundSet&) = default;

private:
    std::vector<std::string> labels_;
};

} // namespace optop
