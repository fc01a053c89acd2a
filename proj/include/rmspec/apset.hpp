#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace rmspec {

/// One arithmetic progression {start + i*step : 0 <= i < count}.
/// A singleton is stored with count == 1 and step == 1.
struct Segment {
    std::uint64_t start = 0;
    std::uint64_t step = 1;
    std::uint64_t count = 1;

    std::uint64_t last() const { return start + (count - 1) * step; }
    bool operator==(const Segment&) const = default;
};

/// Exact finite set of nonnegative integers, stored as disjoint arithmetic
/// progressions in a canonical form: two APSets are equal as sets iff their
/// segment lists are identical.  Canonicalization is a greedy left-to-right
/// scan over the sorted elements that extends each progression as far as it
/// goes; it depends only on the underlying set.
class APSet {
public:
    /// Default bound for explicit expansion (members and internal set ops).
    static constexpr std::uint64_t kExpansionBound = std::uint64_t{1} << 26;

    APSet() = default;

    static APSet from_values(std::vector<std::uint64_t> values);
    static APSet single(std::uint64_t v);
    /// Inclusive range {first, first+step, ...} <= last.  Empty if last < first.
    static APSet range(std::uint64_t first, std::uint64_t last, std::uint64_t step);

    const std::vector<Segment>& segments() const { return segments_; }
    bool empty() const { return segments_.empty(); }
    std::uint64_t cardinality() const;
    std::uint64_t min() const;  // throws std::logic_error on empty set
    std::uint64_t max() const;
    bool contains(std::uint64_t x) const;
    bool contains_all(const APSet& other) const;

    /// Sorted explicit elements.  Throws std::length_error if the cardinality
    /// exceeds the bound.
    std::vector<std::uint64_t> members(std::uint64_t bound = kExpansionBound) const;

    bool operator==(const APSet&) const = default;

    nlohmann::json to_json() const;
    static APSet from_json(const nlohmann::json& j);
    std::string to_string() const;

private:
    std::vector<Segment> segments_;
};

APSet set_union(const APSet& a, const APSet& b);
APSet set_difference(const APSet& a, const APSet& b);
APSet set_intersection(const APSet& a, const APSet& b);
/// {x+y : x in a, y in b}.  Throws std::overflow_error if a sum would not fit.
APSet sumset(const APSet& a, const APSet& b);
/// {n - x : x in a}.  Throws std::domain_error if max(a) > n.
APSet reflect(const APSet& a, std::uint64_t n);
/// {x in a : q | x}.
APSet filter_multiples(const APSet& a, std::uint64_t q);

}  // namespace rmspec
