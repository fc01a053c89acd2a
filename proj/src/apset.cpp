#include "rmspec/apset.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace rmspec {

namespace {

// Greedy canonicalization of a sorted, duplicate-free value list.
std::vector<Segment> compress(const std::vector<std::uint64_t>& v) {
    std::vector<Segment> segs;
    std::size_t i = 0;
    while (i < v.size()) {
        if (i + 1 == v.size()) {
            segs.push_back({v[i], 1, 1});
            break;
        }
        const std::uint64_t step = v[i + 1] - v[i];
        std::size_t j = i + 1;
        while (j + 1 < v.size() && v[j + 1] - v[j] == step) ++j;
        const std::uint64_t count = j - i + 1;
        segs.push_back({v[i], count == 1 ? 1 : step, count});
        i = j + 1;
    }
    return segs;
}

}  // namespace

APSet APSet::from_values(std::vector<std::uint64_t> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    APSet s;
    s.segments_ = compress(values);
    return s;
}

APSet APSet::single(std::uint64_t v) { return from_values({v}); }

APSet APSet::range(std::uint64_t first, std::uint64_t last, std::uint64_t step) {
    if (step == 0) throw std::invalid_argument("APSet::range: step must be positive");
    if (last < first) return {};
    const std::uint64_t count = (last - first) / step + 1;
    APSet s;
    s.segments_.push_back({first, count == 1 ? 1 : step, count});
    return s;
}

std::uint64_t APSet::cardinality() const {
    std::uint64_t n = 0;
    for (const Segment& s : segments_) n += s.count;
    return n;
}

std::uint64_t APSet::min() const {
    if (empty()) throw std::logic_error("APSet::min on empty set");
    return segments_.front().start;
}

std::uint64_t APSet::max() const {
    if (empty()) throw std::logic_error("APSet::max on empty set");
    std::uint64_t m = 0;
    for (const Segment& s : segments_) m = std::max(m, s.last());
    return m;
}

bool APSet::contains(std::uint64_t x) const {
    for (const Segment& s : segments_) {
        if (x < s.start) continue;
        if (x > s.last()) continue;
        if ((x - s.start) % s.step == 0) return true;
    }
    return false;
}

bool APSet::contains_all(const APSet& other) const {
    for (const Segment& s : other.segments()) {
        for (std::uint64_t i = 0; i < s.count; ++i) {
            if (!contains(s.start + i * s.step)) return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> APSet::members(std::uint64_t bound) const {
    const std::uint64_t n = cardinality();
    if (n > bound) {
        throw std::length_error("APSet::members: cardinality " + std::to_string(n) +
                                " exceeds expansion bound " + std::to_string(bound));
    }
    std::vector<std::uint64_t> v;
    v.reserve(n);
    for (const Segment& s : segments_) {
        for (std::uint64_t i = 0; i < s.count; ++i) v.push_back(s.start + i * s.step);
    }
    std::sort(v.begin(), v.end());
    return v;
}

nlohmann::json APSet::to_json() const {
    nlohmann::ordered_json j;
    j["segments"] = nlohmann::ordered_json::array();
    for (const Segment& s : segments_) {
        j["segments"].push_back({{"start", s.start}, {"step", s.step}, {"count", s.count}});
    }
    j["cardinality"] = cardinality();
    return j;
}

APSet APSet::from_json(const nlohmann::json& j) {
    std::vector<std::uint64_t> values;
    for (const auto& js : j.at("segments")) {
        const Segment s{js.at("start").get<std::uint64_t>(), js.at("step").get<std::uint64_t>(),
                        js.at("count").get<std::uint64_t>()};
        for (std::uint64_t i = 0; i < s.count; ++i) values.push_back(s.start + i * s.step);
    }
    return from_values(std::move(values));
}

std::string APSet::to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const Segment& s : segments_) {
        if (!first) os << ", ";
        first = false;
        if (s.count == 1) {
            os << s.start;
        } else {
            os << s.start << ".." << s.last() << " step " << s.step;
        }
    }
    os << "}";
    return os.str();
}

APSet set_union(const APSet& a, const APSet& b) {
    std::vector<std::uint64_t> v = a.members();
    const std::vector<std::uint64_t> w = b.members();
    v.insert(v.end(), w.begin(), w.end());
    return APSet::from_values(std::move(v));
}

APSet set_difference(const APSet& a, const APSet& b) {
    const std::vector<std::uint64_t> va = a.members();
    std::vector<std::uint64_t> out;
    out.reserve(va.size());
    for (std::uint64_t x : va) {
        if (!b.contains(x)) out.push_back(x);
    }
    return APSet::from_values(std::move(out));
}

APSet set_intersection(const APSet& a, const APSet& b) {
    const std::vector<std::uint64_t> va = a.members();
    std::vector<std::uint64_t> out;
    for (std::uint64_t x : va) {
        if (b.contains(x)) out.push_back(x);
    }
    return APSet::from_values(std::move(out));
}

APSet sumset(const APSet& a, const APSet& b) {
    if (a.empty() || b.empty()) return {};
    const std::uint64_t maxsum = a.max() + b.max();
    if (maxsum < a.max()) throw std::overflow_error("sumset: result exceeds 64-bit range");

    // Pairwise segment sums.  Same-step segments merge into one progression;
    // otherwise the smaller segment is expanded into shifted copies of the other.
    std::vector<Segment> parts;
    for (const Segment& sa : a.segments()) {
        for (const Segment& sb : b.segments()) {
            if (sa.count == 1) {
                parts.push_back({sa.start + sb.start, sb.step, sb.count});
            } else if (sb.count == 1) {
                parts.push_back({sa.start + sb.start, sa.step, sa.count});
            } else if (sa.step == sb.step) {
                parts.push_back({sa.start + sb.start, sa.step, sa.count + sb.count - 1});
            } else {
                const Segment& small = sa.count <= sb.count ? sa : sb;
                const Segment& big = sa.count <= sb.count ? sb : sa;
                for (std::uint64_t i = 0; i < small.count; ++i) {
                    parts.push_back({big.start + small.start + i * small.step, big.step, big.count});
                }
            }
        }
    }

    std::uint64_t total = 0;
    for (const Segment& s : parts) total += s.count;
    if (total > APSet::kExpansionBound) {
        throw std::length_error("sumset: intermediate expansion exceeds bound");
    }
    std::vector<std::uint64_t> values;
    values.reserve(total);
    for (const Segment& s : parts) {
        for (std::uint64_t i = 0; i < s.count; ++i) values.push_back(s.start + i * s.step);
    }
    return APSet::from_values(std::move(values));
}

APSet reflect(const APSet& a, std::uint64_t n) {
    if (a.empty()) return {};
    if (a.max() > n) {
        throw std::domain_error("reflect: element " + std::to_string(a.max()) +
                                " exceeds reflection bound " + std::to_string(n));
    }
    std::vector<std::uint64_t> v = a.members();
    for (std::uint64_t& x : v) x = n - x;
    return APSet::from_values(std::move(v));
}

APSet filter_multiples(const APSet& a, std::uint64_t q) {
    if (q == 0) throw std::invalid_argument("filter_multiples: q must be positive");
    if (q == 1) return a;
    std::vector<std::uint64_t> out;
    for (std::uint64_t x : a.members()) {
        if (x % q == 0) out.push_back(x);
    }
    return APSet::from_values(std::move(out));
}

}  // namespace rmspec
