#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bressoud/part.hpp"

namespace bressoud {

/* An overpartition: a weakly decreasing sequence of parts under the order
 * 1~ < 1 < 2~ < 2 < ..., with at most one overlined part per size. The
 * overlined copy of a size therefore always follows its non-overlined
 * copies. Instances are immutable once constructed. */
class Overpartition {
public:
    Overpartition() = default;

    /* Sorts into canonical order, then validates. */
    static Overpartition from_parts(std::vector<Part> parts);

    /* Validates an already canonically ordered sequence. */
    static Overpartition from_canonical(std::vector<Part> parts);

    /* Parses text such as "60,60,53~,3~"; the token order must already be
     * canonical (weakly decreasing). The empty string parses to the empty
     * overpartition. */
    static Overpartition parse(std::string_view text);

    const std::vector<Part>& parts() const { return parts_; }
    Part at1(std::size_t i) const { return parts_[i - 1]; } // 1-based subscripts
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long long weight() const;
    bool contains(Part p) const;

    std::string render() const;

    friend bool operator==(const Overpartition&, const Overpartition&) = default;

private:
    std::vector<Part> parts_;
};

/* An ordinary partition: weakly decreasing positive integers. */
class Partition {
public:
    Partition() = default;

    static Partition from_parts(std::vector<int> parts); // sorts descending
    static Partition parse(std::string_view text);       // order must be canonical

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long long weight() const;
    std::string render() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

struct Measures {
    long long weight = 0;
    int length = 0;
    int f_le_eta = 0; // parts not exceeding the non-overlined eta
};

Measures measures(const Overpartition& pi, int eta);

/* Number of overlined parts <= x whose size is not divisible by eta. */
int count_V(const Overpartition& pi, Part x, int eta);

/* Number of overlined parts >= x whose size is divisible by eta. */
int count_O(const Overpartition& pi, Part x, int eta);

/* s(pi): the smallest overlined part divisible by eta, or infinity. */
ExtPart smallest_overlined_multiple(const Overpartition& pi, int eta);

/* Erases every overline, giving the underlying ordinary partition. */
Partition strip_overlines(const Overpartition& pi);

} // namespace bressoud
