#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace bressoud {

/* A single part: a positive size together with an overline flag. Parts carry
 * the total order 1~ < 1 < 2~ < 2 < ..., so the overlined copy of a size
 * sorts just below the non-overlined copy of the same size. */
struct Part {
    int size = 1;
    bool overlined = false;

    friend bool operator==(const Part&, const Part&) = default;
};

inline Part plain(int size) { return Part{size, false}; }
inline Part over(int size) { return Part{size, true}; }

/* Lexicographic on (size, overline rank) with the overlined copy ranking first. */
inline std::strong_ordering cmp_parts(Part a, Part b) {
    if (a.size != b.size) return a.size <=> b.size;
    return (a.overlined ? 0 : 1) <=> (b.overlined ? 0 : 1);
}

inline std::strong_ordering operator<=>(Part a, Part b) { return cmp_parts(a, b); }

/* Shifting a part preserves its overline flag. */
inline Part shifted(Part p, int delta) { return Part{p.size + delta, p.overlined}; }

/* a >= b, strengthened to a > b when strict is set. */
inline bool geq(Part a, Part b, bool strict) {
    auto c = cmp_parts(a, b);
    return strict ? std::is_gt(c) : std::is_gteq(c);
}

/* a <= b, strengthened to a < b when strict is set. */
inline bool leq(Part a, Part b, bool strict) {
    auto c = cmp_parts(a, b);
    return strict ? std::is_lt(c) : std::is_lteq(c);
}

/* A part or +infinity; infinity compares greater than every part. Values of
 * this kind arise as s(pi), the smallest overlined part divisible by eta,
 * and g(pi), the smallest leader of a band of width k-1. */
struct ExtPart {
    std::optional<Part> finite;

    static ExtPart inf() { return ExtPart{std::nullopt}; }
    static ExtPart of(Part p) { return ExtPart{p}; }
    bool is_inf() const { return !finite.has_value(); }

    friend bool operator==(const ExtPart&, const ExtPart&) = default;
};

std::strong_ordering cmp(const ExtPart& a, const ExtPart& b);
std::strong_ordering cmp(const ExtPart& a, Part b);

/* floor(size / eta); infinity propagates as nullopt. */
std::optional<long long> floor_size_div(const ExtPart& x, int eta);

/* Token forms: "50" plain, "50~" overlined, "inf" for infinity. */
std::string render_part(Part p);
std::string render_ext(const ExtPart& x);
Part parse_part_token(std::string_view token);

} // namespace bressoud
