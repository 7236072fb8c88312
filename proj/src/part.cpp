#include "bressoud/part.hpp"

#include <charconv>

#include "bressoud/errors.hpp"

namespace bressoud {

std::strong_ordering cmp(const ExtPart& a, const ExtPart& b) {
    if (a.is_inf() && b.is_inf()) return std::strong_ordering::equal;
    if (a.is_inf()) return std::strong_ordering::greater;
    if (b.is_inf()) return std::strong_ordering::less;
    return cmp_parts(*a.finite, *b.finite);
}

std::strong_ordering cmp(const ExtPart& a, Part b) { return cmp(a, ExtPart::of(b)); }

std::optional<long long> floor_size_div(const ExtPart& x, int eta) {
    if (x.is_inf()) return std::nullopt;
    return static_cast<long long>(x.finite->size) / eta;
}

std::string render_part(Part p) {
    std::string s = std::to_string(p.size);
    if (p.overlined) s += '~';
    return s;
}

std::string render_ext(const ExtPart& x) { return x.is_inf() ? "inf" : render_part(*x.finite); }

Part parse_part_token(std::string_view token) {
    const std::string_view original = token;
    bool overlined = false;
    if (!token.empty() && token.back() == '~') {
        overlined = true;
        token.remove_suffix(1);
    }
    int size = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, size);
    if (token.empty() || ec != std::errc{} || ptr != last)
        throw ParseError("malformed part token '" + std::string(original) + "'");
    if (size < 1)
        throw ParseError("part size must be at least 1, got '" + std::string(original) + "'");
    return Part{size, overlined};
}

} // namespace bressoud
