#include "bressoud/overpartition.hpp"

#include <algorithm>

#include "bressoud/errors.hpp"

namespace bressoud {

namespace {

void validate_canonical_parts(const std::vector<Part>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].size < 1) throw ParseError("part size must be at least 1");
        if (i + 1 < parts.size()) {
            if (std::is_lt(cmp_parts(parts[i], parts[i + 1])))
                throw ParseError("parts must be weakly decreasing: '" + render_part(parts[i]) +
                                 "' precedes '" + render_part(parts[i + 1]) + "'");
            if (parts[i] == parts[i + 1] && parts[i].overlined)
                throw ParseError("duplicate overlined part of size " +
                                 std::to_string(parts[i].size));
        }
    }
}

std::vector<std::string_view> split_csv(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find(',', begin);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(begin, end - begin);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        tokens.push_back(tok);
        if (end == text.size()) break;
        begin = end + 1;
    }
    return tokens;
}

} // namespace

Overpartition Overpartition::from_canonical(std::vector<Part> parts) {
    validate_canonical_parts(parts);
    Overpartition pi;
    pi.parts_ = std::move(parts);
    return pi;
}

Overpartition Overpartition::from_parts(std::vector<Part> parts) {
    std::sort(parts.begin(), parts.end(),
              [](Part a, Part b) { return std::is_gt(cmp_parts(a, b)); });
    return from_canonical(std::move(parts));
}

Overpartition Overpartition::parse(std::string_view text) {
    if (text.empty()) return Overpartition{};
    std::vector<Part> parts;
    for (std::string_view tok : split_csv(text)) parts.push_back(parse_part_token(tok));
    return from_canonical(std::move(parts));
}

long long Overpartition::weight() const {
    long long w = 0;
    for (Part p : parts_) w += p.size;
    return w;
}

bool Overpartition::contains(Part p) const {
    return std::find(parts_.begin(), parts_.end(), p) != parts_.end();
}

std::string Overpartition::render() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += render_part(parts_[i]);
    }
    return out;
}

Partition Partition::from_parts(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    for (int p : parts)
        if (p < 1) throw ParseError("partition parts must be at least 1");
    Partition tau;
    tau.parts_ = std::move(parts);
    return tau;
}

Partition Partition::parse(std::string_view text) {
    if (text.empty()) return Partition{};
    std::vector<int> parts;
    for (std::string_view tok : split_csv(text)) {
        Part p = parse_part_token(tok);
        if (p.overlined)
            throw ParseError("ordinary partitions take no overlines: '" + render_part(p) + "'");
        parts.push_back(p.size);
    }
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1])
            throw ParseError("parts must be weakly decreasing: '" + std::to_string(parts[i]) +
                             "' precedes '" + std::to_string(parts[i + 1]) + "'");
    Partition tau;
    tau.parts_ = std::move(parts);
    return tau;
}

long long Partition::weight() const {
    long long w = 0;
    for (int p : parts_) w += p;
    return w;
}

std::string Partition::render() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

namespace {
void require_eta(int eta) {
    if (eta < 1) throw ParamError("eta must be a positive integer");
}
} // namespace

Measures measures(const Overpartition& pi, int eta) {
    require_eta(eta);
    Measures m;
    const Part bound = plain(eta);
    for (Part p : pi.parts()) {
        m.weight += p.size;
        ++m.length;
        if (leq(p, bound, false)) ++m.f_le_eta;
    }
    return m;
}

int count_V(const Overpartition& pi, Part x, int eta) {
    require_eta(eta);
    int count = 0;
    for (Part p : pi.parts())
        if (p.overlined && p.size % eta != 0 && leq(p, x, false)) ++count;
    return count;
}

int count_O(const Overpartition& pi, Part x, int eta) {
    require_eta(eta);
    int count = 0;
    for (Part p : pi.parts())
        if (p.overlined && p.size % eta == 0 && geq(p, x, false)) ++count;
    return count;
}

ExtPart smallest_overlined_multiple(const Overpartition& pi, int eta) {
    require_eta(eta);
    const auto& parts = pi.parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
        if (it->overlined && it->size % eta == 0) return ExtPart::of(*it);
    return ExtPart::inf();
}

Partition strip_overlines(const Overpartition& pi) {
    std::vector<int> sizes;
    sizes.reserve(pi.length());
    for (Part p : pi.parts()) sizes.push_back(p.size);
    return Partition::from_parts(std::move(sizes));
}

} // namespace bressoud
