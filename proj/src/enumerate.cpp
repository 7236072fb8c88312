#include "bressoud/enumerate.hpp"

#include <algorithm>

namespace bressoud {

namespace {

long long mod(long long x, long long m) { return ((x % m) + m) % m; }

struct OverpartitionGen {
    const std::vector<int>& sizes;
    const std::function<void(const Overpartition&)>& fn;
    std::vector<Part> scratch;

    void run(int remaining, std::size_t idx) {
        if (remaining == 0) {
            fn(Overpartition::from_canonical(scratch));
            return;
        }
        if (idx == sizes.size()) return;
        const int s = sizes[idx];
        run(remaining, idx + 1);
        for (int m = 1; m * s <= remaining; ++m) {
            /* m copies, none overlined. */
            for (int c = 0; c < m; ++c) scratch.push_back(plain(s));
            run(remaining - m * s, idx + 1);
            /* m copies with the last one overlined. */
            scratch.back() = over(s);
            run(remaining - m * s, idx + 1);
            scratch.resize(scratch.size() - m);
        }
    }
};

struct PartitionGen {
    const std::vector<int>& sizes;
    const std::function<void(const Partition&)>& fn;
    std::vector<int> scratch;

    void run(int remaining, std::size_t idx) {
        if (remaining == 0) {
            Partition tau = Partition::from_parts(scratch);
            fn(tau);
            return;
        }
        if (idx == sizes.size()) return;
        const int s = sizes[idx];
        run(remaining, idx + 1);
        for (int m = 1; m * s <= remaining; ++m) {
            for (int c = 0; c < m; ++c) scratch.push_back(s);
            run(remaining - m * s, idx + 1);
            scratch.resize(scratch.size() - m);
        }
    }
};

} // namespace

std::vector<int> allowed_sizes_desc(int n, const std::set<int>& residues, int eta) {
    if (eta < 1) throw ParamError("eta must be a positive integer");
    if (n < 0) throw ParamError("weight must be non-negative");
    std::vector<int> sizes;
    for (int s = n; s >= 1; --s)
        if (residues.count(static_cast<int>(mod(s, eta)))) sizes.push_back(s);
    return sizes;
}

void for_each_overpartition(int n, const std::set<int>& residues, int eta,
                            const std::function<void(const Overpartition&)>& fn) {
    const std::vector<int> sizes = allowed_sizes_desc(n, residues, eta);
    OverpartitionGen gen{sizes, fn, {}};
    gen.scratch.reserve(static_cast<std::size_t>(n) + 1);
    gen.run(n, 0);
}

std::vector<Overpartition> enumerate_overpartitions(int n, const std::set<int>& residues,
                                                    int eta) {
    std::vector<Overpartition> out;
    for_each_overpartition(n, residues, eta,
                           [&](const Overpartition& pi) { out.push_back(pi); });
    return out;
}

long long count_overpartitions_oracle(int n, const std::set<int>& residues, int eta) {
    const std::vector<int> sizes = allowed_sizes_desc(n, residues, eta);
    /* memo[w][i] = number of overpartitions of w using sizes[i..]. */
    std::vector<std::vector<long long>> memo(
        static_cast<std::size_t>(n) + 1,
        std::vector<long long>(sizes.size() + 1, -1));
    auto count = [&](auto&& self, int w, std::size_t i) -> long long {
        if (w == 0) return 1;
        if (i == sizes.size()) return 0;
        long long& slot = memo[w][i];
        if (slot >= 0) return slot;
        long long total = self(self, w, i + 1);
        for (int m = 1; m * sizes[i] <= w; ++m)
            total += 2 * self(self, w - m * sizes[i], i + 1);
        return slot = total;
    };
    return count(count, n, 0);
}

void for_each_partition(int n, const std::set<int>& residues, int eta,
                        const std::function<void(const Partition&)>& fn) {
    const std::vector<int> sizes = allowed_sizes_desc(n, residues, eta);
    PartitionGen gen{sizes, fn, {}};
    gen.scratch.reserve(static_cast<std::size_t>(n) + 1);
    gen.run(n, 0);
}

std::set<int> family_residues(const FamilyParams& p) {
    std::set<int> rs{0};
    for (int a : p.alphas) rs.insert(static_cast<int>(mod(a, p.eta)));
    return rs;
}

long long count_family(FamilyId f, const FamilyParams& p, int n) {
    if (n < 0) throw ParamError("weight must be non-negative");
    long long count = 0;
    switch (f) {
        case FamilyId::Bbar:
            validate_bbar_params(p);
            for_each_overpartition(n, family_residues(p), p.eta, [&](const Overpartition& pi) {
                if (is_in_Bbar(pi, p)) ++count;
            });
            break;
        case FamilyId::B0bar:
            validate_b0bar_params(p);
            for_each_overpartition(n, family_residues(p), p.eta, [&](const Overpartition& pi) {
                if (is_in_B0bar(pi, p)) ++count;
            });
            break;
        case FamilyId::B1:
            validate_bbar_params(p);
            for_each_overpartition(n, family_residues(p), p.eta, [&](const Overpartition& pi) {
                if (is_in_B1(pi, p)) ++count;
            });
            break;
        case FamilyId::A0bar:
            validate_b0bar_params(p);
            for_each_overpartition(n, family_residues(p), p.eta, [&](const Overpartition& pi) {
                if (is_in_A0bar(pi, p)) ++count;
            });
            break;
        case FamilyId::Aj:
            validate_classical_aj_params(p, p.j);
            for_each_partition(n, family_residues(p), p.eta, [&](const Partition& q) {
                if (is_in_Aj_classical(q, p, p.j)) ++count;
            });
            break;
        case FamilyId::Bj:
            validate_classical_bj_params(p, p.j);
            for_each_partition(n, family_residues(p), p.eta, [&](const Partition& q) {
                if (is_in_Bj_classical(q, p, p.j)) ++count;
            });
            break;
        case FamilyId::Deta:
            for_each_partition(n, {0}, p.eta, [&](const Partition& q) {
                if (is_in_Deta(q, p.eta)) ++count;
            });
            break;
    }
    return count;
}

} // namespace bressoud
