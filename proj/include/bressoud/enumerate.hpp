#pragma once

#include <functional>
#include <set>
#include <vector>

#include "bressoud/families.hpp"

namespace bressoud {

/* Allowed part sizes in 1..n whose residue mod eta lies in residues, in
 * descending order. */
std::vector<int> allowed_sizes_desc(int n, const std::set<int>& residues, int eta);

/* Visits every canonical overpartition of weight n whose part sizes have an
 * allowed residue, each exactly once, in a fixed deterministic order. Parts
 * are generated largest size first; a size contributes any number of
 * non-overlined copies plus at most one overlined copy. */
void for_each_overpartition(int n, const std::set<int>& residues, int eta,
                            const std::function<void(const Overpartition&)>& fn);

std::vector<Overpartition> enumerate_overpartitions(int n, const std::set<int>& residues,
                                                    int eta);

/* Independent memoized count of the stream above: recursing on the largest
 * size, m >= 1 copies of one size can be realized in exactly two ways (with
 * or without an overline on the last copy). */
long long count_overpartitions_oracle(int n, const std::set<int>& residues, int eta);

/* Ordinary partitions of n under the same residue constraint. */
void for_each_partition(int n, const std::set<int>& residues, int eta,
                        const std::function<void(const Partition&)>& fn);

/* Residues {0, alpha_1, ..., alpha_lambda}. */
std::set<int> family_residues(const FamilyParams& p);

/* Number of weight-n members of the family, by exhaustive enumeration plus
 * the membership predicate. The classical families read j from p.j. */
long long count_family(FamilyId f, const FamilyParams& p, int n);

} // namespace bressoud
