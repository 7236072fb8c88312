#pragma once

#include <vector>

#include "bressoud/errors.hpp"

namespace bressoud {

/* The parameter tuple (alpha_1, ..., alpha_lambda; eta, k, r) shared by all
 * families, plus the parity selector j used by the classical A_j and B_j
 * families only. The residues must satisfy 0 < alpha_1 < ... < alpha_lambda
 * < eta together with the symmetry alpha_i = eta - alpha_{lambda+1-i}. */
struct FamilyParams {
    std::vector<int> alphas;
    int eta = 1;
    int k = 2;
    int r = 0;
    int j = 0; // consulted only by the classical A_j / B_j operations

    int lambda() const { return static_cast<int>(alphas.size()); }
    FamilyParams with_k(int new_k) const;

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/* Structural residue checks shared by every validator below. */
void validate_alphas(const FamilyParams& p);

/* B0bar / A0bar / window classification: k > r >= lambda >= 0 and
 * k - 1 > lambda. */
void validate_b0bar_params(const FamilyParams& p);

/* Bbar / B1, which the bijection also reaches with k replaced by k - 1:
 * k >= r >= lambda >= 0 and k - 1 >= lambda. */
void validate_bbar_params(const FamilyParams& p);

/* Classical B_j: k >= r >= lambda >= 0 and j in {0, 1}. */
void validate_classical_bj_params(const FamilyParams& p, int j);

/* Classical A_j: (2k + j) / 2 > r >= lambda >= 0 and j in {0, 1}. */
void validate_classical_aj_params(const FamilyParams& p, int j);

/* The reduction/augmentation machinery inspects bands of width k - 2, so it
 * additionally requires k >= 3. */
void validate_bijection_params(const FamilyParams& p);

} // namespace bressoud
