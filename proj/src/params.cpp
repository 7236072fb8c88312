#include "bressoud/params.hpp"

#include <string>

namespace bressoud {

namespace {

std::string tuple_text(const FamilyParams& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.alphas.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(p.alphas[i]);
    }
    s += ";" + std::to_string(p.eta) + "," + std::to_string(p.k) + "," + std::to_string(p.r) + ")";
    return s;
}

} // namespace

FamilyParams FamilyParams::with_k(int new_k) const {
    FamilyParams q = *this;
    q.k = new_k;
    return q;
}

void validate_alphas(const FamilyParams& p) {
    if (p.eta < 1) throw ParamError("eta must be a positive integer");
    const int lam = p.lambda();
    for (int i = 0; i < lam; ++i) {
        const int a = p.alphas[i];
        if (a <= 0 || a >= p.eta)
            throw ParamError("residues must satisfy 0 < alpha_i < eta in " + tuple_text(p));
        if (i > 0 && p.alphas[i - 1] >= a)
            throw ParamError("residues must be strictly increasing in " + tuple_text(p));
        if (a != p.eta - p.alphas[lam - 1 - i])
            throw ParamError("residues must satisfy alpha_i = eta - alpha_{lambda+1-i} in " +
                             tuple_text(p));
    }
    if (lam % 2 == 1 && p.eta % 2 != 0)
        throw ParamError("an odd number of residues requires even eta in " + tuple_text(p));
}

void validate_b0bar_params(const FamilyParams& p) {
    validate_alphas(p);
    const int lam = p.lambda();
    if (!(p.k > p.r && p.r >= lam && lam >= 0))
        throw ParamError("need k > r >= lambda >= 0 in " + tuple_text(p));
    if (!(p.k - 1 > lam)) throw ParamError("need k - 1 > lambda in " + tuple_text(p));
}

void validate_bbar_params(const FamilyParams& p) {
    validate_alphas(p);
    const int lam = p.lambda();
    if (!(p.k >= p.r && p.r >= lam && lam >= 0))
        throw ParamError("need k >= r >= lambda >= 0 in " + tuple_text(p));
    if (!(p.k - 1 >= lam)) throw ParamError("need k - 1 >= lambda in " + tuple_text(p));
}

void validate_classical_bj_params(const FamilyParams& p, int j) {
    validate_alphas(p);
    if (j != 0 && j != 1) throw ParamError("j must be 0 or 1");
    const int lam = p.lambda();
    if (!(p.k >= p.r && p.r >= lam && lam >= 0))
        throw ParamError("need k >= r >= lambda >= 0 in " + tuple_text(p));
}

void validate_classical_aj_params(const FamilyParams& p, int j) {
    validate_alphas(p);
    if (j != 0 && j != 1) throw ParamError("j must be 0 or 1");
    const int lam = p.lambda();
    if (!(2 * p.k + j > 2 * p.r && p.r >= lam && lam >= 0))
        throw ParamError("need (2k + j)/2 > r >= lambda >= 0 in " + tuple_text(p));
}

void validate_bijection_params(const FamilyParams& p) {
    validate_b0bar_params(p);
    if (p.k < 3)
        throw ParamError("the reduction/augmentation needs k >= 3 in " + tuple_text(p));
}

} // namespace bressoud
