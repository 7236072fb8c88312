#pragma once

#include <map>
#include <string>

#include "bressoud/params.hpp"

namespace bressoud {

/* A power series in q with exact 64-bit integer coefficients, truncated at
 * a fixed degree bound N. Only nonzero coefficients are stored; degrees
 * above the bound are never consulted. All arithmetic checks for overflow. */
class TruncatedSeries {
public:
    explicit TruncatedSeries(int bound);
    static TruncatedSeries one(int bound);

    int bound() const { return bound_; }
    long long coeff(int degree) const;
    void set_coeff(int degree, long long value);
    const std::map<int, long long>& coeffs() const { return coeffs_; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    int bound_;
    std::map<int, long long> coeffs_;
};

/* prod_{i >= 0, a + i*m <= N} (1 + sign * q^{a+i*m}). sign = +1 realizes
 * the truncation of (-q^a; q^m)_inf, sign = -1 that of (q^a; q^m)_inf. */
TruncatedSeries product_factor(int sign, int a, int m, int N);

/* Exact convolution truncated at the common bound. */
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/* Multiplicative inverse up to the bound; the constant term must be +-1. */
TruncatedSeries series_inv(const TruncatedSeries& a);

/* Generating function of the classical B_j family:
 *
 *   (-q^{a_1}, ..., -q^{a_lambda}; q^eta)_inf
 *     * (q^{e1}, q^{e2}, q^M; q^M)_inf / (q^eta; q^eta)_inf
 *
 * with e1 = eta(2r - lambda)/2, e2 = eta(4k - 2r - lambda + 2j)/2 and
 * M = eta(2k - lambda + j), truncated at N. */
TruncatedSeries gf_Bj(const FamilyParams& p, int j, int N);

/* Generating function of the A0bar family:
 *
 *   (-q^{a_1}, ..., -q^{a_lambda}, -q^eta; q^eta)_inf
 *     * (q^{e1}, q^{e2}, q^M; q^M)_inf / (q^eta; q^eta)_inf
 *
 * with e1 = eta(2r - lambda)/2, e2 = eta(4k - 2r - lambda - 2)/2 and
 * M = eta(2k - lambda - 1), truncated at N. */
TruncatedSeries gf_A0bar(const FamilyParams& p, int N);

/* Rows "degree,coefficient" for every degree 0..N. */
std::string series_to_csv(const TruncatedSeries& s);

} // namespace bressoud
