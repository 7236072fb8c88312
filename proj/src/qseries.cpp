#include "bressoud/qseries.hpp"

#include <limits>
#include <string>
#include <vector>

namespace bressoud {

namespace {

long long checked_add(long long a, long long b) {
    long long r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw SeriesError("64-bit overflow in addition");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw SeriesError("64-bit overflow in multiplication");
    return r;
}

TruncatedSeries from_dense(int bound, const std::vector<long long>& dense) {
    TruncatedSeries s(bound);
    for (int d = 0; d <= bound; ++d)
        if (dense[d] != 0) s.set_coeff(d, dense[d]);
    return s;
}

/* eta * twice / 2, which every product exponent reduces to. Rejects
 * non-integral, zero (a vanishing factor would zero the whole series) and
 * negative values. */
int half_exponent(int eta, long long twice, const char* what) {
    const long long num = static_cast<long long>(eta) * twice;
    if (num % 2 != 0) throw SeriesError(std::string("non-integral exponent ") + what);
    const long long e = num / 2;
    if (e == 0) throw SeriesError(std::string("DegenerateExponent: ") + what + " vanishes");
    if (e < 0) throw SeriesError(std::string("non-positive exponent ") + what);
    if (e > std::numeric_limits<int>::max()) throw SeriesError("exponent out of range");
    return static_cast<int>(e);
}

} // namespace

TruncatedSeries::TruncatedSeries(int bound) : bound_(bound) {
    if (bound < 0) throw SeriesError("truncation bound must be non-negative");
}

TruncatedSeries TruncatedSeries::one(int bound) {
    TruncatedSeries s(bound);
    s.set_coeff(0, 1);
    return s;
}

long long TruncatedSeries::coeff(int degree) const {
    if (degree < 0 || degree > bound_)
        throw SeriesError("degree " + std::to_string(degree) + " outside 0.." +
                          std::to_string(bound_));
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? 0 : it->second;
}

void TruncatedSeries::set_coeff(int degree, long long value) {
    if (degree < 0 || degree > bound_)
        throw SeriesError("degree " + std::to_string(degree) + " outside 0.." +
                          std::to_string(bound_));
    if (value == 0)
        coeffs_.erase(degree);
    else
        coeffs_[degree] = value;
}

TruncatedSeries product_factor(int sign, int a, int m, int N) {
    if (sign != 1 && sign != -1) throw SeriesError("sign must be +1 or -1");
    if (a < 1 || m < 1) throw SeriesError("product exponents must be positive");
    TruncatedSeries result(N);
    std::vector<long long> dense(static_cast<std::size_t>(N) + 1, 0);
    dense[0] = 1;
    for (long long e = a; e <= N; e += m) {
        /* Multiply in place by 1 + sign * q^e. */
        for (int d = N; d >= e; --d)
            dense[d] = checked_add(dense[d], checked_mul(sign, dense[d - e]));
    }
    return from_dense(N, dense);
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.bound() != b.bound())
        throw SeriesError("mismatched truncation bounds " + std::to_string(a.bound()) + " and " +
                          std::to_string(b.bound()));
    const int N = a.bound();
    std::vector<long long> dense(static_cast<std::size_t>(N) + 1, 0);
    for (const auto& [da, ca] : a.coeffs()) {
        for (const auto& [db, cb] : b.coeffs()) {
            if (da + db > N) break;
            dense[da + db] = checked_add(dense[da + db], checked_mul(ca, cb));
        }
    }
    return from_dense(N, dense);
}

TruncatedSeries series_inv(const TruncatedSeries& a) {
    const long long a0 = a.coeffs().count(0) ? a.coeffs().at(0) : 0;
    if (a0 != 1 && a0 != -1)
        throw SeriesError("inverse requires constant term +1 or -1, got " + std::to_string(a0));
    const int N = a.bound();
    std::vector<long long> b(static_cast<std::size_t>(N) + 1, 0);
    b[0] = a0;
    /* b_n = -(sum_{k >= 1} a_k b_{n-k}) / a_0. */
    for (int n = 1; n <= N; ++n) {
        long long acc = 0;
        for (const auto& [k, ak] : a.coeffs()) {
            if (k == 0) continue;
            if (k > n) break;
            acc = checked_add(acc, checked_mul(ak, b[n - k]));
        }
        b[n] = a0 == 1 ? -acc : acc;
    }
    return from_dense(N, b);
}

TruncatedSeries gf_Bj(const FamilyParams& p, int j, int N) {
    validate_alphas(p);
    if (j != 0 && j != 1) throw ParamError("j must be 0 or 1");
    const int lam = p.lambda();
    const int e1 = half_exponent(p.eta, 2LL * p.r - lam, "eta(r - lambda/2)");
    const int e2 =
        half_exponent(p.eta, 4LL * p.k - 2LL * p.r - lam + 2LL * j, "eta(2k - r - lambda/2 + j)");
    const int m = half_exponent(p.eta, 2LL * (2 * p.k - lam + j), "eta(2k - lambda + j)");
    TruncatedSeries acc = TruncatedSeries::one(N);
    for (int a : p.alphas) acc = series_mul(acc, product_factor(+1, a, p.eta, N));
    acc = series_mul(acc, product_factor(-1, e1, m, N));
    acc = series_mul(acc, product_factor(-1, e2, m, N));
    acc = series_mul(acc, product_factor(-1, m, m, N));
    return series_mul(acc, series_inv(product_factor(-1, p.eta, p.eta, N)));
}

TruncatedSeries gf_A0bar(const FamilyParams& p, int N) {
    validate_alphas(p);
    const int lam = p.lambda();
    const int e1 = half_exponent(p.eta, 2LL * p.r - lam, "eta(r - lambda/2)");
    const int e2 =
        half_exponent(p.eta, 4LL * p.k - 2LL * p.r - lam - 2LL, "eta(2k - r - lambda/2 - 1)");
    const int m = half_exponent(p.eta, 2LL * (2 * p.k - lam - 1), "eta(2k - lambda - 1)");
    TruncatedSeries acc = TruncatedSeries::one(N);
    for (int a : p.alphas) acc = series_mul(acc, product_factor(+1, a, p.eta, N));
    acc = series_mul(acc, product_factor(+1, p.eta, p.eta, N));
    acc = series_mul(acc, product_factor(-1, e1, m, N));
    acc = series_mul(acc, product_factor(-1, e2, m, N));
    acc = series_mul(acc, product_factor(-1, m, m, N));
    return series_mul(acc, series_inv(product_factor(-1, p.eta, p.eta, N)));
}

std::string series_to_csv(const TruncatedSeries& s) {
    std::string out = "degree,coefficient\n";
    for (int d = 0; d <= s.bound(); ++d)
        out += std::to_string(d) + "," + std::to_string(s.coeff(d)) + "\n";
    return out;
}

} // namespace bressoud
