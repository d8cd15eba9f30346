#include "cb/bounds.hpp"

#include <cmath>

namespace cb {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 checked_u64(u128 v, const char* what) {
    if (v > ~u64(0)) fail(Error::Kind::Overflow, std::string(what) + " overflows 64 bits");
    return u64(v);
}

u128 pow_u128(u64 base, u64 e, const char* what) {
    u128 r = 1;
    for (u64 i = 0; i < e; ++i) {
        if (r > (~u128(0)) / base) fail(Error::Kind::Overflow, std::string(what) + " overflows");
        r *= base;
    }
    return r;
}

}  // namespace

std::uint64_t sbs_lower_bound(std::size_t k, std::uint64_t q) {
    if (k < 2) fail(Error::Kind::BadDim, "bound defined for k >= 2");
    if (q < 2) fail(Error::Kind::BadParams, "q must be at least 2");
    return (q + 1) * (u64(k) - 1);
}

std::uint64_t sbs_upper_bound(std::size_t k, std::uint64_t q) {
    if (k < 2) fail(Error::Kind::BadDim, "bound defined for k >= 2");
    if (q < 2) fail(Error::Kind::BadParams, "q must be at least 2");
    if (q == 2) {
        double denom = std::log2(4.0 / 3.0);
        return u64(std::floor(double(2 * k - 1) / denom));
    }
    double factor = 2.0 / (1.0 + 1.0 / (double((q + 1) * (q + 1)) * std::log(double(q))));
    return (q + 1) * u64(std::ceil(factor * double(k - 1)));
}

double q_entropy(std::uint64_t q, double x) {
    if (q < 2) fail(Error::Kind::BadParams, "q must be at least 2");
    if (x < 0.0 || x > 1.0) fail(Error::Kind::DomainError, "entropy argument outside [0, 1]");
    double lq = std::log(double(q));
    double h = 0.0;
    if (x > 0.0) h += x * std::log(double(q - 1)) / lq - x * std::log(x) / lq;
    if (x < 1.0) h -= (1.0 - x) * std::log(1.0 - x) / lq;
    return h;
}

double gv_rate(std::uint64_t q, double delta) { return 1.0 - q_entropy(q, delta); }

std::pair<std::uint64_t, std::uint64_t> mds_outer_params(std::uint64_t q, std::uint64_t K) {
    if (q < 2 || K < 1) fail(Error::Kind::BadParams, "need q >= 2 and K >= 1");
    u64 n = checked_u64(u128(q) * K - (q - 1), "outer length");
    u64 d = checked_u64(u128(q - 1) * (K - 1) + 1, "outer distance");
    return {n, d};
}

TowerParams tower_params(std::uint64_t q0, std::uint64_t h, std::uint64_t n) {
    if (q0 < 2) fail(Error::Kind::BadParams, "q0 must be at least 2");
    if (h < 2) fail(Error::Kind::BadParams, "tower step h must be at least 2");
    if (n < 1) fail(Error::Kind::BadParams, "tower level n must be at least 1");

    TowerParams t;
    u128 high = pow_u128(q0, h * (n + 1), "tower length");
    u128 low = pow_u128(q0, h * n, "tower length");
    t.N = checked_u64(high - low - 1, "tower length");
    if (n % 2 == 0) {
        u64 a = checked_u64(pow_u128(q0, n * h / 2, "genus term") - 1, "genus term");
        t.lambda = checked_u64(u128(a) * a, "genus");
    } else {
        u64 a = checked_u64(pow_u128(q0, (n + 1) * h / 2, "genus term") - 1, "genus term");
        u64 b = checked_u64(pow_u128(q0, (n - 1) * h / 2, "genus term") - 1, "genus term");
        t.lambda = checked_u64(u128(a) * b, "genus");
    }
    t.n_n = t.N;
    t.m_n = (t.N - 1) / q0;
    if (t.m_n + 1 < t.lambda)
        fail(Error::Kind::BadParams, "level dimension bound is nonpositive at these parameters");
    t.k_n = t.m_n - t.lambda + 1;

    // concatenation against the 2h-dimensional simplex over GF(q0)
    u64 s2h = checked_u64((pow_u128(q0, 2 * h, "simplex length") - 1) / (q0 - 1), "simplex length");
    t.concat_len = checked_u64(u128(t.N) * s2h, "concatenated length");
    t.concat_dim = checked_u64(u128(2) * h * t.k_n, "concatenated dimension");
    // q0^(2h-1) * N * (1 - 1/q0) as an exact integer
    t.concat_dist_lb = checked_u64(pow_u128(q0, 2 * h - 2, "distance bound") * (q0 - 1) * t.N,
                                   "concatenated distance bound");
    if (h == 2) t.K_n = 4 * t.m_n - 4 * t.lambda + 4;

    // same arithmetic with the h-dimensional simplex
    u64 sh = checked_u64((pow_u128(q0, h, "simplex length") - 1) / (q0 - 1), "simplex length");
    t.example_len = checked_u64(u128(t.N) * sh, "example length");
    t.example_dim = checked_u64(u128(h) * t.k_n, "example dimension");
    t.example_dist_lb = checked_u64(pow_u128(q0, h - 1, "distance bound") * (t.N - t.m_n),
                                    "example distance bound");
    return t;
}

Rt4Params rt4_params(std::uint64_t q0) {
    if (q0 < 2) fail(Error::Kind::BadParams, "q0 must be at least 2");
    Rt4Params r;
    u128 q5 = pow_u128(q0, 5, "length");
    u128 q2 = u128(q0) * q0;
    r.n = checked_u64((q5 - 1) / (q0 - 1) * (q2 + 1), "length");
    r.d = checked_u64(pow_u128(q0, 6, "distance"), "distance");
    r.w = checked_u64(pow_u128(q0, 6, "weight") + pow_u128(q0, 4, "weight"), "weight");
    r.ratio = double(q0 * q0) / double(q0 * q0 + 1);
    return r;
}

SaturatingBounds saturating_bounds(std::size_t k, std::uint64_t q, std::size_t rho) {
    if (k < 3) fail(Error::Kind::BadParams, "saturating bounds need k >= 3");
    if (q < 2) fail(Error::Kind::BadParams, "q must be at least 2");
    if (rho < 1 || rho > k - 2) fail(Error::Kind::BadParams, "need 1 <= rho <= k-2");
    double power = std::pow(double(q), double(k - 1 - rho));
    SaturatingBounds b;
    b.lower = double(rho + 1) / std::exp(1.0) * power;
    b.upper = double(rho) * double(rho + 1) * (power / 2.0 + (power - 1.0) / double(q - 1));
    u64 km1 = u64(k) - 1;
    b.rho_eq_k_minus_2_upper = q * (km1 * (km1 - 1) / 2) + km1 * (km1 - 1);
    return b;
}

double rate_epsilon_threshold(std::uint64_t q0, std::uint64_t h, std::uint64_t dtilde) {
    if (q0 < 2 || h < 1 || dtilde < 1) fail(Error::Kind::BadParams, "need q0 >= 2, h >= 1, dtilde >= 1");
    double qh = std::pow(double(q0), double(h));
    if (qh <= 1.0) fail(Error::Kind::Overflow, "q0^h out of range");
    return 1.0 - 1.0 / (qh - 1.0) - (1.0 - 1.0 / double(q0)) / double(dtilde);
}

}  // namespace cb
