#ifndef CB_BOUNDS_HPP
#define CB_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "cb/error.hpp"

namespace cb {

/// Least size of a strong blocking set in PG(k-1, q): (q+1)(k-1).
/// Throws BadDim for k < 2.
std::uint64_t sbs_lower_bound(std::size_t k, std::uint64_t q);

/// Constructive upper bound on the least size: floor((2k-1)/log2(4/3)) for
/// q = 2, else (q+1) * ceil(2/(1 + 1/((q+1)^2 ln q)) * (k-1)).
std::uint64_t sbs_upper_bound(std::size_t k, std::uint64_t q);

/// q-ary entropy H_q(x) on [0, 1]; endpoints by continuity.
double q_entropy(std::uint64_t q, double x);

/// Asymptotic Gilbert-Varshamov rate 1 - H_q(delta).
double gv_rate(std::uint64_t q, double delta);

/// (N, D) for the longest weight-spread-certified MDS outer code over
/// GF(q^k): N = qK - (q-1), D = (q-1)(K-1) + 1.
std::pair<std::uint64_t, std::uint64_t> mds_outer_params(std::uint64_t q, std::uint64_t K);

/// Parameter record for the recursive curve-tower construction at level n
/// with extension step h (h >= 2).  concat_* applies the 2h-dimensional
/// simplex over GF(q0) to the level code; example_* applies the h-dimensional
/// simplex instead, matching the worked arithmetic for (q0, h, n) = (2, 3, 2).
struct TowerParams {
    std::uint64_t N = 0;        // code length at this level
    std::uint64_t lambda = 0;   // curve genus bound
    std::uint64_t n_n = 0;      // evaluation point count (equals N)
    std::uint64_t m_n = 0;      // divisor degree floor((N-1)/q0)
    std::uint64_t k_n = 0;      // dimension lower bound m_n - lambda + 1
    std::uint64_t concat_len = 0;
    std::uint64_t concat_dim = 0;
    std::uint64_t concat_dist_lb = 0;
    std::optional<std::uint64_t> K_n;  // 4*m_n - 4*lambda + 4, only for h == 2
    std::uint64_t example_len = 0;
    std::uint64_t example_dim = 0;
    std::uint64_t example_dist_lb = 0;
};

TowerParams tower_params(std::uint64_t q0, std::uint64_t h, std::uint64_t n);

/// Two-weight code family on a quadric: (length, dimension, min weight,
/// max weight, min/max weight ratio = q0^2/(q0^2+1)).
struct Rt4Params {
    std::uint64_t n = 0;
    std::uint64_t dim = 10;
    std::uint64_t d = 0;
    std::uint64_t w = 0;
    double ratio = 0.0;
};

Rt4Params rt4_params(std::uint64_t q0);

/// Size bounds for rho-saturating sets in PG(k-1, q^(rho+1)):
/// lower (rho+1)/e * q^(k-1-rho), upper rho(rho+1) * (q^(k-1-rho)/2 +
/// (q^(k-1-rho)-1)/(q-1)), plus the sharper value for rho = k-2:
/// q*C(k-1,2) + (k-1)(k-2).  Requires 1 <= rho <= k-2.
struct SaturatingBounds {
    double lower = 0.0;
    double upper = 0.0;
    std::uint64_t rho_eq_k_minus_2_upper = 0;
};

SaturatingBounds saturating_bounds(std::size_t k, std::uint64_t q, std::size_t rho);

/// Admissible defect threshold for the asymptotic rate construction built
/// from a [*, *, dtilde] two-weight code over GF(q0^h): parameters work for
/// any eps < 1 - 1/(q0^h - 1) - (1 - 1/q0)/dtilde.
double rate_epsilon_threshold(std::uint64_t q0, std::uint64_t h, std::uint64_t dtilde);

}  // namespace cb

#endif
