#ifndef CB_CONSTRUCT_HPP
#define CB_CONSTRUCT_HPP

#include <optional>

#include "cb/code.hpp"

namespace cb {

/// Simplex code: one generator column per point of PG(k-1, q), in increasing
/// point-encoding order.  Parameters [(q^k-1)/(q-1), k, q^(k-1)].
LinearCode simplex(const FieldPtr& field, std::size_t k);

/// (Extended) Reed-Solomon code of length N and dimension K over GF(q).
/// Rows evaluate the monomials 1, x, ..., x^(K-1) at the points 0, 1, w, w^2,
/// ... in generator-power order; for N == q+1 a final column takes the
/// coefficient of x^(K-1) (the point at infinity).  MDS for every admissible
/// N, K.  Throws LengthTooLong when N > q+1.
LinearCode grs(const FieldPtr& field, std::size_t N, std::size_t K);

/// Longest-possible MDS outer code over GF(q^k) whose weight spread certifies
/// minimality after concatenation against base alphabet q: N = qK - (q-1),
/// D = (q-1)(K-1) + 1.  Requires K <= q^(k-1) + 1.
LinearCode mds_outer(const FieldPtr& field_qk, std::uint64_t base_q, std::size_t K);

/// Bundled reference generator matrices.
LinearCode fixture_ternary_935();  ///< [9, 3, 5] over GF(3)
LinearCode fixture_binary_1566();  ///< [15, 6, 6] over GF(2)

/// [4, 2, 3] MDS outer template over GF(q^k): rows (1, 1, 1, 0) and
/// (0, w^i, w^j, 1) with 0 < i < j < q^k - 1.
LinearCode fixture_mds_outer_423(const FieldPtr& field, std::uint64_t i, std::uint64_t j);

struct SearchResult {
    std::size_t n_min = 0;
    LinearCode witness;
};

/// Shortest projective code over GF(q) of dimension k whose columns form a
/// strong blocking set, found by scanning n-subsets of PG(k-1, q) in
/// lexicographic order from n = (q+1)(k-1) upward.  Throws NotFound when no
/// example exists with n <= n_max; BadParams outside q in {2, 3}, k in [2, 4]
/// unless allow_large is set.
SearchResult search_shortest_minimal(std::uint64_t q, std::size_t k, std::size_t n_max,
                                     bool allow_large = false);

}  // namespace cb

#endif
