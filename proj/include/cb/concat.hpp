#ifndef CB_CONCAT_HPP
#define CB_CONCAT_HPP

#include "cb/code.hpp"
#include "cb/minimal.hpp"

namespace cb {

/// Outer code over GF(q^k) paired with an inner [n, k] code over GF(q).
/// The outer field must be the degree-k extension of the inner field (same
/// characteristic, order q^k with k = inner dimension).
struct ConcatSpec {
    LinearCode outer;
    LinearCode inner;

    void validate() const;  ///< throws FieldMismatch / BadDim
};

/// k-by-k matrix over the inner field representing multiplication by the
/// outer field's canonical generator w on GF(q^k) as a GF(q)-vector space:
/// the companion matrix of the minimal polynomial of w over GF(q).  When the
/// inner field is the prime field this is exactly the companion matrix of the
/// outer defining polynomial.
Matrix outer_generator_action(const FieldPtr& outer_field, const FieldPtr& inner_field);

/// Block substitution: every outer generator entry a = w^r becomes the k-by-k
/// block A^r (zero entries become zero blocks), each multiplied into the inner
/// generator matrix.  The result is the [N*n, K*k] concatenated code over
/// GF(q).
LinearCode concatenate(const ConcatSpec& spec);

/// Certify minimality of the concatenated code without enumerating it:
/// the inner code must be minimal (recognized simplex codes short-circuit via
/// their constant weight; everything else is brute-forced) and the outer
/// extremal weights must satisfy D/W > (q-1)/q.  When outer_is_mds is set the
/// enumeration of the outer code is skipped and D = N-K+1, W <= N are used.
Certificate certify_minimal_concat(const ConcatSpec& spec, bool outer_is_mds = false);

/// True when the code is a simplex up to column order and scaling: projective,
/// nondegenerate, and as long as the full point count for its dimension
/// (which forces the constant nonzero weight q^(k-1)).
bool looks_like_simplex(const LinearCode& c);

}  // namespace cb

#endif
