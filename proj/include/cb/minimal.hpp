#ifndef CB_MINIMAL_HPP
#define CB_MINIMAL_HPP

#include <optional>
#include <string>

#include "cb/code.hpp"

namespace cb {

enum class Verdict { Minimal, NotMinimal, CertifiedMinimal, Inconclusive };
enum class Method { BruteForce, ABCondition, OuterAB, SimplexConstantWeight };

const char* verdict_name(Verdict v);
const char* method_name(Method m);

/// A violating pair for a NotMinimal verdict: the support of `contained` is a
/// subset of the support of `container`, and the two codewords are not
/// proportional.
struct Witness {
    std::uint64_t container_msg = 0;
    std::uint64_t contained_msg = 0;
    std::vector<gf_elem> container;
    std::vector<gf_elem> contained;
};

struct Certificate {
    Verdict verdict = Verdict::Inconclusive;
    Method method = Method::BruteForce;
    std::optional<Witness> witness;
    std::string detail;  // human-readable numbers backing the verdict

    bool positive() const {
        return verdict == Verdict::Minimal || verdict == Verdict::CertifiedMinimal;
    }
};

/// Exhaustive check of one codeword: no other non-proportional codeword's
/// support may sit inside its support.  Throws ZeroCodeword for msg == 0 and
/// TooLarge past the pairwise guard.
Certificate is_minimal_codeword(const LinearCode& c, std::uint64_t msg);

/// Exhaustive check of the whole code over projective representatives.  On a
/// NotMinimal verdict the witness is the first violating pair in message
/// encoding order (container first, then contained).  Worker count > 1 splits
/// the scan; the verdict and witness do not depend on it.
Certificate is_minimal_code(const LinearCode& c, unsigned workers = 1);

/// Sufficient minimality test from the weight spread: certifies when
/// d/w > (q-1)/q, compared exactly in integers.  Never rejects.
Certificate ab_condition(const LinearCode& c);

/// Outer-code variant against a base alphabet of size base_q: certifies when
/// D/W > (base_q-1)/base_q for the enumerated extremal weights of c.
Certificate outer_ab(const LinearCode& c, std::uint64_t base_q);

}  // namespace cb

#endif
