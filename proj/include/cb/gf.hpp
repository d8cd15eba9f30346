#ifndef CB_GF_HPP
#define CB_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "cb/error.hpp"

namespace cb {

class Matrix;

/// Element of a finite field, encoded as an integer in [0, p^m).
/// The base-p digits of the encoding, least significant first, are the
/// coefficients of the element written in the power basis 1, x, ..., x^(m-1).
using gf_elem = std::uint64_t;

/// GF(p^m) with a fixed defining polynomial.
///
/// The polynomial is the lexicographically smallest primitive monic polynomial
/// of degree m over GF(p), comparing coefficient tuples (a0, ..., a_{m-1}).
/// This makes the field for a given (p, m) unique, so two codes agree on their
/// alphabet exactly when their (p, m) pairs agree.  Multiplication, inversion
/// and discrete logs go through exp/log tables once the order is small enough
/// to afford them; larger fields fall back to polynomial arithmetic.
class Field {
   public:
    /// Build (or fetch from the process-wide cache) GF(p^m).
    /// Throws NotPrime if p is not prime, Overflow if p^m > 2^63.
    static std::shared_ptr<const Field> get(std::uint64_t p, unsigned m);

    /// As get(), but from the field order q = p^m.  Throws NotPrime when q is
    /// not a prime power.
    static std::shared_ptr<const Field> of_order(std::uint64_t q);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    std::uint64_t order() const { return order_; }

    /// Monic defining polynomial as (a0, ..., a_{m-1}, 1).  For m == 1 this is
    /// (0, 1), i.e. p(x) = x, and arithmetic is plain arithmetic mod p.
    const std::vector<std::uint64_t>& modulus() const { return poly_; }

    /// Canonical multiplicative generator: the class of x (encoding p) for
    /// m >= 2, the smallest primitive root mod p for m == 1.
    gf_elem generator() const { return generator_; }

    bool has_tables() const { return !exp_.empty(); }

    gf_elem add(gf_elem a, gf_elem b) const;
    gf_elem sub(gf_elem a, gf_elem b) const;
    gf_elem neg(gf_elem a) const;
    gf_elem mul(gf_elem a, gf_elem b) const;
    gf_elem inv(gf_elem a) const;  ///< throws DivisionByZero on 0
    gf_elem div(gf_elem a, gf_elem b) const { return mul(a, inv(b)); }
    gf_elem pow(gf_elem a, std::uint64_t e) const;

    /// Discrete log base generator().  Throws LogOfZero on 0 and TooLarge
    /// when the field has no log table.
    std::uint64_t dlog(gf_elem a) const;
    /// generator() raised to r (r may exceed the group order).
    gf_elem exp(std::uint64_t r) const;

    /// Coefficient vector of a over the prime field, length m (phi map).
    std::vector<gf_elem> digits(gf_elem a) const;
    gf_elem from_digits(const std::vector<gf_elem>& d) const;

    void check_elem(gf_elem a) const {
        if (a >= order_) fail(Error::Kind::ValueOutOfRange, "field element out of range");
    }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

   private:
    Field(std::uint64_t p, unsigned m, std::vector<std::uint64_t> poly);

    std::uint64_t p_;
    unsigned m_;
    std::uint64_t order_;
    std::vector<std::uint64_t> poly_;
    gf_elem generator_ = 0;
    // exp_[r] = generator^r for r in [0, order-1); log_[a] defined for a != 0.
    std::vector<gf_elem> exp_;
    std::vector<std::uint64_t> log_;

    gf_elem mul_generic(gf_elem a, gf_elem b) const;
};

using FieldPtr = std::shared_ptr<const Field>;

/// m-by-m companion matrix of the defining polynomial, over GF(p): ones on the
/// superdiagonal, last row the negated low coefficients.  For m == 1 the
/// degenerate companion of p(x) = x is replaced by the 1x1 identity so that
/// scalar action stays multiplicative.
Matrix companion_matrix(const Field& f);

/// Matrix acting on coefficient rows as multiplication by a acts on elements:
/// digits(v) * matrix_rep(a) == digits(v * a).  Zero maps to the zero matrix,
/// nonzero a to companion^dlog(a); for m == 1 simply the 1x1 matrix [a].
Matrix matrix_rep(const Field& f, gf_elem a);

}  // namespace cb

#endif
