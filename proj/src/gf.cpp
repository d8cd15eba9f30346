#include "cb/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "cb/matrix.hpp"

namespace cb {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Orders up to this bound get exp/log tables; beyond it multiplication runs on
// polynomial arithmetic and discrete logs are refused.
constexpr u64 kTableLimit = u64(1) << 20;
constexpr u64 kOrderLimit = u64(1) << 63;

u64 mulmod(u64 a, u64 b, u64 mod) { return u64(u128(a) * b % mod); }

u64 powmod(u64 a, u64 e, u64 mod) {
    u64 r = 1 % mod;
    a %= mod;
    while (e) {
        if (e & 1) r = mulmod(r, a, mod);
        a = mulmod(a, a, mod);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s && witness; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        auto step = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_into(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::vector<u64> distinct_prime_factors(u64 n) {
    std::vector<u64> f;
    factor_into(n, f);
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

// --- polynomial arithmetic over GF(p), used only while scanning for the
// defining polynomial (element arithmetic proper goes through the Field).

using Poly = std::vector<u64>;  // coefficients, low degree first, values < p

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
    // f is monic of degree m = f.size() - 1; result reduced below degree m.
    std::size_t m = f.size() - 1;
    std::vector<u128> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += u128(a[i]) * b[j];
    }
    for (auto& v : acc) v %= p;
    // reduce: x^m = -(a0 + a1 x + ... + a_{m-1} x^{m-1})
    for (std::size_t d = acc.size(); d-- > m;) {
        u64 c = u64(acc[d]);
        if (c == 0) continue;
        acc[d] = 0;
        for (std::size_t i = 0; i < m; ++i) {
            u64 s = mulmod(c, (p - f[i]) % p, p);
            acc[d - m + i] = (acc[d - m + i] + s) % p;
        }
    }
    Poly r(m, 0);
    for (std::size_t i = 0; i < m; ++i) r[i] = u64(acc[i]);
    return r;
}

Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 p) {
    Poly r(f.size() - 1, 0);
    r[0] = 1;
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

bool poly_is_one(const Poly& a) {
    if (a.empty() || a[0] != 1) return false;
    return std::all_of(a.begin() + 1, a.end(), [](u64 v) { return v == 0; });
}

// True iff x generates a multiplicative group of order p^m - 1 in
// GF(p)[x]/(f).  That forces f irreducible (a reducible modulus has fewer
// than p^m - 1 units), so the single test gives primitivity outright.
bool x_is_primitive(const Poly& f, u64 p, u64 group, const std::vector<u64>& group_factors) {
    if (f[0] == 0) return false;  // x would not be a unit
    Poly x(f.size() - 1, 0);
    if (x.size() < 2) return false;
    x[1] = 1;
    if (!poly_is_one(poly_powmod(x, group, f, p))) return false;
    for (u64 ell : group_factors) {
        if (poly_is_one(poly_powmod(x, group / ell, f, p))) return false;
    }
    return true;
}

u64 checked_pow(u64 p, unsigned m) {
    u128 r = 1;
    for (unsigned i = 0; i < m; ++i) {
        r *= p;
        if (r > kOrderLimit) fail(Error::Kind::Overflow, "field order p^m exceeds 2^63");
    }
    return u64(r);
}

u64 smallest_primitive_root(u64 p, const std::vector<u64>& group_factors) {
    if (p == 2) return 1;
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (u64 ell : group_factors) {
            if (powmod(g, (p - 1) / ell, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    fail(Error::Kind::NotFound, "no primitive root found (p not prime?)");
}

std::mutex cache_mutex;
std::map<std::pair<u64, unsigned>, std::shared_ptr<const Field>> field_cache;

}  // namespace

Field::Field(std::uint64_t p, unsigned m, std::vector<std::uint64_t> poly)
    : p_(p), m_(m), order_(checked_pow(p, m)), poly_(std::move(poly)) {
    u64 group = order_ - 1;
    std::vector<u64> gf = group > 0 ? distinct_prime_factors(group) : std::vector<u64>{};
    generator_ = (m_ == 1) ? smallest_primitive_root(p_, gf) : p_;
    if (order_ <= kTableLimit) {
        exp_.resize(group ? group : 1);
        log_.assign(order_, 0);
        gf_elem cur = 1;
        for (u64 r = 0; r < std::max<u64>(group, 1); ++r) {
            exp_[r] = cur;
            log_[cur] = r;
            cur = mul_generic(cur, generator_);
        }
    }
}

std::shared_ptr<const Field> Field::get(std::uint64_t p, unsigned m) {
    if (m < 1) fail(Error::Kind::BadParams, "field degree must be at least 1");
    if (!is_prime_u64(p)) fail(Error::Kind::NotPrime, "field characteristic must be prime");
    std::lock_guard<std::mutex> lk(cache_mutex);
    auto it = field_cache.find({p, m});
    if (it != field_cache.end()) return it->second;

    u64 order = checked_pow(p, m);
    std::vector<u64> poly;
    if (m == 1) {
        poly = {0, 1};  // p(x) = x
    } else {
        u64 group = order - 1;
        std::vector<u64> gf = distinct_prime_factors(group);
        // Scan monic polynomials x^m + a_{m-1} x^{m-1} + ... + a0 in
        // lexicographic order of the tuple (a0, ..., a_{m-1}).
        u64 count = order;  // p^m coefficient tuples
        bool found = false;
        for (u64 t = 0; t < count && !found; ++t) {
            Poly cand(m + 1, 0);
            cand[m] = 1;
            u64 rest = t;
            for (unsigned i = 0; i < m; ++i) {
                // a0 is the most significant digit of t so it varies slowest
                u64 div = 1;
                for (unsigned j = i + 1; j < m; ++j) div *= p;
                cand[i] = (rest / div) % p;
                rest %= div;
            }
            if (x_is_primitive(cand, p, group, gf)) {
                poly.assign(cand.begin(), cand.end());
                found = true;
            }
        }
        if (!found) fail(Error::Kind::NotFound, "no primitive polynomial found");
    }
    auto f = std::shared_ptr<const Field>(new Field(p, m, std::move(poly)));
    field_cache[{p, m}] = f;
    return f;
}

std::shared_ptr<const Field> Field::of_order(std::uint64_t q) {
    if (q < 2) fail(Error::Kind::NotPrime, "field order must be a prime power >= 2");
    std::vector<u64> f = distinct_prime_factors(q);
    if (f.size() != 1) fail(Error::Kind::NotPrime, "field order is not a prime power");
    u64 p = f[0];
    unsigned m = 0;
    u64 v = q;
    while (v > 1) v /= p, ++m;
    if (checked_pow(p, m) != q) fail(Error::Kind::NotPrime, "field order is not a prime power");
    return get(p, m);
}

gf_elem Field::add(gf_elem a, gf_elem b) const {
    if (m_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    // digit-wise addition, no carries between coefficients
    gf_elem r = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

gf_elem Field::neg(gf_elem a) const {
    if (m_ == 1) return (p_ - a) % p_;
    if (p_ == 2) return a;
    gf_elem r = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += ((p_ - a % p_) % p_) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

gf_elem Field::sub(gf_elem a, gf_elem b) const { return add(a, neg(b)); }

gf_elem Field::mul_generic(gf_elem a, gf_elem b) const {
    if (m_ == 1) return mulmod(a, b, p_);
    Poly pa(m_), pb(m_), f(m_ + 1);
    for (unsigned i = 0; i < m_; ++i) pa[i] = a % p_, a /= p_;
    for (unsigned i = 0; i < m_; ++i) pb[i] = b % p_, b /= p_;
    for (unsigned i = 0; i <= m_; ++i) f[i] = poly_[i];
    Poly pr = poly_mulmod(pa, pb, f, p_);
    gf_elem r = 0;
    for (unsigned i = m_; i-- > 0;) r = r * p_ + pr[i];
    return r;
}

gf_elem Field::mul(gf_elem a, gf_elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) {
        u64 s = log_[a] + log_[b];
        u64 group = order_ - 1;
        if (s >= group) s -= group;
        return exp_[s];
    }
    return mul_generic(a, b);
}

gf_elem Field::inv(gf_elem a) const {
    if (a == 0) fail(Error::Kind::DivisionByZero, "inverse of zero");
    if (!exp_.empty()) {
        u64 group = order_ - 1;
        u64 l = log_[a];
        return exp_[l == 0 ? 0 : group - l];
    }
    return pow(a, order_ - 2);
}

gf_elem Field::pow(gf_elem a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (!exp_.empty()) {
        u64 group = order_ - 1;
        return exp_[u64(u128(log_[a]) * (e % group) % group)];
    }
    gf_elem r = 1;
    while (e) {
        if (e & 1) r = mul_generic(r, a);
        a = mul_generic(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t Field::dlog(gf_elem a) const {
    if (a == 0) fail(Error::Kind::LogOfZero, "discrete log of zero");
    if (exp_.empty()) fail(Error::Kind::TooLarge, "field too large for discrete log table");
    return log_[a];
}

gf_elem Field::exp(std::uint64_t r) const {
    if (exp_.empty()) return pow(generator_, r);
    return exp_[r % (order_ - 1)];
}

std::vector<gf_elem> Field::digits(gf_elem a) const {
    std::vector<gf_elem> d(m_);
    for (unsigned i = 0; i < m_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

gf_elem Field::from_digits(const std::vector<gf_elem>& d) const {
    if (d.size() != m_) fail(Error::Kind::BadDim, "digit vector has wrong length");
    gf_elem r = 0;
    for (unsigned i = m_; i-- > 0;) {
        if (d[i] >= p_) fail(Error::Kind::ValueOutOfRange, "digit exceeds characteristic");
        r = r * p_ + d[i];
    }
    return r;
}

Matrix companion_matrix(const Field& f) {
    auto prime = Field::get(f.characteristic(), 1);
    unsigned m = f.degree();
    Matrix a(prime, m, m);
    if (m == 1) {
        a.set(0, 0, 1);
        return a;
    }
    for (unsigned i = 0; i + 1 < m; ++i) a.set(i, i + 1, 1);
    for (unsigned j = 0; j < m; ++j)
        a.set(m - 1, j, (f.characteristic() - f.modulus()[j]) % f.characteristic());
    return a;
}

Matrix matrix_rep(const Field& f, gf_elem a) {
    f.check_elem(a);
    auto prime = Field::get(f.characteristic(), 1);
    unsigned m = f.degree();
    if (m == 1) {
        Matrix r(prime, 1, 1);
        r.set(0, 0, a);
        return r;
    }
    if (a == 0) return Matrix(prime, m, m);
    return companion_matrix(f).pow(f.dlog(a));
}

}  // namespace cb
