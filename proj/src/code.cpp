#include "cb/code.hpp"

#include <bit>
#include <fstream>
#include <sstream>

namespace cb {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 checked_message_count(const LinearCode& c, u64 limit) {
    u128 total = 1;
    for (std::size_t i = 0; i < c.k(); ++i) {
        total *= c.field()->order();
        if (total > limit) fail(Error::Kind::TooLarge, "q^k exceeds the enumeration guard");
    }
    return u64(total);
}

// Packed GF(2) walk: Gray-code order flips one generator row per step, so each
// codeword costs O(words).  Weights are read off with popcount.
void binary_weight_walk(const LinearCode& c, std::vector<std::uint16_t>& weight_by_msg) {
    std::size_t n = c.n(), k = c.k();
    std::size_t words = (n + 63) / 64;
    std::vector<u64> rows(k * words, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (c.gen().at(i, j)) rows[i * words + j / 64] |= u64(1) << (j % 64);

    std::vector<u64> acc(words, 0);
    u64 total = u64(1) << k;
    weight_by_msg.assign(total, 0);
    u64 gray = 0;
    for (u64 i = 1; i < total; ++i) {
        u64 next = i ^ (i >> 1);
        u64 flipped = gray ^ next;
        std::size_t row = std::countr_zero(flipped);
        gray = next;
        std::size_t w = 0;
        for (std::size_t t = 0; t < words; ++t) {
            acc[t] ^= rows[row * words + t];
            w += std::popcount(acc[t]);
        }
        weight_by_msg[gray] = std::uint16_t(w);
    }
}

}  // namespace

std::size_t WeightDistribution::min_weight() const {
    for (std::size_t w = 1; w < counts.size(); ++w)
        if (counts[w]) return w;
    return 0;
}

std::size_t WeightDistribution::max_weight() const {
    for (std::size_t w = counts.size(); w-- > 1;)
        if (counts[w]) return w;
    return 0;
}

std::uint64_t WeightDistribution::total() const {
    u64 t = 0;
    for (u64 c : counts) t += c;
    return t;
}

LinearCode::LinearCode(Matrix gen) : gen_(std::move(gen)) {
    if (gen_.rows() == 0 || gen_.cols() == 0)
        fail(Error::Kind::BadDim, "generator matrix must be nonempty");
    if (gen_.rows() > gen_.cols())
        fail(Error::Kind::BadDim, "generator matrix has more rows than columns");
    if (gen_.rank() != gen_.rows())
        fail(Error::Kind::RankDeficient, "generator matrix rows are dependent");
}

LinearCode::LinearCode(const LinearCode& other) : gen_(other.gen_) {
    std::lock_guard<std::mutex> lock(other.cache_mutex_);
    weights_cache_ = other.weights_cache_;
}

LinearCode::LinearCode(LinearCode&& other) noexcept
    : gen_(std::move(other.gen_)), weights_cache_(std::move(other.weights_cache_)) {}

std::uint64_t LinearCode::codeword_count() const {
    u128 total = 1;
    for (std::size_t i = 0; i < k(); ++i) {
        total *= field()->order();
        if (total > kEnumLimit) fail(Error::Kind::TooLarge, "q^k exceeds the enumeration guard");
    }
    return u64(total);
}

std::vector<gf_elem> LinearCode::codeword(std::uint64_t msg) const {
    const Field& f = *field();
    std::vector<gf_elem> w(n(), 0);
    for (std::size_t i = 0; i < k(); ++i) {
        gf_elem d = msg % f.order();
        msg /= f.order();
        if (d == 0) continue;
        for (std::size_t j = 0; j < n(); ++j) w[j] = f.add(w[j], f.mul(d, gen_.at(i, j)));
    }
    if (msg != 0) fail(Error::Kind::ValueOutOfRange, "message encoding out of range");
    return w;
}

void for_each_codeword_weight(const LinearCode& c,
                              const std::function<void(std::uint64_t, std::size_t)>& fn) {
    const Field& f = *c.field();
    u64 q = f.order();
    std::size_t n = c.n(), k = c.k();
    u64 total = checked_message_count(c, kEnumLimit);

    if (q == 2 && total <= (u64(1) << 24)) {
        // The packed walk visits messages in Gray order, so buffer the weights
        // to report them in increasing encoding order.
        std::vector<std::uint16_t> weight_by_msg;
        binary_weight_walk(c, weight_by_msg);
        for (u64 msg = 0; msg < total; ++msg) fn(msg, weight_by_msg[msg]);
        return;
    }

    // Odometer over base-q digits; partial[i] holds the contribution of rows
    // i..k-1, so a carry touching digit t rebuilds only partial[t..0].
    // Scalar multiples of each row are precomputed.
    std::vector<gf_elem> scaled(k * q * n);
    for (std::size_t i = 0; i < k; ++i)
        for (u64 s = 0; s < q; ++s)
            for (std::size_t j = 0; j < n; ++j)
                scaled[(i * q + s) * n + j] = f.mul(s, c.gen().at(i, j));

    std::vector<gf_elem> partial((k + 1) * n, 0);  // partial[i] at offset i*n
    std::vector<u64> digit(k, 0);
    auto rebuild_from = [&](std::size_t t) {
        for (std::size_t i = t + 1; i-- > 0;) {
            const gf_elem* upper = &partial[(i + 1) * n];
            const gf_elem* row = &scaled[(i * q + digit[i]) * n];
            gf_elem* dst = &partial[i * n];
            for (std::size_t j = 0; j < n; ++j) dst[j] = f.add(upper[j], row[j]);
        }
    };
    rebuild_from(k - 1);
    for (u64 msg = 0;; ++msg) {
        const gf_elem* word = &partial[0];
        std::size_t w = 0;
        for (std::size_t j = 0; j < n; ++j) w += word[j] != 0;
        fn(msg, w);
        if (msg + 1 == total) break;
        std::size_t t = 0;
        while (digit[t] == q - 1) digit[t++] = 0;
        ++digit[t];
        rebuild_from(t);
    }
}

const WeightDistribution& LinearCode::weights() const {
    std::lock_guard<std::mutex> lk(cache_mutex_);
    if (!weights_cache_) {
        auto wd = std::make_shared<WeightDistribution>();
        wd->counts.assign(n() + 1, 0);
        for_each_codeword_weight(*this,
                                 [&](u64, std::size_t w) { ++wd->counts[w]; });
        weights_cache_ = std::move(wd);
    }
    return *weights_cache_;
}

std::vector<std::uint64_t> normalized_messages(const LinearCode& c) {
    u64 q = c.field()->order();
    u64 total = checked_message_count(c, kEnumLimit);
    std::vector<u64> out;
    out.reserve(std::size_t((total - 1) / (q - 1)));
    for (u64 msg = 1; msg < total; ++msg) {
        u64 v = msg;
        while (v % q == 0) v /= q;
        if (v % q == 1) out.push_back(msg);
    }
    return out;
}

std::vector<std::uint64_t> support_mask(const std::vector<gf_elem>& word) {
    std::vector<u64> mask((word.size() + 63) / 64, 0);
    for (std::size_t j = 0; j < word.size(); ++j)
        if (word[j]) mask[j / 64] |= u64(1) << (j % 64);
    return mask;
}

std::pair<bool, bool> degeneracy_flags(const LinearCode& c) {
    const Field& f = *c.field();
    std::size_t n = c.n(), k = c.k();
    bool nondegenerate = true;
    std::vector<std::vector<gf_elem>> cols(n, std::vector<gf_elem>(k));
    for (std::size_t j = 0; j < n; ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < k; ++i) {
            cols[j][i] = c.gen().at(i, j);
            if (cols[j][i]) zero = false;
        }
        if (zero) nondegenerate = false;
    }
    // Normalize each nonzero column so proportional columns collide.
    std::vector<std::vector<gf_elem>> norm = cols;
    for (auto& col : norm) {
        for (std::size_t i = 0; i < k; ++i) {
            if (col[i]) {
                gf_elem scale = f.inv(col[i]);
                for (std::size_t t = 0; t < k; ++t) col[t] = f.mul(col[t], scale);
                break;
            }
        }
    }
    bool projective = nondegenerate;
    for (std::size_t a = 0; a < n && projective; ++a)
        for (std::size_t b = a + 1; b < n && projective; ++b)
            if (norm[a] == norm[b]) projective = false;
    return {projective, nondegenerate};
}

LinearCode dual(const LinearCode& c) {
    if (c.k() == c.n())
        fail(Error::Kind::BadDim, "dual of the full space has dimension zero");
    const Field& f = *c.field();
    std::vector<std::size_t> pivots;
    Matrix r = c.gen().rref(&pivots);
    std::size_t n = c.n(), k = c.k();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    Matrix h(c.field(), n - k, n);
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        h.set(row, j, 1);
        for (std::size_t i = 0; i < k; ++i) h.set(row, pivots[i], f.neg(r.at(i, j)));
        ++row;
    }
    return LinearCode(h);
}

std::size_t covering_radius(const LinearCode& c) {
    if (c.k() == c.n()) return 0;
    const Field& f = *c.field();
    u64 q = f.order();
    std::size_t n = c.n(), red = c.n() - c.k();
    u128 space = 1;
    for (std::size_t i = 0; i < red; ++i) {
        space *= q;
        if (space > kPairLimit) fail(Error::Kind::TooLarge, "syndrome space exceeds the guard");
    }
    u64 syndromes = u64(space);

    LinearCode d = dual(c);  // rows of d.gen() are parity checks for c
    // Column j of the parity-check matrix, encoded as a base-q integer.
    std::vector<u64> col_code(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        u64 enc = 0;
        for (std::size_t i = red; i-- > 0;) enc = enc * q + d.gen().at(i, j);
        col_code[j] = enc;
    }
    auto syndrome_add = [&](u64 enc, std::size_t j, gf_elem scale) {
        // add scale * column j to an encoded syndrome, digit by digit
        u64 out = 0, mult = 1, a = enc, b = col_code[j];
        for (std::size_t i = 0; i < red; ++i) {
            gf_elem s = f.add(gf_elem(a % q), f.mul(scale, gf_elem(b % q)));
            out += u64(s) * mult;
            a /= q;
            b /= q;
            mult *= q;
        }
        return out;
    };

    std::vector<char> seen(syndromes, 0);
    seen[0] = 1;
    u64 found = 1;
    std::size_t radius = 0;
    // Weight-ordered vector enumeration: supports by combination, nonzero
    // coefficient patterns by odometer.
    for (std::size_t w = 1; w <= n && found < syndromes; ++w) {
        std::vector<std::size_t> comb(w);
        for (std::size_t i = 0; i < w; ++i) comb[i] = i;
        bool more = true;
        while (more && found < syndromes) {
            std::vector<gf_elem> coeff(w, 1);
            while (true) {
                u64 s = 0;
                for (std::size_t i = 0; i < w; ++i) s = syndrome_add(s, comb[i], coeff[i]);
                if (!seen[s]) {
                    seen[s] = 1;
                    ++found;
                    radius = w;
                    if (found == syndromes) break;
                }
                std::size_t t = 0;
                while (t < w && coeff[t] == q - 1) coeff[t++] = 1;
                if (t == w) break;
                ++coeff[t];
            }
            // next combination in lexicographic order
            std::size_t i = w;
            while (i-- > 0) {
                if (comb[i] + (w - i) < n) {
                    ++comb[i];
                    for (std::size_t t = i + 1; t < w; ++t) comb[t] = comb[t - 1] + 1;
                    break;
                }
                if (i == 0) more = false;
            }
        }
    }
    return radius;
}

// --- .gmat -----------------------------------------------------------------

namespace {

std::vector<u64> tokenize_numbers(const std::string& text) {
    std::string stripped;
    stripped.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            if (i < text.size()) stripped += '\n';
            continue;
        }
        stripped += text[i];
    }
    std::istringstream in(stripped);
    std::vector<u64> nums;
    std::string tok;
    while (in >> tok) {
        u64 v = 0;
        std::size_t pos = 0;
        try {
            v = std::stoull(tok, &pos);
        } catch (const std::exception&) {
            fail(Error::Kind::Syntax, "expected a nonnegative integer, got '" + tok + "'");
        }
        if (pos != tok.size())
            fail(Error::Kind::Syntax, "expected a nonnegative integer, got '" + tok + "'");
        nums.push_back(v);
    }
    return nums;
}

}  // namespace

LinearCode parse_gmat(const std::string& text) {
    std::vector<u64> nums = tokenize_numbers(text);
    if (nums.size() < 4) fail(Error::Kind::Syntax, "gmat header needs four integers: p m n k");
    u64 p = nums[0], m = nums[1], n = nums[2], k = nums[3];
    if (m == 0 || m > 63) fail(Error::Kind::Syntax, "gmat field degree out of range");
    if (n == 0 || k == 0) fail(Error::Kind::Syntax, "gmat dimensions must be positive");
    auto field = Field::get(p, unsigned(m));
    if (nums.size() != 4 + n * k)
        fail(Error::Kind::Syntax, "gmat entry count does not match n*k");
    Matrix g(field, std::size_t(k), std::size_t(n));
    for (u64 i = 0; i < k; ++i)
        for (u64 j = 0; j < n; ++j) {
            u64 v = nums[4 + i * n + j];
            if (v >= field->order())
                fail(Error::Kind::ValueOutOfRange, "gmat entry exceeds field order");
            g.set(std::size_t(i), std::size_t(j), v);
        }
    return LinearCode(std::move(g));
}

std::string write_gmat(const LinearCode& c) {
    std::ostringstream out;
    out << c.field()->characteristic() << ' ' << c.field()->degree() << ' ' << c.n() << ' '
        << c.k() << '\n';
    for (std::size_t i = 0; i < c.k(); ++i) {
        for (std::size_t j = 0; j < c.n(); ++j) {
            if (j) out << ' ';
            out << c.gen().at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

LinearCode read_gmat_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(Error::Kind::Syntax, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_gmat(buf.str());
}

void write_gmat_file(const LinearCode& c, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) fail(Error::Kind::Syntax, "cannot open " + path.string() + " for writing");
    out << write_gmat(c);
}

}  // namespace cb
