#include "cb/construct.hpp"

#include "cb/bounds.hpp"
#include "cb/geometry.hpp"

namespace cb {

LinearCode simplex(const FieldPtr& field, std::size_t k) {
    if (k < 1) fail(Error::Kind::BadDim, "simplex dimension must be at least 1");
    auto points = enumerate_points(field, k);
    Matrix g(field, k, points.size());
    for (std::size_t j = 0; j < points.size(); ++j)
        for (std::size_t i = 0; i < k; ++i) g.set(i, j, points[j].coords[i]);
    return LinearCode(std::move(g));
}

LinearCode grs(const FieldPtr& field, std::size_t N, std::size_t K) {
    const Field& f = *field;
    std::uint64_t q = f.order();
    if (K < 1 || K > N) fail(Error::Kind::BadParams, "need 1 <= K <= N");
    if (N > q + 1) fail(Error::Kind::LengthTooLong, "length exceeds q+1 evaluation points");
    Matrix g(field, K, N);
    bool infinity = (N == q + 1);
    std::size_t finite = infinity ? N - 1 : N;
    for (std::size_t j = 0; j < finite; ++j) {
        gf_elem x = (j == 0) ? 0 : f.exp(j - 1);
        for (std::size_t i = 0; i < K; ++i) g.set(i, j, f.pow(x, i));
    }
    if (infinity) g.set(K - 1, N - 1, 1);
    return LinearCode(std::move(g));
}

LinearCode mds_outer(const FieldPtr& field_qk, std::uint64_t base_q, std::size_t K) {
    auto [N, D] = mds_outer_params(base_q, K);
    (void)D;
    std::uint64_t Q = field_qk->order();
    // field must be a power of the base alphabet
    std::uint64_t v = Q;
    while (v > 1 && v % base_q == 0) v /= base_q;
    if (v != 1) fail(Error::Kind::FieldMismatch, "field order is not a power of the base");
    // K <= q^(k-1) + 1 keeps N within q^k + 1 evaluation points
    if (N > Q + 1) fail(Error::Kind::BadParams, "K exceeds the admissible outer dimension");
    return grs(field_qk, std::size_t(N), K);
}

namespace {

LinearCode from_rows(const FieldPtr& field, std::size_t k, std::size_t n,
                     const gf_elem* data) {
    Matrix g(field, k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) g.set(i, j, data[i * n + j]);
    return LinearCode(std::move(g));
}

}  // namespace

LinearCode fixture_ternary_935() {
    static const gf_elem rows[] = {
        1, 0, 0, 1, 2, 0, 0, 2, 2,  //
        0, 1, 0, 0, 0, 1, 2, 1, 2,  //
        0, 0, 1, 1, 1, 1, 1, 1, 1,
    };
    return from_rows(Field::get(3, 1), 3, 9, rows);
}

LinearCode fixture_binary_1566() {
    static const gf_elem rows[] = {
        1, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 0,  //
        0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1,  //
        0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 1, 0, 1, 1, 0,  //
        0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1,  //
        0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 1, 0, 1,  //
        0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 0, 1, 1,
    };
    return from_rows(Field::get(2, 1), 6, 15, rows);
}

LinearCode fixture_mds_outer_423(const FieldPtr& field, std::uint64_t i, std::uint64_t j) {
    const Field& f = *field;
    if (!(0 < i && i < j && j < f.order() - 1))
        fail(Error::Kind::BadParams, "need 0 < i < j < q^k - 1");
    Matrix g(field, 2, 4);
    g.set(0, 0, 1);
    g.set(0, 1, 1);
    g.set(0, 2, 1);
    g.set(1, 1, f.exp(i));
    g.set(1, 2, f.exp(j));
    g.set(1, 3, 1);
    return LinearCode(std::move(g));
}

SearchResult search_shortest_minimal(std::uint64_t q, std::size_t k, std::size_t n_max,
                                     bool allow_large) {
    if (!allow_large && !((q == 2 || q == 3) && k >= 2 && k <= 4))
        fail(Error::Kind::BadParams,
             "search restricted to q in {2,3}, 2 <= k <= 4 (pass allow_large to override)");
    if (k < 2) fail(Error::Kind::BadParams, "search needs k >= 2");
    auto field = Field::of_order(q);
    auto points = enumerate_points(field, k);
    std::size_t total = points.size();
    std::size_t start = std::max(k, std::size_t(sbs_lower_bound(k, q)));

    for (std::size_t n = start; n <= std::min(n_max, total); ++n) {
        std::vector<std::size_t> comb(n);
        for (std::size_t i = 0; i < n; ++i) comb[i] = i;
        while (true) {
            ProjectiveSystem s;
            s.field = field;
            s.k = k;
            for (std::size_t idx : comb) s.points.push_back(points[idx]);
            if (s.rank() == k && is_strong_blocking(s).strong) {
                SearchResult r{n, code_from_system(s)};
                return r;
            }
            // next n-combination in lexicographic order
            std::size_t i = n;
            bool advanced = false;
            while (i-- > 0) {
                if (comb[i] + (n - i) < total) {
                    ++comb[i];
                    for (std::size_t t = i + 1; t < n; ++t) comb[t] = comb[t - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }
    fail(Error::Kind::NotFound, "no strong blocking set found up to n_max");
}

}  // namespace cb
