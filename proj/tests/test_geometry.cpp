#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>

#include "cb/bounds.hpp"
#include "cb/concat.hpp"
#include "cb/construct.hpp"
#include "cb/geometry.hpp"
#include "cb/minimal.hpp"
#include "doctest.h"
#include "test_support.hpp"

using cb::Field;
using cb::gf_elem;
using cb::LinearCode;
using cb::Matrix;
using cb::ProjectivePoint;
using cb::ProjectiveSystem;
using u64 = std::uint64_t;

namespace {

template <class Fn>
std::optional<cb::Error::Kind> error_kind(Fn&& fn) {
    try {
        std::forward<Fn>(fn)();
    } catch (const cb::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

LinearCode from_rows(const cb::FieldPtr& field, const std::vector<std::vector<gf_elem>>& rows) {
    Matrix g(field, rows.size(), rows.at(0).size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) g.set(r, c, rows[r][c]);
    return LinearCode(std::move(g));
}

std::vector<std::vector<gf_elem>> columns_of(const LinearCode& c) {
    std::vector<std::vector<gf_elem>> cols(c.n(), std::vector<gf_elem>(c.k()));
    for (std::size_t j = 0; j < c.n(); ++j)
        for (std::size_t i = 0; i < c.k(); ++i) cols[j][i] = c.gen().at(i, j);
    return cols;
}

std::vector<std::vector<gf_elem>> coords_of(const ProjectiveSystem& s) {
    std::vector<std::vector<gf_elem>> out;
    for (const auto& p : s.points) out.push_back(p.coords);
    return out;
}

ProjectiveSystem system_of(const std::vector<std::vector<gf_elem>>& pts, const cb::FieldPtr& f) {
    ProjectiveSystem s;
    s.field = f;
    s.k = pts.at(0).size();
    for (const auto& p : pts) s.points.push_back(ProjectivePoint{p});
    return s;
}

std::vector<LinearCode> corpus() {
    std::vector<LinearCode> out;
    std::mt19937 rng(911);
    const std::tuple<unsigned, std::size_t, std::size_t> shapes[] = {
        {2, 2, 3}, {2, 3, 5}, {2, 3, 7}, {2, 4, 9}, {2, 4, 13},
        {3, 2, 4}, {3, 3, 7}, {3, 3, 11}, {3, 4, 12},
    };
    for (auto [q, k, n] : shapes)
        for (int rep = 0; rep < 3; ++rep)
            out.push_back(oracle::random_projective_code(rng, Field::get(q, 1), k, n));
    out.push_back(cb::simplex(Field::get(2, 1), 3));
    out.push_back(cb::simplex(Field::get(3, 1), 2));
    out.push_back(cb::fixture_ternary_935());
    out.push_back(cb::fixture_binary_1566());
    return out;
}

}  // namespace

TEST_CASE("point enumeration covers each projective class exactly once") {
    const std::tuple<unsigned, unsigned, std::size_t, std::size_t> cases[] = {
        {2, 1, 2, 3}, {2, 1, 3, 7}, {2, 2, 3, 21}, {3, 1, 4, 40}, {3, 2, 3, 91},
    };
    for (auto [p, m, k, count] : cases) {
        auto f = Field::get(p, m);
        auto pts = cb::enumerate_points(f, k);
        CHECK(pts.size() == count);
        // normalized, strictly increasing in encoding order, matching the
        // reference walk
        auto ref = oracle::normalized_vectors(f, k);
        REQUIRE(ref.size() == pts.size());
        u64 prev = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            CHECK(pts[i].coords == ref[i]);
            u64 enc = pts[i].encode(*f);
            CHECK((enc > prev || i == 0));
            prev = enc;
        }
    }
    CHECK(error_kind([] { cb::enumerate_points(Field::get(2, 1), 0); }) ==
          cb::Error::Kind::BadDim);
}

TEST_CASE("point normalization is scaling-invariant") {
    auto f = Field::get(3, 2);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<gf_elem> v(3);
        bool zero = true;
        for (auto& x : v) {
            x = rng() % f->order();
            if (x) zero = false;
        }
        if (zero) v[rng() % 3] = 1 + rng() % (f->order() - 1);
        gf_elem lambda = 1 + rng() % (f->order() - 1);
        std::vector<gf_elem> scaled(3);
        for (int i = 0; i < 3; ++i) scaled[i] = f->mul(lambda, v[i]);
        auto a = cb::normalize_point(*f, v);
        auto b = cb::normalize_point(*f, scaled);
        CHECK(a == b);
        // first nonzero coordinate pinned to 1
        for (gf_elem c : a.coords) {
            if (c == 0) continue;
            CHECK(c == 1);
            break;
        }
    }
    CHECK(error_kind([&] { cb::normalize_point(*f, {0, 0, 0}); }) ==
          cb::Error::Kind::DegenerateColumn);
}

TEST_CASE("simplex columns are the full point enumeration") {
    auto s = cb::system_from_code(cb::simplex(Field::get(2, 1), 3));
    auto all = cb::enumerate_points(Field::get(2, 1), 3);
    REQUIRE(s.points.size() == all.size());
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(s.points[i] == all[i]);
    CHECK(!s.has_multiplicity);
    CHECK(s.rank() == 3);
}

TEST_CASE("system extraction tracks multiplicity and rejects zero columns") {
    auto dup = cb::system_from_code(
        from_rows(Field::get(2, 1), {{1, 1, 0}, {0, 0, 1}}));
    CHECK(dup.has_multiplicity);
    CHECK(dup.size() == 3);
    CHECK(dup.support().size() == 2);
    CHECK(dup.rank() == 2);

    // Non-normalized columns come out normalized: (2, 2) lies on (1, 1).
    auto sys = cb::system_from_code(from_rows(Field::get(3, 1), {{1, 0, 2}, {0, 1, 2}}));
    CHECK(sys.points[2].coords == std::vector<gf_elem>{1, 1});

    Matrix g(Field::get(2, 1), 2, 3);
    g.set(0, 0, 1);
    g.set(1, 1, 1);  // column 2 stays zero; rank is still 2
    CHECK(error_kind([&] { cb::system_from_code(LinearCode(std::move(g))); }) ==
          cb::Error::Kind::DegenerateColumn);
}

TEST_CASE("system and code round-trip when columns are normalized") {
    auto s23 = cb::simplex(Field::get(2, 1), 3);
    auto b1566 = cb::fixture_binary_1566();
    for (const auto* c : {&s23, &b1566}) {
        auto back = cb::code_from_system(cb::system_from_code(*c));
        CHECK(back.gen() == c->gen());
    }
    CHECK(error_kind([] { cb::code_from_system(ProjectiveSystem{}); }) ==
          cb::Error::Kind::BadDim);
}

TEST_CASE("hyperplane profile of the simplex is flat and self-certifying") {
    auto prof = cb::hyperplane_profile(cb::system_from_code(cb::simplex(Field::get(2, 1), 3)));
    CHECK(prof.min_hits == 3);
    CHECK(prof.max_hits == 3);
    CHECK(prof.certified_strong_blocking);
}

TEST_CASE("hyperplane hits mirror the weight distribution") {
    // A hyperplane with normal u misses exactly the positions where the
    // codeword of message u is nonzero, so M = n - d and m = n - w.
    for (const auto& c : corpus()) {
        auto prof = cb::hyperplane_profile(cb::system_from_code(c));
        CHECK(c.n() - prof.max_hits == c.min_distance());
        CHECK(c.n() - prof.min_hits == c.max_weight());
        CHECK(prof.certified_strong_blocking == cb::ab_condition(c).positive());
    }
}

TEST_CASE("strong blocking check finds the first thin hyperplane") {
    auto f2 = Field::get(2, 1);
    // The full Fano plane blocks strongly.
    CHECK(cb::is_strong_blocking(cb::system_from_code(cb::simplex(f2, 3))).strong);

    // One line plus an external point spans but fails: the hyperplane with
    // normal (1,0,1) meets it in the single point (0,1,0).
    auto thin = system_of({{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}}, f2);
    auto check = cb::is_strong_blocking(thin);
    CHECK(!check.strong);
    REQUIRE(check.failing_hyperplane.has_value());
    CHECK(check.failing_hyperplane->coords == std::vector<gf_elem>{1, 0, 1});

    // A bare line does not even span.
    auto line = system_of({{0, 0, 1}, {0, 1, 0}, {0, 1, 1}}, f2);
    CHECK(error_kind([&] { cb::is_strong_blocking(line); }) == cb::Error::Kind::NotSpanning);
}

TEST_CASE("strong blocking agrees with an independent hyperplane scan") {
    for (const auto& c : corpus()) {
        auto check = cb::is_strong_blocking(cb::system_from_code(c));
        auto naive = oracle::naive_strong_blocking(c.field(), columns_of(c));
        CHECK(check.strong == naive.strong);
        if (!check.strong) {
            REQUIRE(check.failing_hyperplane.has_value());
            CHECK(check.failing_hyperplane->coords == naive.failing_normal);
        }
    }
}

TEST_CASE("minimal codes and strong blocking sets are the same thing") {
    for (const auto& c : corpus()) {
        bool minimal = cb::is_minimal_code(c).positive();
        bool strong = cb::is_strong_blocking(cb::system_from_code(c)).strong;
        CHECK(minimal == strong);
        if (minimal) CHECK(c.n() >= cb::sbs_lower_bound(c.k(), c.field()->order()));
    }
    // The ternary concatenation reference lands on a strong blocking set too.
    auto c1649 =
        cb::concatenate({cb::grs(Field::get(3, 2), 4, 2), cb::simplex(Field::get(3, 1), 2)});
    CHECK(cb::is_strong_blocking(cb::system_from_code(c1649)).strong);
}

TEST_CASE("fold blocking level") {
    CHECK(cb::fold_blocking_level(cb::system_from_code(cb::simplex(Field::get(2, 1), 3))) == 3);
    auto thin = system_of({{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}}, Field::get(2, 1));
    CHECK(cb::fold_blocking_level(thin) == 1);
}

TEST_CASE("saturation radius") {
    auto f2 = Field::get(2, 1);
    // The whole space saturates at 0 by convention.
    CHECK(cb::saturation_radius(cb::system_from_code(cb::simplex(f2, 3))) == 0);

    // The Fano plane inside PG(2,4): every external point lies on a secant.
    auto fano4 = cb::subgeometry_embed(cb::system_from_code(cb::simplex(f2, 3)), 2);
    CHECK(fano4.field->order() == 4);
    CHECK(cb::saturation_radius(fano4) == 1);
    CHECK(oracle::naive_saturation_radius(fano4.field, coords_of(fano4)) == 1);

    auto line = system_of({{0, 0, 1}, {0, 1, 0}, {0, 1, 1}}, f2);
    CHECK(error_kind([&] { cb::saturation_radius(line); }) == cb::Error::Kind::NotSpanning);
}

TEST_CASE("saturation radius agrees with an independent subset search") {
    std::mt19937 rng(4242);
    const std::tuple<unsigned, std::size_t, std::size_t> shapes[] = {
        {2, 3, 5}, {2, 3, 6}, {2, 4, 8}, {3, 3, 6}, {3, 3, 9},
    };
    for (auto [q, k, n] : shapes) {
        auto c = oracle::random_projective_code(rng, Field::get(q, 1), k, n);
        auto s = cb::system_from_code(c);
        CHECK(cb::saturation_radius(s) ==
              oracle::naive_saturation_radius(s.field, coords_of(s)));
    }
}

TEST_CASE("saturation radius is the dual covering radius minus one") {
    std::mt19937 rng(31337);
    const std::tuple<unsigned, unsigned, std::size_t, std::size_t> shapes[] = {
        {2, 1, 3, 6}, {2, 1, 3, 7}, {2, 1, 4, 10}, {3, 1, 3, 8}, {2, 2, 3, 7},
    };
    for (auto [p, m, k, n] : shapes) {
        auto c = oracle::random_projective_code(rng, Field::get(p, m), k, n);
        auto s = cb::system_from_code(c);
        CHECK(cb::covering_radius(cb::dual(c)) == cb::saturation_radius(s) + 1);
    }
    // Same statement for the embedded Fano plane, now as a code over GF(4).
    auto fano4 = cb::subgeometry_embed(cb::system_from_code(cb::simplex(Field::get(2, 1), 3)), 2);
    CHECK(cb::covering_radius(cb::dual(cb::code_from_system(fano4))) == 2);
}

TEST_CASE("subgeometry embedding") {
    auto f4 = Field::get(2, 2);
    auto s = cb::system_from_code(cb::simplex(f4, 2));  // 5 points of PG(1,4)

    // e = 1 is the identity.
    auto same = cb::subgeometry_embed(s, 1);
    CHECK(same.field == s.field);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(same.points[i] == s.points[i]);

    // GF(4) into GF(16): nonzero values ride the index stretch (16-1)/(4-1).
    auto up = cb::subgeometry_embed(s, 2);
    auto f16 = Field::get(2, 4);
    CHECK(up.field == f16);
    CHECK(up.size() == s.size());
    auto img = [&](gf_elem a) -> gf_elem {
        return a ? f16->exp(f4->dlog(a) * 5) : 0;
    };
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(up.points[i].coords[j] == img(s.points[i].coords[j]));
    // the map respects multiplication, so images of distinct points stay
    // distinct and normalized
    CHECK(f16->mul(img(2), img(2)) == img(f4->mul(2, 2)));
    CHECK(error_kind([&] { cb::subgeometry_embed(s, 0); }) == cb::Error::Kind::BadParams);

    // Prime-field systems embed value-for-value.
    auto fano = cb::system_from_code(cb::simplex(Field::get(2, 1), 3));
    auto fano9 = cb::subgeometry_embed(fano, 3);
    CHECK(fano9.field->order() == 8);
    for (std::size_t i = 0; i < fano.size(); ++i)
        CHECK(fano9.points[i].coords == fano.points[i].coords);
}

TEST_CASE("geometric guards") {
    auto fano = cb::system_from_code(cb::simplex(Field::get(2, 1), 3));
    // Ambient PG(2, 512) has 263,000-odd points, past the enumeration guard.
    auto huge = cb::subgeometry_embed(fano, 9);
    CHECK(error_kind([&] { cb::saturation_radius(huge); }) == cb::Error::Kind::TooLarge);

    // 127 support points exceed the saturation base guard.
    auto big = cb::system_from_code(cb::simplex(Field::get(2, 1), 7));
    CHECK(error_kind([&] { cb::saturation_radius(big); }) == cb::Error::Kind::TooLarge);
}

TEST_CASE("pts files round-trip") {
    auto s = cb::system_from_code(cb::fixture_ternary_935());
    auto text = cb::write_pts(s);
    auto back = cb::parse_pts(text);
    CHECK(back.field == s.field);
    CHECK(back.k == s.k);
    REQUIRE(back.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(back.points[i] == s.points[i]);
    CHECK(cb::write_pts(back) == text);

    auto path = std::filesystem::temp_directory_path() / "cb_test_roundtrip.pts";
    cb::write_pts_file(s, path);
    auto file = cb::read_pts_file(path);
    CHECK(cb::write_pts(file) == text);
    std::filesystem::remove(path);

    // comments and loose whitespace are fine
    auto fancy = cb::parse_pts("# header\n2 1 2 3 # shape\n0 1\n1 0\n1 1\n");
    CHECK(fancy.size() == 3);
    CHECK(!fancy.has_multiplicity);
}

TEST_CASE("pts diagnostics") {
    CHECK(error_kind([] { cb::parse_pts("2 1 2\n"); }) == cb::Error::Kind::Syntax);
    CHECK(error_kind([] { cb::parse_pts("2 1 2 2\n0 1\n1 0\n1 1\n"); }) ==
          cb::Error::Kind::Syntax);  // entry count
    CHECK(error_kind([] { cb::parse_pts("2 1 2 1\n0 2\n"); }) ==
          cb::Error::Kind::ValueOutOfRange);
    CHECK(error_kind([] { cb::parse_pts("3 1 2 1\n2 1\n"); }) ==
          cb::Error::Kind::Syntax);  // not normalized
    CHECK(error_kind([] { cb::parse_pts("2 1 2 1\n0 0\n"); }) ==
          cb::Error::Kind::Syntax);  // zero point
    CHECK(error_kind([] { cb::parse_pts("2 1 2 x\n"); }) == cb::Error::Kind::Syntax);
    CHECK(error_kind([] { cb::parse_pts("6 1 2 1\n1 0\n"); }) == cb::Error::Kind::NotPrime);
}
