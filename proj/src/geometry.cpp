#include "cb/geometry.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace cb {
namespace {

using u64 = std::uint64_t;

u64 point_count(u64 q, std::size_t k) {
    unsigned __int128 total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= q;
        if ((total - 1) / (q - 1) > kPointLimit)
            fail(Error::Kind::TooLarge, "projective space exceeds the point guard");
    }
    return u64((total - 1) / (q - 1));
}

std::vector<gf_elem> decode_vector(const Field& f, u64 enc, std::size_t k) {
    std::vector<gf_elem> v(k);
    for (std::size_t i = k; i-- > 0;) {
        v[i] = enc % f.order();
        enc /= f.order();
    }
    return v;
}

bool is_normalized(const std::vector<gf_elem>& v) {
    for (gf_elem c : v) {
        if (c == 0) continue;
        return c == 1;
    }
    return false;  // zero vector
}

gf_elem dot(const Field& f, const std::vector<gf_elem>& a, const std::vector<gf_elem>& b) {
    gf_elem s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

// Incremental row-reduction basis for rank queries over small point sets.
class RankTracker {
   public:
    RankTracker(const Field& f, std::size_t k) : f_(f), k_(k) {}

    std::size_t rank() const { return basis_.size(); }

    /// Try to add v to the basis; returns true when the rank grew.
    bool add(std::vector<gf_elem> v) {
        for (const auto& b : basis_) {
            std::size_t lead = b.second;
            if (v[lead] == 0) continue;
            gf_elem factor = v[lead];
            for (std::size_t j = 0; j < k_; ++j)
                v[j] = f_.sub(v[j], f_.mul(factor, b.first[j]));
        }
        std::size_t lead = 0;
        while (lead < k_ && v[lead] == 0) ++lead;
        if (lead == k_) return false;
        gf_elem scale = f_.inv(v[lead]);
        for (std::size_t j = 0; j < k_; ++j) v[j] = f_.mul(scale, v[j]);
        basis_.emplace_back(std::move(v), lead);
        return true;
    }

   private:
    const Field& f_;
    std::size_t k_;
    std::vector<std::pair<std::vector<gf_elem>, std::size_t>> basis_;
};

}  // namespace

std::uint64_t ProjectivePoint::encode(const Field& f) const {
    u64 enc = 0;
    for (gf_elem c : coords) enc = enc * f.order() + c;
    return enc;
}

std::size_t ProjectiveSystem::rank() const {
    RankTracker t(*field, k);
    for (const auto& p : points) t.add(p.coords);
    return t.rank();
}

std::vector<ProjectivePoint> ProjectiveSystem::support() const {
    std::vector<ProjectivePoint> out;
    for (const auto& p : points)
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    return out;
}

std::vector<ProjectivePoint> enumerate_points(const FieldPtr& field, std::size_t k) {
    if (k == 0) fail(Error::Kind::BadDim, "projective dimension needs k >= 1");
    point_count(field->order(), k);
    std::vector<ProjectivePoint> out;
    unsigned __int128 total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= field->order();
    for (u64 enc = 1; enc < u64(total); ++enc) {
        auto v = decode_vector(*field, enc, k);
        if (is_normalized(v)) out.push_back(ProjectivePoint{std::move(v)});
    }
    return out;
}

ProjectivePoint normalize_point(const Field& f, std::vector<gf_elem> coords) {
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        gf_elem scale = f.inv(coords[i]);
        for (auto& c : coords) c = f.mul(scale, c);
        return ProjectivePoint{std::move(coords)};
    }
    fail(Error::Kind::DegenerateColumn, "cannot normalize the zero vector");
}

ProjectiveSystem system_from_code(const LinearCode& c) {
    ProjectiveSystem s;
    s.field = c.field();
    s.k = c.k();
    for (std::size_t j = 0; j < c.n(); ++j) {
        std::vector<gf_elem> col(c.k());
        bool zero = true;
        for (std::size_t i = 0; i < c.k(); ++i) {
            col[i] = c.gen().at(i, j);
            if (col[i]) zero = false;
        }
        if (zero)
            fail(Error::Kind::DegenerateColumn,
                 "generator column " + std::to_string(j) + " is zero");
        s.points.push_back(normalize_point(*s.field, std::move(col)));
    }
    auto sup = s.support();
    s.has_multiplicity = sup.size() != s.points.size();
    return s;
}

LinearCode code_from_system(const ProjectiveSystem& s) {
    if (s.points.empty()) fail(Error::Kind::BadDim, "system has no points");
    Matrix g(s.field, s.k, s.points.size());
    for (std::size_t j = 0; j < s.points.size(); ++j)
        for (std::size_t i = 0; i < s.k; ++i) g.set(i, j, s.points[j].coords[i]);
    return LinearCode(std::move(g));
}

static HyperplaneProfile profile_impl(const ProjectiveSystem& s, bool support_only) {
    const Field& f = *s.field;
    auto normals = enumerate_points(s.field, s.k);
    const auto pts = support_only ? s.support() : s.points;
    HyperplaneProfile prof;
    bool first = true;
    for (const auto& u : normals) {
        std::size_t hits = 0;
        for (const auto& p : pts)
            if (dot(f, u.coords, p.coords) == 0) ++hits;
        if (first || hits < prof.min_hits) prof.min_hits = hits;
        if (first || hits > prof.max_hits) prof.max_hits = hits;
        first = false;
    }
    std::size_t n = pts.size();
    u64 q = f.order();
    // (n - M)/(n - m) > (q-1)/q, cross-multiplied; a constant-intersection
    // system (m == M) certifies as long as hyperplanes miss some point.
    prof.certified_strong_blocking =
        (n > prof.max_hits) && u64(n - prof.max_hits) * q > u64(n - prof.min_hits) * (q - 1);
    return prof;
}

HyperplaneProfile hyperplane_profile(const ProjectiveSystem& s) {
    return profile_impl(s, false);
}

BlockingCheck is_strong_blocking(const ProjectiveSystem& s) {
    if (s.rank() != s.k)
        fail(Error::Kind::NotSpanning, "the system does not span the ambient space");
    const Field& f = *s.field;
    auto normals = enumerate_points(s.field, s.k);
    auto sup = s.support();
    BlockingCheck out;
    for (const auto& u : normals) {
        RankTracker t(f, s.k);
        for (const auto& p : sup)
            if (dot(f, u.coords, p.coords) == 0) t.add(p.coords);
        if (t.rank() != s.k - 1) {
            out.strong = false;
            out.failing_hyperplane = u;
            return out;
        }
    }
    out.strong = true;
    return out;
}

std::size_t fold_blocking_level(const ProjectiveSystem& s) {
    return profile_impl(s, true).min_hits;
}

std::size_t saturation_radius(const ProjectiveSystem& s) {
    if (s.rank() != s.k)
        fail(Error::Kind::NotSpanning, "the system does not span the ambient space");
    const Field& f = *s.field;
    auto sup = s.support();
    if (sup.size() > kSaturationBaseLimit)
        fail(Error::Kind::TooLarge, "saturation search limited to 64 base points");
    auto all = enumerate_points(s.field, s.k);

    std::map<u64, std::size_t> external;  // encoding -> index
    for (const auto& p : all) {
        u64 enc = p.encode(f);
        bool inside = false;
        for (const auto& q : sup)
            if (q.coords == p.coords) {
                inside = true;
                break;
            }
        if (!inside) external.emplace(enc, external.size());
    }
    if (external.empty()) return 0;

    std::vector<char> covered(external.size(), 0);
    std::size_t remaining = external.size();
    u64 q = f.order();

    // Spans of j independent support points, grown one point at a time; a
    // dependent extension repeats a smaller span, so it is skipped.
    for (std::size_t j = 2; j <= s.k; ++j) {
        std::vector<std::size_t> chosen;
        std::vector<const ProjectivePoint*> basis;
        // recursive combination enumeration in lexicographic order
        std::function<void(std::size_t)> recurse = [&](std::size_t start) {
            if (remaining == 0) return;
            if (basis.size() == j) {
                // mark all normalized combinations of the basis
                std::vector<gf_elem> coeff(j, 0);
                std::function<void(std::size_t, bool)> walk = [&](std::size_t i, bool leading_set) {
                    if (remaining == 0) return;
                    if (i == j) {
                        if (!leading_set) return;
                        std::vector<gf_elem> v(s.k, 0);
                        for (std::size_t t = 0; t < j; ++t) {
                            if (coeff[t] == 0) continue;
                            for (std::size_t x = 0; x < s.k; ++x)
                                v[x] = f.add(v[x], f.mul(coeff[t], basis[t]->coords[x]));
                        }
                        auto pt = normalize_point(f, std::move(v));
                        auto it = external.find(pt.encode(f));
                        if (it != external.end() && !covered[it->second]) {
                            covered[it->second] = 1;
                            --remaining;
                        }
                        return;
                    }
                    // first nonzero coefficient pinned to 1: one combination
                    // per projective point of the span
                    if (!leading_set) {
                        coeff[i] = 0;
                        walk(i + 1, false);
                        coeff[i] = 1;
                        walk(i + 1, true);
                    } else {
                        for (gf_elem v = 0; v < q; ++v) {
                            coeff[i] = v;
                            walk(i + 1, true);
                        }
                    }
                };
                walk(0, false);
                return;
            }
            for (std::size_t idx = start; idx < sup.size(); ++idx) {
                // extension must raise the rank, else its span already appeared
                bool independent = true;
                {
                    RankTracker t(f, s.k);
                    for (std::size_t c : chosen) t.add(sup[c].coords);
                    independent = t.add(sup[idx].coords);
                }
                if (!independent) continue;
                chosen.push_back(idx);
                basis.push_back(&sup[idx]);
                recurse(idx + 1);
                chosen.pop_back();
                basis.pop_back();
                if (remaining == 0) return;
            }
        };
        recurse(0);
        if (remaining == 0) return j - 1;
    }
    fail(Error::Kind::NotFound, "internal: spanning support left points uncovered");
}

ProjectiveSystem subgeometry_embed(const ProjectiveSystem& s, unsigned e) {
    if (e < 1) fail(Error::Kind::BadParams, "embedding exponent must be at least 1");
    const Field& src = *s.field;
    auto dst = Field::get(src.characteristic(), src.degree() * e);
    u64 stretch = (dst->order() - 1) / (src.order() - 1);
    ProjectiveSystem out;
    out.field = dst;
    out.k = s.k;
    out.has_multiplicity = s.has_multiplicity;
    for (const auto& p : s.points) {
        ProjectivePoint q;
        q.coords.reserve(s.k);
        for (gf_elem c : p.coords) {
            if (c == 0) {
                q.coords.push_back(0);
            } else if (src.degree() == 1) {
                q.coords.push_back(c);  // prime subfield embeds value-for-value
            } else {
                q.coords.push_back(dst->exp(src.dlog(c) * stretch));
            }
        }
        out.points.push_back(std::move(q));
    }
    return out;
}

// --- .pts ------------------------------------------------------------------

namespace {

std::vector<u64> tokenize_pts(const std::string& text) {
    std::string stripped;
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

ProjectiveSystem parse_pts(const std::string& text) {
    auto nums = tokenize_pts(text);
    if (nums.size() < 4) fail(Error::Kind::Syntax, "pts header needs four integers: p m k n");
    u64 p = nums[0], m = nums[1], k = nums[2], n = nums[3];
    if (m == 0 || m > 63) fail(Error::Kind::Syntax, "pts field degree out of range");
    if (k == 0 || n == 0) fail(Error::Kind::Syntax, "pts dimensions must be positive");
    auto field = Field::get(p, unsigned(m));
    if (nums.size() != 4 + k * n) fail(Error::Kind::Syntax, "pts entry count does not match k*n");
    ProjectiveSystem s;
    s.field = field;
    s.k = std::size_t(k);
    for (u64 i = 0; i < n; ++i) {
        ProjectivePoint pt;
        for (u64 j = 0; j < k; ++j) {
            u64 v = nums[4 + i * k + j];
            if (v >= field->order())
                fail(Error::Kind::ValueOutOfRange, "pts entry exceeds field order");
            pt.coords.push_back(v);
        }
        if (!is_normalized(pt.coords))
            fail(Error::Kind::Syntax,
                 "point row " + std::to_string(i) + " is not normalized (or zero)");
        s.points.push_back(std::move(pt));
    }
    s.has_multiplicity = s.support().size() != s.points.size();
    return s;
}

std::string write_pts(const ProjectiveSystem& s) {
    std::ostringstream out;
    out << s.field->characteristic() << ' ' << s.field->degree() << ' ' << s.k << ' '
        << s.points.size() << '\n';
    for (const auto& p : s.points) {
        for (std::size_t j = 0; j < p.coords.size(); ++j) {
            if (j) out << ' ';
            out << p.coords[j];
        }
        out << '\n';
    }
    return out.str();
}

ProjectiveSystem read_pts_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(Error::Kind::Syntax, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pts(buf.str());
}

void write_pts_file(const ProjectiveSystem& s, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) fail(Error::Kind::Syntax, "cannot open " + path.string() + " for writing");
    out << write_pts(s);
}

}  // namespace cb
