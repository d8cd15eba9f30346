#ifndef CB_GEOMETRY_HPP
#define CB_GEOMETRY_HPP

#include <filesystem>
#include <optional>
#include <vector>

#include "cb/code.hpp"

namespace cb {

// Guards for geometric enumeration: ambient point counts and hyperplane
// counts stop at 2^16, saturation search at 64 base points.
constexpr std::uint64_t kPointLimit = std::uint64_t(1) << 16;
constexpr std::size_t kSaturationBaseLimit = 64;

/// Point of PG(k-1, q): coordinates normalized so the first nonzero entry is 1.
struct ProjectivePoint {
    std::vector<gf_elem> coords;

    /// Big-endian base-q integer encoding; the enumeration and witness order.
    std::uint64_t encode(const Field& f) const;

    bool operator==(const ProjectivePoint&) const = default;
};

/// Multiset of points spanning decisions in PG(k-1, q).
struct ProjectiveSystem {
    FieldPtr field;
    std::size_t k = 0;
    std::vector<ProjectivePoint> points;  // column order preserved
    bool has_multiplicity = false;

    std::size_t size() const { return points.size(); }
    std::size_t rank() const;

    /// Distinct points only, in first-appearance order.
    std::vector<ProjectivePoint> support() const;
};

/// All points of PG(k-1, q) in increasing encoding order.
std::vector<ProjectivePoint> enumerate_points(const FieldPtr& field, std::size_t k);

/// Normalize a nonzero coordinate vector to its projective representative.
ProjectivePoint normalize_point(const Field& f, std::vector<gf_elem> coords);

/// Columns of the generator matrix as projective points.  Throws
/// DegenerateColumn on a zero column.
ProjectiveSystem system_from_code(const LinearCode& c);

/// Generator matrix whose columns are the system's points, in order.
LinearCode code_from_system(const ProjectiveSystem& s);

struct HyperplaneProfile {
    std::size_t min_hits = 0;  // m: fewest points on a hyperplane (with multiplicity)
    std::size_t max_hits = 0;  // M: most points on a hyperplane
    bool certified_strong_blocking = false;  // (n-M)/(n-m) > (q-1)/q
};

/// Extremal hyperplane-section sizes over every hyperplane of PG(k-1, q).
HyperplaneProfile hyperplane_profile(const ProjectiveSystem& s);

struct BlockingCheck {
    bool strong = false;
    /// Normal vector of the first hyperplane (in encoding order) whose section
    /// fails to span it; absent when strong.
    std::optional<ProjectivePoint> failing_hyperplane;
};

/// Exact strong-blocking test: every hyperplane section of the support must
/// have rank k-1.  Throws NotSpanning when the system itself has rank < k.
BlockingCheck is_strong_blocking(const ProjectiveSystem& s);

/// Largest t such that every hyperplane meets the support in at least t
/// points.
std::size_t fold_blocking_level(const ProjectiveSystem& s);

/// Least rho such that every ambient point lies in the span of rho+1 support
/// points; 0 when the support is the whole space.  Throws NotSpanning when the
/// support does not span, TooLarge past the guards.
std::size_t saturation_radius(const ProjectiveSystem& s);

/// Reinterpret the system inside PG(k-1, q^e).  Prime-field coordinates embed
/// value-for-value; otherwise a maps to the target generator raised to
/// dlog(a) * (q^e-1)/(q-1), which preserves the multiplicative structure.
ProjectiveSystem subgeometry_embed(const ProjectiveSystem& s, unsigned e);

// --- .pts text format ------------------------------------------------------
// Header line "p m k n", then n normalized point rows of k entries each.
// '#' comments as in .gmat.

ProjectiveSystem parse_pts(const std::string& text);
std::string write_pts(const ProjectiveSystem& s);
ProjectiveSystem read_pts_file(const std::filesystem::path& path);
void write_pts_file(const ProjectiveSystem& s, const std::filesystem::path& path);

}  // namespace cb

#endif
