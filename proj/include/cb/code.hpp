#ifndef CB_CODE_HPP
#define CB_CODE_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cb/matrix.hpp"

namespace cb {

// Enumeration guards.  Full codeword enumeration stops at 2^32 messages;
// quadratic pairwise work (minimality, covering radius cosets) stops at 2^16.
constexpr std::uint64_t kEnumLimit = std::uint64_t(1) << 32;
constexpr std::uint64_t kPairLimit = std::uint64_t(1) << 16;
constexpr std::uint64_t kPairWarn = std::uint64_t(1) << 12;

struct WeightDistribution {
    std::vector<std::uint64_t> counts;  // counts[w] = number of codewords of weight w

    std::size_t min_weight() const;  ///< least positive weight present (d)
    std::size_t max_weight() const;  ///< greatest weight present (w)
    std::uint64_t total() const;
};

/// Linear [n, k] code over GF(q), held as a full-rank k-by-n generator matrix.
class LinearCode {
   public:
    explicit LinearCode(Matrix gen);  ///< throws RankDeficient / BadDim

    // The cache mutex suppresses the implicit copy and move operations, so
    // spell out the useful ones.  Copies share the immutable weight cache.
    LinearCode(const LinearCode& other);
    LinearCode(LinearCode&& other) noexcept;
    LinearCode& operator=(const LinearCode&) = delete;
    LinearCode& operator=(LinearCode&&) = delete;

    const FieldPtr& field() const { return gen_.field(); }
    std::size_t n() const { return gen_.cols(); }
    std::size_t k() const { return gen_.rows(); }
    const Matrix& gen() const { return gen_; }

    std::uint64_t codeword_count() const;  // q^k (guarded against overflow)

    /// Codeword for the message whose base-q digits are msg's digits; digit i
    /// scales generator row i.
    std::vector<gf_elem> codeword(std::uint64_t msg) const;

    /// Weight distribution, cached after the first call.  Throws TooLarge when
    /// q^k exceeds the enumeration guard.
    const WeightDistribution& weights() const;

    std::size_t min_distance() const { return weights().min_weight(); }
    std::size_t max_weight() const { return weights().max_weight(); }

   private:
    Matrix gen_;
    mutable std::mutex cache_mutex_;
    mutable std::shared_ptr<const WeightDistribution> weights_cache_;
};

/// (projective, nondegenerate): columns pairwise non-proportional, no zero
/// column.
std::pair<bool, bool> degeneracy_flags(const LinearCode& c);

/// Dual [n, n-k] code.  Throws BadDim when k == n (the dual would be empty).
LinearCode dual(const LinearCode& c);

/// Exact covering radius by coset-leader search.  Throws TooLarge when the
/// syndrome space q^(n-k) exceeds the pairwise guard.
std::size_t covering_radius(const LinearCode& c);

// --- .gmat text format -----------------------------------------------------
// Header line "p m n k", then k rows of n integer-encoded entries.  '#'
// starts a comment that runs to end of line; whitespace is free-form.

LinearCode parse_gmat(const std::string& text);
std::string write_gmat(const LinearCode& c);
LinearCode read_gmat_file(const std::filesystem::path& path);
void write_gmat_file(const LinearCode& c, const std::filesystem::path& path);

// --- enumeration plumbing shared with the minimality checker ---------------

/// Calls fn(msg, weight) for every message in increasing encoding order,
/// including 0.  Uses a packed XOR walk over GF(2) and an amortized suffix
/// rebuild elsewhere.  Guarded by kEnumLimit.
void for_each_codeword_weight(const LinearCode& c,
                              const std::function<void(std::uint64_t, std::size_t)>& fn);

/// One codeword per projective class: messages whose lowest-index nonzero
/// digit is 1, in increasing encoding order.
std::vector<std::uint64_t> normalized_messages(const LinearCode& c);

/// Support bitmask of one codeword, packed 64 positions per word.
std::vector<std::uint64_t> support_mask(const std::vector<gf_elem>& word);

}  // namespace cb

#endif
