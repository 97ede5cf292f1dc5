#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prmkit/codes.hpp"

namespace prmkit {

enum class OracleStatus { Exact, Infeasible };

struct OracleResult {
    OracleStatus status = OracleStatus::Infeasible;
    std::uint64_t value = 0;
    std::string method;
    /// Work estimate (codewords, subsets or subspaces) that decided feasibility.
    double cost = 0;

    bool exact() const { return status == OracleStatus::Exact; }
};

inline constexpr std::uint64_t kDefaultCodewordCap = 1u << 22;
inline constexpr std::uint64_t kDefaultSubspaceCap = 100'000'000;

/// Number of r-dimensional subspaces of GF(q)^k, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(int k, int r, std::uint64_t q);
/// Binomial coefficient as a double (costs only).
double binomial_real(int n, int k);

/// Enumerates the r x k matrices in reduced row echelon form of rank r, one per subspace.
class SubspaceIter {
  public:
    SubspaceIter(FieldPtr field, int k, int r);

    /// Advances to the next subspace; false once exhausted.
    bool next();
    const Matrix& current() const { return current_; }
    std::uint64_t count() const { return gaussian_binomial(k_, r_, field_->order()); }

  private:
    void load();
    bool next_pivots();

    FieldPtr field_;
    int k_;
    int r_;
    bool started_ = false;
    bool done_ = false;
    std::vector<int> pivots_;
    std::vector<std::pair<int, int>> free_;  // (row, column)
    std::vector<Elem> values_;
    Matrix current_;
};

/// Union of supports of a set of vectors, as a bitset over the coordinates.
class SupportAccumulator {
  public:
    explicit SupportAccumulator(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    void add(std::span<const Elem> v);
    void merge(const SupportAccumulator& other);
    void clear();
    std::size_t weight() const { return weight_; }
    std::size_t size() const { return n_; }
    bool contains(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

  private:
    void recount();

    std::size_t n_;
    std::vector<std::uint64_t> words_;
    std::size_t weight_ = 0;
};

enum class DistanceMethod { Auto, Enumerate, DependentColumns };

struct MinDistanceOptions {
    std::uint64_t cap = kDefaultCodewordCap;
    /// Column subsets examined by the parity-check method before giving up.
    std::uint64_t column_budget = 1u << 26;
    DistanceMethod method = DistanceMethod::Auto;
};

/**
 * Minimum distance by exhaustive search.
 *
 * Enumerate walks one codeword per projective class (q^k / (q-1) of them) when
 * q^k <= cap. DependentColumns finds the smallest linearly dependent set of
 * columns of a parity-check matrix by iterative deepening. Returns Infeasible
 * rather than a bound when neither fits.
 */
OracleResult min_distance_exact(const LinearCode& code, const MinDistanceOptions& opt = {});

enum class GhwStrategy { Auto, Subspaces, Flats };

struct GhwOracleOptions {
    std::uint64_t cap = kDefaultSubspaceCap;
    GhwStrategy strategy = GhwStrategy::Auto;
    /// 0 reads PRMKIT_THREADS, falling back to the hardware concurrency.
    unsigned threads = 0;
};

/**
 * Exact r-th generalized Hamming weight.
 *
 * Subspaces enumerates r-dimensional subcodes in canonical form with
 * branch-and-bound on the support. Flats uses d_r = n - max |S| over column
 * sets S of rank k - r, enumerating independent (k-r)-sets and their closures.
 */
OracleResult ghw_exact(const LinearCode& code, int r, const GhwOracleOptions& opt = {});

struct HierarchyResult {
    std::vector<std::optional<std::uint64_t>> values;  // values[r-1]
    bool complete = true;
    bool strictly_increasing = true;
};

HierarchyResult weight_hierarchy_exact(const LinearCode& code, const GhwOracleOptions& opt = {},
                                       const MinDistanceOptions& dopt = {});

unsigned worker_count(unsigned requested);

}  // namespace prmkit
