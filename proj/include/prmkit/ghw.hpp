#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "prmkit/oracle.hpp"
#include "prmkit/subfield.hpp"

namespace prmkit {

/// r-th generalized Hamming weight of RM_d(m) over GF(Q); r = 0 gives 0.
std::uint64_t ghw_rm(std::uint64_t Q, int m, int d, std::uint64_t r);
/// r-th generalized Hamming weight of the projective Reed-Solomon code PRM_d(1).
std::uint64_t ghw_prs(std::uint64_t Q, int d, std::uint64_t r);

using AlphaGamma = std::pair<int, int>;

struct M2Trace {
    bool small_degree = false;  // d < Q
    std::vector<int> E;
    std::map<int, int> alpha;  // gamma -> alpha_gamma
    std::map<int, int> mu;
    int lambda_star = 0;
    std::map<int, std::uint64_t> H;  // gamma -> H_{alpha_gamma, gamma}
    std::optional<std::uint64_t> B00;
    std::uint64_t value = 0;
};

struct GhwBoundTrace {
    std::uint64_t Q = 0;
    int m = 0;
    int d = 0;
    int r = 0;
    std::vector<AlphaGamma> Y;
    std::map<AlphaGamma, std::uint64_t> B;
    AlphaGamma argmin{0, 0};
    std::uint64_t value = 0;
    /// Every inner PRM(m-1) weight used was known exactly.
    bool inner_exact = true;
};

struct GhwRecord {
    int r = 0;
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    std::vector<std::string> provenance;

    bool exact() const { return lower == upper; }
};

struct GhwReport {
    std::uint64_t Q = 0;
    int m = 0;
    int d = 0;
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    bool refined = false;
    std::vector<GhwRecord> records;  // records[r-1]

    const GhwRecord& at(int r) const { return records.at(static_cast<std::size_t>(r - 1)); }
    /// Smallest r from which every weight is exact and grows by one; nullopt if the tail is not exact.
    std::optional<int> r_star() const;
};

struct DualDistance {
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    std::optional<int> r_star;
    bool exact() const { return lower == upper; }
};

/**
 * Memoized bounds for the weight hierarchy of PRM_d(m).
 *
 * bounds(): closed-form d_1, the recursive lower bound, the upper bounds from
 * the two component codes and Singleton, then monotone propagation.
 * refined(): bounds() tightened against the hierarchy of the dual code when
 * d is not a multiple of Q-1. Inner PRM(m-1) weights always come from the
 * refined reports. Safe for concurrent use; values are deterministic.
 */
class GhwEngine {
  public:
    using ReportPtr = std::shared_ptr<const GhwReport>;

    ReportPtr bounds(std::uint64_t Q, int m, int d);
    ReportPtr refined(std::uint64_t Q, int m, int d);

    GhwBoundTrace lower(std::uint64_t Q, int m, int d, int r);
    std::uint64_t upper(std::uint64_t Q, int m, int d, int r);
    M2Trace m2_lower(std::uint64_t Q, int d, int r);

    /// d_1 of the dual of PRM_d(m) for d a multiple of Q-1, from the refined hierarchy.
    DualDistance dual_min_distance_deq0(std::uint64_t Q, int m, int d);

  private:
    using Key = std::tuple<std::uint64_t, int, int, bool>;
    ReportPtr compute_bounds(std::uint64_t Q, int m, int d);
    ReportPtr compute_refined(std::uint64_t Q, int m, int d);
    std::pair<std::uint64_t, std::uint64_t> inner(std::uint64_t Q, int m, int d, int r);

    std::mutex mu_;
    std::map<Key, ReportPtr> memo_;
};

/// Process-wide engine used by the CLI and the table generators.
GhwEngine& default_engine();

/// Wei-duality interval tightening; both hierarchies are modified in place. False if inconsistent.
bool wei_refine(std::uint64_t n, std::vector<std::pair<std::uint64_t, std::uint64_t>>& a,
                std::vector<std::pair<std::uint64_t, std::uint64_t>>& b);

// ------------------------------------------------------------- subfield subcodes

enum class SscRole { RmD, RmDm1, PrmLower, PrmLowerShift };

struct ProvidedWeight {
    std::optional<std::uint64_t> lower;
    std::optional<std::uint64_t> upper;
};

/// Inner GHW source for the SSC bounds; codes passed are the inner subfield subcodes.
class SscGhwProvider {
  public:
    virtual ~SscGhwProvider() = default;
    virtual ProvidedWeight weight(SscRole role, const SscCode& code, int r) = 0;
};

/// Exact values from the brute-force oracle; unknown above the cap.
class OracleProvider : public SscGhwProvider {
  public:
    explicit OracleProvider(GhwOracleOptions opt = {}) : opt_(opt) {}
    ProvidedWeight weight(SscRole role, const SscCode& code, int r) override;

  private:
    GhwOracleOptions opt_;
};

/// Lower bounds from the parent code (d_r(C^sigma) >= d_r(C)); uppers from the parent only when C^sigma spans C.
class SupercodeProvider : public SscGhwProvider {
  public:
    explicit SupercodeProvider(GhwEngine& engine) : engine_(engine) {}
    ProvidedWeight weight(SscRole role, const SscCode& code, int r) override;

  private:
    GhwEngine& engine_;
};

/// The subfield subcodes entering the SSC bounds for PRM^sigma_{d_lambda}(m).
struct SscGhwContext {
    int q = 0;
    int s = 0;
    int m = 0;
    int lambda = 0;
    int d = 0;
    SscCode whole;
    SscCode rm_d;
    SscCode rm_dm1;
    SscCode prm_lower;
    SscCode prm_lower_shift;  // PRM^sigma_{d-(Q-1)}(m-1), possibly the zero code

    static SscGhwContext make(int q, int s, int m, int lambda);
};

struct SscGhwBound {
    std::uint64_t value = 0;
    bool partial = false;
    std::vector<AlphaGamma> Y;
    std::map<AlphaGamma, std::uint64_t> B;
};

SscGhwBound ghw_ssc_lower(const SscGhwContext& ctx, int r, SscGhwProvider& provider);
SscGhwBound ghw_ssc_upper(const SscGhwContext& ctx, int r, SscGhwProvider& provider);

// ------------------------------------------------------- (q, s) entry points, Q = q^s

std::uint64_t ghw_rm(int q, int s, int m, int d, std::uint64_t r);
std::uint64_t ghw_prs(int q, int s, int d, std::uint64_t r);
/// Recursive lower bound with its trace; r = 1 returns the closed-form minimum distance.
GhwBoundTrace ghw_prm_lower(int q, int s, int m, int d, int r);
std::uint64_t ghw_prm_upper(int q, int s, int m, int d, int r);
M2Trace ghw_prm_m2_lower(int q, int s, int d, int r);
GhwEngine::ReportPtr refine_hierarchy(int q, int s, int m, int d);
DualDistance dual_min_distance_deq0(int q, int s, int m, int d);
SscGhwBound ghw_ssc_lower(int q, int s, int m, int lambda, int r, SscGhwProvider& provider);
SscGhwBound ghw_ssc_upper(int q, int s, int m, int lambda, int r, SscGhwProvider& provider);

}  // namespace prmkit
