#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prmkit/ghw.hpp"
#include "prmkit/oracle.hpp"

namespace prmkit {

enum class Suite { Recursion, Duality, Ssc, GhwSandwich, Ordering };

std::string to_string(Suite s);
std::optional<Suite> suite_from_string(const std::string& s);

struct VerifyOptions {
    std::uint64_t max_n = 400;
    std::vector<std::uint64_t> fields{2, 3, 4, 5, 8, 9};
    int max_m = 3;
    /// Sandwich suite only: fixed (q, s, m); unset means the small-field sweep.
    std::optional<int> q;
    std::optional<int> s;
    std::optional<int> m;
    GhwOracleOptions oracle{};
};

struct VerifyReport {
    Suite suite{};
    bool pass = true;
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;  // instances over the oracle cap
    /// Sandwich suite: every oracle value equals the refined lower bound.
    std::optional<bool> all_exact;
    std::vector<std::string> counterexamples;

    void fail(std::string what) {
        pass = false;
        counterexamples.push_back(std::move(what));
    }
};

VerifyReport verify_recursion_suite(const VerifyOptions& opt);
/// Dual of PRM_d(m) against PRM_{m(Q-1)-d}(m), plus the all-ones word when Q-1 divides d.
VerifyReport verify_duality_suite(const VerifyOptions& opt);
/// Subfield subcode recursion, dimension identity and dual recursion for all (q, s, m, lambda) with q^s in the sweep.
VerifyReport verify_ssc_suite(const VerifyOptions& opt);
/// lower <= oracle <= upper for every feasible (d, r).
VerifyReport verify_ghw_sandwich_suite(const VerifyOptions& opt, GhwEngine& engine);
/// Projective and affine point orderings against their recursive description.
VerifyReport verify_ordering_suite(const VerifyOptions& opt);

VerifyReport run_suite(Suite s, const VerifyOptions& opt, GhwEngine& engine);

/// True iff {d_r(C)} and {n+1-d_r(C^perp)} partition {1..n}.
bool wei_partition(std::uint64_t n, const std::vector<std::uint64_t>& code, const std::vector<std::uint64_t>& dual);

}  // namespace prmkit
