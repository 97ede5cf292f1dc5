#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prmkit/linalg.hpp"
#include "prmkit/pspace.hpp"

namespace prmkit {

enum class Family { RM, PRM, SscRM, SscPRM, DualRM, DualPRM, DualSscRM, DualSscPRM };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

/// Symbolic name of a code: base field GF(q), evaluation field GF(q^s).
struct CodeSpec {
    int q = 2;
    int s = 1;
    int m = 1;
    int d = 1;
    Family family = Family::PRM;
    std::optional<int> lambda;

    std::uint64_t field_order() const;
    std::string describe() const;
};

struct LinearCode {
    std::optional<CodeSpec> spec;
    FieldPtr field;
    Matrix generator;  // RREF, no zero rows

    std::size_t n() const { return generator.cols(); }
    std::size_t k() const { return generator.rows(); }
};

LinearCode make_code(Matrix generator, std::optional<CodeSpec> spec = std::nullopt);

struct CodeParams {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t d1 = 0;
};

using Exponents = std::vector<int>;

/// Monomials spanning PRM_d(m) modulo the vanishing ideal, grouped by class index.
struct MonomialBasis {
    int m = 0;
    int d = 0;
    std::vector<std::vector<Exponents>> classes;  // classes[i]: tuples of length m+1

    std::size_t size() const;
    std::vector<Exponents> flatten() const;
};

MonomialBasis prm_monomial_basis(std::uint64_t Q, int m, int d);
/// Reduced monomials x^a with 0 <= a_i <= Q-1 and |a| <= d, lexicographic.
std::vector<Exponents> rm_monomials(std::uint64_t Q, int m, int d);

// Closed-form dimensions; out-of-range degrees give the zero or the full code.
std::uint64_t prm_dim(std::uint64_t Q, int m, int d);
std::uint64_t rm_dim(std::uint64_t Q, int m, int d);
/// dim RM_d(2) via the two-variable binomial expression, cross-check only.
std::uint64_t rm_dim_m2(std::uint64_t Q, int d);

CodeParams prm_params(std::uint64_t Q, int m, int d);
CodeParams rm_params(std::uint64_t Q, int m, int d);

Elem eval_monomial(const Field& f, const Exponents& alpha, std::span<const Elem> point);
Matrix evaluate_monomials(const FieldPtr& field, const std::vector<Exponents>& monomials, const PointSet& points);

/// PRM_d(m) over `field`; requires 1 <= d <= m(Q-1).
LinearCode prm_generator(const FieldPtr& field, int m, int d);
/// RM_d(m) over `field`; requires 0 <= d <= m(Q-1).
LinearCode rm_generator(const FieldPtr& field, int m, int d);
/// Same constructions without range checks: d <= 0 yields the zero code, large d the full space.
LinearCode prm_code_any(const FieldPtr& field, int m, int d);
LinearCode rm_code_any(const FieldPtr& field, int m, int d);

LinearCode dual_code(const LinearCode& c);

/// (v, xi^d v, xi^(2d) v, ..., xi^((Q-2)d) v, 0).
std::vector<Elem> expand_v(const Field& f, std::span<const Elem> v, int d);
/// (u + expand_v(v), v).
std::vector<Elem> assemble_recursive(const Field& f, std::span<const Elem> u, std::span<const Elem> v, int d);

struct RecursionCheck {
    bool row_space_equal = false;
    bool dimension_identity = false;
    std::size_t k = 0;
    std::size_t k_rm = 0;
    std::size_t k_prm_lower = 0;

    bool ok() const { return row_space_equal && dimension_identity; }
};

/// Checks PRM_d(m) = {(u + v_{xi,d}, v)} with u in RM_{d-1}(m), v in PRM_d(m-1).
RecursionCheck verify_recursion(const FieldPtr& field, int m, int d);

/// Recursive generator built from row bases of the two component codes.
Matrix recursive_generator(const Matrix& rm_rows, const Matrix& prm_rows, int d);

}  // namespace prmkit
