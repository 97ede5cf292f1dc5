#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "prmkit/codes.hpp"
#include "prmkit/oracle.hpp"

namespace prmkit {

/**
 * Identifies a standalone GF(q) with the subfield of order q inside GF(q^s).
 *
 * The small field's primitive element is sent to the smallest root of its
 * modulus lying in the big field, so both fields keep their own encodings.
 */
class SubfieldEmbedding {
  public:
    static std::shared_ptr<const SubfieldEmbedding> make(FieldPtr big, std::uint32_t q);

    const FieldPtr& big() const { return big_; }
    const FieldPtr& small() const { return small_; }
    std::uint32_t q() const { return q_; }
    int s() const { return s_; }

    Elem up(Elem small_elem) const { return to_big_[small_elem]; }
    bool contains(Elem big_elem) const { return to_small_[big_elem] >= 0; }
    /// Throws if the element is outside the subfield.
    Elem down(Elem big_elem) const;
    Matrix up(const Matrix& m) const;
    Matrix down(const Matrix& m) const;

    /// Coordinates (over GF(q), small encoding) of a big element in the basis 1, xi, ..., xi^(s-1).
    std::span<const Elem> coords(Elem big_elem) const {
        return {coords_.data() + static_cast<std::size_t>(big_elem) * static_cast<std::size_t>(s_),
                static_cast<std::size_t>(s_)};
    }

  private:
    SubfieldEmbedding() = default;

    FieldPtr big_;
    FieldPtr small_;
    std::uint32_t q_ = 0;
    int s_ = 0;
    std::vector<Elem> to_big_;
    std::vector<int> to_small_;
    std::vector<Elem> coords_;
};

using EmbeddingPtr = std::shared_ptr<const SubfieldEmbedding>;

enum class SscRoute { Auto, Generator, ParityCheck };

struct SscCode {
    LinearCode parent;
    EmbeddingPtr embedding;
    LinearCode code;  // over the small field, RREF

    std::size_t k() const { return code.k(); }
    std::size_t n() const { return code.n(); }
    /// Generator rows viewed over the big field.
    Matrix lifted() const { return embedding->up(code.generator); }
};

/**
 * C intersected with GF(q)^n.
 *
 * Generator: unknown message coefficients expanded over GF(q), constrained so
 * every codeword coordinate has zero non-constant coordinates in the basis
 * 1, xi, ... . ParityCheck: each row of a parity-check matrix of C becomes s
 * GF(q)-linear equations on GF(q)^n. Auto picks by parent rate.
 */
SscCode subfield_subcode(const LinearCode& parent, std::uint32_t q, SscRoute route = SscRoute::Auto);

/// d_lambda = lambda (q^s - 1) / (q - 1).
int d_lambda(int q, int s, int lambda);

SscCode ssc_prm(int q, int s, int m, int d);
SscCode ssc_rm(int q, int s, int m, int d);

/// Any family named by a CodeSpec (lambda, when set, fixes d for the SSC families).
LinearCode build_code(const CodeSpec& spec);

struct SscRecursionReport {
    int d = 0;
    bool row_space_equal = false;
    bool dimension_identity = false;
    std::size_t k = 0;
    std::size_t k_rm = 0;
    std::size_t k_prm_lower = 0;

    bool ok() const { return row_space_equal && dimension_identity; }
};

/// PRM^sigma_{d_lambda}(m) against {(u + v_{xi,d}, v)} built from the SSCs of RM_{d-1}(m) and PRM_d(m-1).
SscRecursionReport ssc_recursion_check(int q, int s, int m, int lambda);

struct SscDualReport {
    int d = 0;
    LinearCode code;  // recursive construction over GF(q)
    bool row_space_equal = false;
    std::size_t k_rm_dual = 0;
    std::size_t k_prm_dual_lower = 0;
};

/// Dual SSC assembled as {(u, -u_{xi,d}) } + {(0, v)} from the duals of the two inner SSCs.
SscDualReport ssc_dual_recursive(int q, int s, int m, int lambda);

/// Sparse polynomial with coefficients in a field.
struct Polynomial {
    FieldPtr field;
    int nvars = 0;
    std::map<Exponents, Elem> terms;  // zero coefficients never stored

    void add_term(const Exponents& e, Elem c);
    bool is_zero() const { return terms.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous(int d) const;
    Elem evaluate(std::span<const Elem> point) const;
};

/// Homogeneous polynomial in x_0..x_m produced by homogenize or lift.
using HomogenizedPoly = Polynomial;

/// x_0^d f(x_1/x_0, ..., x_m/x_0); requires deg f < d.
HomogenizedPoly homogenize(const Polynomial& f, int d);
/// The same polynomial read in x_0..x_m (no x_0 dependence).
HomogenizedPoly lift(const Polynomial& g);

Matrix evaluate_polys(const std::vector<Polynomial>& polys, const PointSet& points);

/// Polynomial of degree <= d in the reduced monomial basis whose evaluation on GF(Q)^m is `word`.
Polynomial interpolate_affine(const FieldPtr& field, int m, int d, std::span<const Elem> word);
/// Homogeneous degree-d polynomial whose evaluation on P^m is `word`.
Polynomial interpolate_projective(const FieldPtr& field, int m, int d, std::span<const Elem> word);

struct SscBasisReport {
    std::vector<HomogenizedPoly> polys;
    Matrix evaluations;  // over GF(q^s), one row per polynomial
    std::size_t rank = 0;
    bool spans_ssc = false;

    bool is_basis() const { return spans_ssc && rank == polys.size(); }
};

/**
 * Homogenized RM^sigma_{d-1}(m) polynomials together with the lifted
 * PRM^sigma_d(m-1) polynomials, evaluated on P^m and compared with the
 * generic subfield subcode. Throws std::invalid_argument if either input
 * family does not evaluate to a basis of its code.
 */
SscBasisReport ssc_basis_recursive(int q, int s, int m, int lambda, const std::vector<Polynomial>& rm_polys,
                                   const std::vector<Polynomial>& prm_polys);

/// Polynomials interpolating the generic SSC bases of RM_{d-1}(m) and PRM_d(m-1).
std::pair<std::vector<Polynomial>, std::vector<Polynomial>> generic_ssc_polys(int q, int s, int m, int lambda);

struct SscInequalityReport {
    std::uint64_t d1_rm = 0;  // d_1(RM_{d-1}(m)) over GF(q^s), closed form
    OracleResult d1_ssc_prm;
    OracleResult d1_ssc_rm;
    std::size_t dim_ssc_prm = 0;
    std::size_t dim_ssc_rm = 0;
    bool nondegenerate = false;
    bool dimension_holds = false;
    bool dimension_strict = false;
    /// Inequalities among exactly known distances; unknown ones are skipped and flagged.
    bool distances_hold = true;
    bool distances_complete = true;
};

SscInequalityReport ssc_inequalities_check(int q, int s, int m, int d, const MinDistanceOptions& opt = {});

}  // namespace prmkit
