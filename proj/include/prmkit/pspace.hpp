#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "prmkit/gf.hpp"

namespace prmkit {

inline constexpr std::uint64_t kDefaultPointCap = 1u << 22;

/// Number of points of projective m-space over GF(Q): (Q^(m+1) - 1) / (Q - 1).
std::uint64_t projective_count(std::uint64_t Q, int m);
std::uint64_t ipow(std::uint64_t base, int exp);

/// Ordered list of points, each a tuple of `dim` field elements, stored flat.
class PointSet {
  public:
    PointSet(FieldPtr field, int dim) : field_(std::move(field)), dim_(dim) {}

    const FieldPtr& field() const { return field_; }
    int dim() const { return dim_; }
    std::size_t size() const { return count_; }
    std::span<const Elem> point(std::size_t i) const {
        return {coords_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
    }
    void push(std::span<const Elem> pt);

  private:
    FieldPtr field_;
    int dim_;
    std::size_t count_ = 0;
    std::vector<Elem> coords_;
};

/**
 * Normalized representatives of P^m (first nonzero coordinate equal to 1).
 *
 * P^0 = [(1)]; P^m = {1} x affine(m) followed by {0} x P^(m-1).
 */
PointSet enumerate_projective(const FieldPtr& field, int m, std::uint64_t cap = kDefaultPointCap);

/**
 * Affine space GF(Q)^m ordered as xi^0 * P^(m-1), xi^1 * P^(m-1), ..., xi^(Q-2) * P^(m-1), then the origin.
 */
PointSet enumerate_affine(const FieldPtr& field, int m, std::uint64_t cap = kDefaultPointCap);

}  // namespace prmkit
