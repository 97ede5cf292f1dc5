#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace prmkit {

/// Field element in polynomial-basis encoding: sum c_i * root^i  <->  sum c_i * p^i.
using Elem = std::uint16_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class FieldError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint32_t kDefaultFieldCap = 1u << 16;

bool is_prime(std::uint64_t n);

/// Splits a prime power into (p, e); throws FieldError if `order` is not a prime power.
std::pair<int, int> prime_power(std::uint64_t order);

/// Monic polynomial over GF(p), coefficients low degree first.
bool is_irreducible(std::span<const int> monic, int p);

/**
 * GF(p^e) with Zech-logarithm arithmetic.
 *
 * The modulus is the smallest monic degree-e polynomial over GF(p) (ordered by
 * its coefficient code, highest degree digit first) whose root `xi` generates the
 * multiplicative group. Immutable once built; share it through FieldPtr.
 */
class Field {
  public:
    static FieldPtr build(int p, int e, std::uint32_t cap = kDefaultFieldCap);
    static FieldPtr of_order(std::uint64_t order, std::uint32_t cap = kDefaultFieldCap);

    int characteristic() const { return p_; }
    int degree() const { return e_; }
    std::uint32_t order() const { return order_; }
    Elem xi() const { return exp_[1 % (order_ - 1)]; }
    /// Coefficients of the modulus, low degree first, including the leading 1.
    const std::vector<int>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool valid(Elem a) const { return a < order_; }

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return static_cast<Elem>(a ^ b);
        if (e_ == 1) {
            int s = a + b;
            return static_cast<Elem>(s >= p_ ? s - p_ : s);
        }
        if (a == 0) return b;
        if (b == 0) return a;
        std::uint32_t la = log_[a], lb = log_[b];
        std::uint32_t diff = lb >= la ? lb - la : lb + (order_ - 1) - la;
        std::int32_t z = zech_[diff];
        if (z < 0) return 0;
        return exp_[la + static_cast<std::uint32_t>(z)];
    }
    Elem neg(Elem a) const {
        if (p_ == 2 || a == 0) return a;
        if (e_ == 1) return static_cast<Elem>(p_ - a);
        return mul(a, minus_one_);
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::int64_t k) const;
    /// xi^i for any integer i.
    Elem exp(std::int64_t i) const;
    /// Discrete log base xi; a must be nonzero.
    std::uint32_t log(Elem a) const;

    /// Polynomial-basis digits (c_0..c_{e-1}) of a.
    std::vector<int> digits(Elem a) const;
    Elem from_digits(std::span<const int> digits) const;

    /// True iff a lies in the subfield of order q, i.e. a^q = a.
    bool in_subfield(std::uint32_t q, Elem a) const;
    /// {1, xi, ..., xi^(s-1)} where order = q^s.
    std::vector<Elem> subfield_basis(std::uint32_t q) const;
    /// Checks that q = p^a with a | e; returns s = e / a.
    int subfield_degree(std::uint32_t q) const;

  private:
    Field() = default;

    int p_ = 0;
    int e_ = 0;
    std::uint32_t order_ = 0;
    Elem minus_one_ = 0;
    std::vector<int> modulus_;
    std::vector<Elem> exp_;           // length 2*(order-1) so log sums need no reduction
    std::vector<std::uint32_t> log_;  // log_[0] unused
    std::vector<std::int32_t> zech_;  // log(1 + xi^i), -1 when 1 + xi^i = 0
};

}  // namespace prmkit
