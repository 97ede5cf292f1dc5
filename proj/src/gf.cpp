#include "prmkit/gf.hpp"

#include <string>

namespace prmkit {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<int, int> prime_power(std::uint64_t order) {
    if (order < 2) throw FieldError("field order must be at least 2");
    std::uint64_t p = 2;
    while (order % p != 0) ++p;
    int e = 0;
    std::uint64_t rest = order;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw FieldError("not a prime power: " + std::to_string(order));
    return {static_cast<int>(p), e};
}

namespace {

// Remainder of a modulo b over GF(p); b monic. Both low degree first.
std::vector<int> poly_mod(std::vector<int> a, std::span<const int> b, int p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        int lead = a.back() % p;
        std::size_t shift = a.size() - 1 - db;
        if (lead != 0)
            for (std::size_t i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
        a.pop_back();
    }
    return a;
}

}  // namespace

bool is_irreducible(std::span<const int> monic, int p) {
    const int deg = static_cast<int>(monic.size()) - 1;
    if (deg < 1) return false;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (int dd = 1; dd <= deg / 2; ++dd) {
        std::uint64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<int> div(dd + 1, 0);
            std::uint64_t c = code;
            for (int i = 0; i < dd; ++i) {
                div[i] = static_cast<int>(c % p);
                c /= p;
            }
            div[dd] = 1;
            auto r = poly_mod(std::vector<int>(monic.begin(), monic.end()), div, p);
            bool zero = true;
            for (int v : r) zero = zero && v == 0;
            if (zero) return false;
        }
    }
    return true;
}

FieldPtr Field::of_order(std::uint64_t order, std::uint32_t cap) {
    auto [p, e] = prime_power(order);
    return build(p, e, cap);
}

FieldPtr Field::build(int p, int e, std::uint32_t cap) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw FieldError("characteristic is not prime: " + std::to_string(p));
    if (e < 1) throw FieldError("extension degree must be positive");
    std::uint64_t order = 1;
    for (int i = 0; i < e; ++i) {
        order *= static_cast<std::uint64_t>(p);
        if (order > cap) throw FieldError("field order exceeds cap " + std::to_string(cap));
    }

    std::shared_ptr<Field> f(new Field());
    f->p_ = p;
    f->e_ = e;
    f->order_ = static_cast<std::uint32_t>(order);
    const std::uint32_t units = f->order_ - 1;

    auto encode = [&](const std::vector<int>& d) {
        std::uint32_t v = 0;
        for (int i = e - 1; i >= 0; --i) v = v * p + static_cast<std::uint32_t>(d[i]);
        return v;
    };

    std::vector<int> low(e);
    for (std::uint32_t code = 0; code < order; ++code) {
        std::uint32_t c = code;
        for (int i = 0; i < e; ++i) {
            low[i] = static_cast<int>(c % p);
            c /= p;
        }
        // Powers of the canonical root: multiply by root and reduce with root^e = -sum low_i root^i.
        std::vector<std::uint32_t> powers;
        powers.reserve(units);
        std::vector<int> cur(e, 0);
        cur[0] = 1;
        bool primitive = true;
        for (std::uint32_t k = 0; k < units; ++k) {
            std::uint32_t v = encode(cur);
            if (v == 0 || (k > 0 && v == 1)) {
                primitive = false;
                break;
            }
            powers.push_back(v);
            int top = cur[e - 1];
            for (int i = e - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            for (int i = 0; i < e; ++i) cur[i] = ((cur[i] - top * low[i]) % p + p) % p;
        }
        if (!primitive || encode(cur) != 1) continue;

        f->modulus_.assign(low.begin(), low.end());
        f->modulus_.push_back(1);
        f->exp_.resize(2 * static_cast<std::size_t>(units));
        f->log_.assign(order, 0);
        for (std::uint32_t k = 0; k < units; ++k) {
            f->exp_[k] = static_cast<Elem>(powers[k]);
            f->exp_[k + units] = static_cast<Elem>(powers[k]);
            f->log_[powers[k]] = k;
        }
        f->zech_.assign(units, -1);
        for (std::uint32_t k = 0; k < units; ++k) {
            auto dig = f->digits(f->exp_[k]);
            dig[0] = (dig[0] + 1) % p;
            Elem s = f->from_digits(dig);
            f->zech_[k] = s == 0 ? -1 : static_cast<std::int32_t>(f->log_[s]);
        }
        f->minus_one_ = p == 2 ? Elem{1} : f->exp_[units / 2];
        return f;
    }
    throw FieldError("no primitive modulus found");  // unreachable for prime powers
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw FieldError("inverse of zero");
    std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : (order_ - 1) - l];
}

Elem Field::pow(Elem a, std::int64_t k) const {
    if (a == 0) {
        if (k == 0) return 1;
        if (k < 0) throw FieldError("negative power of zero");
        return 0;
    }
    const std::int64_t units = order_ - 1;
    std::int64_t l = (static_cast<std::int64_t>(log_[a]) * (k % units)) % units;
    if (l < 0) l += units;
    return exp_[static_cast<std::size_t>(l)];
}

Elem Field::exp(std::int64_t i) const {
    const std::int64_t units = order_ - 1;
    std::int64_t l = i % units;
    if (l < 0) l += units;
    return exp_[static_cast<std::size_t>(l)];
}

std::uint32_t Field::log(Elem a) const {
    if (a == 0 || a >= order_) throw FieldError("log of zero or invalid element");
    return log_[a];
}

std::vector<int> Field::digits(Elem a) const {
    std::vector<int> d(e_);
    std::uint32_t v = a;
    for (int i = 0; i < e_; ++i) {
        d[i] = static_cast<int>(v % p_);
        v /= p_;
    }
    return d;
}

Elem Field::from_digits(std::span<const int> d) const {
    std::uint32_t v = 0;
    for (int i = e_ - 1; i >= 0; --i) v = v * p_ + static_cast<std::uint32_t>(((d[i] % p_) + p_) % p_);
    return static_cast<Elem>(v);
}

int Field::subfield_degree(std::uint32_t q) const {
    auto [qp, a] = prime_power(q);
    if (qp != p_ || e_ % a != 0) throw FieldError("GF(" + std::to_string(q) + ") is not a subfield of GF(" + std::to_string(order_) + ")");
    return e_ / a;
}

bool Field::in_subfield(std::uint32_t q, Elem a) const {
    subfield_degree(q);
    if (a == 0) return true;
    return log_[a] % ((order_ - 1) / (q - 1)) == 0;
}

std::vector<Elem> Field::subfield_basis(std::uint32_t q) const {
    const int s = subfield_degree(q);
    std::vector<Elem> basis;
    for (int i = 0; i < s; ++i) basis.push_back(exp(i));
    return basis;
}

}  // namespace prmkit
