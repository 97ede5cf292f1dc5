#include "prmkit/pspace.hpp"

#include <stdexcept>
#include <string>

namespace prmkit {

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

std::uint64_t projective_count(std::uint64_t Q, int m) {
    std::uint64_t total = 0;
    for (int j = 0; j <= m; ++j) total += ipow(Q, j);
    return total;
}

void PointSet::push(std::span<const Elem> pt) {
    if (static_cast<int>(pt.size()) != dim_) throw std::invalid_argument("point dimension mismatch");
    coords_.insert(coords_.end(), pt.begin(), pt.end());
    ++count_;
}

PointSet enumerate_projective(const FieldPtr& field, int m, std::uint64_t cap) {
    if (m < 0) throw std::invalid_argument("projective dimension must be non-negative");
    if (projective_count(field->order(), m) > cap)
        throw std::length_error("projective point set exceeds cap " + std::to_string(cap));
    PointSet out(field, m + 1);
    if (m == 0) {
        Elem one[1] = {1};
        out.push(one);
        return out;
    }
    std::vector<Elem> buf(static_cast<std::size_t>(m) + 1);
    PointSet aff = enumerate_affine(field, m, cap);
    for (std::size_t i = 0; i < aff.size(); ++i) {
        buf[0] = 1;
        auto p = aff.point(i);
        std::copy(p.begin(), p.end(), buf.begin() + 1);
        out.push(buf);
    }
    PointSet lower = enumerate_projective(field, m - 1, cap);
    for (std::size_t i = 0; i < lower.size(); ++i) {
        buf[0] = 0;
        auto p = lower.point(i);
        std::copy(p.begin(), p.end(), buf.begin() + 1);
        out.push(buf);
    }
    return out;
}

PointSet enumerate_affine(const FieldPtr& field, int m, std::uint64_t cap) {
    if (m < 1) throw std::invalid_argument("affine dimension must be positive");
    if (ipow(field->order(), m) > cap) throw std::length_error("affine point set exceeds cap " + std::to_string(cap));
    PointSet out(field, m);
    PointSet base = enumerate_projective(field, m - 1, cap);
    std::vector<Elem> buf(static_cast<std::size_t>(m));
    for (std::uint32_t r = 0; r + 1 < field->order(); ++r) {
        Elem scale = field->exp(r);
        for (std::size_t i = 0; i < base.size(); ++i) {
            auto p = base.point(i);
            for (int j = 0; j < m; ++j) buf[j] = field->mul(scale, p[j]);
            out.push(buf);
        }
    }
    std::fill(buf.begin(), buf.end(), Elem{0});
    out.push(buf);
    return out;
}

}  // namespace prmkit
