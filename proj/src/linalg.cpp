#include "prmkit/linalg.hpp"

#include <algorithm>

namespace prmkit {

namespace {

void require_compatible(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("matrix column counts differ");
    if (a.field() != b.field() && a.field()->order() != b.field()->order())
        throw std::invalid_argument("matrices over different fields");
}

// row[dst] += c * row[src], restricted to columns >= from.
void axpy(const Field& f, std::span<Elem> dst, Elem c, std::span<const Elem> src, std::size_t from) {
    if (c == 0) return;
    if (f.characteristic() == 2 && c == 1) {
        for (std::size_t j = from; j < dst.size(); ++j) dst[j] ^= src[j];
        return;
    }
    for (std::size_t j = from; j < dst.size(); ++j)
        if (src[j] != 0) dst[j] = f.add(dst[j], f.mul(c, src[j]));
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr field, std::size_t cols, const std::vector<std::vector<Elem>>& rows)
    : field_(std::move(field)), rows_(0), cols_(cols) {
    for (const auto& r : rows) append_row(r);
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void Matrix::append_row(std::span<const Elem> r) {
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::multiply(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) axpy(*field_, out.row(i), at(i, k), rhs.row(k), 0);
    return out;
}

Matrix Matrix::columns(std::span<const std::size_t> idx) const {
    Matrix out(field_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) out.at(i, j) = at(i, idx[j]);
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_ &&
           (field_ == other.field_ || (field_ && other.field_ && field_->order() == other.field_->order()));
}

RrefResult rref(const Matrix& m) {
    const Field& f = *m.field();
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t sel = r;
        while (sel < a.rows() && a.at(sel, c) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != r)
            for (std::size_t j = c; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(r, j));
        Elem inv = f.inv(a.at(r, c));
        if (inv != 1)
            for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) = f.mul(inv, a.at(r, j));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            axpy(f, a.row(i), f.neg(a.at(i, c)), a.row(r), c);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(m.field(), r, m.cols());
    for (std::size_t i = 0; i < r; ++i) std::copy(a.row(i).begin(), a.row(i).end(), reduced.row(i).begin());
    return {std::move(reduced), std::move(pivots), r};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel(const Matrix& m) {
    const Field& f = *m.field();
    auto rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    Matrix k(m.field(), 0, m.cols());
    std::vector<Elem> v(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = f.neg(rr.reduced.at(i, free));
        k.append_row(v);
    }
    return k;
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
    require_compatible(a, b);
    auto ra = rref(a), rb = rref(b);
    return ra.rank == rb.rank && ra.reduced.data() == rb.reduced.data();
}

bool in_row_space(const Matrix& m, std::span<const Elem> v) {
    Matrix ext = m;
    ext.append_row(v);
    return rank(ext) == rank(m);
}

bool row_space_contains(const Matrix& b, const Matrix& a) {
    require_compatible(a, b);
    return rank(vstack(b, a)) == rank(b);
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    require_compatible(a, b);
    Matrix out = a;
    for (std::size_t i = 0; i < b.rows(); ++i) out.append_row(b.row(i));
    return out;
}

Matrix row_space_intersection(const Matrix& a, const Matrix& b) {
    require_compatible(a, b);
    // x*A = y*B  <=>  (x, -y) in left kernel of [A; B].
    Matrix ba = rref(a).reduced, bb = rref(b).reduced;
    Matrix stacked = vstack(ba, bb);
    Matrix left = kernel(stacked.transpose());
    Matrix out(a.field(), 0, a.cols());
    for (std::size_t i = 0; i < left.rows(); ++i) {
        std::vector<Elem> coeff(left.row(i).begin(), left.row(i).begin() + static_cast<std::ptrdiff_t>(ba.rows()));
        out.append_row(combine_rows(ba, coeff));
    }
    return rref(out).reduced;
}

std::vector<Elem> add_vectors(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    std::vector<Elem> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

std::vector<Elem> scale_vector(const Field& f, Elem c, std::span<const Elem> v) {
    std::vector<Elem> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.mul(c, v[i]);
    return out;
}

Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    Elem s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

std::vector<Elem> combine_rows(const Matrix& m, std::span<const Elem> coefficients) {
    if (coefficients.size() != m.rows()) throw std::invalid_argument("coefficient count mismatch");
    std::vector<Elem> out(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) axpy(*m.field(), out, coefficients[i], m.row(i), 0);
    return out;
}

std::optional<std::vector<Elem>> solve_left(const Matrix& m, std::span<const Elem> target) {
    if (target.size() != m.cols()) throw std::invalid_argument("solve_left: length mismatch");
    const Field& f = *m.field();
    Matrix aug = m;
    aug.append_row(target);
    // y * [m; target] = 0 with y_last != 0 gives x = -y_head / y_last.
    Matrix left = kernel(aug.transpose());
    const std::size_t last = m.rows();
    for (std::size_t i = 0; i < left.rows(); ++i) {
        Elem c = left.at(i, last);
        if (c == 0) continue;
        Elem scale = f.neg(f.inv(c));
        std::vector<Elem> x(m.rows());
        for (std::size_t j = 0; j < m.rows(); ++j) x[j] = f.mul(scale, left.at(i, j));
        return x;
    }
    return std::nullopt;
}

}  // namespace prmkit
