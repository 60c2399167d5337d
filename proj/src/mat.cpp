#include "lhom/mat.hpp"

#include <sstream>

namespace lhom {

Mat Mat::identity(FieldSpec f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Mat Mat::from_ints(FieldSpec f, const std::vector<std::vector<long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw InputError("from_ints: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::of_int(f, rows[i][j]);
    }
    return m;
}

bool Mat::is_zero() const {
    for (const auto& s : a_)
        if (!s.is_zero()) return false;
    return true;
}

bool operator==(const Mat& a, const Mat& b) {
    if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        if (!(a.a_[i] == b.a_[i])) return false;
    return true;
}

Mat Mat::operator*(const Mat& o) const {
    if (!(field_ == o.field_)) throw InputError("matrix product: field mismatch");
    if (cols_ != o.rows_) throw InputError("matrix product: shape mismatch");
    Mat r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_)
        throw InputError("matrix sum: shape or field mismatch");
    Mat r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Mat Mat::scaled(const Scalar& s) const {
    Mat r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

Mat Mat::transpose() const {
    Mat r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar>& x) const {
    if (x.size() != cols_) throw InputError("apply: vector length mismatch");
    std::vector<Scalar> y(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) y[i] = y[i] + at(i, j) * x[j];
    return y;
}

std::vector<Scalar> Mat::col(std::size_t c) const {
    std::vector<Scalar> v(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

Mat Mat::columns(const std::vector<std::size_t>& idx) const {
    Mat r(field_, rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
    return r;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
    if (!(a.field_ == b.field_) || a.rows_ != b.rows_)
        throw InputError("hstack: shape or field mismatch");
    Mat r(a.field_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
}

Mat Mat::kron(const Mat& a, const Mat& b) {
    if (!(a.field_ == b.field_)) throw InputError("kron: field mismatch");
    Mat r(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows_; ++k)
                for (std::size_t l = 0; l < b.cols_; ++l)
                    r.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}

Mat Mat::direct_sum(const Mat& a, const Mat& b) {
    if (!(a.field_ == b.field_)) throw InputError("direct_sum: field mismatch");
    Mat r(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
    return r;
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j).str();
        }
    }
    os << "]";
    return os.str();
}

RrefResult rref(const Mat& m, std::size_t pivot_limit) {
    Mat r = m;
    const std::size_t limit = std::min(pivot_limit, r.cols());
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < limit && row < r.rows(); ++c) {
        std::size_t sel = row;
        while (sel < r.rows() && r.at(sel, c).is_zero()) ++sel;
        if (sel == r.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(row, j));
        const Scalar inv = r.at(row, c).inverse();
        for (std::size_t j = 0; j < r.cols(); ++j) r.at(row, j) = r.at(row, j) * inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row || r.at(i, c).is_zero()) continue;
            const Scalar factor = r.at(i, c);
            for (std::size_t j = 0; j < r.cols(); ++j)
                r.at(i, j) = r.at(i, j) - factor * r.at(row, j);
        }
        pivots.push_back(c);
        ++row;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Mat canonical_colspan(const Mat& m) {
    const RrefResult rr = rref(m.transpose());
    const std::size_t k = rr.pivots.size();
    Mat basis(m.field(), m.rows(), k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) basis.at(i, j) = rr.mat.at(j, i);
    return basis;
}

Mat kernel(const Mat& m) {
    const RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;

    Mat raw(m.field(), m.cols(), m.cols() - rr.pivots.size());
    std::size_t out = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        raw.at(c, out) = Scalar::one(m.field());
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            raw.at(rr.pivots[i], out) = -rr.mat.at(i, c);
        ++out;
    }
    return canonical_colspan(raw);
}

Mat image(const Mat& m) { return canonical_colspan(m); }

std::optional<std::vector<Scalar>> solve(const Mat& m, const std::vector<Scalar>& b) {
    if (b.size() != m.rows()) throw InputError("solve: rhs length mismatch");
    Mat rhs(m.field(), m.rows(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i) rhs.at(i, 0) = b[i];
    auto x = solve_all(m, rhs);
    if (!x) return std::nullopt;
    return x->col(0);
}

std::optional<Mat> solve_all(const Mat& m, const Mat& b) {
    if (!(m.field() == b.field()) || m.rows() != b.rows())
        throw InputError("solve_all: shape or field mismatch");
    const RrefResult rr = rref(Mat::hstack(m, b), m.cols());
    const std::size_t nr = rr.pivots.size();
    // consistent iff the non-pivot rows of the augmented block vanish
    for (std::size_t i = nr; i < rr.mat.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!rr.mat.at(i, m.cols() + j).is_zero()) return std::nullopt;
    Mat x(m.field(), m.cols(), b.cols());
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(rr.pivots[i], j) = rr.mat.at(i, m.cols() + j);
    return x;
}

}  // namespace lhom
