#include "lhom/subspace.hpp"

namespace lhom {

namespace {

void check_same_ambient(const Subspace& s, const Subspace& t, const char* op) {
    if (!(s.field() == t.field()) || s.ambient_dim() != t.ambient_dim())
        throw InputError(std::string(op) + ": ambient space mismatch");
}

}  // namespace

bool leq(const Subspace& s, const Subspace& t) {
    check_same_ambient(s, t, "leq");
    return solve_all(t.basis(), s.basis()).has_value();
}

Subspace join(const Subspace& s, const Subspace& t) {
    check_same_ambient(s, t, "join");
    return Subspace::from_span(Mat::hstack(s.basis(), t.basis()));
}

Subspace meet(const Subspace& s, const Subspace& t) {
    check_same_ambient(s, t, "meet");
    if (s.dim() == 0 || t.dim() == 0) return Subspace::bottom(s.field(), s.ambient_dim());
    // null vectors (x; y) of [Bs | Bt] give Bs x = -Bt y, i.e. the intersection
    const Mat k = kernel(Mat::hstack(s.basis(), t.basis()));
    Mat x(s.field(), s.dim(), k.cols());
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) x.at(i, j) = k.at(i, j);
    return Subspace::from_span(s.basis() * x);
}

Subspace direct_image(const Mat& f, const Subspace& s) {
    if (!(f.field() == s.field()) || f.cols() != s.ambient_dim())
        throw InputError("direct_image: shape mismatch");
    return Subspace::from_span(f * s.basis());
}

Subspace inverse_image(const Mat& f, const Subspace& t) {
    if (!(f.field() == t.field()) || f.rows() != t.ambient_dim())
        throw InputError("inverse_image: shape mismatch");
    if (t.dim() == 0) return Subspace::from_span(kernel(f));
    // null vectors (x; y) of [f | -Bt] give f x = Bt y, i.e. the preimage
    const Mat k = kernel(Mat::hstack(f, t.basis().scaled(-Scalar::one(f.field()))));
    Mat x(f.field(), f.cols(), k.cols());
    for (std::size_t i = 0; i < f.cols(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) x.at(i, j) = k.at(i, j);
    return Subspace::from_span(x);
}

bool contains(const Subspace& s, const std::vector<Scalar>& v) {
    if (v.size() != s.ambient_dim()) throw InputError("contains: vector length mismatch");
    return solve(s.basis(), v).has_value();
}

}  // namespace lhom
