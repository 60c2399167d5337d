#include "oracle.hpp"

#include <algorithm>

namespace lhom::oracle {

Vec to_mask(const std::vector<Scalar>& v) {
    Vec m = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) m |= (1u << i);
    return m;
}

std::vector<Vec> all_vectors(std::size_t ambient) {
    std::vector<Vec> out;
    for (Vec v = 0; v < (1u << ambient); ++v) out.push_back(v);
    return out;
}

Vec apply(const Mat& m, Vec x) {
    Vec y = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        unsigned bit = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero() && (x >> j & 1u)) bit ^= 1u;
        if (bit) y |= (1u << i);
    }
    return y;
}

VSet span(std::size_t, const std::vector<Vec>& gens) {
    VSet s{0};
    for (Vec g : gens) {
        VSet next = s;
        for (Vec v : s) next.insert(v ^ g);
        s = std::move(next);
    }
    return s;
}

VSet members(const Subspace& s) {
    std::vector<Vec> gens;
    for (std::size_t c = 0; c < s.dim(); ++c) gens.push_back(to_mask(s.basis().col(c)));
    return span(s.ambient_dim(), gens);
}

bool leq_set(const VSet& a, const VSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VSet join_set(std::size_t ambient, const VSet& a, const VSet& b) {
    std::vector<Vec> gens(a.begin(), a.end());
    gens.insert(gens.end(), b.begin(), b.end());
    return span(ambient, gens);
}

VSet meet_set(const VSet& a, const VSet& b) {
    VSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.begin()));
    return out;
}

VSet direct_image_set(const Mat& f, const VSet& s) {
    VSet out;
    for (Vec v : s) out.insert(apply(f, v));
    return out;
}

VSet inverse_image_set(const Mat& f, std::size_t src_ambient, const VSet& t) {
    VSet out;
    for (Vec v : all_vectors(src_ambient))
        if (t.count(apply(f, v))) out.insert(v);
    return out;
}

VSet kernel_set(const Mat& m) { return inverse_image_set(m, m.cols(), VSet{0}); }

VSet image_set(const Mat& m) {
    VSet out;
    for (Vec v : all_vectors(m.cols())) out.insert(apply(m, v));
    return out;
}

bool exact_at_middle(const Mat& u1, const Subquotient& h1, const Subquotient& h2, const Mat& u2,
                     const Subquotient& h3) {
    const VSet num1 = members(h1.numerator());
    const VSet num2 = members(h2.numerator());
    const VSet den2 = members(h2.denominator());
    const VSet den3 = members(h3.denominator());

    const auto coset_rep = [&](Vec y) {
        Vec best = y;
        for (Vec d : den2) best = std::min(best, y ^ d);
        return best;
    };

    VSet image_reps, kernel_reps;
    for (Vec x : num1) image_reps.insert(coset_rep(apply(u1, x)));
    for (Vec y : num2)
        if (den3.count(apply(u2, y))) kernel_reps.insert(coset_rep(y));
    return image_reps == kernel_reps;
}

}  // namespace lhom::oracle
