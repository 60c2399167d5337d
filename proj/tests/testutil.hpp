#pragma once

#include <random>

#include "lhom/dcomplex.hpp"
#include "lhom/subspace.hpp"

namespace lhom::testutil {

inline Scalar random_scalar(FieldSpec f, std::mt19937_64& rng) {
    if (f.is_rationals()) return Scalar::of_int(f, draw_int(rng, -3, 3));
    return Scalar::of_int(f, static_cast<long>(draw(rng, f.characteristic())));
}

inline Mat random_mat(FieldSpec f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Mat m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_scalar(f, rng);
    return m;
}

inline Subspace random_subspace(FieldSpec f, std::size_t ambient, std::mt19937_64& rng) {
    const std::size_t gens = draw(rng, ambient + 2);
    return Subspace::from_span(random_mat(f, ambient, gens, rng));
}

inline std::vector<std::size_t> random_dims(std::size_t count, std::size_t max_dim,
                                            std::mt19937_64& rng) {
    std::vector<std::size_t> dims(count);
    for (auto& d : dims) d = draw(rng, max_dim + 1);
    return dims;
}

/// Embeds a grid into a one-larger grid with a zero-object border.
inline DoubleComplex padded(const DoubleComplex& dc) {
    const FieldSpec f = dc.field();
    const std::size_t rows = dc.rows() + 2, cols = dc.cols() + 2;
    std::vector<std::size_t> dims(rows * cols, 0);
    for (std::size_t i = 0; i < dc.rows(); ++i)
        for (std::size_t j = 0; j < dc.cols(); ++j)
            dims[(i + 1) * cols + (j + 1)] = dc.dim_at({i, j});
    std::vector<Mat> hmaps, vmaps;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j + 1 < cols; ++j) {
            // both endpoints interior <=> 1 <= i <= rows(dc) and 1 <= j <= cols(dc)-1
            if (i >= 1 && i <= dc.rows() && j >= 1 && j <= dc.cols() - 1 && dc.cols() >= 2)
                hmaps.push_back(dc.hmap(i - 1, j - 1));
            else
                hmaps.push_back(Mat::zero(f, dims[i * cols + j + 1], dims[i * cols + j]));
        }
    for (std::size_t i = 0; i + 1 < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            if (j >= 1 && j <= dc.cols() && i >= 1 && i <= dc.rows() - 1 && dc.rows() >= 2)
                vmaps.push_back(dc.vmap(i - 1, j - 1));
            else
                vmaps.push_back(Mat::zero(f, dims[(i + 1) * cols + j], dims[i * cols + j]));
        }
    return DoubleComplex(f, rows, cols, std::move(dims), std::move(hmaps), std::move(vmaps));
}

}  // namespace lhom::testutil
