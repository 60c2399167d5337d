#include "lhom/dcomplex.hpp"

#include <algorithm>

namespace lhom {

ChainComplex::ChainComplex(FieldSpec field, std::vector<std::size_t> dims, std::vector<Mat> maps)
    : field_(field), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (dims_.empty()) throw InputError("chain complex: empty dimension list");
    if (maps_.size() + 1 != dims_.size())
        throw InputError("chain complex: expected one map per consecutive pair");
    for (std::size_t i = 0; i < maps_.size(); ++i) {
        if (!(maps_[i].field() == field_) || maps_[i].rows() != dims_[i + 1] ||
            maps_[i].cols() != dims_[i])
            throw InputError("chain complex: map " + std::to_string(i) + " has wrong shape or field");
        if (i > 0 && !(maps_[i] * maps_[i - 1]).is_zero())
            throw InputError("chain complex: composite at position " + std::to_string(i - 1) +
                             " is nonzero");
    }
}

ChainComplex ChainComplex::zeros(FieldSpec field, std::vector<std::size_t> dims) {
    std::vector<Mat> maps;
    for (std::size_t i = 0; i + 1 < dims.size(); ++i)
        maps.push_back(Mat::zero(field, dims[i + 1], dims[i]));
    return ChainComplex(field, std::move(dims), std::move(maps));
}

DoubleComplex::DoubleComplex(FieldSpec field, std::size_t rows, std::size_t cols,
                             std::vector<std::size_t> dims, std::vector<Mat> hmaps,
                             std::vector<Mat> vmaps)
    : field_(field), rows_(rows), cols_(cols), dims_(std::move(dims)),
      hmaps_(std::move(hmaps)), vmaps_(std::move(vmaps)) {
    if (rows_ == 0 || cols_ == 0) throw InputError("double complex: empty grid");
    if (dims_.size() != rows_ * cols_) throw InputError("double complex: dims grid size mismatch");
    if (hmaps_.size() != rows_ * (cols_ - 1))
        throw InputError("double complex: horizontal map count mismatch");
    if (vmaps_.size() != (rows_ - 1) * cols_)
        throw InputError("double complex: vertical map count mismatch");
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j + 1 < cols_; ++j) {
            const Mat& m = hmaps_[i * (cols_ - 1) + j];
            if (!(m.field() == field_) || m.rows() != dims_[i * cols_ + j + 1] ||
                m.cols() != dims_[i * cols_ + j])
                throw InputError("double complex: horizontal map at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") has wrong shape or field");
        }
    for (std::size_t i = 0; i + 1 < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Mat& m = vmaps_[i * cols_ + j];
            if (!(m.field() == field_) || m.rows() != dims_[(i + 1) * cols_ + j] ||
                m.cols() != dims_[i * cols_ + j])
                throw InputError("double complex: vertical map at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") has wrong shape or field");
        }
}

std::size_t DoubleComplex::dim_at(GridIndex at) const {
    if (!in_bounds(at)) throw InputError("dim_at: index out of bounds");
    return dims_[at.row * cols_ + at.col];
}

const Mat& DoubleComplex::hmap(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j + 1 >= cols_) throw InputError("hmap: index out of bounds");
    return hmaps_[i * (cols_ - 1) + j];
}

const Mat& DoubleComplex::vmap(std::size_t i, std::size_t j) const {
    if (i + 1 >= rows_ || j >= cols_) throw InputError("vmap: index out of bounds");
    return vmaps_[i * cols_ + j];
}

bool operator==(const DoubleComplex& a, const DoubleComplex& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.dims_ == b.dims_ && a.hmaps_ == b.hmaps_ && a.vmaps_ == b.vmaps_;
}

const char* law_name(LawViolation::Law law) {
    switch (law) {
        case LawViolation::Law::HorizontalComplex: return "horizontal_complex";
        case LawViolation::Law::VerticalComplex: return "vertical_complex";
        case LawViolation::Law::CommutingSquare: return "commuting_square";
    }
    return "?";
}

ValidationReport validate(const DoubleComplex& dc) {
    ValidationReport report;
    for (std::size_t i = 0; i < dc.rows(); ++i)
        for (std::size_t j = 0; j + 2 < dc.cols(); ++j)
            if (!(dc.hmap(i, j + 1) * dc.hmap(i, j)).is_zero())
                report.violations.push_back({LawViolation::Law::HorizontalComplex,
                                             {i, j},
                                             "composite of the two horizontal maps out of (" +
                                                 std::to_string(i) + "," + std::to_string(j) +
                                                 ") is nonzero"});
    for (std::size_t i = 0; i + 2 < dc.rows(); ++i)
        for (std::size_t j = 0; j < dc.cols(); ++j)
            if (!(dc.vmap(i + 1, j) * dc.vmap(i, j)).is_zero())
                report.violations.push_back({LawViolation::Law::VerticalComplex,
                                             {i, j},
                                             "composite of the two vertical maps out of (" +
                                                 std::to_string(i) + "," + std::to_string(j) +
                                                 ") is nonzero"});
    for (std::size_t i = 0; i + 1 < dc.rows(); ++i)
        for (std::size_t j = 0; j + 1 < dc.cols(); ++j)
            if (!(dc.vmap(i, j + 1) * dc.hmap(i, j) == dc.hmap(i + 1, j) * dc.vmap(i, j)))
                report.violations.push_back({LawViolation::Law::CommutingSquare,
                                             {i, j},
                                             "square with top-left corner (" + std::to_string(i) +
                                                 "," + std::to_string(j) + ") does not commute"});
    return report;
}

ObjectContext context(const DoubleComplex& dc, GridIndex at) {
    if (!dc.in_bounds(at)) throw InputError("context: index out of bounds");
    const FieldSpec f = dc.field();
    const std::size_t i = at.row, j = at.col;
    const std::size_t dim = dc.dim_at(at);

    Mat out_h = (j + 1 < dc.cols()) ? dc.hmap(i, j) : Mat::zero(f, 0, dim);
    Mat out_v = (i + 1 < dc.rows()) ? dc.vmap(i, j) : Mat::zero(f, 0, dim);
    Mat in_v = (i > 0) ? dc.vmap(i - 1, j) : Mat::zero(f, dim, 0);
    Mat in_h = (j > 0) ? dc.hmap(i, j - 1) : Mat::zero(f, dim, 0);
    Mat diag_in = (i > 0 && j > 0) ? dc.vmap(i - 1, j) * dc.hmap(i - 1, j - 1)
                                   : Mat::zero(f, dim, 0);
    Mat diag_out = (i + 1 < dc.rows() && j + 1 < dc.cols()) ? dc.vmap(i, j + 1) * dc.hmap(i, j)
                                                            : Mat::zero(f, 0, dim);
    return {at, dim, std::move(out_h), std::move(out_v), std::move(in_v), std::move(in_h),
            std::move(diag_in), std::move(diag_out)};
}

DoubleComplex tensor_complex(const ChainComplex& vertical, const ChainComplex& horizontal) {
    if (!(vertical.field() == horizontal.field()))
        throw InputError("tensor_complex: field mismatch");
    const FieldSpec f = vertical.field();
    const std::size_t rows = vertical.length(), cols = horizontal.length();

    std::vector<std::size_t> dims(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) dims[i * cols + j] = vertical.dim(i) * horizontal.dim(j);

    std::vector<Mat> hmaps, vmaps;
    hmaps.reserve(rows * (cols - 1));
    vmaps.reserve((rows - 1) * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j + 1 < cols; ++j)
            hmaps.push_back(Mat::kron(Mat::identity(f, vertical.dim(i)), horizontal.map(j)));
    for (std::size_t i = 0; i + 1 < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            vmaps.push_back(Mat::kron(vertical.map(i), Mat::identity(f, horizontal.dim(j))));
    return DoubleComplex(f, rows, cols, std::move(dims), std::move(hmaps), std::move(vmaps));
}

DoubleComplex direct_sum(const DoubleComplex& a, const DoubleComplex& b) {
    if (!(a.field() == b.field()) || a.rows() != b.rows() || a.cols() != b.cols())
        throw InputError("direct_sum: grids must share field and shape");
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> dims(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            dims[i * cols + j] = a.dim_at({i, j}) + b.dim_at({i, j});
    std::vector<Mat> hmaps, vmaps;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j + 1 < cols; ++j)
            hmaps.push_back(Mat::direct_sum(a.hmap(i, j), b.hmap(i, j)));
    for (std::size_t i = 0; i + 1 < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            vmaps.push_back(Mat::direct_sum(a.vmap(i, j), b.vmap(i, j)));
    return DoubleComplex(a.field(), rows, cols, std::move(dims), std::move(hmaps), std::move(vmaps));
}

namespace {

Scalar random_scalar(FieldSpec f, std::mt19937_64& rng) {
    if (f.is_rationals()) return Scalar::of_int(f, draw_int(rng, -3, 3));
    return Scalar::of_int(f, static_cast<long>(draw(rng, f.characteristic())));
}

Mat random_mat(FieldSpec f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Mat m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_scalar(f, rng);
    return m;
}

}  // namespace

ChainComplex random_chain_complex(FieldSpec field, const std::vector<std::size_t>& dims,
                                  std::mt19937_64& rng) {
    std::vector<Mat> maps;
    for (std::size_t i = 0; i + 1 < dims.size(); ++i) {
        if (i == 0) {
            maps.push_back(random_mat(field, dims[1], dims[0], rng));
            continue;
        }
        // rows of the next map live in the left null space of the previous one
        const Mat null_basis = kernel(maps.back().transpose());  // dims[i] x k
        const Mat coeffs = random_mat(field, null_basis.cols(), dims[i + 1], rng);
        maps.push_back((null_basis * coeffs).transpose());
    }
    return ChainComplex(field, dims, std::move(maps));
}

ChainComplex exact_chain_complex(FieldSpec field, std::size_t length, std::size_t max_step,
                                 std::mt19937_64& rng) {
    if (length == 0) throw InputError("exact_chain_complex: length must be positive");
    if (length == 1) return ChainComplex::zeros(field, {0});

    // steps[j] counts the staircases spanning positions j and j+1
    std::vector<std::size_t> steps(length - 1);
    bool any = false;
    for (auto& s : steps) {
        s = draw(rng, max_step + 1);
        any = any || s > 0;
    }
    if (!any) steps[0] = std::max<std::size_t>(1, max_step > 0 ? 1 : 1);

    std::vector<std::size_t> dims(length);
    for (std::size_t j = 0; j < length; ++j) {
        const std::size_t incoming = j > 0 ? steps[j - 1] : 0;
        const std::size_t outgoing = j + 1 < length ? steps[j] : 0;
        dims[j] = incoming + outgoing;
    }
    std::vector<Mat> maps;
    for (std::size_t j = 0; j + 1 < length; ++j) {
        const std::size_t incoming = j > 0 ? steps[j - 1] : 0;
        Mat m(field, dims[j + 1], dims[j]);
        for (std::size_t r = 0; r < steps[j]; ++r)
            m.at(r, incoming + r) = Scalar::one(field);
        maps.push_back(std::move(m));
    }
    return ChainComplex(field, std::move(dims), std::move(maps));
}

const char* mode_name(GenConfig::Mode mode) {
    switch (mode) {
        case GenConfig::Mode::Zero: return "zero";
        case GenConfig::Mode::Tensor: return "tensor";
        case GenConfig::Mode::ExactRows: return "exact_rows";
        case GenConfig::Mode::DirectSum: return "direct_sum";
    }
    return "?";
}

namespace {

std::vector<std::size_t> random_dims(std::size_t count, std::size_t max_dim, std::mt19937_64& rng) {
    std::vector<std::size_t> dims(count);
    for (auto& d : dims) d = draw(rng, max_dim + 1);
    return dims;
}

DoubleComplex generate_tensor(FieldSpec field, std::size_t rows, std::size_t cols,
                              std::size_t max_dim, std::mt19937_64& rng) {
    const std::size_t a = 1 + draw(rng, std::max<std::size_t>(1, max_dim));
    const std::size_t b = std::max<std::size_t>(1, max_dim / a);
    const ChainComplex vertical = random_chain_complex(field, random_dims(rows, a, rng), rng);
    const ChainComplex horizontal = random_chain_complex(field, random_dims(cols, b, rng), rng);
    return tensor_complex(vertical, horizontal);
}

}  // namespace

DoubleComplex generate(const GenConfig& cfg) {
    if (cfg.max_rows == 0 || cfg.max_cols == 0)
        throw InputError("generate: grid bounds must be positive");
    std::mt19937_64 rng(cfg.seed);
    std::size_t rows = 1 + draw(rng, cfg.max_rows);
    std::size_t cols = 1 + draw(rng, cfg.max_cols);

    switch (cfg.mode) {
        case GenConfig::Mode::Zero: {
            const auto dims = random_dims(rows * cols, cfg.max_dim, rng);
            std::vector<Mat> hmaps, vmaps;
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j + 1 < cols; ++j)
                    hmaps.push_back(Mat::zero(cfg.field, dims[i * cols + j + 1], dims[i * cols + j]));
            for (std::size_t i = 0; i + 1 < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    vmaps.push_back(Mat::zero(cfg.field, dims[(i + 1) * cols + j], dims[i * cols + j]));
            return DoubleComplex(cfg.field, rows, cols, dims, std::move(hmaps), std::move(vmaps));
        }
        case GenConfig::Mode::Tensor:
            return generate_tensor(cfg.field, rows, cols, cfg.max_dim, rng);
        case GenConfig::Mode::ExactRows: {
            if (cfg.max_cols >= 2) cols = std::max<std::size_t>(cols, 2);
            const std::size_t a = 1 + draw(rng, std::max<std::size_t>(1, cfg.max_dim));
            const std::size_t b = std::max<std::size_t>(1, cfg.max_dim / a);
            const ChainComplex vertical = random_chain_complex(cfg.field, random_dims(rows, a, rng), rng);
            const ChainComplex horizontal = exact_chain_complex(cfg.field, cols, b, rng);
            return tensor_complex(vertical, horizontal);
        }
        case GenConfig::Mode::DirectSum: {
            const std::size_t half = std::max<std::size_t>(1, cfg.max_dim / 2);
            const DoubleComplex a = generate_tensor(cfg.field, rows, cols, half, rng);
            const DoubleComplex b = generate_tensor(cfg.field, rows, cols, half, rng);
            return direct_sum(a, b);
        }
    }
    throw InputError("generate: unknown mode");
}

}  // namespace lhom
