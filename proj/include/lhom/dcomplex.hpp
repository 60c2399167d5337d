#pragma once

#include <compare>
#include <random>
#include <vector>

#include "lhom/mat.hpp"
#include "lhom/rng.hpp"

namespace lhom {

/// Position in the grid; rows increase downward, columns rightward.
struct GridIndex {
    std::size_t row = 0, col = 0;
    friend auto operator<=>(const GridIndex&, const GridIndex&) = default;
};

/// A finite chain complex: maps[i]: dims[i] -> dims[i+1], consecutive
/// composites zero (checked at construction).
class ChainComplex {
public:
    ChainComplex(FieldSpec field, std::vector<std::size_t> dims, std::vector<Mat> maps);
    static ChainComplex zeros(FieldSpec field, std::vector<std::size_t> dims);

    FieldSpec field() const { return field_; }
    std::size_t length() const { return dims_.size(); }
    std::size_t dim(std::size_t i) const { return dims_[i]; }
    const Mat& map(std::size_t i) const { return maps_[i]; }

private:
    FieldSpec field_;
    std::vector<std::size_t> dims_;
    std::vector<Mat> maps_;
};

/// A finite grid of spaces with horizontal and vertical maps. Shapes are
/// enforced at construction; the three grid laws (rows are complexes,
/// columns are complexes, squares commute) are checked by validate().
class DoubleComplex {
public:
    DoubleComplex(FieldSpec field, std::size_t rows, std::size_t cols,
                  std::vector<std::size_t> dims,  // rows*cols, row-major
                  std::vector<Mat> hmaps,         // rows*(cols-1): (i,j) -> (i,j+1)
                  std::vector<Mat> vmaps);        // (rows-1)*cols: (i,j) -> (i+1,j)

    FieldSpec field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool in_bounds(GridIndex at) const { return at.row < rows_ && at.col < cols_; }
    std::size_t dim_at(GridIndex at) const;

    const Mat& hmap(std::size_t i, std::size_t j) const;  // requires j+1 < cols
    const Mat& vmap(std::size_t i, std::size_t j) const;  // requires i+1 < rows

    friend bool operator==(const DoubleComplex&, const DoubleComplex&);

private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<std::size_t> dims_;
    std::vector<Mat> hmaps_, vmaps_;
};

struct LawViolation {
    enum class Law { HorizontalComplex, VerticalComplex, CommutingSquare };
    Law law;
    GridIndex at;
    std::string detail;
};

struct ValidationReport {
    std::vector<LawViolation> violations;
    bool ok() const { return violations.empty(); }
};

const char* law_name(LawViolation::Law law);

/// Checks the three law families everywhere they apply and reports every
/// violation with its position.
ValidationReport validate(const DoubleComplex& dc);

/// The maps local to one object. Morphisms missing at the grid boundary
/// are zero maps from/to the zero space, so their images are bottom and
/// their kernels are top. The two diagonals are always composites of the
/// stored single-step maps.
struct ObjectContext {
    GridIndex at;
    std::size_t dim;
    Mat out_h;     // outgoing horizontal
    Mat out_v;     // outgoing vertical
    Mat in_v;      // incoming vertical
    Mat in_h;      // incoming horizontal
    Mat diag_in;   // composite from the up-left neighbor
    Mat diag_out;  // composite to the down-right neighbor
};

ObjectContext context(const DoubleComplex& dc, GridIndex at);  // InputError when out of bounds

/// Double complex of the two chain complexes: entry (i,j) has dimension
/// vertical.dim(i) * horizontal.dim(j); horizontal maps act on the second
/// tensor factor and vertical maps on the first, so squares commute.
DoubleComplex tensor_complex(const ChainComplex& vertical, const ChainComplex& horizontal);

/// Entrywise direct sum of two same-shape grids; block-diagonal maps.
DoubleComplex direct_sum(const DoubleComplex& a, const DoubleComplex& b);

/// Random chain complex on the given dimensions: each map is drawn from
/// the full space of maps composing to zero with its predecessor.
ChainComplex random_chain_complex(FieldSpec field, const std::vector<std::size_t>& dims,
                                  std::mt19937_64& rng);

/// Exact complex built as a direct sum of shifted two-term staircases;
/// exact at every position including the padded boundary (the first map
/// is injective and the last surjective).
ChainComplex exact_chain_complex(FieldSpec field, std::size_t length, std::size_t max_step,
                                 std::mt19937_64& rng);

struct GenConfig {
    enum class Mode { Zero, Tensor, ExactRows, DirectSum };
    Mode mode = Mode::Tensor;
    FieldSpec field = FieldSpec::rationals();
    std::size_t max_rows = 3, max_cols = 3, max_dim = 4;
    std::uint64_t seed = 0;
};

const char* mode_name(GenConfig::Mode mode);

/// Deterministic for a fixed config; the output always passes validate().
/// ExactRows tensors a random complex with an exact one, making every
/// horizontal homology trivial.
DoubleComplex generate(const GenConfig& cfg);

}  // namespace lhom
