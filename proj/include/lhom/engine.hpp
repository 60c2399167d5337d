#pragma once

#include "lhom/structures.hpp"

namespace lhom {

/// One report row per (position, kind), in position-major, fixed kind order.
struct HomologyRow {
    GridIndex at;
    LKind kind;
    std::size_t dim_num, dim_den, dim;
    bool trivial;
};

std::vector<HomologyRow> homology_table(const DoubleComplex& dc, ExecMode mode = ExecMode::Serial);

/// The fixed 200-instance verification corpus: all four generator modes
/// crossed with F2, F3, F5 and Q, grids up to 5x5, dimensions up to 6,
/// pinned seeds.
std::vector<GenConfig> standard_corpus();

}  // namespace lhom
