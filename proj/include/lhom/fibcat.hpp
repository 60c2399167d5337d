#pragma once

#include "lhom/structures.hpp"

namespace lhom {

/// The base category realized as a reflexive graph: identities, single
/// horizontal and vertical steps, and one-step diagonal composites.
struct ComArrow {
    enum class Kind { Identity, Horizontal, Vertical, Diagonal };
    Kind kind;
    GridIndex src, tgt;
    Mat mat;
};

const char* com_arrow_kind_name(ComArrow::Kind k);

struct ComGraph {
    std::size_t rows = 0, cols = 0;
    std::vector<ComArrow> arrows;  // identities first, then h, v, diagonal, each row-major

    std::size_t node_index(GridIndex at) const { return at.row * cols + at.col; }
    std::size_t node_count() const { return rows * cols; }

    std::optional<std::size_t> identity_at(GridIndex at) const;
    /// The unique non-identity arrow between two distinct positions.
    std::optional<std::size_t> arrow_between(GridIndex src, GridIndex tgt) const;
    /// Formal composition: second after first; present only when the
    /// composite is again an arrow of the graph (identities compose with
    /// everything, a horizontal and a vertical step compose to the
    /// diagonal). Longer composites are zero maps and are not arrows.
    std::optional<std::size_t> compose(std::size_t first, std::size_t second) const;
};

/// Nodes are (position, kind) pairs, eighteen per position; arrows are
/// all canonical morphisms over the arrows of the base graph. Between two
/// nodes over a fixed base arrow there is at most one arrow.
struct HlgNode {
    GridIndex at;
    LKind kind;
};

struct HlgArrow {
    std::size_t src_node, tgt_node;
    std::size_t com_arrow;
    Mat matrix;
};

struct HlgGraph {
    std::vector<HlgNode> nodes;    // position-major, kind order within
    std::vector<HlgArrow> arrows;  // grouped by com arrow, then src kind, then tgt kind
    std::size_t cols = 0;

    std::size_t node_index(GridIndex at, LKind k) const {
        return (at.row * cols + at.col) * kNumLKinds + static_cast<std::size_t>(k);
    }
    /// Arrow over a given base arrow between two kinds, if present.
    std::optional<std::size_t> find(std::size_t com_arrow, LKind src, LKind tgt) const;

    std::vector<std::int32_t> table_;  // com arrow x 18 x 18 -> arrow index or -1, built once
};

/// The projection functor: a homology node goes to its position, an arrow
/// to its underlying base arrow (identities within fibers).
struct FunctorF {
    const HlgGraph* hlg = nullptr;
    const ComGraph* com = nullptr;

    GridIndex object(std::size_t hlg_node) const { return hlg->nodes[hlg_node].at; }
    std::size_t arrow(std::size_t hlg_arrow) const { return hlg->arrows[hlg_arrow].com_arrow; }
};

struct FibBuild {
    ComGraph com;
    HlgGraph hlg;
    FunctorF functor;
    std::vector<ObjectAnalysis> objects;  // row-major
};

FibBuild build_fibration(const DoubleComplex& dc, ExecMode mode = ExecMode::Serial);

struct FibReport {
    bool faithful_ok = true;
    bool amnestic_ok = true;
    bool functorial_ok = true;     // composites of arrows equal the stored direct arrows
    bool fibration_ok = true;      // cartesian lifts with the universal factorization property
    bool chain_ok = true;          // bottom-through-top chain exists and matches the direct arrow
    bool left_adjoint_ok = true;   // bottom assignment
    bool right_adjoint_ok = true;  // top assignment

    std::size_t fibers = 0;
    std::size_t within_fiber_arrows = 0;
    std::size_t cross_arrows = 0;
    std::size_t composites_checked = 0;
    std::size_t lifts_checked = 0;
    std::size_t factorizations_checked = 0;

    std::vector<std::string> failures;
    /// Per position: groups of two or more kinds sharing one value.
    std::vector<std::pair<GridIndex, std::vector<std::vector<LKind>>>> value_coincidences;

    bool ok() const {
        return faithful_ok && amnestic_ok && functorial_ok && fibration_ok && chain_ok &&
               left_adjoint_ok && right_adjoint_ok;
    }
    void merge(const FibReport& o);
};

/// Hom-set uniqueness and amnesticity, exhaustive over all arrows.
FibReport verify_faithful_amnestic(const FibBuild& b);

/// Composites of arrows whose underlying composite stays in the base
/// graph equal the stored direct arrows.
FibReport verify_functoriality(const FibBuild& b);

/// The cartesian lift of a base arrow at a fiber target. For an identity
/// the lift is the identity arrow. Otherwise the lift is sourced at the
/// top of the source fiber, reached by the top-to-bottom crossing arrow
/// followed by the within-fiber climb; the composite equals the direct
/// arrow (singleton hom-sets).
struct CartesianLift {
    std::size_t source_node;
    std::size_t direct_arrow;
    std::vector<std::size_t> chain;
};
std::optional<CartesianLift> cartesian_lift(const FibBuild& b, std::size_t com_arrow,
                                            LKind target_kind);

/// Cartesian lifts for all arrows and fiber targets, with the universal
/// factorization property checked over every factorization available in
/// the graph; plus the bottom-source chain invariant.
FibReport verify_fibration(const FibBuild& b, ExecMode mode = ExecMode::Serial);

/// Both adjoints of the projection: existence biconditionals at singleton
/// hom-sets, checked exhaustively.
FibReport verify_adjunctions(const FibBuild& b);

FibReport verify_all(const FibBuild& b, ExecMode mode = ExecMode::Serial);

std::string com_dot(const FibBuild& b);
std::string hlg_dot(const FibBuild& b);

}  // namespace lhom
