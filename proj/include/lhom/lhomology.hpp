#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "lhom/dcomplex.hpp"
#include "lhom/subspace.hpp"

namespace lhom {

/// The eighteen homology kinds of one object, in fixed report order.
/// Numerators come from the lattice generated by the kernels of the
/// outgoing maps, denominators from the lattice generated by the images
/// of the incoming maps. Name scheme (ASCII): prefixes h/v/d pick the
/// kernel of out_h/out_v/diag_out as numerator and suffixes pick the
/// image of in_h/in_v/diag_in as denominator; "vee"/"wedge" are join and
/// meet; "star" marks the two salamander homologies.
enum class LKind : int {
    Ah,          // Ker out_h / Im in_h            (horizontal homology)
    veeAh,       // (Ker out_h v Ker out_v) / Im in_h
    dAh,         // Ker diag_out / Im in_h
    Av,          // Ker out_v / Im in_v            (vertical homology)
    veeAv,       // (Ker out_h v Ker out_v) / Im in_v
    dAv,         // Ker diag_out / Im in_v
    starA,       // (Ker out_h ^ Ker out_v) / Im diag_in   (salamander, receptor side)
    hAd,         // Ker out_h / Im diag_in
    vAd,         // Ker out_v / Im diag_in
    veeAd,       // (Ker out_h v Ker out_v) / Im diag_in
    Ad,          // Ker diag_out / Im diag_in      (diagonal homology)
    veeAstar,    // (Ker out_h v Ker out_v) / (Im in_v v Im in_h)
    Astar,       // Ker diag_out / (Im in_v v Im in_h)     (salamander, donor side)
    starAwedge,  // (Ker out_h ^ Ker out_v) / (Im in_v ^ Im in_h)
    hAwedge,     // Ker out_h / (Im in_v ^ Im in_h)
    vAwedge,     // Ker out_v / (Im in_v ^ Im in_h)
    dAwedge,     // Ker diag_out / (Im in_v ^ Im in_h)
    veeAwedge,   // (Ker out_h v Ker out_v) / (Im in_v ^ Im in_h)
};

inline constexpr int kNumLKinds = 18;

inline constexpr std::array<LKind, kNumLKinds> kAllLKinds = {
    LKind::Ah,        LKind::veeAh,      LKind::dAh,     LKind::Av,      LKind::veeAv,
    LKind::dAv,       LKind::starA,      LKind::hAd,     LKind::vAd,     LKind::veeAd,
    LKind::Ad,        LKind::veeAstar,   LKind::Astar,   LKind::starAwedge,
    LKind::hAwedge,   LKind::vAwedge,    LKind::dAwedge, LKind::veeAwedge,
};

/// Generators and derived elements of the kernel-side lattice.
enum class KerGen : int { OutH = 0, OutV = 1, Diag = 2, Join = 3, Meet = 4 };
/// Generators and derived elements of the image-side lattice.
enum class ImGen : int { InH = 0, InV = 1, Diag = 2, Join = 3, Meet = 4 };

struct LKindInfo {
    LKind kind;
    const char* name;      // ASCII name, e.g. "veeAh"
    KerGen numerator;
    ImGen denominator;
    const char* in_maps;   // shape metadata: incoming maps of the kind's complex
    const char* out_maps;  // shape metadata: outgoing maps
};

const LKindInfo& kind_info(LKind k);
const char* kind_name(LKind k);
std::optional<LKind> kind_from_name(std::string_view name);

struct KernelLattice {
    Subspace ker_out_h, ker_out_v, ker_join, ker_meet, ker_diag;
    const Subspace& get(KerGen g) const;
};

struct ImageLattice {
    Subspace im_in_h, im_in_v, im_join, im_meet, im_diag;
    const Subspace& get(ImGen g) const;
};

struct ObjectLattices {
    KernelLattice ker;
    ImageLattice im;
};

/// The ten subspaces of one object. Requires a context from a valid grid;
/// the inclusion laws between the two lattices are asserted (logic_error
/// on violation, which indicates invalid input or a bug, not a state the
/// caller is expected to handle).
ObjectLattices lattices(const ObjectContext& ctx);

/// A subquotient numerator/denominator with a deterministic choice of
/// quotient representatives: the columns of the numerator's canonical
/// basis, scanned in order, greedily kept when independent modulo the
/// denominator.
class Subquotient {
public:
    Subquotient(Subspace numerator, Subspace denominator);

    /// Same value, representatives chosen scanning the basis in reverse.
    /// Exists to check representative-independence of induced matrices.
    static Subquotient with_reversed_reps(Subspace numerator, Subspace denominator);

    const Subspace& numerator() const { return num_; }
    const Subspace& denominator() const { return den_; }
    FieldSpec field() const { return num_.field(); }
    std::size_t ambient_dim() const { return num_.ambient_dim(); }
    std::size_t dim() const { return num_.dim() - den_.dim(); }
    bool is_trivial() const { return dim() == 0; }
    const Mat& reps() const { return reps_; }

    bool same_value(const Subquotient& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    /// Coordinates of an ambient vector modulo the denominator, in the
    /// representative basis; nullopt when the vector is outside the
    /// numerator.
    std::optional<std::vector<Scalar>> coords(const std::vector<Scalar>& v) const;

private:
    Subquotient(Subspace num, Subspace den, Mat reps)
        : num_(std::move(num)), den_(std::move(den)), reps_(std::move(reps)) {}
    Subspace num_, den_;
    Mat reps_;
};

/// The induced map between subquotients over an underlying morphism,
/// expressed in the representative bases.
struct CanonMorphism {
    Subquotient src, tgt;
    Mat underlying;  // tgt ambient x src ambient
    Mat matrix;      // tgt dim x src dim
};

/// Returns the morphism iff both existence conditions hold:
/// underlying(src denominator) <= tgt denominator and
/// underlying(src numerator) <= tgt numerator. A missing morphism is a
/// legal outcome, not an error.
std::optional<CanonMorphism> induced_morphism(const Subquotient& src, const Subquotient& tgt,
                                              const Mat& underlying);

CanonMorphism identity_morphism(const Subquotient& h);

/// second after first; InputError unless first.tgt and second.src agree.
CanonMorphism compose(const CanonMorphism& first, const CanonMorphism& second);

/// Equal dimensions and invertible induced matrix.
bool is_isomorphism(const CanonMorphism& m);

/// All eighteen homologies of one object, fixed enumeration order.
class LHomologySet {
public:
    explicit LHomologySet(const ObjectLattices& lat);
    const Subquotient& at(LKind k) const { return items_[static_cast<std::size_t>(k)]; }

private:
    std::vector<Subquotient> items_;
};

Subquotient l_homology(const ObjectContext& ctx, LKind kind);
LHomologySet all_l_homologies(const ObjectContext& ctx);

/// The grid whose object at each position is the diagonal homology
/// (Ker diag_out / Im diag_in) and whose maps are the induced matrices of
/// the single-step maps. Always defined on a valid grid, and the result
/// passes validate().
DoubleComplex diagonal_complex(const DoubleComplex& dc);

}  // namespace lhom
