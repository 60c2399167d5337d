#include "lhom/lhomology.hpp"

#include <stdexcept>

namespace lhom {

namespace {

constexpr LKindInfo kKindTable[kNumLKinds] = {
    {LKind::Ah,         "Ah",         KerGen::OutH, ImGen::InH,  "in_h",      "out_h"},
    {LKind::veeAh,      "veeAh",      KerGen::Join, ImGen::InH,  "in_h",      "out_h,out_v"},
    {LKind::dAh,        "dAh",        KerGen::Diag, ImGen::InH,  "in_h",      "diag_out"},
    {LKind::Av,         "Av",         KerGen::OutV, ImGen::InV,  "in_v",      "out_v"},
    {LKind::veeAv,      "veeAv",      KerGen::Join, ImGen::InV,  "in_v",      "out_h,out_v"},
    {LKind::dAv,        "dAv",        KerGen::Diag, ImGen::InV,  "in_v",      "diag_out"},
    {LKind::starA,      "starA",      KerGen::Meet, ImGen::Diag, "diag_in",   "out_h,out_v"},
    {LKind::hAd,        "hAd",        KerGen::OutH, ImGen::Diag, "diag_in",   "out_h"},
    {LKind::vAd,        "vAd",        KerGen::OutV, ImGen::Diag, "diag_in",   "out_v"},
    {LKind::veeAd,      "veeAd",      KerGen::Join, ImGen::Diag, "diag_in",   "out_h,out_v"},
    {LKind::Ad,         "Ad",         KerGen::Diag, ImGen::Diag, "diag_in",   "diag_out"},
    {LKind::veeAstar,   "veeAstar",   KerGen::Join, ImGen::Join, "in_v,in_h", "out_h,out_v"},
    {LKind::Astar,      "Astar",      KerGen::Diag, ImGen::Join, "in_v,in_h", "diag_out"},
    {LKind::starAwedge, "starAwedge", KerGen::Meet, ImGen::Meet, "in_v,in_h", "out_h,out_v"},
    {LKind::hAwedge,    "hAwedge",    KerGen::OutH, ImGen::Meet, "in_v,in_h", "out_h"},
    {LKind::vAwedge,    "vAwedge",    KerGen::OutV, ImGen::Meet, "in_v,in_h", "out_v"},
    {LKind::dAwedge,    "dAwedge",    KerGen::Diag, ImGen::Meet, "in_v,in_h", "diag_out"},
    {LKind::veeAwedge,  "veeAwedge",  KerGen::Join, ImGen::Meet, "in_v,in_h", "out_h,out_v"},
};

}  // namespace

const LKindInfo& kind_info(LKind k) { return kKindTable[static_cast<int>(k)]; }

const char* kind_name(LKind k) { return kind_info(k).name; }

std::optional<LKind> kind_from_name(std::string_view name) {
    for (const auto& info : kKindTable)
        if (name == info.name) return info.kind;
    return std::nullopt;
}

const Subspace& KernelLattice::get(KerGen g) const {
    switch (g) {
        case KerGen::OutH: return ker_out_h;
        case KerGen::OutV: return ker_out_v;
        case KerGen::Diag: return ker_diag;
        case KerGen::Join: return ker_join;
        case KerGen::Meet: return ker_meet;
    }
    throw std::logic_error("bad KerGen");
}

const Subspace& ImageLattice::get(ImGen g) const {
    switch (g) {
        case ImGen::InH: return im_in_h;
        case ImGen::InV: return im_in_v;
        case ImGen::Diag: return im_diag;
        case ImGen::Join: return im_join;
        case ImGen::Meet: return im_meet;
    }
    throw std::logic_error("bad ImGen");
}

ObjectLattices lattices(const ObjectContext& ctx) {
    Subspace ker_out_h = Subspace::from_span(kernel(ctx.out_h));
    Subspace ker_out_v = Subspace::from_span(kernel(ctx.out_v));
    Subspace ker_diag = Subspace::from_span(kernel(ctx.diag_out));
    Subspace ker_join = join(ker_out_h, ker_out_v);
    Subspace ker_meet = meet(ker_out_h, ker_out_v);

    Subspace im_in_h = Subspace::from_span(image(ctx.in_h));
    Subspace im_in_v = Subspace::from_span(image(ctx.in_v));
    Subspace im_diag = Subspace::from_span(image(ctx.diag_in));
    Subspace im_join = join(im_in_v, im_in_h);
    Subspace im_meet = meet(im_in_v, im_in_h);

    const auto fail = [&](const char* what) {
        throw std::logic_error("lattices at (" + std::to_string(ctx.at.row) + "," +
                               std::to_string(ctx.at.col) + "): " + what +
                               " (context does not come from a valid double complex)");
    };
    if (!leq(im_in_h, ker_out_h)) fail("Im in_h is not inside Ker out_h");
    if (!leq(im_in_v, ker_out_v)) fail("Im in_v is not inside Ker out_v");
    if (!leq(im_diag, im_meet)) fail("Im diag_in is not inside Im in_v ^ Im in_h");
    if (!leq(im_join, ker_diag)) fail("Im in_v v Im in_h is not inside Ker diag_out");
    if (!leq(ker_join, ker_diag)) fail("Ker out_h v Ker out_v is not inside Ker diag_out");

    return {KernelLattice{std::move(ker_out_h), std::move(ker_out_v), std::move(ker_join),
                          std::move(ker_meet), std::move(ker_diag)},
            ImageLattice{std::move(im_in_h), std::move(im_in_v), std::move(im_join),
                         std::move(im_meet), std::move(im_diag)}};
}

namespace {

Mat greedy_reps(const Subspace& num, const Subspace& den, bool reversed) {
    const std::size_t target = num.dim() - den.dim();
    std::vector<std::size_t> chosen;
    Mat current = den.basis();
    std::size_t current_rank = den.dim();
    for (std::size_t step = 0; step < num.dim() && chosen.size() < target; ++step) {
        const std::size_t c = reversed ? num.dim() - 1 - step : step;
        const Mat candidate = Mat::hstack(current, num.basis().columns({c}));
        if (rank(candidate) > current_rank) {
            current = candidate;
            ++current_rank;
            chosen.push_back(c);
        }
    }
    if (chosen.size() != target)
        throw std::logic_error("subquotient: representative selection failed");
    return num.basis().columns(chosen);
}

}  // namespace

Subquotient::Subquotient(Subspace numerator, Subspace denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)),
      reps_(Mat::zero(num_.field(), num_.ambient_dim(), 0)) {
    if (!leq(den_, num_))
        throw InputError("subquotient: denominator is not contained in numerator");
    reps_ = greedy_reps(num_, den_, false);
}

Subquotient Subquotient::with_reversed_reps(Subspace numerator, Subspace denominator) {
    if (!leq(denominator, numerator))
        throw InputError("subquotient: denominator is not contained in numerator");
    Mat reps = greedy_reps(numerator, denominator, true);
    return Subquotient(std::move(numerator), std::move(denominator), std::move(reps));
}

std::optional<std::vector<Scalar>> Subquotient::coords(const std::vector<Scalar>& v) const {
    const auto sol = solve(Mat::hstack(den_.basis(), reps_), v);
    if (!sol) return std::nullopt;
    return std::vector<Scalar>(sol->begin() + static_cast<std::ptrdiff_t>(den_.dim()), sol->end());
}

std::optional<CanonMorphism> induced_morphism(const Subquotient& src, const Subquotient& tgt,
                                              const Mat& underlying) {
    if (underlying.cols() != src.ambient_dim() || underlying.rows() != tgt.ambient_dim() ||
        !(underlying.field() == src.field()) || !(src.field() == tgt.field()))
        throw InputError("induced_morphism: underlying map shape or field mismatch");
    if (!leq(direct_image(underlying, src.denominator()), tgt.denominator())) return std::nullopt;
    if (!leq(direct_image(underlying, src.numerator()), tgt.numerator())) return std::nullopt;

    const Mat mapped = underlying * src.reps();
    const auto sol = solve_all(Mat::hstack(tgt.denominator().basis(), tgt.reps()), mapped);
    if (!sol) throw std::logic_error("induced_morphism: image escaped the target numerator");
    Mat matrix(src.field(), tgt.dim(), src.dim());
    for (std::size_t i = 0; i < tgt.dim(); ++i)
        for (std::size_t j = 0; j < src.dim(); ++j)
            matrix.at(i, j) = sol->at(tgt.denominator().dim() + i, j);
    return CanonMorphism{src, tgt, underlying, std::move(matrix)};
}

CanonMorphism identity_morphism(const Subquotient& h) {
    return CanonMorphism{h, h, Mat::identity(h.field(), h.ambient_dim()),
                         Mat::identity(h.field(), h.dim())};
}

CanonMorphism compose(const CanonMorphism& first, const CanonMorphism& second) {
    if (!first.tgt.same_value(second.src) || !(first.tgt.reps() == second.src.reps()))
        throw InputError("compose: middle subquotients do not match");
    return CanonMorphism{first.src, second.tgt, second.underlying * first.underlying,
                         second.matrix * first.matrix};
}

bool is_isomorphism(const CanonMorphism& m) {
    return m.src.dim() == m.tgt.dim() && rank(m.matrix) == m.src.dim();
}

LHomologySet::LHomologySet(const ObjectLattices& lat) {
    items_.reserve(kNumLKinds);
    for (LKind k : kAllLKinds) {
        const LKindInfo& info = kind_info(k);
        items_.emplace_back(lat.ker.get(info.numerator), lat.im.get(info.denominator));
    }
}

Subquotient l_homology(const ObjectContext& ctx, LKind kind) {
    const ObjectLattices lat = lattices(ctx);
    const LKindInfo& info = kind_info(kind);
    return Subquotient(lat.ker.get(info.numerator), lat.im.get(info.denominator));
}

LHomologySet all_l_homologies(const ObjectContext& ctx) {
    return LHomologySet(lattices(ctx));
}

DoubleComplex diagonal_complex(const DoubleComplex& dc) {
    const std::size_t rows = dc.rows(), cols = dc.cols();
    std::vector<Subquotient> diag;
    diag.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            diag.push_back(l_homology(context(dc, {i, j}), LKind::Ad));

    std::vector<std::size_t> dims(rows * cols);
    for (std::size_t idx = 0; idx < diag.size(); ++idx) dims[idx] = diag[idx].dim();

    const auto induced = [&](const Subquotient& s, const Subquotient& t, const Mat& u) {
        auto m = induced_morphism(s, t, u);
        if (!m)
            throw std::logic_error("diagonal_complex: induced map missing; input grid is invalid");
        return m->matrix;
    };

    std::vector<Mat> hmaps, vmaps;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j + 1 < cols; ++j)
            hmaps.push_back(induced(diag[i * cols + j], diag[i * cols + j + 1], dc.hmap(i, j)));
    for (std::size_t i = 0; i + 1 < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            vmaps.push_back(induced(diag[i * cols + j], diag[(i + 1) * cols + j], dc.vmap(i, j)));
    return DoubleComplex(dc.field(), rows, cols, std::move(dims), std::move(hmaps),
                         std::move(vmaps));
}

}  // namespace lhom
