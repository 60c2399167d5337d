#include "lhom/engine.hpp"

namespace lhom {

std::vector<HomologyRow> homology_table(const DoubleComplex& dc, ExecMode mode) {
    const std::size_t n = dc.rows() * dc.cols();
    std::vector<HomologyRow> rows(n * kNumLKinds);
    for_each_index(n, mode, [&](std::size_t idx) {
        const GridIndex at{idx / dc.cols(), idx % dc.cols()};
        const LHomologySet homs = all_l_homologies(context(dc, at));
        for (std::size_t k = 0; k < kNumLKinds; ++k) {
            const Subquotient& h = homs.at(kAllLKinds[k]);
            rows[idx * kNumLKinds + k] =
                HomologyRow{at,
                            kAllLKinds[k],
                            h.numerator().dim(),
                            h.denominator().dim(),
                            h.dim(),
                            h.is_trivial()};
        }
    });
    return rows;
}

std::vector<GenConfig> standard_corpus() {
    static constexpr GenConfig::Mode kModes[4] = {
        GenConfig::Mode::Tensor, GenConfig::Mode::ExactRows, GenConfig::Mode::DirectSum,
        GenConfig::Mode::Zero};
    const FieldSpec fields[4] = {FieldSpec::prime_field(2), FieldSpec::prime_field(3),
                                 FieldSpec::prime_field(5), FieldSpec::rationals()};
    std::vector<GenConfig> corpus;
    corpus.reserve(200);
    for (std::uint64_t i = 0; i < 200; ++i) {
        GenConfig cfg;
        cfg.mode = kModes[i % 4];
        cfg.field = fields[(i / 4) % 4];
        cfg.max_rows = 5;
        cfg.max_cols = 5;
        cfg.max_dim = 6;
        cfg.seed = 0x5EED0000ull + i;
        corpus.push_back(cfg);
    }
    return corpus;
}

}  // namespace lhom
