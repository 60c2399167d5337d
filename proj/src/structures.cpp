#include "lhom/structures.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lhom {

bool hook_leq(const Subquotient& a, const Subquotient& b) {
    if (a.ambient_dim() != b.ambient_dim() || !(a.field() == b.field()))
        throw InputError("hook_leq: ambient space mismatch");
    return leq(a.numerator(), b.numerator()) && leq(b.denominator(), a.denominator());
}

Subquotient hook_join(const Subquotient& a, const Subquotient& b) {
    if (a.ambient_dim() != b.ambient_dim() || !(a.field() == b.field()))
        throw InputError("hook_join: ambient space mismatch");
    return Subquotient(join(a.numerator(), b.numerator()),
                       meet(a.denominator(), b.denominator()));
}

ObjectAnalysis analyze(const ObjectContext& ctx) {
    ObjectLattices lat = lattices(ctx);
    LHomologySet homs(lat);
    ObjectAnalysis a{ctx, std::move(lat), std::move(homs), {}, {}};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            a.num_leq[i][j] = leq(a.num_value(i), a.num_value(j));
            a.den_leq[i][j] = leq(a.den_value(i), a.den_value(j));
        }
    return a;
}

std::vector<ObjectAnalysis> analyze_all(const DoubleComplex& dc, ExecMode mode) {
    const std::size_t n = dc.rows() * dc.cols();
    std::vector<std::optional<ObjectAnalysis>> slots(n);
    for_each_index(n, mode, [&](std::size_t idx) {
        const GridIndex at{idx / dc.cols(), idx % dc.cols()};
        slots[idx] = analyze(context(dc, at));
    });
    std::vector<ObjectAnalysis> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

namespace {

// Value classes of the eighteen kinds under equality of (numerator, denominator).
std::vector<std::vector<LKind>> value_classes_of(const ObjectAnalysis& a) {
    std::vector<std::vector<LKind>> classes;
    std::vector<int> cls(kNumLKinds, -1);
    for (int i = 0; i < kNumLKinds; ++i) {
        if (cls[i] >= 0) continue;
        const int id = static_cast<int>(classes.size());
        classes.push_back({kAllLKinds[i]});
        cls[i] = id;
        for (int j = i + 1; j < kNumLKinds; ++j)
            if (cls[j] < 0 && a.same_value(kAllLKinds[i], kAllLKinds[j])) {
                cls[j] = id;
                classes[id].push_back(kAllLKinds[j]);
            }
    }
    return classes;
}

using RelTable = std::array<std::array<bool, kNumLKinds>, kNumLKinds>;

void check_order_axioms(const RelTable& rel, const ObjectAnalysis& a, PosetReport& report) {
    for (int i = 0; i < kNumLKinds; ++i)
        if (!rel[i][i]) {
            report.ok = false;
            report.violations.push_back(std::string("not reflexive at ") +
                                        kind_name(kAllLKinds[i]));
        }
    for (int i = 0; i < kNumLKinds; ++i)
        for (int j = 0; j < kNumLKinds; ++j) {
            if (i != j && rel[i][j] && rel[j][i] &&
                !a.same_value(kAllLKinds[i], kAllLKinds[j])) {
                report.ok = false;
                report.violations.push_back(std::string("antisymmetry fails on ") +
                                            kind_name(kAllLKinds[i]) + " / " +
                                            kind_name(kAllLKinds[j]));
            }
            if (!rel[i][j]) continue;
            for (int k = 0; k < kNumLKinds; ++k)
                if (rel[j][k] && !rel[i][k]) {
                    report.ok = false;
                    report.violations.push_back(std::string("transitivity fails on ") +
                                                kind_name(kAllLKinds[i]) + " -> " +
                                                kind_name(kAllLKinds[j]) + " -> " +
                                                kind_name(kAllLKinds[k]));
                }
        }
}

void fill_edges_and_hasse(const RelTable& rel, const ObjectAnalysis& a, PosetReport& report) {
    for (int i = 0; i < kNumLKinds; ++i)
        for (int j = 0; j < kNumLKinds; ++j)
            if (rel[i][j]) report.edges.emplace_back(kAllLKinds[i], kAllLKinds[j]);

    report.value_classes = value_classes_of(a);
    const auto& classes = report.value_classes;
    const std::size_t nc = classes.size();
    auto class_rel = [&](std::size_t x, std::size_t y) {
        return rel[static_cast<int>(classes[x][0])][static_cast<int>(classes[y][0])];
    };
    for (std::size_t x = 0; x < nc; ++x)
        for (std::size_t y = 0; y < nc; ++y) {
            if (x == y || !class_rel(x, y)) continue;
            bool covered = true;
            for (std::size_t z = 0; z < nc && covered; ++z)
                if (z != x && z != y && class_rel(x, z) && class_rel(z, y)) covered = false;
            if (covered) report.hasse.emplace_back(classes[x][0], classes[y][0]);
        }
}

}  // namespace

PosetReport semilattice_report(const ObjectAnalysis& a) {
    PosetReport report;
    report.relation = PosetReport::Relation::Hook;
    report.at = a.ctx.at;

    RelTable rel{};
    for (int i = 0; i < kNumLKinds; ++i)
        for (int j = 0; j < kNumLKinds; ++j) rel[i][j] = a.hook(kAllLKinds[i], kAllLKinds[j]);

    check_order_axioms(rel, a, report);
    fill_edges_and_hasse(rel, a, report);

    // the diagonal homology sits on top
    report.top = LKind::Ad;
    for (int i = 0; i < kNumLKinds; ++i)
        if (!rel[i][static_cast<int>(LKind::Ad)]) {
            report.ok = false;
            report.violations.push_back(std::string("top element fails under ") +
                                        kind_name(kAllLKinds[i]));
        }

    // join closure within the five numerator / denominator values
    int join_num[5][5], meet_den[5][5];
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            join_num[i][j] = meet_den[i][j] = -1;
            const Subspace jn = join(a.num_value(i), a.num_value(j));
            const Subspace md = meet(a.den_value(i), a.den_value(j));
            for (int v = 0; v < 5; ++v) {
                if (jn == a.num_value(v)) join_num[i][j] = v;
                if (md == a.den_value(v)) meet_den[i][j] = v;
            }
        }

    for (int i = 0; i < kNumLKinds; ++i)
        for (int j = 0; j < kNumLKinds; ++j) {
            const int jn = join_num[a.num_idx(kAllLKinds[i])][a.num_idx(kAllLKinds[j])];
            const int md = meet_den[a.den_idx(kAllLKinds[i])][a.den_idx(kAllLKinds[j])];
            int found = -1;
            if (jn >= 0 && md >= 0)
                for (int k = 0; k < kNumLKinds && found < 0; ++k) {
                    const LKind kk = kAllLKinds[k];
                    if (a.num_leq[a.num_idx(kk)][jn] && a.num_leq[jn][a.num_idx(kk)] &&
                        a.den_leq[a.den_idx(kk)][md] && a.den_leq[md][a.den_idx(kk)])
                        found = k;
                }
            if (found < 0) {
                report.join_closure_ok = false;
                continue;
            }
            // least upper bound: both below it, and below every common upper bound
            if (!rel[i][found] || !rel[j][found]) report.lub_ok = false;
            for (int k = 0; k < kNumLKinds; ++k)
                if (rel[i][k] && rel[j][k] && !rel[found][k]) report.lub_ok = false;
        }
    if (!report.join_closure_ok || !report.lub_ok) {
        report.ok = false;
        report.violations.push_back("join is not a least upper bound within the eighteen values");
    }

    // trivial premises force trivial horizontal / vertical homology
    const auto trivial = [&](LKind k) { return a.homs.at(k).is_trivial(); };
    static constexpr LKind kForcesAh[] = {LKind::hAwedge, LKind::hAd,  LKind::veeAd, LKind::veeAh,
                                          LKind::dAh,     LKind::dAwedge, LKind::Ad};
    static constexpr LKind kForcesAv[] = {LKind::vAwedge, LKind::vAd,  LKind::veeAd, LKind::veeAv,
                                          LKind::dAv,     LKind::dAwedge, LKind::Ad};
    for (LKind p : kForcesAh)
        if (trivial(p) && !trivial(LKind::Ah)) report.triviality_implications_ok = false;
    for (LKind p : kForcesAv)
        if (trivial(p) && !trivial(LKind::Av)) report.triviality_implications_ok = false;
    if (trivial(LKind::Ad))
        for (LKind k : kAllLKinds)
            if (!trivial(k)) report.triviality_implications_ok = false;
    // the mechanism behind those lists
    for (int i = 0; i < kNumLKinds; ++i)
        for (int j = 0; j < kNumLKinds; ++j)
            if (rel[i][j] && trivial(kAllLKinds[j]) && !trivial(kAllLKinds[i]))
                report.triviality_implications_ok = false;
    if (!report.triviality_implications_ok) {
        report.ok = false;
        report.violations.push_back("triviality propagation fails");
    }
    return report;
}

PosetReport poset_report(const ObjectAnalysis& a) {
    PosetReport report;
    report.relation = PosetReport::Relation::Prec;
    report.at = a.ctx.at;

    RelTable rel{};
    for (int i = 0; i < kNumLKinds; ++i)
        for (int j = 0; j < kNumLKinds; ++j) rel[i][j] = a.prec(kAllLKinds[i], kAllLKinds[j]);

    check_order_axioms(rel, a, report);
    fill_edges_and_hasse(rel, a, report);

    report.bottom = LKind::starA;
    report.top = LKind::Astar;
    for (int i = 0; i < kNumLKinds; ++i) {
        if (!rel[static_cast<int>(LKind::starA)][i]) {
            report.ok = false;
            report.violations.push_back(std::string("bottom element fails under ") +
                                        kind_name(kAllLKinds[i]));
        }
        if (!rel[i][static_cast<int>(LKind::Astar)]) {
            report.ok = false;
            report.violations.push_back(std::string("top element fails under ") +
                                        kind_name(kAllLKinds[i]));
        }
    }

    // (fits-into and maps-into) <=> numerators ordered and denominators equal;
    // the literal relation-level biconditional is tallied, not asserted.
    for (int i = 0; i < kNumLKinds; ++i)
        for (int j = 0; j < kNumLKinds; ++j) {
            const LKind x = kAllLKinds[i], y = kAllLKinds[j];
            const bool den_equal =
                a.den_leq[a.den_idx(x)][a.den_idx(y)] && a.den_leq[a.den_idx(y)][a.den_idx(x)];
            const bool num_le = a.num_leq[a.num_idx(x)][a.num_idx(y)];
            if ((a.hook(x, y) && a.prec(x, y)) != (num_le && den_equal))
                report.order_compat_ok = false;
            if ((a.hook(x, y) == a.prec(x, y)) != den_equal)
                ++report.literal_biconditional_failures;
        }
    if (!report.order_compat_ok) {
        report.ok = false;
        report.violations.push_back("order compatibility fails");
    }
    return report;
}

PosetReport semilattice_report(const ObjectContext& ctx) { return semilattice_report(analyze(ctx)); }
PosetReport poset_report(const ObjectContext& ctx) { return poset_report(analyze(ctx)); }

std::string hasse_dot(const PosetReport& report, const ObjectAnalysis& a) {
    std::ostringstream os;
    os << "digraph "
       << (report.relation == PosetReport::Relation::Hook ? "hook" : "prec") << "_"
       << report.at.row << "_" << report.at.col << " {\n";
    os << "  rankdir=BT;\n  node [shape=box];\n";
    std::map<LKind, std::size_t> class_of;
    for (std::size_t c = 0; c < report.value_classes.size(); ++c) {
        std::string label;
        for (LKind k : report.value_classes[c]) {
            if (!label.empty()) label += " = ";
            label += kind_name(k);
        }
        label += "\\ndim " + std::to_string(a.homs.at(report.value_classes[c][0]).dim());
        os << "  n" << c << " [label=\"" << label << "\"];\n";
        for (LKind k : report.value_classes[c]) class_of[k] = c;
    }
    for (const auto& [from, to] : report.hasse)
        os << "  n" << class_of[from] << " -> n" << class_of[to] << ";\n";
    os << "}\n";
    return os.str();
}

std::optional<MeetWitness> meet_witness(const DoubleComplex& dc) {
    for (std::size_t i = 0; i < dc.rows(); ++i)
        for (std::size_t j = 0; j < dc.cols(); ++j) {
            const ObjectLattices lat = lattices(context(dc, {i, j}));
            if (!leq(lat.im.im_join, lat.ker.ker_meet))
                return MeetWitness{{i, j}, lat.ker.ker_meet.dim(), lat.im.im_join.dim()};
        }
    return std::nullopt;
}

namespace {

// The structural morphism from src to tgt, or nothing when src == tgt
// (identity), or InputError when unrelated.
Mat underlying_between(const DoubleComplex& dc, GridIndex src, GridIndex tgt) {
    if (!dc.in_bounds(src) || !dc.in_bounds(tgt))
        throw InputError("positions out of bounds");
    if (src == tgt) return Mat::identity(dc.field(), dc.dim_at(src));
    if (tgt.row == src.row && tgt.col == src.col + 1) return dc.hmap(src.row, src.col);
    if (tgt.row == src.row + 1 && tgt.col == src.col) return dc.vmap(src.row, src.col);
    if (tgt.row == src.row + 1 && tgt.col == src.col + 1)
        return dc.vmap(src.row, src.col + 1) * dc.hmap(src.row, src.col);
    throw InputError("positions are not related by a structural morphism");
}

}  // namespace

std::optional<CanonMorphism> prec_morphism(const DoubleComplex& dc, HomologyId src,
                                           HomologyId tgt) {
    const Mat u = underlying_between(dc, src.at, tgt.at);
    return induced_morphism(l_homology(context(dc, src.at), src.kind),
                            l_homology(context(dc, tgt.at), tgt.kind), u);
}

namespace {

struct ExactDetail {
    bool exact;
    std::size_t lhs_dim, rhs_dim;
};

ExactDetail exactness_detail(const Subquotient& h1, const Subquotient& h2, const Subquotient& h3,
                             const Mat& u1, const Mat& u2) {
    const Subspace lhs = join(direct_image(u1, h1.numerator()), h2.denominator());
    const Subspace rhs = meet(inverse_image(u2, h3.denominator()), h2.numerator());
    return {lhs == rhs, lhs.dim(), rhs.dim()};
}

}  // namespace

bool exactness_check(const Subquotient& h1, const Subquotient& h2, const Subquotient& h3,
                     const Mat& u1, const Mat& u2) {
    if (!induced_morphism(h1, h2, u1) || !induced_morphism(h2, h3, u2))
        throw InputError("exactness_check: no canonical morphism for a step of the sequence");
    return exactness_detail(h1, h2, h3, u1, u2).exact;
}

bool SuiteReport::all_exact() const {
    return std::all_of(sequences.begin(), sequences.end(),
                       [](const SequenceCheck& s) { return s.exact; });
}

bool SuiteReport::salamander_ok() const {
    return std::all_of(salamander.begin(), salamander.end(),
                       [](const SalamanderCheck& s) { return !s.applicable || s.iso_ok; });
}

namespace {

struct SeqSpec {
    const char* id;
    char edge;             // 'h' or 'v'
    int obj1, obj2, obj3;  // 0 = edge source, 1 = edge target
    LKind k1, k2, k3;
};

// The twelve standard sequences; six over each edge direction. The first
// six have their two-object step across the edge as the second arrow,
// the last six as the first arrow.
constexpr SeqSpec kSuiteTable[12] = {
    {"II.a", 'h', 0, 0, 1, LKind::Ah, LKind::Astar, LKind::starA},
    {"II.b", 'h', 0, 0, 1, LKind::hAd, LKind::dAv, LKind::vAd},
    {"II.c", 'h', 0, 0, 1, LKind::hAd, LKind::Astar, LKind::veeAd},
    {"II.d", 'v', 0, 0, 1, LKind::Av, LKind::Astar, LKind::starA},
    {"II.e", 'v', 0, 0, 1, LKind::vAd, LKind::dAh, LKind::hAd},
    {"II.f", 'v', 0, 0, 1, LKind::vAd, LKind::Astar, LKind::veeAd},
    {"III.a", 'v', 0, 1, 1, LKind::Astar, LKind::Ah, LKind::Astar},
    {"III.b", 'v', 0, 1, 1, LKind::Astar, LKind::starA, LKind::Av},
    {"III.c", 'v', 0, 1, 1, LKind::Astar, LKind::hAd, LKind::dAv},
    {"III.d", 'h', 0, 1, 1, LKind::Astar, LKind::Av, LKind::Astar},
    {"III.e", 'h', 0, 1, 1, LKind::Astar, LKind::starA, LKind::Ah},
    {"III.f", 'h', 0, 1, 1, LKind::Astar, LKind::vAd, LKind::dAh},
};

struct Edge {
    GridIndex src, tgt;
    char dir;
};

TypeITally type_i_tally(const ObjectAnalysis& a) {
    TypeITally tally;
    // value ids across { num_i v den_j } and { den_i ^ num_j }
    std::vector<Subspace> vals;
    vals.reserve(50);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) vals.push_back(join(a.num_value(i), a.den_value(j)));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) vals.push_back(meet(a.den_value(i), a.num_value(j)));
    std::vector<int> id(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        id[i] = static_cast<int>(i);
        for (std::size_t j = 0; j < i; ++j)
            if (vals[j] == vals[i]) {
                id[i] = id[j];
                break;
            }
    }
    const auto lhs_id = [&](int n1, int d2) { return id[n1 * 5 + d2]; };
    const auto rhs_id = [&](int d3, int n2) { return id[25 + d3 * 5 + n2]; };

    for (LKind k1 : kAllLKinds)
        for (LKind k2 : kAllLKinds) {
            if (!a.prec(k1, k2)) continue;
            for (LKind k3 : kAllLKinds) {
                if (!a.prec(k2, k3)) continue;
                ++tally.examined;
                if (lhs_id(a.num_idx(k1), a.den_idx(k2)) != rhs_id(a.den_idx(k3), a.num_idx(k2)))
                    continue;
                const bool degenerate = a.homs.at(k1).is_trivial() &&
                                        a.homs.at(k2).is_trivial() &&
                                        a.homs.at(k3).is_trivial();
                if (degenerate)
                    ++tally.exact_degenerate;
                else
                    ++tally.exact_nondegenerate;
            }
        }
    return tally;
}

}  // namespace

SuiteReport run_suite(const DoubleComplex& dc, ExecMode mode) {
    const std::vector<ObjectAnalysis> objects = analyze_all(dc, mode);
    const std::size_t cols = dc.cols();
    const auto at = [&](GridIndex g) -> const ObjectAnalysis& {
        return objects[g.row * cols + g.col];
    };

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < dc.rows(); ++i)
        for (std::size_t j = 0; j + 1 < dc.cols(); ++j)
            edges.push_back({{i, j}, {i, j + 1}, 'h'});
    for (std::size_t i = 0; i + 1 < dc.rows(); ++i)
        for (std::size_t j = 0; j < dc.cols(); ++j)
            edges.push_back({{i, j}, {i + 1, j}, 'v'});

    SuiteReport report;
    report.sequences.resize(edges.size() * 6,
                            SequenceCheck{{0, 0}, 'h', "", {LKind::Ah, LKind::Ah, LKind::Ah},
                                          false, 0, 0});
    std::vector<std::optional<SalamanderCheck>> sala(edges.size());

    for_each_index(edges.size(), mode, [&](std::size_t ei) {
        const Edge& e = edges[ei];
        const Mat u = e.dir == 'h' ? dc.hmap(e.src.row, e.src.col) : dc.vmap(e.src.row, e.src.col);
        const ObjectAnalysis& src = at(e.src);
        const ObjectAnalysis& tgt = at(e.tgt);
        const Mat id_src = Mat::identity(dc.field(), src.ctx.dim);
        const Mat id_tgt = Mat::identity(dc.field(), tgt.ctx.dim);

        std::size_t slot = ei * 6;
        for (const SeqSpec& s : kSuiteTable) {
            if (s.edge != e.dir) continue;
            const Subquotient& h1 = (s.obj1 ? tgt : src).homs.at(s.k1);
            const Subquotient& h2 = (s.obj2 ? tgt : src).homs.at(s.k2);
            const Subquotient& h3 = (s.obj3 ? tgt : src).homs.at(s.k3);
            const Mat& u1 = s.obj1 == s.obj2 ? (s.obj1 ? id_tgt : id_src) : u;
            const Mat& u2 = s.obj2 == s.obj3 ? (s.obj2 ? id_tgt : id_src) : u;
            const ExactDetail d = exactness_detail(h1, h2, h3, u1, u2);
            report.sequences[slot++] =
                SequenceCheck{e.src, e.dir, s.id, {s.k1, s.k2, s.k3}, d.exact, d.lhs_dim, d.rhs_dim};
        }

        if (e.dir == 'h') {
            const Subquotient& donor = src.homs.at(LKind::Astar);
            const Subquotient& receptor = tgt.homs.at(LKind::starA);
            SalamanderCheck sc{e.src,
                               src.homs.at(LKind::Ah).is_trivial(),
                               tgt.homs.at(LKind::Ah).is_trivial(),
                               false,
                               false,
                               donor.dim(),
                               receptor.dim()};
            sc.applicable = sc.left_trivial && sc.right_trivial;
            if (sc.applicable) {
                const auto m = induced_morphism(donor, receptor, u);
                sc.iso_ok = m && is_isomorphism(*m);
            }
            sala[ei] = sc;
        }
    });

    for (auto& s : sala)
        if (s) report.salamander.push_back(*s);

    std::vector<TypeITally> tallies(objects.size());
    for_each_index(objects.size(), mode, [&](std::size_t i) { tallies[i] = type_i_tally(objects[i]); });
    for (const TypeITally& t : tallies) {
        report.type_i.examined += t.examined;
        report.type_i.exact_degenerate += t.exact_degenerate;
        report.type_i.exact_nondegenerate += t.exact_nondegenerate;
    }
    return report;
}

SearchIvResult search_type_iv(const DoubleComplex& dc, std::uint64_t budget) {
    SearchIvResult result;
    const std::vector<ObjectAnalysis> objects = analyze_all(dc, ExecMode::Serial);
    const std::size_t cols = dc.cols();
    const auto at = [&](GridIndex g) -> const ObjectAnalysis& {
        return objects[g.row * cols + g.col];
    };

    struct Arrow {
        char dir;
        GridIndex src, tgt;
        Mat mat;
    };
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < dc.rows(); ++i)
        for (std::size_t j = 0; j + 1 < dc.cols(); ++j)
            arrows.push_back({'h', {i, j}, {i, j + 1}, dc.hmap(i, j)});
    for (std::size_t i = 0; i + 1 < dc.rows(); ++i)
        for (std::size_t j = 0; j < dc.cols(); ++j)
            arrows.push_back({'v', {i, j}, {i + 1, j}, dc.vmap(i, j)});
    for (std::size_t i = 0; i + 1 < dc.rows(); ++i)
        for (std::size_t j = 0; j + 1 < dc.cols(); ++j)
            arrows.push_back({'d', {i, j}, {i + 1, j + 1}, dc.vmap(i, j + 1) * dc.hmap(i, j)});

    for (const Arrow& a1 : arrows) {
        for (const Arrow& a2 : arrows) {
            if (!(a1.tgt == a2.src)) continue;
            if (a1.src == a2.tgt) continue;  // three distinct objects
            ++result.pairs_examined;
            const ObjectAnalysis& X = at(a1.src);
            const ObjectAnalysis& Y = at(a1.tgt);
            const ObjectAnalysis& Z = at(a2.tgt);

            bool cn1[5][5], cd1[5][5], cn2[5][5], cd2[5][5];
            std::vector<Subspace> img_num1, img_den1, inv_den2;
            for (int i = 0; i < 5; ++i) {
                img_num1.push_back(direct_image(a1.mat, X.num_value(i)));
                img_den1.push_back(direct_image(a1.mat, X.den_value(i)));
                inv_den2.push_back(inverse_image(a2.mat, Z.den_value(i)));
            }
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j) {
                    cn1[i][j] = leq(img_num1[i], Y.num_value(j));
                    cd1[i][j] = leq(img_den1[i], Y.den_value(j));
                    cn2[i][j] = leq(direct_image(a2.mat, Y.num_value(i)), Z.num_value(j));
                    cd2[i][j] = leq(direct_image(a2.mat, Y.den_value(i)), Z.den_value(j));
                }

            // lhs(n1, d2) = u1(num X n1) v den Y d2 ; rhs(d3, n2) = u2^{-1}(den Z d3) ^ num Y n2
            std::vector<Subspace> vals;
            vals.reserve(50);
            for (int n1 = 0; n1 < 5; ++n1)
                for (int d2 = 0; d2 < 5; ++d2) vals.push_back(join(img_num1[n1], Y.den_value(d2)));
            for (int d3 = 0; d3 < 5; ++d3)
                for (int n2 = 0; n2 < 5; ++n2) vals.push_back(meet(inv_den2[d3], Y.num_value(n2)));
            std::vector<int> id(vals.size());
            for (std::size_t i = 0; i < vals.size(); ++i) {
                id[i] = static_cast<int>(i);
                for (std::size_t j = 0; j < i; ++j)
                    if (vals[j] == vals[i]) {
                        id[i] = id[j];
                        break;
                    }
            }

            for (LKind k1 : kAllLKinds)
                for (LKind k2 : kAllLKinds)
                    for (LKind k3 : kAllLKinds) {
                        if (result.triples_examined >= budget) {
                            result.budget_exhausted = true;
                            return result;
                        }
                        ++result.triples_examined;
                        const int n1 = X.num_idx(k1), d1 = X.den_idx(k1);
                        const int n2 = Y.num_idx(k2), d2 = Y.den_idx(k2);
                        const int n3 = Z.num_idx(k3), d3 = Z.den_idx(k3);
                        if (!cn1[n1][n2] || !cd1[d1][d2] || !cn2[n2][n3] || !cd2[d2][d3]) continue;
                        if (id[n1 * 5 + d2] != id[25 + d3 * 5 + n2]) continue;
                        const bool degenerate = X.homs.at(k1).is_trivial() &&
                                                Y.homs.at(k2).is_trivial() &&
                                                Z.homs.at(k3).is_trivial();
                        result.witnesses.push_back(
                            {a1.src, a1.tgt, a2.tgt, a1.dir, a2.dir, {k1, k2, k3}, degenerate});
                    }
        }
    }
    return result;
}

}  // namespace lhom
