#include "lhom/fibcat.hpp"

#include <set>
#include <sstream>

namespace lhom {

const char* com_arrow_kind_name(ComArrow::Kind k) {
    switch (k) {
        case ComArrow::Kind::Identity: return "id";
        case ComArrow::Kind::Horizontal: return "h";
        case ComArrow::Kind::Vertical: return "v";
        case ComArrow::Kind::Diagonal: return "d";
    }
    return "?";
}

std::optional<std::size_t> ComGraph::identity_at(GridIndex at) const {
    if (at.row >= rows || at.col >= cols) return std::nullopt;
    return node_index(at);  // identities come first, in node order
}

std::optional<std::size_t> ComGraph::arrow_between(GridIndex src, GridIndex tgt) const {
    for (std::size_t i = node_count(); i < arrows.size(); ++i)
        if (arrows[i].src == src && arrows[i].tgt == tgt) return i;
    return std::nullopt;
}

std::optional<std::size_t> ComGraph::compose(std::size_t first, std::size_t second) const {
    const ComArrow& a = arrows[first];
    const ComArrow& b = arrows[second];
    if (!(a.tgt == b.src)) return std::nullopt;
    if (a.kind == ComArrow::Kind::Identity) return second;
    if (b.kind == ComArrow::Kind::Identity) return first;
    const bool hv = a.kind == ComArrow::Kind::Horizontal && b.kind == ComArrow::Kind::Vertical;
    const bool vh = a.kind == ComArrow::Kind::Vertical && b.kind == ComArrow::Kind::Horizontal;
    if (hv || vh) return arrow_between(a.src, b.tgt);  // the diagonal
    return std::nullopt;
}

std::optional<std::size_t> HlgGraph::find(std::size_t com_arrow, LKind src, LKind tgt) const {
    const std::int32_t v = table_[(com_arrow * kNumLKinds + static_cast<std::size_t>(src)) *
                                      kNumLKinds +
                                  static_cast<std::size_t>(tgt)];
    if (v < 0) return std::nullopt;
    return static_cast<std::size_t>(v);
}

FibBuild build_fibration(const DoubleComplex& dc, ExecMode mode) {
    FibBuild b;
    b.objects = analyze_all(dc, mode);
    const std::size_t rows = dc.rows(), cols = dc.cols();

    b.com.rows = rows;
    b.com.cols = cols;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            b.com.arrows.push_back({ComArrow::Kind::Identity, {i, j}, {i, j},
                                    Mat::identity(dc.field(), dc.dim_at({i, j}))});
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j + 1 < cols; ++j)
            b.com.arrows.push_back({ComArrow::Kind::Horizontal, {i, j}, {i, j + 1}, dc.hmap(i, j)});
    for (std::size_t i = 0; i + 1 < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            b.com.arrows.push_back({ComArrow::Kind::Vertical, {i, j}, {i + 1, j}, dc.vmap(i, j)});
    for (std::size_t i = 0; i + 1 < rows; ++i)
        for (std::size_t j = 0; j + 1 < cols; ++j)
            b.com.arrows.push_back({ComArrow::Kind::Diagonal, {i, j}, {i + 1, j + 1},
                                    dc.vmap(i, j + 1) * dc.hmap(i, j)});

    b.hlg.cols = cols;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (LKind k : kAllLKinds) b.hlg.nodes.push_back({{i, j}, k});

    // arrows over each base arrow, built independently then concatenated
    std::vector<std::vector<HlgArrow>> per_arrow(b.com.arrows.size());
    for_each_index(b.com.arrows.size(), mode, [&](std::size_t ai) {
        const ComArrow& ca = b.com.arrows[ai];
        const ObjectAnalysis& S = b.objects[b.com.node_index(ca.src)];
        const ObjectAnalysis& T = b.objects[b.com.node_index(ca.tgt)];
        const bool ident = ca.kind == ComArrow::Kind::Identity;

        bool cross_num[5][5], cross_den[5][5];
        if (!ident) {
            for (int i = 0; i < 5; ++i) {
                const Subspace in = direct_image(ca.mat, S.num_value(i));
                const Subspace id_ = direct_image(ca.mat, S.den_value(i));
                for (int j = 0; j < 5; ++j) {
                    cross_num[i][j] = leq(in, T.num_value(j));
                    cross_den[i][j] = leq(id_, T.den_value(j));
                }
            }
        }
        const auto included = [&](LKind s, LKind t) {
            if (ident) return S.prec(s, t);
            return cross_num[S.num_idx(s)][T.num_idx(t)] && cross_den[S.den_idx(s)][T.den_idx(t)];
        };

        // one elimination per target kind, all qualifying sources stacked
        std::vector<std::optional<Mat>> matrices(kNumLKinds * kNumLKinds);
        for (LKind t : kAllLKinds) {
            std::vector<LKind> qual;
            std::size_t total_cols = 0;
            for (LKind s : kAllLKinds)
                if (included(s, t)) {
                    qual.push_back(s);
                    total_cols += S.homs.at(s).dim();
                }
            if (qual.empty()) continue;
            const Subquotient& tq = T.homs.at(t);
            Mat stacked(dc.field(), tq.ambient_dim(), 0);
            for (LKind s : qual) {
                const Mat mapped = ident ? S.homs.at(s).reps() : ca.mat * S.homs.at(s).reps();
                stacked = Mat::hstack(stacked, mapped);
            }
            const auto sol = solve_all(Mat::hstack(tq.denominator().basis(), tq.reps()), stacked);
            if (!sol)
                throw std::logic_error("build_fibration: image escaped the target numerator");
            std::size_t off = 0;
            for (LKind s : qual) {
                const std::size_t sd = S.homs.at(s).dim();
                Mat m(dc.field(), tq.dim(), sd);
                for (std::size_t r = 0; r < tq.dim(); ++r)
                    for (std::size_t c = 0; c < sd; ++c)
                        m.at(r, c) = sol->at(tq.denominator().dim() + r, off + c);
                matrices[static_cast<std::size_t>(s) * kNumLKinds + static_cast<std::size_t>(t)] =
                    std::move(m);
                off += sd;
            }
        }
        for (LKind s : kAllLKinds)
            for (LKind t : kAllLKinds) {
                auto& m = matrices[static_cast<std::size_t>(s) * kNumLKinds +
                                   static_cast<std::size_t>(t)];
                if (!m) continue;
                per_arrow[ai].push_back({b.hlg.node_index(ca.src, s), b.hlg.node_index(ca.tgt, t),
                                         ai, std::move(*m)});
            }
    });

    b.hlg.table_.assign(b.com.arrows.size() * kNumLKinds * kNumLKinds, -1);
    for (std::size_t ai = 0; ai < per_arrow.size(); ++ai)
        for (HlgArrow& ha : per_arrow[ai]) {
            const LKind s = b.hlg.nodes[ha.src_node].kind;
            const LKind t = b.hlg.nodes[ha.tgt_node].kind;
            b.hlg.table_[(ai * kNumLKinds + static_cast<std::size_t>(s)) * kNumLKinds +
                         static_cast<std::size_t>(t)] =
                static_cast<std::int32_t>(b.hlg.arrows.size());
            b.hlg.arrows.push_back(std::move(ha));
        }

    b.functor.hlg = &b.hlg;
    b.functor.com = &b.com;
    return b;
}

void FibReport::merge(const FibReport& o) {
    faithful_ok = faithful_ok && o.faithful_ok;
    amnestic_ok = amnestic_ok && o.amnestic_ok;
    functorial_ok = functorial_ok && o.functorial_ok;
    fibration_ok = fibration_ok && o.fibration_ok;
    chain_ok = chain_ok && o.chain_ok;
    left_adjoint_ok = left_adjoint_ok && o.left_adjoint_ok;
    right_adjoint_ok = right_adjoint_ok && o.right_adjoint_ok;
    fibers = std::max(fibers, o.fibers);
    within_fiber_arrows += o.within_fiber_arrows;
    cross_arrows += o.cross_arrows;
    composites_checked += o.composites_checked;
    lifts_checked += o.lifts_checked;
    factorizations_checked += o.factorizations_checked;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    for (const auto& vc : o.value_coincidences) value_coincidences.push_back(vc);
}

namespace {

std::string node_name(const FibBuild& b, std::size_t node) {
    const HlgNode& n = b.hlg.nodes[node];
    return "(" + std::to_string(n.at.row) + "," + std::to_string(n.at.col) + ")." +
           kind_name(n.kind);
}

}  // namespace

FibReport verify_faithful_amnestic(const FibBuild& b) {
    FibReport report;
    report.fibers = b.com.node_count();

    // at most one arrow per (base arrow, source node, target node)
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (const HlgArrow& a : b.hlg.arrows) {
        if (!seen.insert({a.com_arrow, a.src_node, a.tgt_node}).second) {
            report.faithful_ok = false;
            report.failures.push_back("duplicate arrow over one base arrow: " +
                                      node_name(b, a.src_node) + " -> " + node_name(b, a.tgt_node));
        }
        if (b.com.arrows[a.com_arrow].kind == ComArrow::Kind::Identity)
            ++report.within_fiber_arrows;
        else
            ++report.cross_arrows;
    }

    // mutual within-fiber arrows force equal values and identity matrices
    for (std::size_t ni = 0; ni < b.com.node_count(); ++ni) {
        const ObjectAnalysis& a = b.objects[ni];
        const std::size_t id_arrow = ni;  // identities are the first arrows, node order
        for (LKind k1 : kAllLKinds) {
            const auto self = b.hlg.find(id_arrow, k1, k1);
            if (!self || !(b.hlg.arrows[*self].matrix ==
                           Mat::identity(a.ctx.out_h.field(), a.homs.at(k1).dim()))) {
                report.amnestic_ok = false;
                report.failures.push_back("identity arrow wrong at " +
                                          node_name(b, b.hlg.node_index(a.ctx.at, k1)));
            }
            for (LKind k2 : kAllLKinds) {
                if (k1 == k2) continue;
                if (a.prec(k1, k2) && a.prec(k2, k1)) {
                    const bool same = a.same_value(k1, k2);
                    const auto fwd = b.hlg.find(id_arrow, k1, k2);
                    const bool ident_mats =
                        fwd && b.hlg.arrows[*fwd].matrix ==
                                   Mat::identity(a.ctx.out_h.field(), a.homs.at(k1).dim());
                    if (!same || !ident_mats) {
                        report.amnestic_ok = false;
                        report.failures.push_back(
                            "mutually related kinds with distinct values: " +
                            node_name(b, b.hlg.node_index(a.ctx.at, k1)) + " / " + kind_name(k2));
                    }
                }
            }
        }
        // value coincidences, reported separately from the kind-level fiber
        std::vector<std::vector<LKind>> groups;
        std::vector<bool> taken(kNumLKinds, false);
        for (int i = 0; i < kNumLKinds; ++i) {
            if (taken[i]) continue;
            std::vector<LKind> group{kAllLKinds[i]};
            for (int j = i + 1; j < kNumLKinds; ++j)
                if (!taken[j] && a.same_value(kAllLKinds[i], kAllLKinds[j])) {
                    taken[j] = true;
                    group.push_back(kAllLKinds[j]);
                }
            if (group.size() > 1) groups.push_back(std::move(group));
        }
        if (!groups.empty()) report.value_coincidences.emplace_back(a.ctx.at, std::move(groups));
    }
    return report;
}

FibReport verify_functoriality(const FibBuild& b) {
    FibReport report;
    report.fibers = b.com.node_count();
    for (std::size_t ca = 0; ca < b.com.arrows.size(); ++ca)
        for (std::size_t cb = 0; cb < b.com.arrows.size(); ++cb) {
            if (!(b.com.arrows[ca].tgt == b.com.arrows[cb].src)) continue;
            const auto comp = b.com.compose(ca, cb);
            if (!comp) continue;
            for (LKind k1 : kAllLKinds)
                for (LKind k2 : kAllLKinds) {
                    const auto first = b.hlg.find(ca, k1, k2);
                    if (!first) continue;
                    for (LKind k3 : kAllLKinds) {
                        const auto second = b.hlg.find(cb, k2, k3);
                        if (!second) continue;
                        ++report.composites_checked;
                        const auto direct = b.hlg.find(*comp, k1, k3);
                        if (!direct ||
                            !(b.hlg.arrows[*direct].matrix ==
                              b.hlg.arrows[*second].matrix * b.hlg.arrows[*first].matrix)) {
                            report.functorial_ok = false;
                            report.failures.push_back(
                                "composite differs from the direct arrow: " +
                                node_name(b, b.hlg.arrows[*first].src_node) + " -> " +
                                node_name(b, b.hlg.arrows[*second].tgt_node));
                        }
                    }
                }
        }
    return report;
}

std::optional<CartesianLift> cartesian_lift(const FibBuild& b, std::size_t com_arrow,
                                            LKind target_kind) {
    const ComArrow& ca = b.com.arrows[com_arrow];
    if (ca.kind == ComArrow::Kind::Identity) {
        const auto self = b.hlg.find(com_arrow, target_kind, target_kind);
        if (!self) return std::nullopt;
        return CartesianLift{b.hlg.node_index(ca.tgt, target_kind), *self, {*self}};
    }
    const auto direct = b.hlg.find(com_arrow, LKind::Astar, target_kind);
    const auto crossing = b.hlg.find(com_arrow, LKind::Astar, LKind::starA);
    const auto id_tgt = b.com.identity_at(ca.tgt);
    if (!direct || !crossing || !id_tgt) return std::nullopt;
    const auto climb = b.hlg.find(*id_tgt, LKind::starA, target_kind);
    if (!climb) return std::nullopt;
    if (!(b.hlg.arrows[*climb].matrix * b.hlg.arrows[*crossing].matrix ==
          b.hlg.arrows[*direct].matrix))
        return std::nullopt;
    return CartesianLift{b.hlg.node_index(ca.src, LKind::Astar), *direct, {*crossing, *climb}};
}

FibReport verify_fibration(const FibBuild& b, ExecMode mode) {
    std::vector<FibReport> parts(b.com.arrows.size());
    for_each_index(b.com.arrows.size(), mode, [&](std::size_t ai) {
        FibReport& report = parts[ai];
        const ComArrow& ca = b.com.arrows[ai];
        const bool ident = ca.kind == ComArrow::Kind::Identity;
        const auto id_src = *b.com.identity_at(ca.src);

        for (LKind t : kAllLKinds) {
            ++report.lifts_checked;
            const auto lift = cartesian_lift(b, ai, t);
            if (!lift) {
                report.fibration_ok = false;
                report.failures.push_back("missing cartesian lift over " +
                                          std::string(com_arrow_kind_name(ca.kind)) + " at (" +
                                          std::to_string(ca.src.row) + "," +
                                          std::to_string(ca.src.col) + ") target " + kind_name(t));
                continue;
            }
            const Mat& f = b.hlg.arrows[lift->direct_arrow].matrix;

            // universal factorization: every arrow into the target over a
            // composable base pair factors uniquely through the lift source
            std::vector<std::size_t> psis{id_src};
            for (std::size_t chi = 0; chi < b.com.arrows.size(); ++chi) {
                if (b.com.arrows[chi].kind == ComArrow::Kind::Identity) continue;
                if (!(b.com.arrows[chi].tgt == ca.src)) continue;
                if (b.com.compose(chi, ai)) psis.push_back(chi);
            }
            const LKind lift_kind = ident ? t : LKind::Astar;
            for (std::size_t psi : psis) {
                const auto comp = b.com.compose(psi, ai);
                if (!comp) continue;
                for (LKind s : kAllLKinds) {
                    const auto g = b.hlg.find(*comp, s, t);
                    if (!g) continue;
                    ++report.factorizations_checked;
                    const auto h = b.hlg.find(psi, s, lift_kind);
                    if (!h || !(f * b.hlg.arrows[*h].matrix == b.hlg.arrows[*g].matrix)) {
                        report.fibration_ok = false;
                        report.failures.push_back(
                            "factorization fails through the lift of " +
                            std::string(com_arrow_kind_name(ca.kind)) + " at (" +
                            std::to_string(ca.src.row) + "," + std::to_string(ca.src.col) +
                            ") target " + kind_name(t));
                    }
                }
            }

            // the bottom-source chain exists and matches the direct arrow
            if (!ident) {
                const auto rise = b.hlg.find(id_src, LKind::starA, LKind::Astar);
                const auto crossing = b.hlg.find(ai, LKind::Astar, LKind::starA);
                const auto climb = b.hlg.find(*b.com.identity_at(ca.tgt), LKind::starA, t);
                const auto direct_bottom = b.hlg.find(ai, LKind::starA, t);
                const bool all = rise && crossing && climb && direct_bottom;
                if (!all ||
                    !(b.hlg.arrows[*climb].matrix * b.hlg.arrows[*crossing].matrix *
                          b.hlg.arrows[*rise].matrix ==
                      b.hlg.arrows[*direct_bottom].matrix)) {
                    report.chain_ok = false;
                    report.failures.push_back("bottom chain broken over " +
                                              std::string(com_arrow_kind_name(ca.kind)) + " at (" +
                                              std::to_string(ca.src.row) + "," +
                                              std::to_string(ca.src.col) + ")");
                }
            }
        }
    });
    FibReport report;
    report.fibers = b.com.node_count();
    for (const FibReport& p : parts) report.merge(p);
    return report;
}

FibReport verify_adjunctions(const FibBuild& b) {
    FibReport report;
    report.fibers = b.com.node_count();
    for (std::size_t ai = 0; ai < b.com.arrows.size(); ++ai) {
        const ComArrow& ca = b.com.arrows[ai];
        for (LKind k : kAllLKinds) {
            if (!b.hlg.find(ai, LKind::starA, k)) {
                report.left_adjoint_ok = false;
                report.failures.push_back(
                    "no arrow from the fiber bottom at (" + std::to_string(ca.src.row) + "," +
                    std::to_string(ca.src.col) + ") to " + kind_name(k) + " over " +
                    com_arrow_kind_name(ca.kind));
            }
            if (!b.hlg.find(ai, k, LKind::Astar)) {
                report.right_adjoint_ok = false;
                report.failures.push_back(
                    "no arrow from " + std::string(kind_name(k)) + " at (" +
                    std::to_string(ca.src.row) + "," + std::to_string(ca.src.col) +
                    ") to the fiber top over " + com_arrow_kind_name(ca.kind));
            }
        }
    }
    // arrows exist only over base arrows by construction; the bijection at
    // singleton hom-sets is the existence check above
    return report;
}

FibReport verify_all(const FibBuild& b, ExecMode mode) {
    FibReport report = verify_faithful_amnestic(b);
    report.merge(verify_functoriality(b));
    report.merge(verify_fibration(b, mode));
    report.merge(verify_adjunctions(b));
    return report;
}

std::string com_dot(const FibBuild& b) {
    std::ostringstream os;
    os << "digraph com {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < b.com.rows; ++i)
        for (std::size_t j = 0; j < b.com.cols; ++j)
            os << "  n" << i << "_" << j << " [label=\"(" << i << "," << j << ") dim "
               << b.objects[i * b.com.cols + j].ctx.dim << "\"];\n";
    for (const ComArrow& a : b.com.arrows) {
        if (a.kind == ComArrow::Kind::Identity) continue;
        os << "  n" << a.src.row << "_" << a.src.col << " -> n" << a.tgt.row << "_" << a.tgt.col
           << " [label=\"" << com_arrow_kind_name(a.kind) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string hlg_dot(const FibBuild& b) {
    std::ostringstream os;
    os << "digraph hlg {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < b.com.rows; ++i)
        for (std::size_t j = 0; j < b.com.cols; ++j) {
            os << "  subgraph cluster_" << i << "_" << j << " {\n"
               << "    label=\"(" << i << "," << j << ")\";\n";
            for (LKind k : kAllLKinds)
                os << "    n" << i << "_" << j << "_" << kind_name(k) << " [label=\""
                   << kind_name(k) << " dim "
                   << b.objects[i * b.com.cols + j].homs.at(k).dim() << "\"];\n";
            os << "  }\n";
        }
    for (const HlgArrow& a : b.hlg.arrows) {
        const HlgNode& s = b.hlg.nodes[a.src_node];
        const HlgNode& t = b.hlg.nodes[a.tgt_node];
        if (s.at == t.at && s.kind == t.kind) continue;  // skip identity loops
        os << "  n" << s.at.row << "_" << s.at.col << "_" << kind_name(s.kind) << " -> n"
           << t.at.row << "_" << t.at.col << "_" << kind_name(t.kind) << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace lhom
