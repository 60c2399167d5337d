#include "lhom/reports.hpp"

namespace lhom {

using nlohmann::json;

namespace {

json index_json(GridIndex at) { return json::array({at.row, at.col}); }

}  // namespace

json report_validation(const ValidationReport& r) {
    json violations = json::array();
    for (const LawViolation& v : r.violations)
        violations.push_back({{"law", law_name(v.law)},
                              {"at", index_json(v.at)},
                              {"detail", v.detail}});
    return {{"schema", 1}, {"ok", r.ok()}, {"violations", violations}};
}

json report_homology(const std::vector<HomologyRow>& rows) {
    json out = json::array();
    for (const HomologyRow& r : rows)
        out.push_back({{"at", index_json(r.at)},
                       {"kind", kind_name(r.kind)},
                       {"dim_num", r.dim_num},
                       {"dim_den", r.dim_den},
                       {"dim", r.dim},
                       {"trivial", r.trivial}});
    return {{"schema", 1}, {"rows", out}};
}

json report_poset(const PosetReport& r) {
    json edges = json::array();
    for (const auto& [a, b] : r.edges) edges.push_back({kind_name(a), kind_name(b)});
    json hasse = json::array();
    for (const auto& [a, b] : r.hasse) hasse.push_back({kind_name(a), kind_name(b)});
    json classes = json::array();
    for (const auto& cls : r.value_classes) {
        json c = json::array();
        for (LKind k : cls) c.push_back(kind_name(k));
        classes.push_back(std::move(c));
    }
    json out{{"schema", 1},
             {"relation", r.relation == PosetReport::Relation::Hook ? "hook" : "prec"},
             {"at", index_json(r.at)},
             {"ok", r.ok},
             {"edges", edges},
             {"hasse", hasse},
             {"value_classes", classes},
             {"violations", r.violations}};
    if (r.top) out["top"] = kind_name(*r.top);
    if (r.bottom) out["bottom"] = kind_name(*r.bottom);
    if (r.relation == PosetReport::Relation::Hook) {
        out["join_closure_ok"] = r.join_closure_ok;
        out["lub_ok"] = r.lub_ok;
        out["triviality_implications_ok"] = r.triviality_implications_ok;
    } else {
        out["order_compat_ok"] = r.order_compat_ok;
        out["literal_biconditional_failures"] = r.literal_biconditional_failures;
    }
    return out;
}

json report_suite(const SuiteReport& r) {
    json seqs = json::array();
    for (const SequenceCheck& s : r.sequences)
        seqs.push_back({{"at", index_json(s.at)},
                        {"edge", std::string(1, s.edge)},
                        {"sequence", s.id},
                        {"kinds", {kind_name(s.kinds[0]), kind_name(s.kinds[1]),
                                   kind_name(s.kinds[2])}},
                        {"exact", s.exact},
                        {"lhs_dim", s.lhs_dim},
                        {"rhs_dim", s.rhs_dim}});
    json sala = json::array();
    for (const SalamanderCheck& s : r.salamander)
        sala.push_back({{"at", index_json(s.at)},
                        {"left_trivial", s.left_trivial},
                        {"right_trivial", s.right_trivial},
                        {"applicable", s.applicable},
                        {"iso_ok", s.iso_ok},
                        {"dim_src", s.dim_src},
                        {"dim_tgt", s.dim_tgt}});
    return {{"schema", 1},
            {"all_exact", r.all_exact()},
            {"salamander_ok", r.salamander_ok()},
            {"sequences", seqs},
            {"salamander", sala},
            {"type_i",
             {{"examined", r.type_i.examined},
              {"exact_degenerate", r.type_i.exact_degenerate},
              {"exact_nondegenerate", r.type_i.exact_nondegenerate}}}};
}

json report_fibration(const FibReport& r) {
    json coincidences = json::array();
    for (const auto& [at, groups] : r.value_coincidences) {
        json gs = json::array();
        for (const auto& g : groups) {
            json names = json::array();
            for (LKind k : g) names.push_back(kind_name(k));
            gs.push_back(std::move(names));
        }
        coincidences.push_back({{"at", index_json(at)}, {"groups", gs}});
    }
    return {{"schema", 1},
            {"ok", r.ok()},
            {"faithful", r.faithful_ok},
            {"amnestic", r.amnestic_ok},
            {"functorial", r.functorial_ok},
            {"fibration", r.fibration_ok},
            {"bottom_chain", r.chain_ok},
            {"left_adjoint", r.left_adjoint_ok},
            {"right_adjoint", r.right_adjoint_ok},
            {"fibers", r.fibers},
            {"fiber_size", kNumLKinds},
            {"within_fiber_arrows", r.within_fiber_arrows},
            {"cross_arrows", r.cross_arrows},
            {"composites_checked", r.composites_checked},
            {"lifts_checked", r.lifts_checked},
            {"factorizations_checked", r.factorizations_checked},
            {"value_coincidences", coincidences},
            {"failures", r.failures}};
}

json report_search(const SearchIvResult& r, std::size_t max_witnesses) {
    json ws = json::array();
    std::size_t n = 0;
    for (const TypeIvWitness& w : r.witnesses) {
        if (n++ >= max_witnesses) break;
        ws.push_back({{"x", index_json(w.x)},
                      {"y", index_json(w.y)},
                      {"z", index_json(w.z)},
                      {"steps", {std::string(1, w.step1), std::string(1, w.step2)}},
                      {"kinds", {kind_name(w.kinds[0]), kind_name(w.kinds[1]),
                                 kind_name(w.kinds[2])}},
                      {"degenerate", w.degenerate}});
    }
    std::size_t nondegenerate = 0;
    for (const TypeIvWitness& w : r.witnesses)
        if (!w.degenerate) ++nondegenerate;
    return {{"schema", 1},
            {"pairs_examined", r.pairs_examined},
            {"triples_examined", r.triples_examined},
            {"budget_exhausted", r.budget_exhausted},
            {"witness_count", r.witnesses.size()},
            {"nondegenerate_count", nondegenerate},
            {"witnesses", ws}};
}

json report_meet_witness(const std::optional<MeetWitness>& w) {
    json out{{"schema", 1}, {"found", w.has_value()}};
    if (w) {
        out["at"] = index_json(w->at);
        out["ker_meet_dim"] = w->ker_meet_dim;
        out["im_join_dim"] = w->im_join_dim;
    }
    return out;
}

}  // namespace lhom
