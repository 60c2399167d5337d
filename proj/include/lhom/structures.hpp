#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "lhom/exec.hpp"
#include "lhom/lhomology.hpp"

namespace lhom {

struct HomologyId {
    GridIndex at;
    LKind kind;
};

/// a fits into b: numerator contained, denominator containing.
bool hook_leq(const Subquotient& a, const Subquotient& b);

/// (num_a v num_b) / (den_a ^ den_b), the least upper bound under hook_leq.
Subquotient hook_join(const Subquotient& a, const Subquotient& b);

/// Everything the per-object reports and the fibration verifier need:
/// the context, the ten lattice subspaces, the eighteen homologies, and
/// the 5x5 order tables between the numerator and denominator values.
struct ObjectAnalysis {
    ObjectContext ctx;
    ObjectLattices lat;
    LHomologySet homs;

    bool num_leq[5][5];  // numerator values i <= j
    bool den_leq[5][5];  // denominator values i <= j

    int num_idx(LKind k) const { return static_cast<int>(kind_info(k).numerator); }
    int den_idx(LKind k) const { return static_cast<int>(kind_info(k).denominator); }
    const Subspace& num_value(int i) const { return lat.ker.get(static_cast<KerGen>(i)); }
    const Subspace& den_value(int i) const { return lat.im.get(static_cast<ImGen>(i)); }

    /// a fits into b (same object), from the tables.
    bool hook(LKind a, LKind b) const {
        return num_leq[num_idx(a)][num_idx(b)] && den_leq[den_idx(b)][den_idx(a)];
    }
    /// canonical morphism a -> b over the identity exists.
    bool prec(LKind a, LKind b) const {
        return num_leq[num_idx(a)][num_idx(b)] && den_leq[den_idx(a)][den_idx(b)];
    }
    bool same_value(LKind a, LKind b) const {
        return num_leq[num_idx(a)][num_idx(b)] && num_leq[num_idx(b)][num_idx(a)] &&
               den_leq[den_idx(a)][den_idx(b)] && den_leq[den_idx(b)][den_idx(a)];
    }
};

ObjectAnalysis analyze(const ObjectContext& ctx);
std::vector<ObjectAnalysis> analyze_all(const DoubleComplex& dc, ExecMode mode = ExecMode::Serial);

struct PosetReport {
    enum class Relation { Hook, Prec };
    Relation relation;
    GridIndex at;

    bool ok = true;  // every verified claim below holds
    std::vector<std::string> violations;

    std::vector<std::pair<LKind, LKind>> edges;  // the full relation, reflexive pairs included
    std::vector<std::pair<LKind, LKind>> hasse;  // cover edges between value-class representatives
    std::optional<LKind> top, bottom;
    std::vector<std::vector<LKind>> value_classes;  // kinds grouped by equal (numerator, denominator)

    // hook relation only
    bool join_closure_ok = true;          // joins land in the eighteen values
    bool lub_ok = true;                   // hook_join is the least upper bound
    bool triviality_implications_ok = true;  // the premise lists for trivial Ah / Av, and the
                                             // collapse when Ad is trivial

    // prec relation only
    bool order_compat_ok = true;  // (hook and prec) <=> (numerators ordered and denominators equal)
    std::size_t literal_biconditional_failures = 0;  // pairs where (hook <=> prec) != (equal denominators)
};

PosetReport semilattice_report(const ObjectAnalysis& a);
PosetReport poset_report(const ObjectAnalysis& a);
PosetReport semilattice_report(const ObjectContext& ctx);
PosetReport poset_report(const ObjectContext& ctx);

/// One graph per object: nodes are value classes labeled with kind names
/// and dimension, edges the covering relation.
std::string hasse_dot(const PosetReport& report, const ObjectAnalysis& a);

/// A position where the candidate meet of the horizontal and vertical
/// homologies, (Ker out_h ^ Ker out_v) / (Im in_v v Im in_h), is not a
/// legal subquotient.
struct MeetWitness {
    GridIndex at;
    std::size_t ker_meet_dim, im_join_dim;
};
std::optional<MeetWitness> meet_witness(const DoubleComplex& dc);

/// Canonical morphism between two homologies over the identity (same
/// object) or over the single structural morphism relating the two
/// positions (one step right, one step down, or one diagonal step).
/// InputError when the positions are not so related.
std::optional<CanonMorphism> prec_morphism(const DoubleComplex& dc, HomologyId src, HomologyId tgt);

/// The exactness criterion for h1 -> h2 -> h3 over u1, u2: the image of
/// the first induced map equals the kernel of the second, i.e.
/// u1(num h1) v den h2 == u2^{-1}(den h3) ^ num h2 as canonical
/// subspaces. InputError when either induced morphism does not exist.
bool exactness_check(const Subquotient& h1, const Subquotient& h2, const Subquotient& h3,
                     const Mat& u1, const Mat& u2);

/// One three-term check from the standard suite.
struct SequenceCheck {
    GridIndex at;   // source object of the crossing step
    char edge;      // 'h' or 'v'
    const char* id; // "II.a" .. "III.f"
    std::array<LKind, 3> kinds;
    bool exact;
    std::size_t lhs_dim, rhs_dim;
};

/// The donor/receptor isomorphism across one horizontal edge, applicable
/// where both horizontal homologies vanish.
struct SalamanderCheck {
    GridIndex at;  // left object of the edge
    bool left_trivial, right_trivial;
    bool applicable;
    bool iso_ok;
    std::size_t dim_src, dim_tgt;
};

/// Same-object triples (type I) with both identity-underlying morphisms
/// present and the exactness criterion satisfied. Degenerate means all
/// three homologies are trivial.
struct TypeITally {
    std::uint64_t examined = 0;
    std::uint64_t exact_degenerate = 0;
    std::uint64_t exact_nondegenerate = 0;
};

struct SuiteReport {
    std::vector<SequenceCheck> sequences;
    std::vector<SalamanderCheck> salamander;
    TypeITally type_i;

    bool all_exact() const;
    bool salamander_ok() const;
};

/// Runs the twelve standard sequences at every edge where the objects
/// exist, the salamander isomorphism at every applicable horizontal edge,
/// and the type-I tally on every object.
SuiteReport run_suite(const DoubleComplex& dc, ExecMode mode = ExecMode::Serial);

/// Three-object exact sequences found by exhaustive search.
struct TypeIvWitness {
    GridIndex x, y, z;
    char step1, step2;  // 'h', 'v', or 'd'
    std::array<LKind, 3> kinds;
    bool degenerate;
};

struct SearchIvResult {
    std::uint64_t pairs_examined = 0;
    std::uint64_t triples_examined = 0;
    bool budget_exhausted = false;
    std::vector<TypeIvWitness> witnesses;
};

/// Enumerates composable pairs of structural arrows through three
/// distinct objects and all kind triples, reporting every triple that
/// passes the exactness criterion. budget caps the number of triples
/// examined; 0 is a legal no-op.
SearchIvResult search_type_iv(const DoubleComplex& dc, std::uint64_t budget);

}  // namespace lhom
