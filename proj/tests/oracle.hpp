#pragma once

// Brute-force reference over F2 with small ambient dimension: subspaces as
// explicit vector sets (bitmasks), operations by enumeration, exactness by
// comparing coset sets. Independent of the elimination-based paths it
// checks; only matrix entries are read.

#include <set>
#include <vector>

#include "lhom/lhomology.hpp"

namespace lhom::oracle {

using Vec = unsigned;  // bit i = coordinate i
using VSet = std::set<Vec>;

Vec to_mask(const std::vector<Scalar>& v);

std::vector<Vec> all_vectors(std::size_t ambient);

/// m x over F2, masks in and out.
Vec apply(const Mat& m, Vec x);

VSet span(std::size_t ambient, const std::vector<Vec>& gens);
VSet members(const Subspace& s);

bool leq_set(const VSet& a, const VSet& b);
VSet join_set(std::size_t ambient, const VSet& a, const VSet& b);
VSet meet_set(const VSet& a, const VSet& b);
VSet direct_image_set(const Mat& f, const VSet& s);
VSet inverse_image_set(const Mat& f, std::size_t src_ambient, const VSet& t);
VSet kernel_set(const Mat& m);
VSet image_set(const Mat& m);

/// Element-level exactness of h1 -> h2 -> h3 at the middle: the image of
/// the first induced map equals the kernel of the second, as sets of
/// cosets of the middle denominator.
bool exact_at_middle(const Mat& u1, const Subquotient& h1, const Subquotient& h2, const Mat& u2,
                     const Subquotient& h3);

}  // namespace lhom::oracle
