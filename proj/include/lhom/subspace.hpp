#pragma once

#include "lhom/mat.hpp"

namespace lhom {

/// A subspace of a fixed ambient space, held in canonical form: the basis
/// matrix (columns are basis vectors) whose transpose is in reduced row
/// echelon form. Two Subspaces are equal as subobjects iff their canonical
/// basis matrices are identical, so operator== is the subobject equality.
class Subspace {
public:
    /// Canonicalizes the span of the given columns.
    static Subspace from_span(const Mat& vectors) {
        return Subspace(canonical_colspan(vectors));
    }

    static Subspace bottom(FieldSpec f, std::size_t ambient) {
        return Subspace(Mat(f, ambient, 0));
    }
    static Subspace top(FieldSpec f, std::size_t ambient) {
        return Subspace(Mat::identity(f, ambient));
    }

    FieldSpec field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return basis_.rows(); }
    std::size_t dim() const { return basis_.cols(); }
    const Mat& basis() const { return basis_; }

    bool is_bottom() const { return dim() == 0; }
    bool is_top() const { return dim() == ambient_dim(); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.basis_ == b.basis_;
    }

private:
    explicit Subspace(Mat canonical_basis) : basis_(std::move(canonical_basis)) {}
    Mat basis_;
};

/// s <= t as subobjects (span containment). Implemented by solving, so it
/// is correct even for equal dimensions. InputError on ambient mismatch.
bool leq(const Subspace& s, const Subspace& t);

Subspace join(const Subspace& s, const Subspace& t);
Subspace meet(const Subspace& s, const Subspace& t);

/// Image of the composite S -> A -> B, a subspace of the codomain of f.
Subspace direct_image(const Mat& f, const Subspace& s);

/// {x : f x in t}, a subspace of the domain of f.
Subspace inverse_image(const Mat& f, const Subspace& t);

bool contains(const Subspace& s, const std::vector<Scalar>& v);

}  // namespace lhom
