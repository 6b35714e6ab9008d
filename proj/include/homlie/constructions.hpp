#pragma once

#include "homlie/algebra.hpp"
#include "homlie/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homlie {

/// A linear map source -> target; matrix is target.dim() x source.dim().
struct LinearMap {
    HomLieAlgebra source;
    HomLieAlgebra target;
    Matrix matrix;

    LinearMap(HomLieAlgebra source, HomLieAlgebra target, Matrix matrix);
    static LinearMap identity(const HomLieAlgebra& L);
};

struct QuotientResult {
    HomLieAlgebra quotient;
    LinearMap projection;
    /// Coset representative in L of each quotient basis element.
    std::vector<Vector> section;
};

/*
 * L/I with the cosets of the unit vectors at the non-pivot columns of I as
 * basis. Brackets and alpha-images of representatives are reduced modulo I,
 * which leaves them supported on exactly those columns.
 */
QuotientResult quotient(const HomLieAlgebra& L, const Subspace& ideal);

/// L1 ⊕ L2, L1 coordinates first; basis names get "_1" / "_2" suffixes.
HomLieAlgebra direct_sum(const HomLieAlgebra& L1, const HomLieAlgebra& L2);

struct Restriction {
    HomLieAlgebra algebra;
    LinearMap inclusion;
};

/// The subalgebra H in the coordinates of its canonical (RREF) basis.
Restriction restrict(const HomLieAlgebra& L, const Subspace& H);

/// S ⊆ H rewritten in the intrinsic coordinates of H's canonical basis.
Subspace coordinates_in(const Subspace& H, const Subspace& S);

/// The algebra on the same space for which P : L -> transport(L, P) is an isomorphism.
HomLieAlgebra transport(const HomLieAlgebra& L, const Matrix& P);

struct MorphismWitness {
    std::string identity; ///< "bracket" or "alpha"
    std::vector<std::size_t> indices;
    Vector residual;
};

struct MorphismVerdict {
    enum class Kind { morphism, isomorphism, not_morphism };
    Kind kind;
    std::optional<MorphismWitness> witness;

    bool is_morphism() const { return kind != Kind::not_morphism; }
};

std::string to_string(MorphismVerdict::Kind kind);

/// f([e_i,e_j]) = [f(e_i), f(e_j)] on all basis pairs and f∘alpha1 = alpha2∘f on all basis vectors.
MorphismVerdict check_morphism(const LinearMap& f);

struct SeriesComparison {
    SeriesKind kind;
    /// f(L1^(i)) per index.
    std::vector<Subspace> image_of_terms;
    /// (f(L1))^(i) per index, computed inside the restricted image and mapped back.
    std::vector<Subspace> terms_of_image;
    std::vector<bool> equal;

    bool all_equal() const;
};

struct PushforwardReport {
    SeriesComparison derived;
    SeriesComparison lower_central;

    bool all_equal() const { return derived.all_equal() && lower_central.all_equal(); }
};

PushforwardReport pushforward_series(const LinearMap& f);

} // namespace homlie
