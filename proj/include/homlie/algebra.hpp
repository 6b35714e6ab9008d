#pragma once

#include "homlie/linalg.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace homlie {

/// An operation's mathematical precondition does not hold (not an ideal, not multiplicative, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/*
 * A finite-dimensional algebra (L, [,], alpha) given by structure constants.
 *
 * bracket(e_i, e_j) = sum_k structure(i, j)[k] e_k, stored for every ordered
 * pair. alpha acts on column vectors: column j of the matrix is alpha(e_j).
 *
 * Construction does not enforce the Hom-Lie axioms, so malformed input can be
 * loaded and diagnosed with check_axioms. Operations that need a valid
 * multiplicative algebra check for themselves and throw PreconditionError.
 */
class HomLieAlgebra {
public:
    using Structure = std::vector<std::vector<Vector>>;

    HomLieAlgebra() = default;
    HomLieAlgebra(Structure structure, Matrix alpha, std::vector<std::string> basis_names = {});

    /// Zero bracket with the given twisting map.
    static HomLieAlgebra abelian(Matrix alpha, std::vector<std::string> basis_names = {});

    std::size_t dim() const { return alpha_.rows(); }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Structure& structure() const { return structure_; }
    const Vector& structure(std::size_t i, std::size_t j) const { return structure_[i][j]; }
    const Matrix& alpha() const { return alpha_; }

    friend bool operator==(const HomLieAlgebra& a, const HomLieAlgebra& b) = default;

private:
    Structure structure_;
    Matrix alpha_;
    std::vector<std::string> names_;
};

std::vector<std::string> default_basis_names(std::size_t n, const std::string& prefix = "e");

/// Failing instance of an axiom: basis indices (0-based) and the nonzero residual.
struct AxiomWitness {
    std::string axiom;
    std::vector<std::size_t> indices;
    Vector residual;
};

struct AxiomReport {
    bool skew_ok = true;
    bool hom_jacobi_ok = true;
    bool multiplicative_ok = true;
    bool classical_jacobi_ok = true;
    std::vector<AxiomWitness> witnesses;

    /// Skew-symmetry, Hom-Jacobi and multiplicativity; classical Jacobi is informational.
    bool multiplicative_hom_lie() const { return skew_ok && hom_jacobi_ok && multiplicative_ok; }
};

inline constexpr const char* kSkew = "skew";
inline constexpr const char* kHomJacobi = "hom_jacobi";
inline constexpr const char* kMultiplicative = "multiplicative";
inline constexpr const char* kClassicalJacobi = "classical_jacobi";

Vector bracket_vectors(const HomLieAlgebra& L, const Vector& u, const Vector& v);

/*
 * Checks the defining identities on basis elements.
 *
 * Both sides of every identity are multilinear, so checking basis elements is
 * enough. Once skew-symmetry holds, the Jacobi-type residual
 *   J(x,y,z) = [a(x),[y,z]] + [a(y),[z,x]] + [a(z),[x,y]]
 * is cyclic and changes sign under y<->z, hence alternating, and the triples
 * i<j<k determine it. Without skew-symmetry every ordered triple is checked.
 * Multiplicativity a([x,y]) - [a(x),a(y)] is checked on all ordered pairs.
 */
AxiomReport check_axioms(const HomLieAlgebra& L);

/// Throws PreconditionError naming the failed axioms unless L is a multiplicative Hom-Lie algebra.
void require_multiplicative(const HomLieAlgebra& L, const std::string& operation);

/// [H, K] = span{[h, k]} over basis pairs of H and K.
Subspace bracket_subspaces(const HomLieAlgebra& L, const Subspace& H, const Subspace& K);

bool is_subalgebra(const HomLieAlgebra& L, const Subspace& H);
bool is_ideal(const HomLieAlgebra& L, const Subspace& H);
bool is_abelian(const HomLieAlgebra& L);

} // namespace homlie
