#pragma once

#include "homlie/constructions.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homlie {

struct ExpectedVerdicts {
    bool skew = true;
    bool hom_jacobi = true;
    bool multiplicative = true;
    std::optional<bool> classical_jacobi;
    /// nullopt when the fixture makes no claim (random algebras).
    std::optional<SeriesVerdict> solvable;
    std::optional<SeriesVerdict> nilpotent;
    /// Where the expected values come from.
    std::string provenance;
};

struct Fixture {
    std::string name;
    HomLieAlgebra algebra;
    ExpectedVerdicts expected;
};

/*
 * The n-dimensional family with alpha = 0 and [e_i, e_j] = e_{i-1} for
 * 1 < i < j <= n (skew-completed, all other basis brackets zero); n >= 5.
 *
 * Derived series dims n, n-2, n-4, ... reach zero at class ceil(n/2). The
 * lower central series has dims n, n-2, n-3, ..., 2, 1, 0: [e_2, e_3] = e_1
 * keeps span{e_1} alive one step past span{e_1, e_2}, so the nilpotent class
 * is n-1.
 */
Fixture family_nil(std::size_t n);

/// C^2 with [x, y] = i(x1 y2 - x2 y1)(1, 1) and alpha(x, y) = (-y, -x).
Fixture c2_fixture();

struct MatrixFixture {
    Fixture fixture;
    /// Coordinate map (x, y) onto c2_fixture().
    LinearMap iso;
};

/*
 * Traceless-type 2x2 complex matrices A(x,y) = [[i(x+y)/2, x], [y, -i(x+y)/2]]
 * with [A, B] = A^T B^T - B^T A^T and alpha(A) = -A^T. Structure constants
 * are computed from the matrix products in the basis B1 = A(1,0), B2 = A(0,1).
 */
MatrixFixture matrix_fixture();

/*
 * Polynomials of degree <= d (d in {3, 4}) with
 *   [p, q] = p''q' - q''p' - p''(0)q'(0) + q''(0)p'(0),   alpha(p) = p(0).
 * Basis x0, x1, ..., xd stands for the monomials 1, x, ..., x^d. Structure
 * constants come from differentiating monomials; a bracket leaving the degree
 * bound is a construction error.
 */
Fixture poly_fixture(std::size_t degree_bound);

/// dim 2, [e1, e2] = e1, alpha = 0.
Fixture counterexample_2dim();

/// Zero bracket, identity alpha.
Fixture abelian(std::size_t n);

enum class RandomShape {
    general,
    /// [e_i, e_j] only involves e_k with k < min(i, j); always nilpotent.
    triangular,
};

/// Seeded random skew bracket with small integer constants and alpha = 0.
Fixture zero_alpha_random(std::size_t n, std::uint64_t seed, RandomShape shape = RandomShape::general);

/// Every named example (family for n = 5..12 included).
std::vector<Fixture> builtin_fixtures();

/*
 * Looks a fixture up by CLI name: family (needs n), c2, matrix, poly3, poly4,
 * counterexample, abelian (needs n), random (needs n, uses seed).
 */
Fixture fixture_by_name(const std::string& name, std::optional<std::size_t> n = std::nullopt,
                        std::uint64_t seed = 0);

std::vector<std::string> fixture_names();

} // namespace homlie
