#pragma once

// Test-only helpers: random generators and oracles that do not go through
// the library's row reduction.

#include "homlie/constructions.hpp"
#include "homlie/fixtures.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace homlie::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }
    long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    /// Small-height Gaussian rational; about a third of draws are zero when sparse.
    Scalar scalar(bool sparse = false, bool complex = true)
    {
        if (sparse && below(3) == 0)
            return Scalar(0);
        Rational re(mpz_class(between(-4, 4)), mpz_class(between(1, 3)));
        Rational im = complex && below(2) ? Rational(mpz_class(between(-3, 3)), mpz_class(between(1, 2))) : Rational(0);
        return Scalar(re, im);
    }

    Scalar nonzero_scalar()
    {
        Scalar s;
        do
            s = scalar();
        while (s.is_zero());
        return s;
    }

    Vector vector(std::size_t n, bool sparse = true, bool complex = true)
    {
        Vector v(n);
        for (auto& x : v)
            x = scalar(sparse, complex);
        return v;
    }

    Matrix matrix(std::size_t rows, std::size_t cols, bool sparse = true)
    {
        Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = scalar(sparse);
        return m;
    }

    /// Invertible n x n matrix: unit lower times unit upper triangular times a permutation.
    Matrix invertible(std::size_t n)
    {
        Matrix lower = Matrix::identity(n), upper = Matrix::identity(n), perm(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                if (c < r)
                    lower(r, c) = scalar(true);
                if (c > r)
                    upper(r, c) = scalar(true);
            }
        for (std::size_t k = 0; k < n; ++k)
            upper(k, k) = nonzero_scalar();
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        for (std::size_t k = n; k > 1; --k)
            std::swap(p[k - 1], p[below(k)]);
        for (std::size_t k = 0; k < n; ++k)
            perm(k, p[k]) = Scalar(1);
        return lower * upper * perm;
    }

    std::vector<Vector> vectors(std::size_t count, std::size_t n)
    {
        std::vector<Vector> out;
        for (std::size_t k = 0; k < count; ++k)
            out.push_back(vector(n));
        return out;
    }

    Subspace subspace(std::size_t n, std::size_t max_gens)
    {
        return span(vectors(below(max_gens + 1), n), n);
    }

private:
    std::mt19937_64 rng_;
};

/// Leibniz determinant; exponential, fine for k <= 6.
inline Scalar leibniz_det(const std::vector<Vector>& m)
{
    const std::size_t k = m.size();
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Scalar total(0);
    do {
        std::size_t inversions = 0;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                if (perm[a] > perm[b])
                    ++inversions;
        Scalar term(inversions % 2 ? -1 : 1);
        for (std::size_t r = 0; r < k && !term.is_zero(); ++r)
            term *= m[r][perm[r]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Rank as the size of the largest nonvanishing minor.
inline std::size_t minor_rank(const std::vector<Vector>& rows, std::size_t cols)
{
    const std::size_t limit = std::min(rows.size(), cols);
    for (std::size_t k = limit; k > 0; --k) {
        std::vector<bool> pick_r(rows.size(), false), pick_c(cols, false);
        std::fill(pick_r.begin(), pick_r.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
            std::fill(pick_c.begin(), pick_c.end(), false);
            std::fill(pick_c.begin(), pick_c.begin() + static_cast<std::ptrdiff_t>(k), true);
            do {
                std::vector<Vector> minor;
                for (std::size_t r = 0; r < rows.size(); ++r) {
                    if (!pick_r[r])
                        continue;
                    Vector row;
                    for (std::size_t c = 0; c < cols; ++c)
                        if (pick_c[c])
                            row.push_back(rows[r][c]);
                    minor.push_back(std::move(row));
                }
                if (!leibniz_det(minor).is_zero())
                    return k;
            } while (std::prev_permutation(pick_c.begin(), pick_c.end()));
        } while (std::prev_permutation(pick_r.begin(), pick_r.end()));
    }
    return 0;
}

/// Smallest subalgebra containing the given vectors: close under alpha and the bracket.
inline Subspace generated_subalgebra(const HomLieAlgebra& L, const std::vector<Vector>& gens)
{
    Subspace H = span(gens, L.dim());
    while (true) {
        Subspace next = subspace_sum(subspace_sum(H, apply_map(L.alpha(), H)), bracket_subspaces(L, H, H));
        if (next == H)
            return H;
        H = next;
    }
}

/// Smallest ideal containing the given vectors.
inline Subspace generated_ideal(const HomLieAlgebra& L, const std::vector<Vector>& gens)
{
    const Subspace full = Subspace::full(L.dim());
    Subspace H = span(gens, L.dim());
    while (true) {
        Subspace next = subspace_sum(subspace_sum(H, apply_map(L.alpha(), H)), bracket_subspaces(L, H, full));
        if (next == H)
            return H;
        H = next;
    }
}

/// Zero, full, every series term that is an ideal, and a few generated ideals.
inline std::vector<Subspace> sample_ideals(const HomLieAlgebra& L, Gen& gen, std::size_t generated = 3)
{
    std::vector<Subspace> out{Subspace::zero(L.dim()), Subspace::full(L.dim())};
    auto add = [&](const Subspace& s) {
        if (std::find(out.begin(), out.end(), s) == out.end() && is_ideal(L, s))
            out.push_back(s);
    };
    for (const auto& s : derived_series(L).chain)
        add(s);
    for (const auto& s : lower_central_series(L).chain)
        add(s);
    for (std::size_t k = 0; k < generated && L.dim() > 0; ++k)
        add(generated_ideal(L, {gen.vector(L.dim())}));
    return out;
}

inline std::vector<Subspace> sample_subalgebras(const HomLieAlgebra& L, Gen& gen, std::size_t generated = 3)
{
    std::vector<Subspace> out = sample_ideals(L, gen, 1);
    for (std::size_t k = 0; k < generated && L.dim() > 0; ++k) {
        Subspace H = generated_subalgebra(L, {gen.vector(L.dim())});
        if (std::find(out.begin(), out.end(), H) == out.end())
            out.push_back(H);
    }
    return out;
}

/// Built-in examples plus `count` seeded zero-alpha random algebras of dim <= 6, half of them triangular.
inline std::vector<Fixture> property_corpus(std::size_t count = 100)
{
    std::vector<Fixture> out = builtin_fixtures();
    for (std::size_t k = 0; k < count; ++k) {
        std::size_t n = 1 + k % 6;
        out.push_back(zero_alpha_random(n, 1000 + k, k % 2 ? RandomShape::triangular : RandomShape::general));
    }
    return out;
}

/// Class as an integer, or a sentinel larger than any class for non-terminating series.
inline std::size_t class_or_infinity(const SeriesVerdict& v)
{
    return v.terminates() ? v.class_index() : static_cast<std::size_t>(-1);
}

} // namespace homlie::testing
