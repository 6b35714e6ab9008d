#include "homlie/constructions.hpp"

#include <algorithm>

namespace homlie {

LinearMap::LinearMap(HomLieAlgebra source_, HomLieAlgebra target_, Matrix matrix_)
    : source(std::move(source_)), target(std::move(target_)), matrix(std::move(matrix_))
{
    if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
        throw DimensionError("linear map: expected a " + std::to_string(target.dim()) + "x" +
                             std::to_string(source.dim()) + " matrix, got " + std::to_string(matrix.rows()) + "x" +
                             std::to_string(matrix.cols()));
}

LinearMap LinearMap::identity(const HomLieAlgebra& L)
{
    return LinearMap(L, L, Matrix::identity(L.dim()));
}

namespace {

// Coordinates of v in the complement basis after reducing modulo the ideal.
Vector quotient_coordinates(const Subspace& ideal, const std::vector<std::size_t>& free_columns, const Vector& v)
{
    Vector reduced = reduce_modulo(ideal, v);
    Vector out;
    out.reserve(free_columns.size());
    for (std::size_t c : free_columns)
        out.push_back(reduced[c]);
    return out;
}

} // namespace

QuotientResult quotient(const HomLieAlgebra& L, const Subspace& ideal)
{
    if (ideal.ambient_dim() != L.dim())
        throw DimensionError("quotient: ideal does not live in the algebra");
    require_multiplicative(L, "quotient");
    if (!is_subspace_of(apply_map(L.alpha(), ideal), ideal))
        throw PreconditionError("quotient: alpha(I) is not contained in I");
    if (!is_subspace_of(bracket_subspaces(L, ideal, ideal), ideal))
        throw PreconditionError("quotient: [I, I] is not contained in I");
    if (!is_subspace_of(bracket_subspaces(L, ideal, Subspace::full(L.dim())), ideal))
        throw PreconditionError("quotient: [I, L] is not contained in I");

    std::vector<Vector> section = complement_basis(ideal);
    std::vector<std::size_t> free_columns;
    std::vector<std::string> names;
    for (const auto& rep : section) {
        auto c = static_cast<std::size_t>(std::find_if(rep.begin(), rep.end(), [](const Scalar& s) {
                                              return !s.is_zero();
                                          }) - rep.begin());
        free_columns.push_back(c);
        names.push_back(L.basis_names()[c]);
    }

    const std::size_t m = section.size();
    HomLieAlgebra::Structure structure(m, std::vector<Vector>(m));
    Matrix alpha(m, m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b)
            structure[a][b] = quotient_coordinates(ideal, free_columns, L.structure(free_columns[a], free_columns[b]));
        Vector image = quotient_coordinates(ideal, free_columns, L.alpha().column(free_columns[a]));
        for (std::size_t r = 0; r < m; ++r)
            alpha(r, a) = image[r];
    }

    Matrix projection(m, L.dim());
    for (std::size_t j = 0; j < L.dim(); ++j) {
        Vector image = quotient_coordinates(ideal, free_columns, unit_vector(L.dim(), j));
        for (std::size_t r = 0; r < m; ++r)
            projection(r, j) = image[r];
    }

    HomLieAlgebra q(std::move(structure), std::move(alpha), std::move(names));
    LinearMap pi(L, q, std::move(projection));
    return QuotientResult{std::move(q), std::move(pi), std::move(section)};
}

HomLieAlgebra direct_sum(const HomLieAlgebra& L1, const HomLieAlgebra& L2)
{
    const std::size_t n1 = L1.dim();
    const std::size_t n = n1 + L2.dim();
    HomLieAlgebra::Structure structure(n, std::vector<Vector>(n, zero_vector(n)));
    Matrix alpha(n, n);
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n1; ++j)
            std::copy(L1.structure(i, j).begin(), L1.structure(i, j).end(), structure[i][j].begin());
        for (std::size_t r = 0; r < n1; ++r)
            alpha(r, i) = L1.alpha()(r, i);
    }
    for (std::size_t i = 0; i < L2.dim(); ++i) {
        for (std::size_t j = 0; j < L2.dim(); ++j)
            std::copy(L2.structure(i, j).begin(), L2.structure(i, j).end(),
                      structure[n1 + i][n1 + j].begin() + static_cast<std::ptrdiff_t>(n1));
        for (std::size_t r = 0; r < L2.dim(); ++r)
            alpha(n1 + r, n1 + i) = L2.alpha()(r, i);
    }
    std::vector<std::string> names;
    for (const auto& name : L1.basis_names())
        names.push_back(name + "_1");
    for (const auto& name : L2.basis_names())
        names.push_back(name + "_2");
    return HomLieAlgebra(std::move(structure), std::move(alpha), std::move(names));
}

Subspace coordinates_in(const Subspace& H, const Subspace& S)
{
    std::vector<Vector> coords;
    for (const auto& v : S.basis_vectors())
        coords.push_back(H.coordinates(v));
    return span(coords, H.dim());
}

Restriction restrict(const HomLieAlgebra& L, const Subspace& H)
{
    if (H.ambient_dim() != L.dim())
        throw DimensionError("restrict: subspace does not live in the algebra");
    if (!is_subalgebra(L, H))
        throw PreconditionError("restrict: subspace is not a Hom-Lie subalgebra");

    const std::size_t m = H.dim();
    const auto basis = H.basis_vectors();
    const auto pivots = H.pivots();
    HomLieAlgebra::Structure structure(m, std::vector<Vector>(m));
    Matrix alpha(m, m);
    Matrix inclusion(L.dim(), m);
    std::vector<std::string> names;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b)
            structure[a][b] = H.coordinates(bracket_vectors(L, basis[a], basis[b]));
        Vector image = H.coordinates(L.alpha().apply(basis[a]));
        for (std::size_t r = 0; r < m; ++r)
            alpha(r, a) = image[r];
        for (std::size_t r = 0; r < L.dim(); ++r)
            inclusion(r, a) = basis[a][r];
        bool is_unit = basis[a] == unit_vector(L.dim(), pivots[a]);
        names.push_back(is_unit ? L.basis_names()[pivots[a]] : "h" + std::to_string(a + 1));
    }
    HomLieAlgebra sub(std::move(structure), std::move(alpha), std::move(names));
    LinearMap incl(sub, L, std::move(inclusion));
    return Restriction{std::move(sub), std::move(incl)};
}

HomLieAlgebra transport(const HomLieAlgebra& L, const Matrix& P)
{
    const std::size_t n = L.dim();
    if (P.rows() != n || P.cols() != n)
        throw DimensionError("transport: change of basis must be square of the algebra's dimension");
    const Matrix Pinv = inverse(P);
    std::vector<Vector> preimages;
    for (std::size_t k = 0; k < n; ++k)
        preimages.push_back(Pinv.column(k));
    HomLieAlgebra::Structure structure(n, std::vector<Vector>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            structure[i][j] = P.apply(bracket_vectors(L, preimages[i], preimages[j]));
    return HomLieAlgebra(std::move(structure), P * L.alpha() * Pinv, L.basis_names());
}

std::string to_string(MorphismVerdict::Kind kind)
{
    switch (kind) {
    case MorphismVerdict::Kind::morphism: return "morphism";
    case MorphismVerdict::Kind::isomorphism: return "isomorphism";
    case MorphismVerdict::Kind::not_morphism: return "not a morphism";
    }
    return "?";
}

MorphismVerdict check_morphism(const LinearMap& f)
{
    const HomLieAlgebra& S = f.source;
    const HomLieAlgebra& T = f.target;
    std::vector<Vector> images;
    for (std::size_t k = 0; k < S.dim(); ++k)
        images.push_back(f.matrix.column(k));

    for (std::size_t i = 0; i < S.dim(); ++i)
        for (std::size_t j = 0; j < S.dim(); ++j) {
            Vector r = f.matrix.apply(S.structure(i, j)) - bracket_vectors(T, images[i], images[j]);
            if (!is_zero(r))
                return {MorphismVerdict::Kind::not_morphism, MorphismWitness{"bracket", {i, j}, std::move(r)}};
        }
    for (std::size_t i = 0; i < S.dim(); ++i) {
        Vector r = f.matrix.apply(S.alpha().column(i)) - T.alpha().apply(images[i]);
        if (!is_zero(r))
            return {MorphismVerdict::Kind::not_morphism, MorphismWitness{"alpha", {i}, std::move(r)}};
    }
    if (is_invertible(f.matrix))
        return {MorphismVerdict::Kind::isomorphism, std::nullopt};
    return {MorphismVerdict::Kind::morphism, std::nullopt};
}

bool SeriesComparison::all_equal() const
{
    return std::all_of(equal.begin(), equal.end(), [](bool b) { return b; });
}

namespace {

SeriesComparison compare(const LinearMap& f, const SeriesReport& source_series, const SeriesReport& image_series,
                         const Matrix& inclusion)
{
    SeriesComparison out{source_series.kind, {}, {}, {}};
    const std::size_t length = std::max(source_series.chain.size(), image_series.chain.size());
    for (std::size_t i = 0; i < length; ++i) {
        Subspace lhs = apply_map(f.matrix, source_series.term(i));
        Subspace rhs = apply_map(inclusion, image_series.term(i));
        out.equal.push_back(lhs == rhs);
        out.image_of_terms.push_back(std::move(lhs));
        out.terms_of_image.push_back(std::move(rhs));
    }
    return out;
}

} // namespace

PushforwardReport pushforward_series(const LinearMap& f)
{
    if (!check_morphism(f).is_morphism())
        throw PreconditionError("pushforward_series: map is not a morphism of Hom-Lie algebras");
    Subspace image = apply_map(f.matrix, Subspace::full(f.source.dim()));
    Restriction r = restrict(f.target, image);
    return PushforwardReport{
        compare(f, derived_series(f.source), derived_series(r.algebra), r.inclusion.matrix),
        compare(f, lower_central_series(f.source), lower_central_series(r.algebra), r.inclusion.matrix),
    };
}

} // namespace homlie
