#include "homlie/algebra.hpp"

namespace homlie {

namespace {

void require_ambient(const HomLieAlgebra& L, const Subspace& S, const char* where)
{
    if (S.ambient_dim() != L.dim())
        throw DimensionError(std::string(where) + ": subspace of F^" + std::to_string(S.ambient_dim()) +
                             " in an algebra of dimension " + std::to_string(L.dim()));
}

Vector alpha_of(const HomLieAlgebra& L, std::size_t k)
{
    return L.alpha().column(k);
}

Vector basis_bracket(const HomLieAlgebra& L, std::size_t i, std::size_t j)
{
    return L.structure(i, j);
}

Vector jacobi_residual(const HomLieAlgebra& L, const std::vector<Vector>& twisted, std::size_t i, std::size_t j,
                       std::size_t k)
{
    Vector r = bracket_vectors(L, twisted[i], basis_bracket(L, j, k));
    r = r + bracket_vectors(L, twisted[j], basis_bracket(L, k, i));
    return r + bracket_vectors(L, twisted[k], basis_bracket(L, i, j));
}

void record(AxiomReport& report, bool& flag, const char* axiom, std::vector<std::size_t> indices, Vector residual)
{
    flag = false;
    report.witnesses.push_back({axiom, std::move(indices), std::move(residual)});
}

} // namespace

std::vector<std::string> default_basis_names(std::size_t n, const std::string& prefix)
{
    std::vector<std::string> names;
    for (std::size_t k = 1; k <= n; ++k)
        names.push_back(prefix + std::to_string(k));
    return names;
}

HomLieAlgebra::HomLieAlgebra(Structure structure, Matrix alpha, std::vector<std::string> basis_names)
    : structure_(std::move(structure)), alpha_(std::move(alpha)), names_(std::move(basis_names))
{
    const std::size_t n = alpha_.rows();
    if (alpha_.cols() != n)
        throw DimensionError("alpha must be square");
    if (structure_.size() != n)
        throw DimensionError("structure constants: expected " + std::to_string(n) + " rows");
    for (const auto& row : structure_) {
        if (row.size() != n)
            throw DimensionError("structure constants: ragged tensor");
        for (const auto& v : row)
            if (v.size() != n)
                throw DimensionError("structure constants: bracket vector of wrong length");
    }
    if (names_.empty())
        names_ = default_basis_names(n);
    if (names_.size() != n)
        throw DimensionError("expected " + std::to_string(n) + " basis names");
}

HomLieAlgebra HomLieAlgebra::abelian(Matrix alpha, std::vector<std::string> basis_names)
{
    const std::size_t n = alpha.rows();
    Structure zero(n, std::vector<Vector>(n, zero_vector(n)));
    return HomLieAlgebra(std::move(zero), std::move(alpha), std::move(basis_names));
}

Vector bracket_vectors(const HomLieAlgebra& L, const Vector& u, const Vector& v)
{
    const std::size_t n = L.dim();
    if (u.size() != n || v.size() != n)
        throw DimensionError("bracket_vectors: vectors must have length " + std::to_string(n));
    Vector out = zero_vector(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j].is_zero())
                continue;
            axpy(out, u[i] * v[j], L.structure(i, j));
        }
    }
    return out;
}

AxiomReport check_axioms(const HomLieAlgebra& L)
{
    const std::size_t n = L.dim();
    AxiomReport report;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Vector r = L.structure(i, j) + L.structure(j, i);
            if (!is_zero(r))
                record(report, report.skew_ok, kSkew, {i, j}, std::move(r));
        }

    std::vector<Vector> twisted;
    std::vector<Vector> units;
    for (std::size_t k = 0; k < n; ++k) {
        twisted.push_back(alpha_of(L, k));
        units.push_back(unit_vector(n, k));
    }

    auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
        Vector hom = jacobi_residual(L, twisted, i, j, k);
        if (!is_zero(hom))
            record(report, report.hom_jacobi_ok, kHomJacobi, {i, j, k}, std::move(hom));
        Vector classical = jacobi_residual(L, units, i, j, k);
        if (!is_zero(classical))
            record(report, report.classical_jacobi_ok, kClassicalJacobi, {i, j, k}, std::move(classical));
    };
    if (report.skew_ok) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k)
                    check_triple(i, j, k);
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    check_triple(i, j, k);
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector r = L.alpha().apply(L.structure(i, j)) - bracket_vectors(L, twisted[i], twisted[j]);
            if (!is_zero(r))
                record(report, report.multiplicative_ok, kMultiplicative, {i, j}, std::move(r));
        }
    return report;
}

void require_multiplicative(const HomLieAlgebra& L, const std::string& operation)
{
    AxiomReport report = check_axioms(L);
    if (report.multiplicative_hom_lie())
        return;
    std::string failed;
    auto add = [&](bool ok, const char* name) {
        if (!ok)
            failed += (failed.empty() ? "" : ", ") + std::string(name);
    };
    add(report.skew_ok, kSkew);
    add(report.hom_jacobi_ok, kHomJacobi);
    add(report.multiplicative_ok, kMultiplicative);
    throw PreconditionError(operation + " requires a multiplicative Hom-Lie algebra; failed: " + failed);
}

Subspace bracket_subspaces(const HomLieAlgebra& L, const Subspace& H, const Subspace& K)
{
    require_ambient(L, H, "bracket_subspaces");
    require_ambient(L, K, "bracket_subspaces");
    std::vector<Vector> products;
    for (std::size_t a = 0; a < H.dim(); ++a)
        for (std::size_t b = 0; b < K.dim(); ++b)
            products.push_back(bracket_vectors(L, H.basis().row(a), K.basis().row(b)));
    return span(products, L.dim());
}

bool is_subalgebra(const HomLieAlgebra& L, const Subspace& H)
{
    require_ambient(L, H, "is_subalgebra");
    return is_subspace_of(apply_map(L.alpha(), H), H) && is_subspace_of(bracket_subspaces(L, H, H), H);
}

bool is_ideal(const HomLieAlgebra& L, const Subspace& H)
{
    return is_subalgebra(L, H) && is_subspace_of(bracket_subspaces(L, H, Subspace::full(L.dim())), H);
}

bool is_abelian(const HomLieAlgebra& L)
{
    for (const auto& row : L.structure())
        for (const auto& v : row)
            if (!is_zero(v))
                return false;
    return true;
}

} // namespace homlie
