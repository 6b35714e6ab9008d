#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homlie/constructions.hpp"
#include "support.hpp"

using namespace homlie;
using homlie::testing::Gen;

namespace {

Subspace unit_span(std::size_t n, std::initializer_list<std::size_t> idx)
{
    std::vector<Vector> gens;
    for (std::size_t k : idx)
        gens.push_back(unit_vector(n, k));
    return span(gens, n);
}

Matrix scaled_identity(std::size_t n, const Scalar& s)
{
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k)
        m(k, k) = s;
    return m;
}

} // namespace

TEST_CASE("quotient of the counterexample by span{e1}")
{
    HomLieAlgebra L = counterexample_2dim().algebra;
    QuotientResult q = quotient(L, unit_span(2, {0}));
    CHECK(q.quotient.dim() == 1);
    CHECK(is_abelian(q.quotient));
    CHECK(q.quotient.basis_names() == std::vector<std::string>{"e2"});
    CHECK(q.section == std::vector<Vector>{unit_vector(2, 1)});
    CHECK(q.projection.matrix == Matrix::from_rows({Vector{0, 1}}, 2));
    CHECK(check_morphism(q.projection).is_morphism());
}

TEST_CASE("quotient refuses non-ideals and invalid algebras")
{
    HomLieAlgebra L = counterexample_2dim().algebra;
    CHECK_THROWS_AS(quotient(L, unit_span(2, {1})), PreconditionError);
    try {
        quotient(c2_fixture().algebra, unit_span(2, {0}));
        FAIL("accepted an alpha-unstable subspace");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("alpha(I)") != std::string::npos);
    }
    HomLieAlgebra::Structure c(2, std::vector<Vector>(2, zero_vector(2)));
    c[0][1] = unit_vector(2, 0);
    CHECK_THROWS_AS(quotient(HomLieAlgebra(c, Matrix(2, 2)), Subspace::zero(2)), PreconditionError);
}

TEST_CASE("quotient by zero and by everything")
{
    HomLieAlgebra L = family_nil(5).algebra;
    QuotientResult same = quotient(L, Subspace::zero(5));
    CHECK(same.quotient == L);
    QuotientResult none = quotient(L, Subspace::full(5));
    CHECK(none.quotient.dim() == 0);
}

TEST_CASE("quotient brackets do not depend on coset representatives")
{
    Gen gen(41);
    for (const auto& fx : testing::property_corpus(50)) {
        const HomLieAlgebra& L = fx.algebra;
        CAPTURE(fx.name);
        for (const auto& I : testing::sample_ideals(L, gen, 2)) {
            QuotientResult q = quotient(L, I);
            const Matrix& pi = q.projection.matrix;
            CHECK(check_axioms(q.quotient).multiplicative_hom_lie());
            CHECK(check_morphism(q.projection).is_morphism());
            const std::size_t m = q.quotient.dim();
            auto perturb = [&](const Vector& v) {
                Vector out = v;
                for (const auto& b : I.basis_vectors())
                    axpy(out, gen.scalar(true), b);
                return out;
            };
            for (std::size_t a = 0; a < m; ++a) {
                CHECK(pi.apply(q.section[a]) == unit_vector(m, a));
                Vector sa = perturb(q.section[a]);
                CHECK(pi.apply(L.alpha().apply(sa)) == q.quotient.alpha().column(a));
                for (std::size_t b = 0; b < m; ++b) {
                    Vector sb = perturb(q.section[b]);
                    CHECK(pi.apply(bracket_vectors(L, sa, sb)) == q.quotient.structure(a, b));
                }
            }
        }
    }
}

TEST_CASE("direct sums")
{
    HomLieAlgebra c2 = c2_fixture().algebra;
    HomLieAlgebra s = direct_sum(c2, c2);
    CHECK(s.dim() == 4);
    CHECK(s.basis_names() == std::vector<std::string>{"e1_1", "e2_1", "e1_2", "e2_2"});
    CHECK(s.structure(0, 2) == zero_vector(4));
    CHECK(s.structure(2, 3) == Vector{0, 0, Scalar::i(), Scalar::i()});
    CHECK(solvable_class(s) == SeriesVerdict::klass(2));
    CHECK(nilpotent_class(s) == SeriesVerdict::not_terminating(1));

    HomLieAlgebra f = direct_sum(family_nil(5).algebra, family_nil(6).algebra);
    CHECK(nilpotent_class(f) == SeriesVerdict::klass(5));
    CHECK(solvable_class(f) == SeriesVerdict::klass(3));
    CHECK(direct_sum(abelian(0).algebra, c2).structure() == c2.structure());
}

TEST_CASE("direct sum classes are the maximum of the summands")
{
    auto corpus = testing::property_corpus(24);
    for (std::size_t a = 0; a < corpus.size(); a += 3)
        for (std::size_t b = 1; b < corpus.size(); b += 5) {
            const HomLieAlgebra &L1 = corpus[a].algebra, &L2 = corpus[b].algebra;
            HomLieAlgebra s = direct_sum(L1, L2);
            CHECK(check_axioms(s).multiplicative_hom_lie());
            for (SeriesKind kind : {SeriesKind::derived, SeriesKind::lower_central}) {
                SeriesVerdict v1 = compute_series(L1, kind).verdict, v2 = compute_series(L2, kind).verdict;
                SeriesVerdict vs = compute_series(s, kind).verdict;
                CHECK(vs.terminates() == (v1.terminates() && v2.terminates()));
                if (vs.terminates())
                    CHECK(vs.class_index() == std::max(v1.class_index(), v2.class_index()));
            }
        }
}

TEST_CASE("restriction")
{
    Restriction r = restrict(poly_fixture(4).algebra, unit_span(5, {0, 1, 2, 3}));
    CHECK(r.algebra == poly_fixture(3).algebra);
    CHECK(check_morphism(r.inclusion).is_morphism());

    Restriction f = restrict(family_nil(6).algebra, unit_span(6, {0, 1, 2, 3}));
    CHECK(solvable_class(f.algebra) == SeriesVerdict::klass(2));
    CHECK(nilpotent_class(f.algebra) == SeriesVerdict::klass(3));

    Restriction d = restrict(c2_fixture().algebra, span({Vector{1, 1}}, 2));
    CHECK(d.algebra.basis_names() == std::vector<std::string>{"h1"});
    CHECK(d.inclusion.matrix == Matrix::from_rows({Vector{1}, Vector{1}}, 1));

    CHECK_THROWS_AS(restrict(c2_fixture().algebra, unit_span(2, {0})), PreconditionError);
}

TEST_CASE("subalgebras and quotients inherit solvability and nilpotency")
{
    Gen gen(43);
    for (const auto& fx : testing::property_corpus(60)) {
        const HomLieAlgebra& L = fx.algebra;
        CAPTURE(fx.name);
        SeriesVerdict sL = solvable_class(L), nL = nilpotent_class(L);
        for (const auto& H : testing::sample_subalgebras(L, gen, 2)) {
            HomLieAlgebra sub = restrict(L, H).algebra;
            CHECK(testing::class_or_infinity(solvable_class(sub)) <= testing::class_or_infinity(sL));
            CHECK(testing::class_or_infinity(nilpotent_class(sub)) <= testing::class_or_infinity(nL));
        }
        for (const auto& I : testing::sample_ideals(L, gen, 2)) {
            HomLieAlgebra q = quotient(L, I).quotient;
            HomLieAlgebra sub = restrict(L, I).algebra;
            SeriesVerdict sq = solvable_class(q), ss = solvable_class(sub);
            CHECK(testing::class_or_infinity(sq) <= testing::class_or_infinity(sL));
            CHECK(testing::class_or_infinity(nilpotent_class(q)) <= testing::class_or_infinity(nL));
            // extension: I and L/I solvable force L solvable, with class at most the sum
            if (sq.terminates() && ss.terminates()) {
                REQUIRE(sL.terminates());
                CHECK(sL.class_index() <= sq.class_index() + ss.class_index());
            }
        }
    }
}

TEST_CASE("nilpotent ideal with nilpotent quotient need not give a nilpotent algebra")
{
    HomLieAlgebra L = counterexample_2dim().algebra;
    Subspace I = unit_span(2, {0});
    CHECK(is_ideal(L, I));
    CHECK(nilpotent_class(restrict(L, I).algebra) == SeriesVerdict::klass(1));
    CHECK(nilpotent_class(quotient(L, I).quotient) == SeriesVerdict::klass(1));
    CHECK(nilpotent_class(L) == SeriesVerdict::not_terminating(1));
}

TEST_CASE("morphism checks")
{
    HomLieAlgebra c2 = c2_fixture().algebra;
    MorphismVerdict id = check_morphism(LinearMap::identity(c2));
    CHECK(id.kind == MorphismVerdict::Kind::isomorphism);
    CHECK_FALSE(id.witness.has_value());

    MatrixFixture mf = matrix_fixture();
    CHECK(check_morphism(mf.iso).kind == MorphismVerdict::Kind::isomorphism);

    // doubling: f[x,y] = 2[x,y] but [fx,fy] = 4[x,y]
    MorphismVerdict twice = check_morphism(LinearMap(c2, c2, scaled_identity(2, Scalar(2))));
    CHECK(twice.kind == MorphismVerdict::Kind::not_morphism);
    REQUIRE(twice.witness.has_value());
    CHECK(twice.witness->identity == "bracket");
    CHECK(twice.witness->indices == std::vector<std::size_t>{0, 1});
    CHECK(twice.witness->residual == Vector{Scalar(-2) * Scalar::i(), Scalar(-2) * Scalar::i()});

    // zero map into an algebra is a morphism but not an isomorphism
    CHECK(check_morphism(LinearMap(c2, c2, Matrix(2, 2))).kind == MorphismVerdict::Kind::morphism);

    // identity from the abelian plane: alpha = id on the source, a signed swap on the target
    HomLieAlgebra ab = abelian(2).algebra;
    MorphismVerdict a = check_morphism(LinearMap(ab, c2, Matrix::identity(2)));
    CHECK_FALSE(a.is_morphism());

    CHECK_THROWS_AS(LinearMap(c2, c2, Matrix(3, 2)), DimensionError);
    CHECK(to_string(MorphismVerdict::Kind::not_morphism) == "not a morphism");
}

TEST_CASE("transport is an isomorphism and preserves classes")
{
    Gen gen(47);
    for (const auto& fx : testing::property_corpus(60)) {
        const HomLieAlgebra& L = fx.algebra;
        CAPTURE(fx.name);
        Matrix P = gen.invertible(L.dim());
        HomLieAlgebra T = transport(L, P);
        CHECK(check_axioms(T).multiplicative_hom_lie());
        CHECK(check_morphism(LinearMap(L, T, P)).kind == MorphismVerdict::Kind::isomorphism);
        CHECK(check_morphism(LinearMap(T, L, inverse(P))).kind == MorphismVerdict::Kind::isomorphism);
        CHECK(solvable_class(T) == solvable_class(L));
        CHECK(nilpotent_class(T) == nilpotent_class(L));
        SeriesReport dl = derived_series(L), dt = derived_series(T);
        CHECK(dl.dims == dt.dims);
        for (std::size_t i = 0; i < dl.chain.size(); ++i)
            CHECK(apply_map(P, dl.chain[i]) == dt.chain[i]);
    }
}

TEST_CASE("series commute with morphisms: f(L^(i)) = f(L)^(i)")
{
    Gen gen(53);
    CHECK(pushforward_series(LinearMap::identity(c2_fixture().algebra)).all_equal());
    CHECK(pushforward_series(matrix_fixture().iso).all_equal());
    for (const auto& fx : testing::property_corpus(50)) {
        const HomLieAlgebra& L = fx.algebra;
        CAPTURE(fx.name);
        for (const auto& I : testing::sample_ideals(L, gen, 1)) {
            PushforwardReport p = pushforward_series(quotient(L, I).projection);
            CHECK(p.all_equal());
        }
        for (const auto& H : testing::sample_subalgebras(L, gen, 1))
            CHECK(pushforward_series(restrict(L, H).inclusion).all_equal());
    }
}

TEST_CASE("coordinates_in")
{
    Subspace H = unit_span(3, {0, 2});
    CHECK(coordinates_in(H, unit_span(3, {2})) == span({Vector{0, 1}}, 2));
    CHECK(coordinates_in(H, H).is_full());
    CHECK_THROWS(coordinates_in(H, unit_span(3, {1})));
}
