#include "homlie/fixtures.hpp"

#include <random>
#include <stdexcept>

namespace homlie {

namespace {

using Structure = HomLieAlgebra::Structure;

Structure zero_structure(std::size_t n)
{
    return Structure(n, std::vector<Vector>(n, zero_vector(n)));
}

void set_bracket(Structure& c, std::size_t i, std::size_t j, const Vector& v)
{
    c[i][j] = v;
    c[j][i] = Scalar(-1) * v;
}

// Dense univariate polynomial, coefficient k is the x^k term.
using Poly = std::vector<Scalar>;

Poly monomial(std::size_t k)
{
    Poly p(k + 1);
    p[k] = Scalar(1);
    return p;
}

Poly derivative(const Poly& p)
{
    Poly d;
    for (std::size_t k = 1; k < p.size(); ++k)
        d.push_back(Scalar(static_cast<long>(k)) * p[k]);
    return d;
}

Scalar at_zero(const Poly& p)
{
    return p.empty() ? Scalar(0) : p[0];
}

Poly times(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

Poly minus(Poly a, const Poly& b)
{
    if (a.size() < b.size())
        a.resize(b.size());
    for (std::size_t k = 0; k < b.size(); ++k)
        a[k] -= b[k];
    return a;
}

Poly poly_bracket(const Poly& p, const Poly& q)
{
    Poly dp = derivative(p), dq = derivative(q);
    Poly ddp = derivative(dp), ddq = derivative(dq);
    Poly r = minus(times(ddp, dq), times(ddq, dp));
    Scalar constant = at_zero(ddq) * at_zero(dp) - at_zero(ddp) * at_zero(dq);
    if (r.empty())
        r.resize(1);
    r[0] += constant;
    return r;
}

// 2x2 member of the matrix example, A(x, y) = [[i(x+y)/2, x], [y, -i(x+y)/2]].
Matrix matrix_element(const Scalar& x, const Scalar& y)
{
    Scalar diag = Scalar::i() * (x + y) * Scalar::fraction(1, 2);
    Matrix A(2, 2);
    A(0, 0) = diag;
    A(0, 1) = x;
    A(1, 0) = y;
    A(1, 1) = -diag;
    return A;
}

Vector matrix_coordinates(const Matrix& A)
{
    if (!(A == matrix_element(A(0, 1), A(1, 0))))
        throw std::logic_error("matrix fixture: result leaves the matrix family");
    return {A(0, 1), A(1, 0)};
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound)
{
    return rng() % bound;
}

std::optional<SeriesVerdict> klass(std::size_t k)
{
    return SeriesVerdict::klass(k);
}

std::optional<SeriesVerdict> stalls(std::size_t at)
{
    return SeriesVerdict::not_terminating(at);
}

} // namespace

Fixture family_nil(std::size_t n)
{
    if (n < 5)
        throw PreconditionError("family_nil requires n >= 5, got " + std::to_string(n));
    Structure c = zero_structure(n);
    // 1-based: [e_i, e_j] = e_{i-1} for 1 < i < j.
    for (std::size_t i = 2; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            set_bracket(c, i - 1, j - 1, unit_vector(n, i - 2));

    ExpectedVerdicts expected;
    expected.classical_jacobi = false;
    expected.solvable = klass((n + 1) / 2);
    expected.nilpotent = klass(n - 1);
    expected.provenance = "solvable class n/2 (n even), (n+1)/2 (n odd); lower central dims n, n-2, n-3, ..., 1, 0 "
                          "give nilpotent class n-1";
    return {"family" + std::to_string(n), HomLieAlgebra(std::move(c), Matrix(n, n)), expected};
}

Fixture c2_fixture()
{
    Structure c = zero_structure(2);
    set_bracket(c, 0, 1, {Scalar::i(), Scalar::i()});
    Matrix alpha(2, 2);
    alpha(0, 1) = Scalar(-1);
    alpha(1, 0) = Scalar(-1);

    ExpectedVerdicts expected;
    expected.classical_jacobi = true;
    expected.solvable = klass(2);
    expected.nilpotent = stalls(1);
    expected.provenance = "derived dims 2,1,0; lower central stays at span{(1,1)}";
    return {"c2", HomLieAlgebra(std::move(c), std::move(alpha)), expected};
}

MatrixFixture matrix_fixture()
{
    const Matrix basis[2] = {matrix_element(Scalar(1), Scalar(0)), matrix_element(Scalar(0), Scalar(1))};
    auto bracket = [](const Matrix& A, const Matrix& B) {
        Matrix At = A.transpose(), Bt = B.transpose();
        Matrix left = At * Bt, right = Bt * At;
        Matrix out(2, 2);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t k = 0; k < 2; ++k)
                out(r, k) = left(r, k) - right(r, k);
        return out;
    };

    Structure c = zero_structure(2);
    Matrix alpha(2, 2);
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b)
            c[a][b] = matrix_coordinates(bracket(basis[a], basis[b]));
        Matrix t = basis[a].transpose();
        Matrix neg(2, 2);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t k = 0; k < 2; ++k)
                neg(r, k) = -t(r, k);
        Vector image = matrix_coordinates(neg);
        alpha(0, a) = image[0];
        alpha(1, a) = image[1];
    }

    ExpectedVerdicts expected;
    expected.classical_jacobi = true;
    expected.solvable = klass(2);
    expected.nilpotent = stalls(1);
    expected.provenance = "isomorphic to c2 via A(x,y) -> (x,y)";
    HomLieAlgebra L(std::move(c), std::move(alpha), {"B1", "B2"});
    LinearMap iso(L, c2_fixture().algebra, Matrix::identity(2));
    return {{"matrix", std::move(L), expected}, std::move(iso)};
}

Fixture poly_fixture(std::size_t degree_bound)
{
    if (degree_bound != 3 && degree_bound != 4)
        throw PreconditionError("poly_fixture supports degree bounds 3 and 4, got " + std::to_string(degree_bound));
    const std::size_t n = degree_bound + 1;
    Structure c = zero_structure(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Poly r = poly_bracket(monomial(a), monomial(b));
            for (std::size_t k = n; k < r.size(); ++k)
                if (!r[k].is_zero())
                    throw std::logic_error("poly_fixture: [x^" + std::to_string(a) + ", x^" + std::to_string(b) +
                                           "] leaves degree " + std::to_string(degree_bound));
            r.resize(n);
            c[a][b] = r;
        }
    // p -> p(0): 1 -> 1, x^k -> 0.
    Matrix alpha(n, n);
    alpha(0, 0) = Scalar(1);

    ExpectedVerdicts expected;
    if (degree_bound == 3) {
        expected.classical_jacobi = true;
        expected.solvable = klass(2);
        expected.nilpotent = stalls(1);
        expected.provenance = "H^(1) = span{x^2, x}, H^(2) = 0; H^2 = H^1";
    } else {
        expected.classical_jacobi = false;
        expected.solvable = stalls(1);
        expected.nilpotent = stalls(1);
        expected.provenance = "H^(1) = span{x^4, x^3, x^2, x} = H^(2); Jacobi fails by 96x^3 on (x^2, x^3, x^4)";
    }
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k)
        names.push_back("x" + std::to_string(k));
    return {"poly" + std::to_string(degree_bound), HomLieAlgebra(std::move(c), std::move(alpha), std::move(names)),
            expected};
}

Fixture counterexample_2dim()
{
    Structure c = zero_structure(2);
    set_bracket(c, 0, 1, unit_vector(2, 0));
    ExpectedVerdicts expected;
    expected.classical_jacobi = true;
    expected.solvable = klass(2);
    expected.nilpotent = stalls(1);
    expected.provenance = "nilpotent ideal span{e1} and nilpotent quotient, yet L^i = span{e1} for all i >= 1";
    return {"counterexample", HomLieAlgebra(std::move(c), Matrix(2, 2)), expected};
}

Fixture abelian(std::size_t n)
{
    ExpectedVerdicts expected;
    expected.classical_jacobi = true;
    expected.solvable = klass(n == 0 ? 0 : 1);
    expected.nilpotent = klass(n == 0 ? 0 : 1);
    expected.provenance = "zero bracket: class 1 (class 0 for the zero algebra)";
    return {"abelian" + std::to_string(n), HomLieAlgebra::abelian(Matrix::identity(n)), expected};
}

Fixture zero_alpha_random(std::size_t n, std::uint64_t seed, RandomShape shape)
{
    std::mt19937_64 rng(seed);
    // Density in {1/4, 2/4, 3/4} picked per algebra for variety across seeds.
    const std::uint64_t density = 1 + draw(rng, 3);
    Structure c = zero_structure(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector v = zero_vector(n);
            const std::size_t top = shape == RandomShape::triangular ? i : n;
            for (std::size_t k = 0; k < top; ++k)
                if (draw(rng, 4) < density)
                    v[k] = Scalar(static_cast<long>(draw(rng, 5)) - 2);
            set_bracket(c, i, j, v);
        }

    ExpectedVerdicts expected;
    expected.provenance = "alpha = 0 makes every skew bracket a multiplicative Hom-Lie algebra";
    std::string name = std::string(shape == RandomShape::triangular ? "random-tri" : "random") + std::to_string(n) +
                       "-" + std::to_string(seed);
    return {name, HomLieAlgebra(std::move(c), Matrix(n, n)), expected};
}

std::vector<Fixture> builtin_fixtures()
{
    std::vector<Fixture> out;
    for (std::size_t n = 5; n <= 12; ++n)
        out.push_back(family_nil(n));
    out.push_back(c2_fixture());
    out.push_back(matrix_fixture().fixture);
    out.push_back(poly_fixture(3));
    out.push_back(poly_fixture(4));
    out.push_back(counterexample_2dim());
    for (std::size_t n = 0; n <= 3; ++n)
        out.push_back(abelian(n));
    return out;
}

std::vector<std::string> fixture_names()
{
    return {"family", "c2", "matrix", "poly3", "poly4", "counterexample", "abelian", "random"};
}

Fixture fixture_by_name(const std::string& name, std::optional<std::size_t> n, std::uint64_t seed)
{
    auto need_n = [&]() {
        if (!n)
            throw PreconditionError("example '" + name + "' needs --n");
        return *n;
    };
    if (name == "family")
        return family_nil(need_n());
    if (name == "c2")
        return c2_fixture();
    if (name == "matrix")
        return matrix_fixture().fixture;
    if (name == "poly3")
        return poly_fixture(3);
    if (name == "poly4")
        return poly_fixture(4);
    if (name == "counterexample")
        return counterexample_2dim();
    if (name == "abelian")
        return abelian(need_n());
    if (name == "random")
        return zero_alpha_random(need_n(), seed);
    throw std::invalid_argument("unknown example '" + name + "'");
}

} // namespace homlie
