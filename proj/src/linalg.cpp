#include "homlie/linalg.hpp"

#include <utility>

namespace homlie {

namespace {

void require_length(const Vector& v, std::size_t n, const char* where)
{
    if (v.size() != n)
        throw DimensionError(std::string(where) + ": vector of length " + std::to_string(v.size()) +
                             ", expected " + std::to_string(n));
}

void require_same_ambient(const Subspace& a, const Subspace& b, const char* where)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionError(std::string(where) + ": ambient dimensions " + std::to_string(a.ambient_dim()) +
                             " and " + std::to_string(b.ambient_dim()) + " differ");
}

// In-place Gauss-Jordan on a row list; returns pivot columns. Zero rows are dropped.
std::vector<std::size_t> reduce_rows(std::vector<Vector>& rows, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
        std::size_t p = lead;
        while (p < rows.size() && rows[p][c].is_zero())
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[lead], rows[p]);
        Scalar inv = rows[lead][c].inverse();
        for (std::size_t k = c; k < cols; ++k)
            rows[lead][k] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][c].is_zero())
                continue;
            Scalar f = rows[r][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!rows[lead][k].is_zero())
                    rows[r][k] -= f * rows[lead][k];
        }
        pivots.push_back(c);
        ++lead;
    }
    rows.resize(lead);
    return pivots;
}

} // namespace

Vector zero_vector(std::size_t n)
{
    return Vector(n);
}

Vector unit_vector(std::size_t n, std::size_t k)
{
    Vector v(n);
    v.at(k) = Scalar(1);
    return v;
}

bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Vector operator+(const Vector& a, const Vector& b)
{
    require_length(b, a.size(), "vector add");
    Vector r(a);
    for (std::size_t k = 0; k < r.size(); ++k)
        r[k] += b[k];
    return r;
}

Vector operator-(const Vector& a, const Vector& b)
{
    require_length(b, a.size(), "vector sub");
    Vector r(a);
    for (std::size_t k = 0; k < r.size(); ++k)
        r[k] -= b[k];
    return r;
}

Vector operator*(const Scalar& s, const Vector& v)
{
    Vector r(v.size());
    if (s.is_zero())
        return r;
    for (std::size_t k = 0; k < v.size(); ++k)
        r[k] = s * v[k];
    return r;
}

void axpy(Vector& v, const Scalar& s, const Vector& w)
{
    require_length(w, v.size(), "axpy");
    if (s.is_zero())
        return;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!w[k].is_zero())
            v[k] += s * w[k];
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require_length(rows[r], cols, "matrix row");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k)
        m(k, k) = Scalar(1);
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

Vector Matrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

Vector Matrix::apply(const Vector& v) const
{
    require_length(v, cols_, "matrix apply");
    Vector out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero())
            continue;
        for (std::size_t r = 0; r < rows_; ++r)
            if (!(*this)(r, c).is_zero())
                out[r] += (*this)(r, c) * v[c];
    }
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionError("matrix product: inner dimensions differ");
    Matrix p(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(r, k).is_zero())
                continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                if (!b(k, c).is_zero())
                    p(r, c) += a(r, k) * b(k, c);
        }
    return p;
}

Matrix rref(const Matrix& m)
{
    std::vector<Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(m.row(r));
    reduce_rows(rows, m.cols());
    return Matrix::from_rows(rows, m.cols());
}

std::size_t rank(const Matrix& m)
{
    return rref(m).rows();
}

std::vector<Vector> kernel(const Matrix& m)
{
    Matrix reduced = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < reduced.rows(); ++r) {
        std::size_t c = 0;
        while (reduced(r, c).is_zero())
            ++c;
        pivots.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v = unit_vector(m.cols(), free);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw DimensionError("inverse: matrix is not square");
    const std::size_t n = m.rows();
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < n; ++r) {
        Vector row = m.row(r);
        row.resize(2 * n);
        row[n + r] = Scalar(1);
        rows.push_back(std::move(row));
    }
    auto pivots = reduce_rows(rows, 2 * n);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
        throw DimensionError("inverse: matrix is singular");
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = rows[r][n + c];
    return inv;
}

bool is_invertible(const Matrix& m)
{
    return m.rows() == m.cols() && rank(m) == m.rows();
}

Subspace Subspace::zero(std::size_t ambient_dim)
{
    return span({}, ambient_dim);
}

Subspace Subspace::full(std::size_t ambient_dim)
{
    std::vector<Vector> units;
    for (std::size_t k = 0; k < ambient_dim; ++k)
        units.push_back(unit_vector(ambient_dim, k));
    return span(units, ambient_dim);
}

std::vector<Vector> Subspace::basis_vectors() const
{
    std::vector<Vector> out;
    for (std::size_t r = 0; r < basis_.rows(); ++r)
        out.push_back(basis_.row(r));
    return out;
}

std::vector<std::size_t> Subspace::pivots() const
{
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        std::size_t c = out.empty() ? 0 : out.back() + 1;
        while (basis_(r, c).is_zero())
            ++c;
        out.push_back(c);
    }
    return out;
}

Vector Subspace::coordinates(const Vector& v) const
{
    require_length(v, ambient_dim_, "coordinates");
    if (!contains(*this, v))
        throw DimensionError("coordinates: vector is not in the subspace");
    Vector coords;
    for (std::size_t p : pivots())
        coords.push_back(v[p]);
    return coords;
}

Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim)
{
    std::vector<Vector> rows;
    for (const auto& v : vectors) {
        require_length(v, ambient_dim, "span");
        if (!is_zero(v))
            rows.push_back(v);
    }
    reduce_rows(rows, ambient_dim);
    Subspace s;
    s.ambient_dim_ = ambient_dim;
    s.basis_ = Matrix::from_rows(rows, ambient_dim);
    return s;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b)
{
    require_same_ambient(a, b, "subspace_sum");
    auto rows = a.basis_vectors();
    auto more = b.basis_vectors();
    rows.insert(rows.end(), more.begin(), more.end());
    return span(rows, a.ambient_dim());
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b)
{
    require_same_ambient(a, b, "subspace_intersect");
    // x in A∩B  <=>  x = sum s_k a_k = sum t_l b_l; solve [A^T | -B^T] (s,t) = 0.
    const std::size_t n = a.ambient_dim();
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    Matrix system(n, da + db);
    for (std::size_t k = 0; k < da; ++k)
        for (std::size_t r = 0; r < n; ++r)
            system(r, k) = a.basis()(k, r);
    for (std::size_t l = 0; l < db; ++l)
        for (std::size_t r = 0; r < n; ++r)
            system(r, da + l) = -b.basis()(l, r);
    std::vector<Vector> vectors;
    for (const auto& sol : kernel(system)) {
        Vector x = zero_vector(n);
        for (std::size_t k = 0; k < da; ++k)
            axpy(x, sol[k], a.basis().row(k));
        vectors.push_back(std::move(x));
    }
    return span(vectors, n);
}

Vector reduce_modulo(const Subspace& a, Vector v)
{
    require_length(v, a.ambient_dim(), "reduce_modulo");
    auto pivots = a.pivots();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        Scalar f = v[pivots[r]];
        if (!f.is_zero())
            axpy(v, -f, a.basis().row(r));
    }
    return v;
}

bool contains(const Subspace& a, const Vector& v)
{
    return is_zero(reduce_modulo(a, v));
}

bool is_subspace_of(const Subspace& a, const Subspace& b)
{
    require_same_ambient(a, b, "is_subspace_of");
    for (std::size_t r = 0; r < a.dim(); ++r)
        if (!contains(b, a.basis().row(r)))
            return false;
    return true;
}

std::vector<Vector> complement_basis(const Subspace& a)
{
    std::vector<bool> is_pivot(a.ambient_dim(), false);
    for (std::size_t p : a.pivots())
        is_pivot[p] = true;
    std::vector<Vector> out;
    for (std::size_t c = 0; c < a.ambient_dim(); ++c)
        if (!is_pivot[c])
            out.push_back(unit_vector(a.ambient_dim(), c));
    return out;
}

Subspace apply_map(const Matrix& m, const Subspace& a)
{
    if (m.cols() != a.ambient_dim())
        throw DimensionError("apply_map: matrix has " + std::to_string(m.cols()) + " columns, subspace lives in F^" +
                             std::to_string(a.ambient_dim()));
    std::vector<Vector> images;
    for (std::size_t r = 0; r < a.dim(); ++r)
        images.push_back(m.apply(a.basis().row(r)));
    return span(images, m.rows());
}

} // namespace homlie
