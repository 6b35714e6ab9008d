#pragma once

#include "homlie/algebra.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace homlie {

/// Load error in an algebra document or command-line SPEC; line and column are 1-based.
class DocumentError : public std::runtime_error {
public:
    DocumentError(const std::string& message, std::size_t line, std::size_t column);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

enum class FieldKind { rationals, gaussian_rationals };

std::string to_string(FieldKind field);

struct AlgebraDocument {
    std::string name;
    FieldKind field = FieldKind::gaussian_rationals;
    HomLieAlgebra algebra;
};

/*
 * Algebra documents (full grammar in docs/document-format.md):
 *
 *   name: c2
 *   field: Q(i)
 *   dim: 2
 *   basis: e1 e2
 *   brackets:
 *     [e1, e2] = i*e1 + i*e2
 *   alpha:
 *     alpha(e1) = -e2
 *     alpha(e2) = -e1
 *
 * Unlisted brackets are zero and [e_j, e_i] is filled in as -[e_i, e_j].
 * `alpha-matrix:` followed by dim rows of scalars may replace `alpha:`;
 * column j is alpha(e_j).
 */
AlgebraDocument parse_document(std::string_view text);

/// Canonical text: every header, nonzero brackets for i < j, nonzero alpha images.
std::string emit_document(const std::string& name, const HomLieAlgebra& L);

/// Smallest field among Q, Q(i) holding every structure constant and alpha entry.
FieldKind field_of(const HomLieAlgebra& L);

/// "1,0,0;0,1,1": vectors separated by ';', scalars by ','. Empty text is the empty list.
std::vector<Vector> parse_vector_list(std::string_view text, std::size_t length);
Matrix parse_matrix_spec(std::string_view text, std::size_t rows, std::size_t cols);

/// Linear combination of named basis elements, e.g. "-3/4*e1 + (1+i)*e2".
std::string format_combination(const Vector& v, const std::vector<std::string>& names);

} // namespace homlie
