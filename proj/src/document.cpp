#include "homlie/document.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace homlie {

DocumentError::DocumentError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column)
{
}

std::string to_string(FieldKind field)
{
    return field == FieldKind::rationals ? "Q" : "Q(i)";
}

namespace {

bool is_ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Cursor over one line of input; columns are reported 1-based.
class LineCursor {
public:
    LineCursor(std::string_view text, std::size_t line, std::size_t offset = 0)
        : text_(text), line_(line), pos_(offset)
    {
    }

    [[noreturn]] void fail(const std::string& message, std::optional<std::size_t> at = std::nullopt) const
    {
        throw DocumentError(message, line_, at.value_or(pos_) + 1);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool at_end()
    {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    std::size_t pos() const { return pos_; }

    void expect(char c)
    {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    std::string identifier()
    {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= text_.size() || !is_ident_start(text_[pos_]))
            fail("expected a basis name");
        while (pos_ < text_.size() && is_ident_char(text_[pos_]))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    // Maximal run of identifier/scalar characters, used for "coef*name" or "name".
    std::string word()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && (is_ident_char(text_[pos_]) || text_[pos_] == '/'))
            ++pos_;
        if (start == pos_)
            fail("expected a term");
        return std::string(text_.substr(start, pos_ - start));
    }

    // Scalar token: everything up to the next separator, parsed with the scalar grammar.
    Scalar scalar(std::string_view stops)
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
               stops.find(text_[pos_]) == std::string_view::npos)
            ++pos_;
        return scalar_at(text_.substr(start, pos_ - start), start);
    }

    Scalar scalar_at(std::string_view token, std::size_t start) const
    {
        if (token.empty())
            fail("expected a scalar", start);
        try {
            return parse_scalar(token);
        } catch (const ScalarParseError& e) {
            fail(e.what(), start + e.position());
        } catch (const DivisionByZero&) {
            fail("zero denominator", start);
        }
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_;
};

class DocumentParser {
public:
    explicit DocumentParser(std::string_view text) : text_(text) {}

    AlgebraDocument parse()
    {
        split_lines();
        for (std::size_t k = 0; k < lines_.size(); ++k)
            handle_line(k);
        return finish();
    }

private:
    enum class Section { none, brackets, alpha, alpha_matrix };

    struct Line {
        std::string_view text;
        std::size_t number;
    };

    struct PendingEntry {
        Line line;
        std::size_t offset;
    };

    void split_lines()
    {
        std::size_t start = 0, number = 1;
        while (start <= text_.size()) {
            std::size_t end = text_.find('\n', start);
            if (end == std::string_view::npos)
                end = text_.size();
            std::string_view line = text_.substr(start, end - start);
            if (!line.empty() && line.back() == '\r')
                line.remove_suffix(1);
            std::size_t hash = line.find('#');
            if (hash != std::string_view::npos)
                line = line.substr(0, hash);
            lines_.push_back({line, number++});
            if (end == text_.size())
                break;
            start = end + 1;
        }
    }

    static std::string_view trim(std::string_view s)
    {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    }

    static std::size_t leading(std::string_view s)
    {
        std::size_t k = 0;
        while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k])))
            ++k;
        return k;
    }

    void handle_line(std::size_t k)
    {
        const Line& line = lines_[k];
        std::string_view body = trim(line.text);
        if (body.empty())
            return;
        const std::size_t indent = leading(line.text);

        // "key:" headers start with a lowercase keyword; bracket/alpha/matrix entries never contain one.
        std::size_t colon = body.find(':');
        std::string_view key = colon == std::string_view::npos ? std::string_view{} : trim(body.substr(0, colon));
        static const char* keys[] = {"name", "field", "dim", "basis", "brackets", "alpha", "alpha-matrix"};
        bool is_header = false;
        for (const char* candidate : keys)
            if (key == candidate)
                is_header = true;
        if (!is_header) {
            if (section_ == Section::none)
                LineCursor(line.text, line.number, indent).fail("expected a 'key:' header");
            pending_[section_].push_back({line, indent});
            return;
        }

        std::string_view value = trim(body.substr(colon + 1));
        const std::size_t value_col = line.text.find(':', indent) + 1 + leading(body.substr(colon + 1));
        LineCursor cursor(line.text, line.number, indent);
        if (seen_.count(std::string(key)))
            cursor.fail("duplicate '" + std::string(key) + "' header");
        seen_[std::string(key)] = line.number;

        section_ = Section::none;
        if (key == "name") {
            name_ = std::string(value);
        } else if (key == "field") {
            if (value == "Q")
                field_ = FieldKind::rationals;
            else if (value == "Q(i)")
                field_ = FieldKind::gaussian_rationals;
            else
                LineCursor(line.text, line.number, value_col).fail("field must be Q or Q(i)");
        } else if (key == "dim") {
            if (value.empty() || value.find_first_not_of("0123456789") != std::string_view::npos)
                LineCursor(line.text, line.number, value_col).fail("dim must be a non-negative integer");
            dim_ = std::stoul(std::string(value));
            dim_line_ = line;
        } else if (key == "basis") {
            LineCursor names(line.text, line.number, value_col);
            while (!names.at_end()) {
                std::size_t at = names.pos();
                std::string name = names.identifier();
                if (name == "i")
                    names.fail("'i' is reserved for the imaginary unit", at);
                for (const auto& existing : basis_)
                    if (existing == name)
                        names.fail("duplicate basis name '" + name + "'", at);
                basis_.push_back(name);
            }
            basis_line_ = line;
        } else {
            if (!value.empty())
                LineCursor(line.text, line.number, value_col).fail("section header takes no value");
            section_ = key == "brackets" ? Section::brackets
                     : key == "alpha"    ? Section::alpha
                                         : Section::alpha_matrix;
            if (key != "brackets" && seen_.count("alpha") && seen_.count("alpha-matrix"))
                cursor.fail("give either 'alpha:' or 'alpha-matrix:', not both");
        }
    }

    std::size_t index_of(LineCursor& cursor, std::size_t at, const std::string& name) const
    {
        for (std::size_t k = 0; k < names_.size(); ++k)
            if (names_[k] == name)
                return k;
        cursor.fail("unknown basis name '" + name + "'", at);
    }

    Scalar checked(LineCursor& cursor, std::size_t at, Scalar s) const
    {
        if (field_ == FieldKind::rationals && !s.is_real())
            cursor.fail("imaginary scalar in a document declared over Q", at);
        return s;
    }

    Vector combination(LineCursor& cursor)
    {
        const std::size_t n = names_.size();
        Vector v = zero_vector(n);
        if (cursor.peek() == '0') {
            LineCursor save = cursor;
            if (cursor.word() == "0" && cursor.at_end())
                return v;
            cursor = save;
        }
        for (bool first = true;; first = false) {
            Scalar sign(1);
            if (cursor.accept('-'))
                sign = Scalar(-1);
            else if (!cursor.accept('+') && !first)
                cursor.fail("expected '+' or '-' between terms");
            if (cursor.peek() == '-' || cursor.peek() == '+')
                cursor.fail("doubled sign");

            Scalar coef(1);
            std::size_t at = cursor.pos();
            std::string name;
            if (cursor.accept('(')) {
                at = cursor.pos();
                coef = checked(cursor, at, cursor.scalar(")"));
                cursor.expect(')');
                cursor.expect('*');
                at = cursor.pos();
                name = cursor.identifier();
            } else {
                std::string w = cursor.word();
                if (cursor.accept('*')) {
                    coef = checked(cursor, at, cursor.scalar_at(w, at));
                    at = cursor.pos();
                    name = cursor.identifier();
                } else {
                    if (!is_ident_start(w[0]) || w.find('/') != std::string::npos)
                        cursor.fail("expected 'coefficient*name' or a basis name", at);
                    name = w;
                }
            }
            v[index_of(cursor, at, name)] += sign * coef;
            if (cursor.at_end())
                return v;
        }
    }

    void parse_bracket(const PendingEntry& e, HomLieAlgebra::Structure& c, std::vector<std::vector<bool>>& given)
    {
        LineCursor cursor(e.line.text, e.line.number, e.offset);
        const std::size_t start = cursor.pos();
        cursor.expect('[');
        std::size_t at_i = cursor.pos();
        std::size_t i = index_of(cursor, at_i, cursor.identifier());
        cursor.expect(',');
        std::size_t at_j = cursor.pos();
        std::size_t j = index_of(cursor, at_j, cursor.identifier());
        cursor.expect(']');
        cursor.expect('=');
        Vector v = combination(cursor);

        if (i == j) {
            if (!is_zero(v))
                cursor.fail("[" + names_[i] + ", " + names_[i] + "] must be 0 by skew-symmetry", start);
            return;
        }
        if (given[i][j])
            cursor.fail("bracket [" + names_[i] + ", " + names_[j] + "] given twice", start);
        if (given[j][i]) {
            if (!(c[j][i] == Scalar(-1) * v))
                cursor.fail("inconsistent skew pair: [" + names_[i] + ", " + names_[j] + "] is not -[" + names_[j] +
                                ", " + names_[i] + "]",
                            start);
        }
        given[i][j] = true;
        c[i][j] = v;
        if (!given[j][i])
            c[j][i] = Scalar(-1) * v;
    }

    AlgebraDocument finish()
    {
        if (!dim_)
            throw DocumentError("missing 'dim:' header", lines_.empty() ? 1 : lines_.back().number, 1);
        const std::size_t n = *dim_;
        if (basis_line_) {
            if (basis_.size() != n)
                throw DocumentError("basis lists " + std::to_string(basis_.size()) + " names but dim is " +
                                        std::to_string(n),
                                    basis_line_->number, 1);
            names_ = basis_;
        } else {
            names_ = default_basis_names(n);
        }
        if (!seen_.count("alpha") && !seen_.count("alpha-matrix"))
            throw DocumentError("missing 'alpha:' or 'alpha-matrix:' section", lines_.back().number, 1);

        HomLieAlgebra::Structure c(n, std::vector<Vector>(n, zero_vector(n)));
        std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
        for (const auto& e : pending_[Section::brackets])
            parse_bracket(e, c, given);

        Matrix alpha(n, n);
        if (seen_.count("alpha")) {
            std::vector<bool> done(n, false);
            for (const auto& e : pending_[Section::alpha]) {
                LineCursor cursor(e.line.text, e.line.number, e.offset);
                std::size_t start = cursor.pos();
                std::string head = cursor.identifier();
                if (head != "alpha")
                    cursor.fail("expected 'alpha(name) = ...'", start);
                cursor.expect('(');
                std::size_t at = cursor.pos();
                std::size_t k = index_of(cursor, at, cursor.identifier());
                cursor.expect(')');
                cursor.expect('=');
                if (done[k])
                    cursor.fail("alpha(" + names_[k] + ") given twice", start);
                done[k] = true;
                Vector image = combination(cursor);
                for (std::size_t r = 0; r < n; ++r)
                    alpha(r, k) = image[r];
            }
        } else {
            const auto& rows = pending_[Section::alpha_matrix];
            if (rows.size() != n)
                throw DocumentError("alpha-matrix needs " + std::to_string(n) + " rows, found " +
                                        std::to_string(rows.size()),
                                    rows.empty() ? seen_.at("alpha-matrix") : rows.back().line.number, 1);
            for (std::size_t r = 0; r < n; ++r) {
                LineCursor cursor(rows[r].line.text, rows[r].line.number, rows[r].offset);
                for (std::size_t col = 0; col < n; ++col) {
                    if (cursor.at_end())
                        cursor.fail("alpha-matrix row needs " + std::to_string(n) + " entries");
                    std::size_t at = cursor.pos();
                    alpha(r, col) = checked(cursor, at, cursor.scalar(""));
                }
                if (!cursor.at_end())
                    cursor.fail("alpha-matrix row has more than " + std::to_string(n) + " entries");
            }
        }

        return AlgebraDocument{name_, field_, HomLieAlgebra(std::move(c), std::move(alpha), names_)};
    }

    std::string_view text_;
    std::vector<Line> lines_;
    Section section_ = Section::none;
    std::map<Section, std::vector<PendingEntry>> pending_;
    std::map<std::string, std::size_t> seen_;
    std::string name_;
    FieldKind field_ = FieldKind::gaussian_rationals;
    std::optional<std::size_t> dim_;
    std::optional<Line> dim_line_;
    std::vector<std::string> basis_;
    std::optional<Line> basis_line_;
    std::vector<std::string> names_;
};

std::string format_term(const Scalar& c, const std::string& name)
{
    if (c.is_one())
        return name;
    if (c == Scalar(-1))
        return "-" + name;
    if (c.re().is_zero() || c.im().is_zero()) {
        bool negative = c.re().is_zero() ? c.im().sign() < 0 : c.re().sign() < 0;
        std::string magnitude = format_scalar(negative ? -c : c);
        return (negative ? "-" : "") + magnitude + "*" + name;
    }
    return "(" + format_scalar(c) + ")*" + name;
}

} // namespace

AlgebraDocument parse_document(std::string_view text)
{
    return DocumentParser(text).parse();
}

std::string format_combination(const Vector& v, const std::vector<std::string>& names)
{
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero())
            continue;
        std::string term = format_term(v[k], names[k]);
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

FieldKind field_of(const HomLieAlgebra& L)
{
    for (const auto& row : L.structure())
        for (const auto& v : row)
            for (const auto& s : v)
                if (!s.is_real())
                    return FieldKind::gaussian_rationals;
    for (std::size_t r = 0; r < L.dim(); ++r)
        for (std::size_t c = 0; c < L.dim(); ++c)
            if (!L.alpha()(r, c).is_real())
                return FieldKind::gaussian_rationals;
    return FieldKind::rationals;
}

std::string emit_document(const std::string& name, const HomLieAlgebra& L)
{
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (!is_zero(L.structure(i, j) + L.structure(j, i)))
                throw std::invalid_argument("emit_document: structure constants are not skew-symmetric");

    std::ostringstream out;
    out << "name: " << name << "\n";
    out << "field: " << to_string(field_of(L)) << "\n";
    out << "dim: " << n << "\n";
    out << "basis:";
    for (const auto& b : L.basis_names())
        out << " " << b;
    out << "\n";
    out << "brackets:\n";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!is_zero(L.structure(i, j)))
                out << "  [" << L.basis_names()[i] << ", " << L.basis_names()[j]
                    << "] = " << format_combination(L.structure(i, j), L.basis_names()) << "\n";
    out << "alpha:\n";
    for (std::size_t k = 0; k < n; ++k) {
        Vector image = L.alpha().column(k);
        if (!is_zero(image))
            out << "  alpha(" << L.basis_names()[k] << ") = " << format_combination(image, L.basis_names()) << "\n";
    }
    return out.str();
}

std::vector<Vector> parse_vector_list(std::string_view text, std::size_t length)
{
    std::vector<Vector> out;
    LineCursor probe(text, 1);
    if (probe.at_end())
        return out;
    std::size_t start = 0;
    while (true) {
        std::size_t end = text.find(';', start);
        LineCursor cursor(text.substr(0, end == std::string_view::npos ? text.size() : end), 1, start);
        Vector v;
        if (!cursor.at_end()) {
            while (true) {
                v.push_back(cursor.scalar(",;"));
                if (cursor.at_end())
                    break;
                cursor.expect(',');
            }
        }
        if (v.size() != length)
            throw DocumentError("vector has " + std::to_string(v.size()) + " entries, expected " +
                                    std::to_string(length),
                                1, start + 1);
        out.push_back(std::move(v));
        if (end == std::string_view::npos)
            break;
        start = end + 1;
    }
    return out;
}

Matrix parse_matrix_spec(std::string_view text, std::size_t rows, std::size_t cols)
{
    auto list = parse_vector_list(text, cols);
    if (list.size() != rows)
        throw DocumentError("matrix has " + std::to_string(list.size()) + " rows, expected " + std::to_string(rows), 1,
                            1);
    return Matrix::from_rows(list, cols);
}

} // namespace homlie
