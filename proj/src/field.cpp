#include "homlie/field.hpp"

#include <cctype>

namespace homlie {

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0)
        throw DivisionByZero();
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value))
{
    value_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.is_zero())
        throw DivisionByZero();
    return Rational(mpq_class(a.value_ / b.value_));
}

std::string Rational::to_string() const
{
    return value_.get_str();
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw DivisionByZero();
    Rational n = norm();
    return Scalar(re_ / n, -im_ / n);
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op)
{
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    }
    throw std::logic_error("unknown arithmetic op");
}

namespace {

class ScalarReader {
public:
    explicit ScalarReader(std::string_view text) : text_(text) {}

    Scalar read()
    {
        if (text_.empty())
            fail("empty scalar");
        bool negative = accept('-');
        if (peek() == 'i') {
            ++pos_;
            finish();
            return Scalar(Rational(0), negative ? Rational(-1) : Rational(1));
        }
        Rational first = ratio();
        if (negative)
            first = -first;
        if (at_end())
            return Scalar(first);
        if (peek() == 'i') {
            ++pos_;
            finish();
            return Scalar(Rational(0), first);
        }
        char sign = peek();
        if (sign != '+' && sign != '-')
            fail("expected '+', '-' or 'i'");
        ++pos_;
        Rational imag(1);
        if (peek() != 'i')
            imag = ratio();
        if (peek() != 'i')
            fail("expected 'i'");
        ++pos_;
        finish();
        return Scalar(first, sign == '-' ? -imag : imag);
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    bool at_end() const { return pos_ >= text_.size(); }
    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ScalarParseError(what + " at position " + std::to_string(pos_) + " in scalar '" +
                                   std::string(text_) + "'",
                               pos_);
    }

    void finish() const
    {
        if (!at_end())
            fail("unexpected trailing character");
    }

    mpz_class digits()
    {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    Rational ratio()
    {
        mpz_class num = digits();
        if (!accept('/'))
            return Rational(num, 1);
        std::size_t den_pos = pos_;
        mpz_class den = digits();
        if (den == 0) {
            pos_ = den_pos;
            fail("zero denominator");
        }
        return Rational(num, den);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string magnitude(const Rational& r)
{
    std::string s = r.to_string();
    return s[0] == '-' ? s.substr(1) : s;
}

} // namespace

Scalar parse_scalar(std::string_view text)
{
    return ScalarReader(text).read();
}

std::string format_scalar(const Scalar& s)
{
    const Rational& re = s.re();
    const Rational& im = s.im();
    if (im.is_zero())
        return re.to_string();

    std::string imag = (im == Rational(1) || im == Rational(-1)) ? "i" : magnitude(im) + "i";
    if (re.is_zero())
        return (im.sign() < 0 ? "-" : "") + imag;
    return re.to_string() + (im.sign() < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << format_scalar(s);
}

} // namespace homlie
