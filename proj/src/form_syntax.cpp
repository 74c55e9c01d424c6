#include "qprm/form_syntax.hpp"

#include "qprm/error.hpp"

#include <cctype>
#include <sstream>

namespace qprm {

namespace {

enum class Tok { Int, Var, Z, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind = Tok::End;
    std::size_t pos = 0;
    long long value = 0;  // Int literal, or variable index
    std::string text;
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    Token next() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        Token t;
        t.pos = i_;
        if (i_ >= s_.size()) return t;
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Tok::Int;
            t.text = digits();
            t.value = to_int(t);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
            t.text = std::string(s_.substr(i_, j - i_));
            i_ = j;
            if (t.text == "z") {
                t.kind = Tok::Z;
                return t;
            }
            if (t.text.size() >= 2 && t.text[0] == 'X' &&
                t.text.find_first_not_of("0123456789", 1) == std::string::npos) {
                t.kind = Tok::Var;
                if (t.text.size() > 6) throw ParseError(ErrorKind::UnknownVariable, t.pos, "unknown variable " + t.text);
                t.value = std::stoll(t.text.substr(1));
                return t;
            }
            throw ParseError(ErrorKind::UnknownVariable, t.pos, "unknown variable " + t.text);
        }
        ++i_;
        t.text = std::string(1, c);
        switch (c) {
            case '+': t.kind = Tok::Plus; break;
            case '-': t.kind = Tok::Minus; break;
            case '*': t.kind = Tok::Star; break;
            case '^': t.kind = Tok::Caret; break;
            case '(': t.kind = Tok::LParen; break;
            case ')': t.kind = Tok::RParen; break;
            default: throw ParseError(ErrorKind::SyntaxError, t.pos, std::string("unexpected character '") + c + "'");
        }
        return t;
    }

private:
    std::string digits() {
        const std::size_t j0 = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        return std::string(s_.substr(j0, i_ - j0));
    }
    static long long to_int(const Token& t) {
        if (t.text.size() > 12) throw ParseError(ErrorKind::SyntaxError, t.pos, "integer literal too long");
        return std::stoll(t.text);
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

class Parser {
public:
    Parser(std::string_view text, const FieldRef& field, int N)
        : lex_(text), field_(field), f_(*field), form_(field, N), n_(N) {
        tok_ = lex_.next();
    }

    QuadraticForm parse() {
        bool negate = false;
        if (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
            negate = tok_.kind == Tok::Minus;
            advance();
        }
        term(negate);
        while (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
            negate = tok_.kind == Tok::Minus;
            advance();
            term(negate);
        }
        if (tok_.kind != Tok::End) fail("expected '+', '-' or end of input");
        return form_;
    }

private:
    void advance() { tok_ = lex_.next(); }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(ErrorKind::SyntaxError, tok_.pos, what + ", found " + describe(tok_));
    }

    static std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : "'" + t.text + "'"; }

    long long exponent() {
        if (tok_.kind != Tok::Int) fail("expected an integer exponent");
        const long long k = tok_.value;
        advance();
        return k;
    }

    Elem z_power() {
        const std::size_t pos = tok_.pos;
        if (f_.is_prime_field()) {
            throw ParseError(ErrorKind::FieldLiteralInvalid, pos, "z is not defined over a prime field");
        }
        advance();
        long long k = 1;
        if (tok_.kind == Tok::Caret) {
            advance();
            k = exponent();
        }
        return f_.pow(f_.generator(), static_cast<std::uint64_t>(k));
    }

    Elem integer() {
        const Elem x = f_.from_int(tok_.value);
        advance();
        return x;
    }

    Elem mono() {
        if (tok_.kind == Tok::Z) return z_power();
        if (tok_.kind != Tok::Int) fail("expected a field literal");
        const Elem c = integer();
        if (tok_.kind == Tok::Star) {
            advance();
            if (tok_.kind != Tok::Z) fail("expected z");
            return f_.mul(c, z_power());
        }
        return c;
    }

    Elem poly() {
        const std::size_t open = tok_.pos;
        advance();
        Elem acc = Field::zero();
        bool negate = false;
        if (tok_.kind == Tok::Minus) {
            negate = true;
            advance();
        }
        for (;;) {
            const Elem m = mono();
            acc = negate ? f_.sub(acc, m) : f_.add(acc, m);
            if (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
                negate = tok_.kind == Tok::Minus;
                advance();
                continue;
            }
            break;
        }
        if (tok_.kind != Tok::RParen) {
            throw ParseError(ErrorKind::SyntaxError, tok_.pos,
                             "unclosed '(' opened at " + std::to_string(open) + ", found " + describe(tok_));
        }
        advance();
        return acc;
    }

    int variable() {
        const Token t = tok_;
        if (t.kind != Tok::Var) fail("expected a variable");
        if (t.value > n_) throw ParseError(ErrorKind::UnknownVariable, t.pos, "unknown variable " + t.text);
        advance();
        return static_cast<int>(t.value);
    }

    void term(bool negate) {
        const std::size_t start = tok_.pos;
        Elem c = Field::one();
        bool have_coef = false;
        if (tok_.kind == Tok::Int) {
            c = integer();
            have_coef = true;
        } else if (tok_.kind == Tok::Z) {
            c = z_power();
            have_coef = true;
        } else if (tok_.kind == Tok::LParen) {
            c = poly();
            have_coef = true;
        }
        if (have_coef && tok_.kind == Tok::Star) {
            advance();
            if (tok_.kind != Tok::Var) fail("expected a variable after '*'");
        }
        if (negate) c = f_.neg(c);
        if (tok_.kind != Tok::Var) {
            if (!have_coef) fail("expected a term");
            if (!c.is_zero()) throw ParseError(ErrorKind::NonHomogeneous, start, "constant term has degree 0");
            return;
        }
        const int i = variable();
        int j = -1;
        if (tok_.kind == Tok::Caret) {
            advance();
            const std::size_t at = tok_.pos;
            const long long k = exponent();
            if (k != 2) {
                throw ParseError(ErrorKind::NonHomogeneous, at, "term of degree " + std::to_string(k));
            }
            j = i;
        } else if (tok_.kind == Tok::Star) {
            advance();
            j = variable();
        } else {
            throw ParseError(ErrorKind::NonHomogeneous, start, "term of degree 1");
        }
        if (tok_.kind == Tok::Star || tok_.kind == Tok::Caret) {
            throw ParseError(ErrorKind::NonHomogeneous, tok_.pos, "term of degree above 2");
        }
        form_.set(i, j, f_.add(form_.coeff(i, j), c));
    }

    Lexer lex_;
    FieldRef field_;
    const Field& f_;
    QuadraticForm form_;
    int n_;
    Token tok_;
};

}  // namespace

QuadraticForm parse_form(std::string_view text, const FieldRef& field, int N) {
    if (N < 0) throw Error(ErrorKind::OutOfRange, "N must be nonnegative");
    return Parser(text, field, N).parse();
}

std::string render_form(const QuadraticForm& F) {
    const Field& f = F.field();
    std::ostringstream out;
    bool first = true;
    for (const auto& [i, j] : QuadraticForm::monomials(F.ambient())) {
        const Elem c = F.coeff(i, j);
        if (c.is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        if (c != Field::one()) {
            const std::string s = f.render(c);
            if (s.find_first_not_of("0123456789") == std::string::npos) {
                out << s << '*';
            } else {
                out << '(' << s << ")*";
            }
        }
        out << 'X' << i;
        if (i == j) {
            out << "^2";
        } else {
            out << "*X" << j;
        }
    }
    if (first) return "0";
    return out.str();
}

}  // namespace qprm
