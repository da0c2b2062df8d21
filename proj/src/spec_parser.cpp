#include "ietforge/spec_parser.hpp"

#include "ietforge/families.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ietforge {

namespace {

struct Token {
    enum class Kind { Ident, Number, String, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

    Token expect(Token::Kind kind, const std::string& what) {
        if (cur_.kind != kind)
            throw ParseError(cur_.line, cur_.col, what);
        return take();
    }

    Token expect_punct(const std::string& p) {
        if (cur_.kind != Token::Kind::Punct || cur_.text != p)
            throw ParseError(cur_.line, cur_.col, "'" + p + "'");
        return take();
    }

    bool accept_punct(const std::string& p) {
        if (cur_.kind == Token::Kind::Punct && cur_.text == p) {
            advance();
            return true;
        }
        return false;
    }

private:
    void advance() {
        skip_space();
        cur_.line = line_;
        cur_.col = col_;
        if (pos_ >= src_.size()) {
            cur_.kind = Token::Kind::End;
            cur_.text.clear();
            return;
        }
        char c = src_[pos_];
        if (c == '"') {
            get();
            std::string s;
            while (pos_ < src_.size() && src_[pos_] != '"') s += get();
            if (pos_ >= src_.size()) throw ParseError(line_, col_, "closing '\"'");
            get();
            cur_.kind = Token::Kind::String;
            cur_.text = s;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (pos_ < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.' ||
                    src_[pos_] == 'e' || src_[pos_] == 'E' ||
                    ((src_[pos_] == '+' || src_[pos_] == '-') && pos_ > 0 &&
                     (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E'))))
                s += get();
            cur_.kind = Token::Kind::Number;
            cur_.text = s;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
                    src_[pos_] == '-'))
                s += get();
            cur_.kind = Token::Kind::Ident;
            cur_.text = s;
            return;
        }
        // "+/-" and "..." lex as single tokens
        if (c == '+' && src_.substr(pos_, 3) == "+/-") {
            get(); get(); get();
            cur_.kind = Token::Kind::Punct;
            cur_.text = "+/-";
            return;
        }
        if (c == '.' && src_.substr(pos_, 3) == "...") {
            get(); get(); get();
            cur_.kind = Token::Kind::Punct;
            cur_.text = "...";
            return;
        }
        get();
        cur_.kind = Token::Kind::Punct;
        cur_.text = std::string(1, c);
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') get();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                get();
            } else {
                break;
            }
        }
    }

    char get() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_;
};

Rational lex_rational(Lexer& lex, bool allow_sign = true) {
    bool neg = false;
    if (allow_sign && lex.peek().kind == Token::Kind::Punct &&
        (lex.peek().text == "-" || lex.peek().text == "+")) {
        neg = lex.take().text == "-";
    }
    Token num = lex.expect(Token::Kind::Number, "a number");
    if (num.text.find('.') != std::string::npos || num.text.find('e') != std::string::npos ||
        num.text.find('E') != std::string::npos)
        throw ParseError(num.line, num.col, "an integer or p/q rational");
    Rational value(Integer(num.text));
    if (lex.peek().kind == Token::Kind::Punct && lex.peek().text == "/") {
        lex.take();
        Token den = lex.expect(Token::Kind::Number, "a denominator");
        if (den.text.find('.') != std::string::npos)
            throw ParseError(den.line, den.col, "an integer denominator");
        value = make_rational(Integer(num.text), Integer(den.text));
    }
    return neg ? -value : value;
}

Rational lex_decimal_or_rational(Lexer& lex) {
    bool neg = false;
    if (lex.peek().kind == Token::Kind::Punct &&
        (lex.peek().text == "-" || lex.peek().text == "+"))
        neg = lex.take().text == "-";
    Token num = lex.expect(Token::Kind::Number, "a numeric literal");
    Rational v;
    if (num.text.find('.') != std::string::npos || num.text.find('e') != std::string::npos ||
        num.text.find('E') != std::string::npos) {
        v = parse_decimal(num.text);
    } else if (lex.peek().kind == Token::Kind::Punct && lex.peek().text == "/") {
        lex.take();
        Token den = lex.expect(Token::Kind::Number, "a denominator");
        v = make_rational(Integer(num.text), Integer(den.text));
    } else {
        v = Rational(Integer(num.text));
    }
    return neg ? -v : v;
}

AlphaOracle lex_alpha_value(Lexer& lex, const ParseOptions& options) {
    const Token& t = lex.peek();
    if (t.kind == Token::Kind::Ident && t.text == "sqrt") {
        lex.take();
        lex.expect_punct("(");
        Rational radicand = lex_rational(lex);
        lex.expect_punct(")");
        Rational scale(1);
        if (lex.accept_punct("/")) scale = Rational(1) / lex_rational(lex, false);
        return AlphaOracle::scaled_sqrt(scale, radicand, options.allow_rational)
            .with_precision_cap(options.precision_cap);
    }
    if (t.kind == Token::Kind::Ident && t.text == "cf") {
        lex.take();
        lex.expect_punct("[");
        Rational a0 = lex_rational(lex);
        lex.expect_punct(";");
        std::vector<Integer> prefix, period;
        bool ellipsis = false, in_period_group = false;
        bool expecting_term = true;
        while (true) {
            if (lex.accept_punct("(")) {
                in_period_group = true;
                continue;
            }
            if (expecting_term) {
                Token term = lex.expect(Token::Kind::Number, "a continued-fraction term");
                (in_period_group ? period : prefix).emplace_back(term.text);
                expecting_term = false;
                continue;
            }
            if (lex.accept_punct(")")) {
                in_period_group = false;
                continue;
            }
            if (lex.accept_punct(",")) {
                if (lex.accept_punct("...")) {
                    ellipsis = true;
                    continue;
                }
                expecting_term = true;
                continue;
            }
            if (lex.accept_punct("...")) {
                ellipsis = true;
                continue;
            }
            break;
        }
        lex.expect_punct("]");
        if (period.empty() && ellipsis) {
            // "cf[0;1,2,1,2,...]": the whole listed tail repeats
            period = std::move(prefix);
            prefix.clear();
        }
        if (!is_integer(a0)) throw Error(ErrorCode::SyntaxError, "cf integer part must be an integer");
        return AlphaOracle::continued_fraction(rat_num(a0), std::move(prefix), std::move(period),
                                               options.allow_rational)
            .with_precision_cap(options.precision_cap);
    }
    if (t.kind == Token::Kind::Number) {
        // plain rational (degenerate mode) or "c * sqrt(r) [/ d]"
        Rational first = lex_decimal_or_rational(lex);
        if (lex.accept_punct("*")) {
            Token id = lex.expect(Token::Kind::Ident, "'sqrt'");
            if (id.text != "sqrt") throw ParseError(id.line, id.col, "'sqrt'");
            lex.expect_punct("(");
            Rational radicand = lex_rational(lex);
            lex.expect_punct(")");
            Rational scale = first;
            if (lex.accept_punct("/")) scale /= lex_rational(lex, false);
            return AlphaOracle::scaled_sqrt(scale, radicand, options.allow_rational)
                .with_precision_cap(options.precision_cap);
        }
        return AlphaOracle::explicit_rational(first, options.allow_rational)
            .with_precision_cap(options.precision_cap);
    }
    throw ParseError(t.line, t.col, "an alpha value (sqrt(...), cf[...], or a rational)");
}

AlphaOracle lex_alpha_decl(Lexer& lex, const ParseOptions& options) {
    if (lex.accept_punct("=")) return lex_alpha_value(lex, options);
    if (lex.accept_punct("~")) {
        Rational center = lex_decimal_or_rational(lex);
        lex.expect_punct("+/-");
        Rational radius = lex_decimal_or_rational(lex);
        if (radius <= 0) throw Error(ErrorCode::SemanticError, "enclosure radius must be positive");
        return AlphaOracle::decimal_enclosure(center - radius, center + radius)
            .with_precision_cap(options.precision_cap);
    }
    throw ParseError(lex.peek().line, lex.peek().col, "'=' or '~' after alpha");
}

}  // namespace

AlphaOracle parse_alpha_expr(std::string_view text, const ParseOptions& options) {
    // accept both a bare value and a "c +/- e" enclosure
    if (text.find("+/-") != std::string_view::npos) {
        Lexer lex(text);
        Rational center = lex_decimal_or_rational(lex);
        lex.expect_punct("+/-");
        Rational radius = lex_decimal_or_rational(lex);
        if (radius <= 0)
            throw Error(ErrorCode::SemanticError, "enclosure radius must be positive");
        return AlphaOracle::decimal_enclosure(center - radius, center + radius)
            .with_precision_cap(options.precision_cap);
    }
    Lexer lex(text);
    return lex_alpha_value(lex, options);
}

ParsedSpec parse_spec(std::string_view text, const ParseOptions& options) {
    Lexer lex(text);
    ParsedSpec spec;
    bool saw_stanza = false;

    while (lex.peek().kind != Token::Kind::End) {
        Token head = lex.expect(Token::Kind::Ident, "'alpha', 'iet' or 'family'");
        if (head.text == "alpha") {
            if (spec.alpha)
                throw Error(ErrorCode::MixedIrrationals,
                            "a spec declares a single alpha; mixing irrationals is rejected");
            spec.alpha = lex_alpha_decl(lex, options);
            continue;
        }
        if (head.text == "iet") {
            if (saw_stanza)
                throw Error(ErrorCode::SemanticError, "only one iet/family stanza per spec");
            saw_stanza = true;
            lex.expect_punct("{");
            while (!lex.accept_punct("}")) {
                Token field = lex.expect(Token::Kind::Ident, "'perm' or 'lengths'");
                lex.expect_punct("=");
                if (field.text == "perm") {
                    lex.expect_punct("[");
                    std::vector<int> images;
                    while (true) {
                        Token n = lex.expect(Token::Kind::Number, "a permutation image");
                        images.push_back(std::stoi(n.text));
                        if (!lex.accept_punct(",")) break;
                    }
                    lex.expect_punct("]");
                    spec.perm = Permutation(std::move(images));
                } else if (field.text == "lengths") {
                    lex.expect_punct("[");
                    while (true) {
                        Token s = lex.expect(Token::Kind::String, "a quoted length literal");
                        spec.lengths.push_back(parse_qalpha(s.text));
                        if (!lex.accept_punct(",")) break;
                    }
                    lex.expect_punct("]");
                } else {
                    throw ParseError(field.line, field.col, "'perm' or 'lengths'");
                }
                lex.expect_punct(";");
            }
            continue;
        }
        if (head.text == "family") {
            if (saw_stanza)
                throw Error(ErrorCode::SemanticError, "only one iet/family stanza per spec");
            saw_stanza = true;
            lex.expect_punct("{");
            FamilySpec fam;
            while (!lex.accept_punct("}")) {
                Token field = lex.expect(Token::Kind::Ident, "a family field");
                lex.expect_punct("=");
                if (field.text == "name") {
                    fam.name = lex.expect(Token::Kind::Ident, "a family name").text;
                } else if (field.text == "m") {
                    fam.m = std::stoi(lex.expect(Token::Kind::Number, "an integer").text);
                } else if (field.text == "n") {
                    fam.n = std::stoi(lex.expect(Token::Kind::Number, "an integer").text);
                } else if (field.text == "sigma") {
                    if (lex.peek().kind == Token::Kind::Ident) {
                        fam.sigma = lex.take().text;
                    } else {
                        lex.expect_punct("[");
                        std::string s = "[";
                        while (true) {
                            Token n = lex.expect(Token::Kind::Number, "a permutation image");
                            s += n.text;
                            if (!lex.accept_punct(",")) break;
                            s += ",";
                        }
                        lex.expect_punct("]");
                        fam.sigma = s + "]";
                    }
                } else if (field.text == "theta") {
                    fam.theta = lex.expect(Token::Kind::String, "a quoted angle literal").text;
                } else if (field.text == "h") {
                    fam.h_path = lex.expect(Token::Kind::String, "a quoted path").text;
                } else if (field.text == "rescale") {
                    fam.rescale = lex_rational(lex);
                } else {
                    throw ParseError(field.line, field.col, "a known family field");
                }
                lex.expect_punct(";");
            }
            spec.family = std::move(fam);
            continue;
        }
        throw ParseError(head.line, head.col, "'alpha', 'iet' or 'family'");
    }

    if (!saw_stanza)
        throw ParseError(lex.peek().line, lex.peek().col, "an iet or family stanza");
    if (spec.has_iet()) {
        if (spec.perm->size() != static_cast<int>(spec.lengths.size()))
            throw Error(ErrorCode::SemanticError,
                        "perm size " + std::to_string(spec.perm->size()) + " does not match " +
                            std::to_string(spec.lengths.size()) + " lengths");
        bool uses_alpha = false;
        for (const auto& l : spec.lengths)
            if (l.p != 0) uses_alpha = true;
        if (uses_alpha && !spec.alpha)
            throw Error(ErrorCode::SemanticError,
                        "lengths refer to 'a' but no alpha is declared");
    }
    return spec;
}

Permutation parse_sigma(std::string_view text, int n) {
    if (text == "cycle") return Permutation::cycle(n);
    if (text == "reversal") return Permutation::reversal(n);
    Permutation sigma = Permutation::parse(text);
    if (n > 0 && sigma.size() != n)
        throw Error(ErrorCode::SemanticError, "sigma size does not match n");
    return sigma;
}

namespace {

AlphaOracle default_oracle() {
    return AlphaOracle::sqrt_rational(make_rational(1, 2));
}

}  // namespace

Iet realize_spec(const ParsedSpec& spec, const ParseOptions& options) {
    AlphaOracle oracle = spec.alpha ? *spec.alpha : default_oracle();
    if (spec.has_iet()) return Iet::build(*spec.perm, spec.lengths, oracle);

    if (!spec.family) throw Error(ErrorCode::SemanticError, "spec has no stanza");
    const FamilySpec& fam = *spec.family;
    Iet out = [&]() {
        if (fam.name == "reverse-shift") {
            if (fam.m == 0) throw Error(ErrorCode::SemanticError, "reverse-shift needs m");
            return reverse_shift_family(fam.m, oracle);
        }
        if (fam.name == "block-rotation") {
            if (fam.n == 0) throw Error(ErrorCode::SemanticError, "block-rotation needs n");
            Permutation sigma =
                fam.sigma.empty() ? Permutation::cycle(fam.n) : parse_sigma(fam.sigma, fam.n);
            return block_rotation_family(fam.n, sigma, oracle);
        }
        if (fam.name == "half-swap") return half_swap_family(oracle);
        if (fam.name == "rotation") {
            if (fam.theta.empty()) throw Error(ErrorCode::SemanticError, "rotation needs theta");
            return rotation(parse_qalpha(fam.theta), oracle);
        }
        if (fam.name == "conj-rot") {
            if (fam.h_path.empty()) throw Error(ErrorCode::SemanticError, "conj-rot needs h");
            std::ifstream in(fam.h_path);
            if (!in)
                throw Error(ErrorCode::SemanticError, "cannot read h spec '" + fam.h_path + "'");
            std::ostringstream buf;
            buf << in.rdbuf();
            ParsedSpec h_spec = parse_spec(buf.str(), options);
            if (!h_spec.alpha) h_spec.alpha = oracle;  // h inherits the session alpha
            if (!(*h_spec.alpha == oracle))
                throw Error(ErrorCode::MixedIrrationals,
                            "h must live over the same alpha as the session");
            Iet h = realize_spec(h_spec, options);
            return conjugated_rotation(oracle, h);
        }
        throw Error(ErrorCode::SemanticError, "unknown family '" + fam.name + "'");
    }();
    if (fam.rescale) out = out.rescaled(*fam.rescale);
    return out;
}

std::string serialize_iet(const Iet& T) {
    std::ostringstream os;
    const auto& oracle = T.oracle();
    if (oracle.kind() == AlphaOracle::Kind::DecimalEnclosure)
        os << "alpha ~ " << oracle.text() << "\n";
    else
        os << "alpha = " << oracle.text() << "\n";
    os << "iet {\n  perm = " << T.permutation().str() << ";\n  lengths = [";
    for (int i = 0; i < T.interval_count(); ++i)
        os << (i ? ", " : "") << '"' << T.lengths()[i].str() << '"';
    os << "];\n}\n";
    return os.str();
}

}  // namespace ietforge
