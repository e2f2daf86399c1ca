#include "gla/syntax.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace gla {

ParseError::ParseError(std::size_t position, std::string expected)
    : std::runtime_error("parse error at " + std::to_string(position) + ": expected " + expected),
      position_(position), expected_(std::move(expected))
{
}

namespace {

enum class Tok { End, Arrow, Bar, Amp, Tilde, Box, Colon, LParen, RParen, Bang, Star, Plus, Upper, Lower, False, True };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;
};

// Recursive descent over the grammar
//   formula := disj ("->" formula)?
//   disj    := conj ("|" conj)*
//   conj    := unary ("&" unary)*
//   unary   := "~" unary | "[]" unary | term ":" unary | "false" | "true"
//            | UPPER_IDENT | "(" formula ")"
//   term    := appt ("+" appt)*
//   appt    := bangt ("*" bangt)*
//   bangt   := "!" bangt | LOWER_IDENT | "(" term ")"
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) { tokenize(); }

    Formula formula_eof()
    {
        Formula f = formula();
        expect(Tok::End, "end of input");
        return f;
    }

    ProofTerm term_eof()
    {
        ProofTerm t = term();
        expect(Tok::End, "end of input");
        return t;
    }

private:
    void tokenize()
    {
        std::size_t i = 0;
        while (i < text_.size()) {
            unsigned char c = text_[i];
            if (std::isspace(c)) {
                ++i;
                continue;
            }
            std::size_t start = i;
            auto single = [&](Tok k) {
                tokens_.push_back({k, start, std::string(1, static_cast<char>(c))});
                ++i;
            };
            switch (c) {
            case '|': single(Tok::Bar); continue;
            case '&': single(Tok::Amp); continue;
            case '~': single(Tok::Tilde); continue;
            case ':': single(Tok::Colon); continue;
            case '(': single(Tok::LParen); continue;
            case ')': single(Tok::RParen); continue;
            case '!': single(Tok::Bang); continue;
            case '*': single(Tok::Star); continue;
            case '+': single(Tok::Plus); continue;
            default: break;
            }
            if (c == '-' && i + 1 < text_.size() && text_[i + 1] == '>') {
                tokens_.push_back({Tok::Arrow, start, "->"});
                i += 2;
                continue;
            }
            if (c == '[' && i + 1 < text_.size() && text_[i + 1] == ']') {
                tokens_.push_back({Tok::Box, start, "[]"});
                i += 2;
                continue;
            }
            if (std::isalpha(c)) {
                while (i < text_.size()
                       && (std::isalnum(static_cast<unsigned char>(text_[i])) || text_[i] == '_' || text_[i] == '\''))
                    ++i;
                std::string word(text_.substr(start, i - start));
                Tok kind = std::isupper(c) ? Tok::Upper : Tok::Lower;
                if (word == "false")
                    kind = Tok::False;
                else if (word == "true")
                    kind = Tok::True;
                tokens_.push_back({kind, start, std::move(word)});
                continue;
            }
            throw ParseError(start, "a token, found '" + std::string(1, static_cast<char>(c)) + "'");
        }
        tokens_.push_back({Tok::End, text_.size(), ""});
    }

    const Token& peek() const { return tokens_[cursor_]; }
    bool at(Tok k) const { return peek().kind == k; }

    bool accept(Tok k)
    {
        if (!at(k))
            return false;
        ++cursor_;
        return true;
    }

    void expect(Tok k, const char* what)
    {
        if (!accept(k))
            throw ParseError(peek().pos, what);
    }

    Formula formula()
    {
        Formula lhs = disjunction();
        if (accept(Tok::Arrow))
            return Formula::imp(std::move(lhs), formula());
        return lhs;
    }

    Formula disjunction()
    {
        Formula lhs = conjunction();
        while (accept(Tok::Bar))
            lhs = Formula::disj(std::move(lhs), conjunction());
        return lhs;
    }

    Formula conjunction()
    {
        Formula lhs = unary();
        while (accept(Tok::Amp))
            lhs = Formula::conj(std::move(lhs), unary());
        return lhs;
    }

    Formula unary()
    {
        const Token& tok = peek();
        switch (tok.kind) {
        case Tok::Tilde:
            ++cursor_;
            return Formula::neg(unary());
        case Tok::Box:
            ++cursor_;
            return Formula::box(unary());
        case Tok::False:
            ++cursor_;
            return Formula::falsum();
        case Tok::True:
            ++cursor_;
            return Formula::truth();
        case Tok::Upper:
            ++cursor_;
            return Formula::atom(tok.text);
        case Tok::Lower:
        case Tok::Bang:
            return proof_assertion();
        case Tok::LParen: {
            // Either "(term):body" or "(formula)".
            std::size_t mark = cursor_;
            if (auto f = try_proof_assertion())
                return *f;
            cursor_ = mark;
            ++cursor_;
            Formula inner = formula();
            expect(Tok::RParen, "')'");
            return inner;
        }
        default:
            throw ParseError(tok.pos, "a formula");
        }
    }

    std::optional<Formula> try_proof_assertion()
    {
        try {
            ProofTerm t = term();
            if (!accept(Tok::Colon))
                return std::nullopt;
            return Formula::proof(std::move(t), unary());
        } catch (const ParseError&) {
            return std::nullopt;
        }
    }

    Formula proof_assertion()
    {
        ProofTerm t = term();
        expect(Tok::Colon, "':' after proof term");
        return Formula::proof(std::move(t), unary());
    }

    ProofTerm term()
    {
        ProofTerm lhs = application();
        while (accept(Tok::Plus))
            lhs = ProofTerm::sum(std::move(lhs), application());
        return lhs;
    }

    ProofTerm application()
    {
        ProofTerm lhs = checked();
        while (accept(Tok::Star))
            lhs = ProofTerm::app(std::move(lhs), checked());
        return lhs;
    }

    ProofTerm checked()
    {
        const Token& tok = peek();
        switch (tok.kind) {
        case Tok::Bang:
            ++cursor_;
            return ProofTerm::bang(checked());
        case Tok::Lower:
            ++cursor_;
            return ProofTerm::named(tok.text);
        case Tok::LParen: {
            ++cursor_;
            ProofTerm inner = term();
            expect(Tok::RParen, "')'");
            return inner;
        }
        default:
            throw ParseError(tok.pos, "a proof term");
        }
    }

    std::string_view text_;
    std::vector<Token> tokens_;
    std::size_t cursor_ = 0;
};

} // namespace

Formula parse_formula(std::string_view text)
{
    return Parser(text).formula_eof();
}

ProofTerm parse_term(std::string_view text)
{
    return Parser(text).term_eof();
}

} // namespace gla
