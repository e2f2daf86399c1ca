#include "gla/syntax.hpp"

namespace gla {

namespace {

// Binding strength, loosest first.
enum TermLevel { SumLevel = 1, AppLevel = 2, AtomLevel = 3 };
enum FormulaLevel { ImpLevel = 1, OrLevel = 2, AndLevel = 3, UnaryLevel = 4 };

int level_of(const ProofTerm& t)
{
    switch (t.kind()) {
    case ProofTerm::Kind::Sum: return SumLevel;
    case ProofTerm::Kind::App: return AppLevel;
    default: return AtomLevel;
    }
}

int level_of(const Formula& f)
{
    switch (f.kind()) {
    case Formula::Kind::Imp: return ImpLevel;
    case Formula::Kind::Or: return OrLevel;
    case Formula::Kind::And: return AndLevel;
    default: return UnaryLevel;
    }
}

void print_term_to(const ProofTerm& t, int min_level, std::string& out)
{
    bool parens = level_of(t) < min_level;
    if (parens)
        out += '(';
    switch (t.kind()) {
    case ProofTerm::Kind::Var:
    case ProofTerm::Kind::Const:
        out += t.name();
        break;
    case ProofTerm::Kind::Bang:
        out += '!';
        print_term_to(t.inner(), AtomLevel, out);
        break;
    case ProofTerm::Kind::App:
        print_term_to(t.left(), AppLevel, out);
        out += '*';
        print_term_to(t.right(), AtomLevel, out);
        break;
    case ProofTerm::Kind::Sum:
        print_term_to(t.left(), SumLevel, out);
        out += '+';
        print_term_to(t.right(), AppLevel, out);
        break;
    }
    if (parens)
        out += ')';
}

void print_formula_to(const Formula& f, int min_level, std::string& out)
{
    bool parens = level_of(f) < min_level;
    if (parens)
        out += '(';
    switch (f.kind()) {
    case Formula::Kind::Atom:
        out += f.name();
        break;
    case Formula::Kind::Falsum:
        out += "false";
        break;
    case Formula::Kind::Neg:
        out += '~';
        print_formula_to(f.body(), UnaryLevel, out);
        break;
    case Formula::Kind::Box:
        out += "[]";
        print_formula_to(f.body(), UnaryLevel, out);
        break;
    case Formula::Kind::Proof:
        print_term_to(f.term(), AtomLevel, out);
        out += ':';
        print_formula_to(f.body(), UnaryLevel, out);
        break;
    case Formula::Kind::Imp:
        print_formula_to(f.left(), OrLevel, out);
        out += " -> ";
        print_formula_to(f.right(), ImpLevel, out);
        break;
    case Formula::Kind::Or:
        print_formula_to(f.left(), OrLevel, out);
        out += " | ";
        print_formula_to(f.right(), AndLevel, out);
        break;
    case Formula::Kind::And:
        print_formula_to(f.left(), AndLevel, out);
        out += " & ";
        print_formula_to(f.right(), UnaryLevel, out);
        break;
    }
    if (parens)
        out += ')';
}

} // namespace

std::string print_term(const ProofTerm& t)
{
    std::string out;
    print_term_to(t, SumLevel, out);
    return out;
}

std::string print_formula(const Formula& f)
{
    std::string out;
    print_formula_to(f, ImpLevel, out);
    return out;
}

} // namespace gla
