#include "stropsat/smtlib.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace stropsat {

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;
    int column = 1;

    explicit Lexer(const std::string& t) : text(t) {}

    void advance() {
        if (pos < text.size() && text[pos] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++pos;
    }

    void skip_trivia() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == ';') {
                while (pos < text.size() && text[pos] != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_trivia();
        return pos >= text.size();
    }

    SExpr read() {
        skip_trivia();
        if (pos >= text.size())
            throw ParseError("unexpected end of input", line, column);
        SExpr node;
        node.line = line;
        node.column = column;
        char c = text[pos];
        if (c == '(') {
            advance();
            node.is_list = true;
            for (;;) {
                skip_trivia();
                if (pos >= text.size())
                    throw ParseError("unterminated list", node.line, node.column);
                if (text[pos] == ')') {
                    advance();
                    return node;
                }
                node.kids.push_back(read());
            }
        }
        if (c == ')')
            throw ParseError("unmatched ')'", line, column);
        if (c == '|') {
            advance();
            while (pos < text.size() && text[pos] != '|') {
                node.atom += text[pos];
                advance();
            }
            if (pos >= text.size())
                throw ParseError("unterminated quoted symbol", node.line, node.column);
            advance();
            return node;
        }
        if (c == '"') {
            advance();
            node.atom = "\"";
            while (pos < text.size() && text[pos] != '"') {
                node.atom += text[pos];
                advance();
            }
            if (pos >= text.size())
                throw ParseError("unterminated string literal", node.line, node.column);
            node.atom += '"';
            advance();
            return node;
        }
        while (pos < text.size()) {
            char d = text[pos];
            if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == ';')
                break;
            node.atom += d;
            advance();
        }
        return node;
    }
};

bool is_numeral(const std::string& s) {
    if (s.empty())
        return false;
    bool seen_dot = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '.' && !seen_dot && i > 0 && i + 1 < s.size()) {
            seen_dot = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    }
    return true;
}

const std::vector<std::string> kOperators = {"and", "not", "<", ">", "<=", ">=",
                                             "=",   "+",   "-", "*", "/"};

bool is_operator(const std::string& s) {
    return std::find(kOperators.begin(), kOperators.end(), s) != kOperators.end();
}

void check_symbols(const SExpr& node, const std::vector<std::string>& declared) {
    if (node.is_list) {
        for (std::size_t i = 0; i < node.kids.size(); ++i) {
            const SExpr& kid = node.kids[i];
            if (i == 0 && !kid.is_list)
                continue; // operator position, validated during normalization
            check_symbols(kid, declared);
        }
        return;
    }
    if (is_numeral(node.atom) || is_operator(node.atom))
        return;
    if (std::find(declared.begin(), declared.end(), node.atom) == declared.end())
        throw ParseError("undeclared symbol '" + node.atom + "'", node.line, node.column);
}

} // namespace

ParsedScript parse_script(const std::string& text) {
    Lexer lex(text);
    ParsedScript script;
    while (!lex.eof()) {
        SExpr cmd = lex.read();
        if (!cmd.is_list || cmd.kids.empty() || cmd.kids[0].is_list)
            throw ParseError("expected a command", cmd.line, cmd.column);
        const std::string& head = cmd.kids[0].atom;
        script.commands_seen.push_back(head);

        if (head == "set-logic") {
            if (cmd.kids.size() == 2 && !cmd.kids[1].is_list)
                script.logic = cmd.kids[1].atom;
        } else if (head == "set-info" || head == "check-sat" || head == "get-model" ||
                   head == "exit") {
            // accepted, nothing to record
        } else if (head == "declare-fun" || head == "declare-const") {
            bool is_fun = head == "declare-fun";
            std::size_t expected = is_fun ? 4u : 3u;
            if (cmd.kids.size() != expected || cmd.kids[1].is_list)
                throw ParseError("malformed " + head, cmd.line, cmd.column);
            if (is_fun && (!cmd.kids[2].is_list || !cmd.kids[2].kids.empty()))
                throw UnsupportedError("uninterpreted function '" + cmd.kids[1].atom + "'");
            const SExpr& sort = cmd.kids[is_fun ? 3 : 2];
            if (sort.is_list || sort.atom != "Real")
                throw UnsupportedError("sort '" + (sort.is_list ? std::string("...") : sort.atom) +
                                       "' (only Real is handled)");
            const std::string& name = cmd.kids[1].atom;
            if (std::find(script.variables.begin(), script.variables.end(), name) !=
                script.variables.end())
                throw ParseError("redeclared symbol '" + name + "'", cmd.line, cmd.column);
            script.variables.push_back(name);
        } else if (head == "assert") {
            if (cmd.kids.size() != 2)
                throw ParseError("malformed assert", cmd.line, cmd.column);
            check_symbols(cmd.kids[1], script.variables);
            script.assertions.push_back(cmd.kids[1]);
        } else {
            throw UnsupportedError("command '" + head + "'");
        }
    }
    return script;
}

namespace {

Polynomial poly_const(std::size_t dim, Rational value) {
    Polynomial p;
    p.dimension = dim;
    if (sgn(value) != 0)
        p.terms.emplace(ExponentVector(dim, 0), std::move(value));
    return p;
}

Polynomial poly_var(std::size_t dim, std::size_t idx) {
    Polynomial p;
    p.dimension = dim;
    ExponentVector e(dim, 0);
    e[idx] = 1;
    p.terms.emplace(std::move(e), Rational(1));
    return p;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    Polynomial out = a;
    for (const auto& [e, c] : b.terms) {
        auto [it, inserted] = out.terms.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0)
                out.terms.erase(it);
        }
    }
    return out;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    out.dimension = a.dimension;
    for (const auto& [ea, ca] : a.terms) {
        for (const auto& [eb, cb] : b.terms) {
            ExponentVector e(ea);
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += eb[i];
            Rational c = ca * cb;
            auto [it, inserted] = out.terms.emplace(std::move(e), c);
            if (!inserted) {
                it->second += c;
                if (sgn(it->second) == 0)
                    out.terms.erase(it);
            }
        }
    }
    return out;
}

struct TermBuilder {
    const std::vector<std::string>& variables;

    std::size_t dim() const { return variables.size(); }

    Polynomial build(const SExpr& t) const {
        if (!t.is_list) {
            if (is_numeral(t.atom))
                return poly_const(dim(), t.atom.find('.') != std::string::npos
                                             ? rational_from_decimal(t.atom)
                                             : Rational(t.atom));
            auto it = std::find(variables.begin(), variables.end(), t.atom);
            if (it == variables.end())
                throw ParseError("undeclared symbol '" + t.atom + "'", t.line, t.column);
            return poly_var(dim(), static_cast<std::size_t>(it - variables.begin()));
        }
        if (t.kids.empty() || t.kids[0].is_list)
            throw ParseError("malformed term", t.line, t.column);
        const std::string& op = t.kids[0].atom;
        if (op == "+") {
            Polynomial acc = poly_const(dim(), Rational(0));
            for (std::size_t i = 1; i < t.kids.size(); ++i)
                acc = poly_add(acc, build(t.kids[i]));
            return acc;
        }
        if (op == "-") {
            if (t.kids.size() < 2)
                throw ParseError("'-' needs at least one argument", t.line, t.column);
            if (t.kids.size() == 2)
                return negate(build(t.kids[1]));
            Polynomial acc = build(t.kids[1]);
            for (std::size_t i = 2; i < t.kids.size(); ++i)
                acc = poly_add(acc, negate(build(t.kids[i])));
            return acc;
        }
        if (op == "*") {
            Polynomial acc = poly_const(dim(), Rational(1));
            for (std::size_t i = 1; i < t.kids.size(); ++i)
                acc = poly_mul(acc, build(t.kids[i]));
            return acc;
        }
        if (op == "/") {
            if (t.kids.size() != 3)
                throw ParseError("'/' needs two arguments", t.line, t.column);
            Polynomial num = build(t.kids[1]);
            Polynomial den = build(t.kids[2]);
            if (!den.is_constant())
                throw UnsupportedError("division by a non-constant term");
            if (den.is_zero())
                throw UnsupportedError("division by zero");
            Rational k = 1 / den.terms.begin()->second;
            Polynomial out;
            out.dimension = num.dimension;
            for (const auto& [e, c] : num.terms)
                out.terms.emplace(e, c * k);
            return out;
        }
        if (is_operator(op))
            throw UnsupportedError("operator '" + op + "' inside an arithmetic term");
        throw UnsupportedError("operator '" + op + "'");
    }
};

} // namespace

NormalizedProblem normalize(const ParsedScript& script) {
    NormalizedProblem np;
    np.problem.variables = script.variables;
    TermBuilder builder{script.variables};

    auto add_constraint = [&](Polynomial f, std::size_t assertion_index) {
        if (f.is_constant()) {
            Rational value = f.is_zero() ? Rational(0) : f.terms.begin()->second;
            if (value <= 0)
                np.verdict_override = VerdictOverride::TriviallyUnsat;
            return; // positive constant conjuncts are dropped
        }
        np.problem.constraints.push_back(std::move(f));
        np.provenance.push_back(assertion_index);
    };

    std::function<void(const SExpr&, std::size_t)> walk = [&](const SExpr& t, std::size_t idx) {
        if (!t.is_list || t.kids.empty() || t.kids[0].is_list)
            throw UnsupportedError("assertion is not a relation");
        const std::string& op = t.kids[0].atom;
        if (op == "and") {
            for (std::size_t i = 1; i < t.kids.size(); ++i)
                walk(t.kids[i], idx);
            return;
        }
        if (op == "not") {
            if (t.kids.size() != 2 || !t.kids[1].is_list || t.kids[1].kids.empty() ||
                t.kids[1].kids[0].is_list)
                throw UnsupportedError("negation of a non-relation");
            const std::string& inner = t.kids[1].kids[0].atom;
            if (inner == "<" || inner == ">" || inner == "<=" || inner == ">=" || inner == "=")
                throw UnsupportedError("non-strict relation");
            throw UnsupportedError("negation of a non-relation");
        }
        if (op == "<=" || op == ">=")
            throw UnsupportedError("non-strict relation");
        if (op == "=")
            throw UnsupportedError("equality relation");
        if (op == ">" || op == "<") {
            if (t.kids.size() != 3)
                throw UnsupportedError("chained relation");
            Polynomial lhs = builder.build(t.kids[1]);
            Polynomial rhs = builder.build(t.kids[2]);
            Polynomial f = op == ">" ? poly_add(lhs, negate(rhs)) : poly_add(rhs, negate(lhs));
            add_constraint(std::move(f), idx);
            return;
        }
        throw UnsupportedError("Boolean operator '" + op + "'");
    };

    for (std::size_t i = 0; i < script.assertions.size(); ++i)
        walk(script.assertions[i], i);

    if (np.verdict_override == VerdictOverride::None && np.problem.constraints.empty())
        np.verdict_override = VerdictOverride::TriviallySat;
    return np;
}

} // namespace stropsat
