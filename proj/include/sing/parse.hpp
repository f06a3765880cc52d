#pragma once

#include "sing/poly.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <set>

namespace sing {

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Integer-affine expression in the declared parameters, e.g. "7-i" or "2n+1".
struct AffineExpr {
    long long constant = 0;
    std::map<std::string, long long> coeff;

    bool is_constant() const { return coeff.empty(); }

    long long eval(const std::map<std::string, long long>& bindings) const {
        long long v = constant;
        for (const auto& [name, c] : coeff) {
            auto it = bindings.find(name);
            if (it == bindings.end()) throw Error("unbound parameter: " + name);
            v += c * it->second;
        }
        return v;
    }
};

struct ExprTerm;

/// Generic binary form F{k}(u, v) of degree k in its two arguments.
struct FormMacro {
    AffineExpr degree;
    std::vector<ExprTerm> arg1, arg2;  // sub-expressions, must instantiate to monomials
};

struct ExprTerm {
    int sign = 1;
    std::optional<Rat> coefficient;          // explicit rational factor, if any
    std::vector<std::string> labels;         // generic coefficient labels, if any
    std::vector<std::pair<int, AffineExpr>> powers;  // (variable index, exponent)
    std::vector<FormMacro> forms;
};

struct PolynomialExpr {
    std::vector<std::string> variables;
    std::vector<std::string> parameters;
    std::vector<ExprTerm> terms;
};

namespace detail {

class Lexer {
  public:
    enum Kind { End, Int, Ident, Plus, Minus, Star, Caret, Slash, LBrace, RBrace, LParen, RParen, Comma };
    struct Token {
        Kind kind;
        std::string text;
        std::size_t pos;
    };

    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ >= src_.size()) {
            tok_ = {End, "", i_};
            return;
        }
        char c = src_[i_];
        auto one = [&](Kind k) {
            tok_ = {k, std::string(1, c), i_};
            ++i_;
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            tok_ = {Int, src_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                ++j;
            tok_ = {Ident, src_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        switch (c) {
            case '+': one(Plus); return;
            case '-': one(Minus); return;
            case '*': one(Star); return;
            case '^': one(Caret); return;
            case '/': one(Slash); return;
            case '{': one(LBrace); return;
            case '}': one(RBrace); return;
            case '(': one(LParen); return;
            case ')': one(RParen); return;
            case ',': one(Comma); return;
            default: throw ParseError(std::string("unexpected character '") + c + "'", i_);
        }
    }

    const std::string& src_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
  public:
    Parser(const std::string& src, std::vector<std::string> vars, std::vector<std::string> params)
        : lex_(src), vars_(std::move(vars)), params_(params.begin(), params.end()) {
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (params_.count(vars_[i]))
                throw Error("name declared both variable and parameter: " + vars_[i]);
            var_index_[vars_[i]] = static_cast<int>(i);
        }
    }

    std::vector<ExprTerm> parse_expr() {
        std::vector<ExprTerm> terms;
        int sign = 1;
        if (lex_.peek().kind == Lexer::Minus) {
            lex_.next();
            sign = -1;
        } else if (lex_.peek().kind == Lexer::Plus) {
            lex_.next();
        }
        terms.push_back(parse_term(sign));
        while (lex_.peek().kind == Lexer::Plus || lex_.peek().kind == Lexer::Minus) {
            int s = lex_.next().kind == Lexer::Plus ? 1 : -1;
            terms.push_back(parse_term(s));
        }
        return terms;
    }

    void expect_end() {
        if (lex_.peek().kind != Lexer::End)
            throw ParseError("trailing input after expression", lex_.peek().pos);
    }

  private:
    bool starts_factor(Lexer::Kind k) const {
        return k == Lexer::Int || k == Lexer::Ident;
    }

    ExprTerm parse_term(int sign) {
        ExprTerm term;
        term.sign = sign;
        parse_factor(term);
        for (;;) {
            if (lex_.peek().kind == Lexer::Star) {
                lex_.next();
                parse_factor(term);
            } else if (starts_factor(lex_.peek().kind)) {
                parse_factor(term);
            } else {
                break;
            }
        }
        return term;
    }

    void parse_factor(ExprTerm& term) {
        const auto tok = lex_.peek();
        if (tok.kind == Lexer::Int) {
            lex_.next();
            Rat v(tok.text);
            if (lex_.peek().kind == Lexer::Slash) {
                lex_.next();
                auto den = lex_.next();
                if (den.kind != Lexer::Int) throw ParseError("expected denominator", den.pos);
                Rat d(den.text);
                if (d == 0) throw ParseError("zero denominator", den.pos);
                v /= d;
            }
            term.coefficient = term.coefficient ? *term.coefficient * v : v;
            return;
        }
        if (tok.kind != Lexer::Ident)
            throw ParseError("expected a factor", tok.pos);
        lex_.next();
        if (tok.text == "F" && lex_.peek().kind == Lexer::LBrace) {
            FormMacro fm;
            lex_.next();
            fm.degree = parse_affine();
            expect(Lexer::RBrace, "'}'");
            expect(Lexer::LParen, "'('");
            fm.arg1 = parse_expr();
            expect(Lexer::Comma, "','");
            fm.arg2 = parse_expr();
            expect(Lexer::RParen, "')'");
            term.forms.push_back(std::move(fm));
            return;
        }
        auto vi = var_index_.find(tok.text);
        if (vi != var_index_.end()) {
            AffineExpr e;
            e.constant = 1;
            if (lex_.peek().kind == Lexer::Caret) {
                lex_.next();
                e = parse_power();
            }
            term.powers.emplace_back(vi->second, std::move(e));
            return;
        }
        if (params_.count(tok.text))
            throw ParseError("parameter '" + tok.text + "' used as a factor", tok.pos);
        if (lex_.peek().kind == Lexer::Caret)
            throw ParseError("coefficient label '" + tok.text + "' cannot carry an exponent",
                             lex_.peek().pos);
        term.labels.push_back(tok.text);
    }

    AffineExpr parse_power() {
        if (lex_.peek().kind == Lexer::LBrace) {
            lex_.next();
            AffineExpr e = parse_affine();
            expect(Lexer::RBrace, "'}'");
            return e;
        }
        auto tok = lex_.next();
        AffineExpr e;
        if (tok.kind == Lexer::Int) {
            e.constant = std::stoll(tok.text);
        } else if (tok.kind == Lexer::Ident && params_.count(tok.text)) {
            e.coeff[tok.text] = 1;
        } else {
            throw ParseError("expected exponent", tok.pos);
        }
        return e;
    }

    AffineExpr parse_affine() {
        AffineExpr e;
        int sign = 1;
        if (lex_.peek().kind == Lexer::Minus) {
            lex_.next();
            sign = -1;
        } else if (lex_.peek().kind == Lexer::Plus) {
            lex_.next();
        }
        parse_affine_atom(e, sign);
        while (lex_.peek().kind == Lexer::Plus || lex_.peek().kind == Lexer::Minus) {
            int s = lex_.next().kind == Lexer::Plus ? 1 : -1;
            parse_affine_atom(e, s);
        }
        return e;
    }

    void parse_affine_atom(AffineExpr& e, int sign) {
        auto tok = lex_.next();
        long long k = 1;
        if (tok.kind == Lexer::Int) {
            k = std::stoll(tok.text);
            if (lex_.peek().kind == Lexer::Star) lex_.next();
            if (lex_.peek().kind == Lexer::Ident) {
                tok = lex_.next();
            } else {
                e.constant += sign * k;
                return;
            }
        }
        if (tok.kind != Lexer::Ident) throw ParseError("expected parameter or integer", tok.pos);
        if (!params_.count(tok.text))
            throw ParseError("undeclared parameter '" + tok.text + "'", tok.pos);
        e.coeff[tok.text] += sign * k;
        if (e.coeff[tok.text] == 0) e.coeff.erase(tok.text);
    }

    void expect(Lexer::Kind k, const std::string& what) {
        auto tok = lex_.next();
        if (tok.kind != k) throw ParseError("expected " + what, tok.pos);
    }

    Lexer lex_;
    std::vector<std::string> vars_;
    std::set<std::string> params_;
    std::map<std::string, int> var_index_;
};

inline Monomial instantiate_monomial_arg(const std::vector<ExprTerm>& arg, int dim,
                                         const std::map<std::string, long long>& bindings) {
    if (arg.size() != 1) throw Error("form argument must be a single monomial");
    const ExprTerm& t = arg[0];
    if (!t.forms.empty()) throw Error("form argument cannot contain a nested form");
    if (t.sign != 1 || t.coefficient || !t.labels.empty())
        throw Error("form argument must have coefficient 1");
    Monomial m(dim, 0);
    for (const auto& [vi, ae] : t.powers) {
        long long e = ae.eval(bindings);
        if (e < 0) throw Error("negative exponent after substitution");
        m[vi] += e;
    }
    return m;
}

}  // namespace detail

inline PolynomialExpr parse_expression(const std::string& text,
                                       const std::vector<std::string>& params = {},
                                       std::vector<std::string> variables = {"t", "z", "x", "y"}) {
    detail::Parser p(text, variables, params);
    PolynomialExpr e;
    e.variables = std::move(variables);
    e.parameters = params;
    e.terms = p.parse_expr();
    p.expect_end();
    return e;
}

/**
 * Substitutes parameter values and expands form macros.  F{k}(u, v) becomes
 * sum_{j=0..k} c_j u^j v^{k-j} with fresh generic coefficient tags; the
 * extreme coefficients are nonzero by convention, and the whole expansion is
 * kept generic.  Fresh labels are drawn from a per-call counter, so the
 * result is deterministic.
 */
inline SupportedPolynomial instantiate(const PolynomialExpr& expr,
                                       const std::map<std::string, long long>& bindings = {}) {
    for (const auto& p : expr.parameters)
        if (!bindings.count(p)) throw Error("unbound parameter: " + p);
    const int dim = static_cast<int>(expr.variables.size());
    PolyBuilder builder(dim);
    long long fresh = 0;

    for (const ExprTerm& term : expr.terms) {
        Monomial base(dim, 0);
        for (const auto& [vi, ae] : term.powers) {
            long long e = ae.eval(bindings);
            if (e < 0) throw Error("negative exponent after substitution");
            base[vi] += e;
        }
        // Expand the product of all form macros of this term.
        std::vector<Monomial> expansion = {Monomial(dim, 0)};
        for (const FormMacro& fm : term.forms) {
            long long k = fm.degree.eval(bindings);
            if (k < 0) throw Error("negative form degree after substitution");
            Monomial u = detail::instantiate_monomial_arg(fm.arg1, dim, bindings);
            Monomial v = detail::instantiate_monomial_arg(fm.arg2, dim, bindings);
            std::vector<Monomial> next;
            for (const Monomial& prev : expansion)
                for (long long j = k; j >= 0; --j) {
                    Monomial m = prev;
                    for (int i = 0; i < dim; ++i) m[i] += j * u[i] + (k - j) * v[i];
                    next.push_back(std::move(m));
                }
            expansion = std::move(next);
        }
        if (term.forms.empty()) {
            CoefficientTag tag;
            if (!term.labels.empty()) {
                std::string lab = term.labels[0];
                for (std::size_t i = 1; i < term.labels.size(); ++i) lab += "*" + term.labels[i];
                tag = CoefficientTag::generic_nonzero(lab);
            } else {
                Rat v = term.coefficient ? *term.coefficient : Rat(1);
                v *= term.sign;
                if (v == 0) continue;
                tag = CoefficientTag::exact(v);
            }
            builder.add(base, tag);
        } else {
            for (const Monomial& em : expansion) {
                Monomial m = base;
                for (int i = 0; i < dim; ++i) m[i] += em[i];
                builder.add(m, CoefficientTag::generic_nonzero("c" + std::to_string(++fresh)));
            }
        }
    }
    return builder.build();
}

/// Convenience: parse and instantiate a parameter-free polynomial.
inline SupportedPolynomial parse_poly(const std::string& text,
                                      std::vector<std::string> variables = {"t", "z", "x", "y"}) {
    return instantiate(parse_expression(text, {}, std::move(variables)), {});
}

}  // namespace sing
