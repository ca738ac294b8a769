#include "gsat/parser.hpp"

#include <cctype>

namespace gsat {

namespace {

struct Token {
    enum class Kind { Ident, LParen, RParen, Comma, Semi, Assign, Bang, Amp, Pipe, Eq, Neq, End };
    Kind kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& cur() const { return cur_; }
    const Token& peek() {
        if (!peeked_) {
            peek_ = lex();
            peeked_ = true;
        }
        return peek_;
    }
    void advance() {
        if (peeked_) {
            cur_ = peek_;
            peeked_ = false;
        } else {
            cur_ = lex();
        }
    }

private:
    Token lex() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
                continue;
            }
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
                continue;
            }
            break;
        }
        int line = line_, col = col_;
        if (pos_ >= s_.size()) return {Token::Kind::End, "", line, col};
        char c = s_[pos_];
        auto one = [&](Token::Kind k) {
            ++pos_;
            ++col_;
            return Token{k, std::string(1, c), line, col};
        };
        switch (c) {
        case '(': return one(Token::Kind::LParen);
        case ')': return one(Token::Kind::RParen);
        case ',': return one(Token::Kind::Comma);
        case ';': return one(Token::Kind::Semi);
        case '&': return one(Token::Kind::Amp);
        case '|': return one(Token::Kind::Pipe);
        case '=': return one(Token::Kind::Eq);
        case ':':
            if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '=') {
                pos_ += 2;
                col_ += 2;
                return {Token::Kind::Assign, ":=", line, col};
            }
            throw parse_error("expected ':='", line, col);
        case '!':
            if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '=') {
                pos_ += 2;
                col_ += 2;
                return {Token::Kind::Neq, "!=", line, col};
            }
            return one(Token::Kind::Bang);
        default:
            break;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string text = s_.substr(start, pos_ - start);
            col_ += int(text.size());
            return {Token::Kind::Ident, text, line, col};
        }
        throw parse_error(std::string("unexpected character '") + c + "'", line, col);
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_{};
    Token peek_{};
    bool peeked_ = false;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    RelationEnv parse() {
        RelationEnv env;
        while (lex_.cur().kind != Token::Kind::End) {
            RelDef def = parse_reldef();
            if (env.by_name.count(def.name))
                throw parse_error("duplicate relation name '" + def.name + "'");
            env.by_name[def.name] = int(env.defs.size());
            env.defs.push_back(std::move(def));
        }
        return env;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error(msg, lex_.cur().line, lex_.cur().col);
    }

    void expect(Token::Kind k, const char* what) {
        if (lex_.cur().kind != k) fail(std::string("expected ") + what);
        lex_.advance();
    }

    std::string expect_ident(const char* what) {
        if (lex_.cur().kind != Token::Kind::Ident) fail(std::string("expected ") + what);
        std::string s = lex_.cur().text;
        lex_.advance();
        return s;
    }

    RelDef parse_reldef() {
        if (lex_.cur().kind != Token::Kind::Ident || lex_.cur().text != "rel")
            fail("expected 'rel'");
        lex_.advance();
        RelDef def;
        def.name = expect_ident("relation name");

        bool have_varlist = false;
        if (lex_.cur().kind == Token::Kind::LParen) {
            have_varlist = true;
            lex_.advance();
            while (true) {
                std::string v = expect_ident("variable name");
                check_var_name(v);
                for (auto& w : def.vars)
                    if (w == v) fail("duplicate variable '" + v + "' in variable list");
                def.vars.push_back(v);
                if (lex_.cur().kind == Token::Kind::Comma) {
                    lex_.advance();
                    continue;
                }
                break;
            }
            expect(Token::Kind::RParen, "')'");
        }
        expect(Token::Kind::Assign, "':='");

        if (lex_.cur().kind == Token::Kind::Ident &&
            lex_.peek().kind == Token::Kind::Semi) {
            // whole RHS is a single identifier: builtin reference
            std::string name = lex_.cur().text;
            auto b = builtin_by_name(name);
            if (!b) fail("unknown builtin '" + name + "'");
            lex_.advance();
            def.builtin = b;
            def.arity = builtin_arity(*b);
            if (have_varlist && int(def.vars.size()) != def.arity)
                fail("variable list length does not match builtin arity");
            def.vars.clear();
        } else {
            vars_ = &def.vars;
            declared_ = have_varlist;
            def.formula = parse_disj();
            def.arity = int(def.vars.size());
            if (def.arity == 0) fail("relation has no variables");
        }
        expect(Token::Kind::Semi, "';'");
        return def;
    }

    void check_var_name(const std::string& v) {
        if (v == "E" || v == "N" || v == "rel")
            fail("'" + v + "' is reserved and cannot name a variable");
    }

    int var_pos(const std::string& v) {
        check_var_name(v);
        for (size_t i = 0; i < vars_->size(); ++i)
            if ((*vars_)[i] == v) return int(i);
        if (declared_) fail("variable '" + v + "' not in the declared variable list");
        vars_->push_back(v);
        return int(vars_->size()) - 1;
    }

    Formula parse_disj() {
        std::vector<Formula> parts;
        parts.push_back(parse_conj());
        while (lex_.cur().kind == Token::Kind::Pipe) {
            lex_.advance();
            parts.push_back(parse_conj());
        }
        if (parts.size() == 1) return std::move(parts[0]);
        return Formula::lor(std::move(parts));
    }

    Formula parse_conj() {
        std::vector<Formula> parts;
        parts.push_back(parse_lit());
        while (lex_.cur().kind == Token::Kind::Amp) {
            lex_.advance();
            parts.push_back(parse_lit());
        }
        if (parts.size() == 1) return std::move(parts[0]);
        return Formula::land(std::move(parts));
    }

    Formula parse_lit() {
        if (lex_.cur().kind == Token::Kind::Bang) {
            lex_.advance();
            return Formula::lnot(parse_lit());
        }
        if (lex_.cur().kind == Token::Kind::LParen) {
            lex_.advance();
            Formula f = parse_disj();
            expect(Token::Kind::RParen, "')'");
            return f;
        }
        return parse_atom();
    }

    Formula parse_atom() {
        if (lex_.cur().kind != Token::Kind::Ident) fail("expected an atom");
        std::string head = lex_.cur().text;
        if ((head == "E" || head == "N") && lex_.peek().kind == Token::Kind::LParen) {
            lex_.advance();
            lex_.advance();
            int a = var_pos(expect_ident("variable name"));
            expect(Token::Kind::Comma, "','");
            int b = var_pos(expect_ident("variable name"));
            expect(Token::Kind::RParen, "')'");
            if (head == "E") return Formula::atom_e(a, b);
            // N(x,y) => !E(x,y) & !(x=y)
            return Formula::land({Formula::lnot(Formula::atom_e(a, b)),
                                  Formula::lnot(Formula::atom_eq(a, b))});
        }
        int a = var_pos(expect_ident("variable name"));
        if (lex_.cur().kind == Token::Kind::Eq) {
            lex_.advance();
            int b = var_pos(expect_ident("variable name"));
            return Formula::atom_eq(a, b);
        }
        if (lex_.cur().kind == Token::Kind::Neq) {
            lex_.advance();
            int b = var_pos(expect_ident("variable name"));
            return Formula::lnot(Formula::atom_eq(a, b));
        }
        fail("expected '=' or '!=' after variable");
    }

    Lexer lex_;
    std::vector<std::string>* vars_ = nullptr;
    bool declared_ = false;
};

} // namespace

RelationEnv parse_spec(const std::string& text) {
    return Parser(text).parse();
}

TypeTable table_of(const RelDef& def, bool allow_large) {
    if (def.builtin) return builtin_table(*def.builtin);
    return compile_table(def.formula, def.arity, allow_large);
}

std::vector<TypeTable> compile_env(const RelationEnv& env, bool allow_large) {
    std::vector<TypeTable> out;
    out.reserve(env.defs.size());
    for (auto& d : env.defs) out.push_back(table_of(d, allow_large));
    return out;
}

} // namespace gsat
