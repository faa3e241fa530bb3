#include "presto/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

#include "presto/errors.hpp"

namespace presto {

std::string double_to_string(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

namespace {

enum class TokKind { Ident, Number, String, Symbol, End };

struct Token {
    TokKind kind = TokKind::End;
    std::string text;
    int line = 0;
    int col = 0;

    bool is_symbol(const char* s) const { return kind == TokKind::Symbol && text == s; }
    bool is_ident(const char* s) const { return kind == TokKind::Ident && text == s; }
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(tok_.line, tok_.col, msg);
    }

    Token expect_symbol(const char* s) {
        if (!tok_.is_symbol(s)) fail("expected '" + std::string(s) + "', got '" + describe() + "'");
        return take();
    }

    Token expect_ident() {
        if (tok_.kind != TokKind::Ident) fail("expected identifier, got '" + describe() + "'");
        return take();
    }

    Token expect_keyword(const char* kw) {
        if (!tok_.is_ident(kw)) fail("expected '" + std::string(kw) + "', got '" + describe() + "'");
        return take();
    }

    Token expect_number() {
        if (tok_.kind != TokKind::Number) fail("expected number, got '" + describe() + "'");
        return take();
    }

    Token expect_string() {
        if (tok_.kind != TokKind::String) fail("expected quoted string, got '" + describe() + "'");
        return take();
    }

    std::string describe() const {
        return tok_.kind == TokKind::End ? "end of input" : tok_.text;
    }

private:
    void advance() {
        skip_ws_and_comments();
        tok_ = Token{TokKind::End, "", line_, col_};
        if (pos_ >= text_.size()) return;
        const char c = text_[pos_];
        tok_.line = line_;
        tok_.col = col_;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                bump();
            tok_ = Token{TokKind::Ident, text_.substr(start, pos_ - start), tok_.line, tok_.col};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                           text_[pos_] == '.'))
                bump();
            tok_ = Token{TokKind::Number, text_.substr(start, pos_ - start), tok_.line, tok_.col};
            return;
        }
        if (c == '"') {
            bump();
            std::size_t start = pos_;
            while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') bump();
            if (pos_ >= text_.size() || text_[pos_] != '"')
                throw SyntaxError(tok_.line, tok_.col, "unterminated string");
            tok_ = Token{TokKind::String, text_.substr(start, pos_ - start), tok_.line, tok_.col};
            bump();
            return;
        }
        // multi-char symbols first
        static const char* two_char[] = {"->", ">=", "<=", "=?"};
        for (const char* s : two_char) {
            if (text_.compare(pos_, 2, s) == 0) {
                tok_ = Token{TokKind::Symbol, s, tok_.line, tok_.col};
                bump();
                bump();
                return;
            }
        }
        static const std::string singles = ";,:=(){}[]+-*/<>&!?";
        if (singles.find(c) != std::string::npos) {
            tok_ = Token{TokKind::Symbol, std::string(1, c), tok_.line, tok_.col};
            bump();
            return;
        }
        throw SyntaxError(line_, col_, std::string("unexpected character '") + c + "'");
    }

    void skip_ws_and_comments() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

// ---------------------------------------------------------------------------
// model format
// ---------------------------------------------------------------------------

class ModelParser {
public:
    explicit ModelParser(const std::string& text) : lex_(text) {}

    ParsedModel run() {
        lex_.expect_keyword("pdtmc");
        lex_.expect_symbol(";");
        while (lex_.peek().kind != TokKind::End) declaration();
        finish();
        return std::move(out_);
    }

private:
    void declaration() {
        const Token& t = lex_.peek();
        if (t.is_ident("param")) {
            param_decl();
        } else if (t.is_ident("const")) {
            const_decl();
        } else if (t.is_ident("state")) {
            state_decl();
        } else if (t.is_ident("init")) {
            init_decl();
        } else if (t.is_ident("reward")) {
            reward_decl();
        } else if (t.kind == TokKind::Ident) {
            transition_decl();
        } else {
            lex_.fail("expected declaration, got '" + lex_.describe() + "'");
        }
    }

    void param_decl() {
        lex_.take();
        const Token name = lex_.expect_ident();
        lex_.expect_keyword("in");
        lex_.expect_symbol("[");
        const double lo = number();
        lex_.expect_symbol(",");
        const double hi = number();
        lex_.expect_symbol("]");
        lex_.expect_symbol(";");
        if (!(lo < hi)) lex_.fail("empty domain for parameter " + name.text);
        const ParamId p(name.text);
        if (out_.model.params.is_declared(p))
            lex_.fail("parameter '" + name.text + "' declared twice");
        out_.model.params.domains[p] = {lo, hi};
    }

    void const_decl() {
        lex_.take();
        const Token name = lex_.expect_ident();
        lex_.expect_symbol("=");
        const Token value = lex_.expect_number();
        lex_.expect_symbol(";");
        const ParamId p(name.text);
        if (out_.model.params.is_declared(p))
            lex_.fail("constant '" + name.text + "' declared twice");
        out_.model.params.constants[p] = rational_from_string(value.text);
    }

    void state_decl() {
        lex_.take();
        const Token name = lex_.expect_ident();
        if (state_index_.count(name.text)) throw DuplicateState(name.text);
        std::set<std::string> labels;
        if (lex_.peek().is_symbol("{")) {
            lex_.take();
            labels.insert(lex_.expect_string().text);
            while (lex_.peek().is_symbol(",")) {
                lex_.take();
                labels.insert(lex_.expect_string().text);
            }
            lex_.expect_symbol("}");
        }
        lex_.expect_symbol(";");
        state_index_[name.text] = static_cast<int>(out_.model.state_names.size());
        out_.model.state_names.push_back(name.text);
        out_.model.labels.push_back(std::move(labels));
        out_.model.trans.emplace_back();
    }

    void init_decl() {
        lex_.take();
        const Token name = lex_.expect_ident();
        lex_.expect_symbol(";");
        out_.model.init = state(name);
        saw_init_ = true;
    }

    void reward_decl() {
        lex_.take();
        const Token name = lex_.expect_string();
        if (out_.reward_structure(name.text))
            lex_.fail("reward structure '" + name.text + "' declared twice");
        RewardStructure rs{name.text, {}};
        lex_.expect_symbol("{");
        while (!lex_.peek().is_symbol("}")) {
            const Token st = lex_.expect_ident();
            lex_.expect_symbol(":");
            RationalFunction value(expression());
            lex_.expect_symbol(";");
            const int s = state(st);
            if (rs.rewards.count(s)) lex_.fail("reward for state " + st.text + " given twice");
            rs.rewards.emplace(s, std::move(value));
        }
        lex_.take();
        out_.rewards.push_back(std::move(rs));
    }

    void transition_decl() {
        const Token from = lex_.expect_ident();
        lex_.expect_symbol("->");
        const Token to = lex_.expect_ident();
        lex_.expect_symbol(":");
        RationalFunction prob(expression());
        lex_.expect_symbol(";");
        const int f = state(from);
        const int t = state(to);
        if (out_.model.transition(f, t))
            lex_.fail("transition " + from.text + " -> " + to.text + " given twice");
        out_.model.set_transition(f, t, std::move(prob));
    }

    // expr := ['-'] term (('+'|'-') term)* ; division is rejected
    Polynomial expression() {
        bool negate = false;
        if (lex_.peek().is_symbol("-")) {
            lex_.take();
            negate = true;
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (lex_.peek().is_symbol("+") || lex_.peek().is_symbol("-")) {
            const bool minus = lex_.take().text == "-";
            Polynomial t = term();
            acc = minus ? acc - t : acc + t;
        }
        if (lex_.peek().is_symbol("/"))
            lex_.fail("division is not allowed in model expressions");
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            if (lex_.peek().is_symbol("*")) {
                lex_.take();
                acc = acc * factor();
            } else if (lex_.peek().is_symbol("/")) {
                lex_.fail("division is not allowed in model expressions");
            } else {
                return acc;
            }
        }
    }

    Polynomial factor() {
        const Token& t = lex_.peek();
        if (t.kind == TokKind::Number)
            return Polynomial::constant(rational_from_string(lex_.take().text));
        if (t.kind == TokKind::Ident) {
            const Token id = lex_.take();
            const ParamId p(id.text);
            if (!out_.model.params.is_declared(p)) throw UnknownParameter(id.text);
            return Polynomial::variable(p);
        }
        if (t.is_symbol("(")) {
            lex_.take();
            Polynomial inner = expression();
            lex_.expect_symbol(")");
            return inner;
        }
        lex_.fail("expected expression, got '" + lex_.describe() + "'");
    }

    int state(const Token& name) {
        auto it = state_index_.find(name.text);
        if (it == state_index_.end())
            throw SyntaxError(name.line, name.col, "unknown state '" + name.text + "'");
        return it->second;
    }

    double number() {
        const Token t = lex_.expect_number();
        return std::stod(t.text);
    }

    void finish() {
        if (out_.model.state_names.empty())
            throw SyntaxError(1, 1, "model declares no states");
        if (!saw_init_) out_.model.init = 0;
        for (int s = 0; s < out_.model.state_count(); ++s)
            if (out_.model.trans[s].empty()) throw RowIncomplete(out_.model.state_names[s]);
    }

    Lexer lex_;
    ParsedModel out_;
    std::map<std::string, int> state_index_;
    bool saw_init_ = false;
};

// ---------------------------------------------------------------------------
// property format
// ---------------------------------------------------------------------------

class PropertyParser {
public:
    explicit PropertyParser(const std::string& text) : lex_(text) {}

    std::vector<Requirement> run() {
        std::vector<Requirement> out;
        while (lex_.peek().kind != TokKind::End) {
            out.push_back(requirement(static_cast<int>(out.size()) + 1));
            if (lex_.peek().is_symbol(";")) lex_.take();
        }
        return out;
    }

private:
    Requirement requirement(int position) {
        Requirement req;
        req.id = "R" + std::to_string(position);
        // optional "id :" prefix; P/R start a query only when followed by =? or {
        if (lex_.peek().kind == TokKind::Ident && !lex_.peek().is_ident("P") &&
            !lex_.peek().is_ident("R")) {
            req.id = lex_.take().text;
            lex_.expect_symbol(":");
        } else if (lex_.peek().kind == TokKind::Ident) {
            // P or R could still be a requirement id
            Token head = lex_.take();
            if (lex_.peek().is_symbol(":")) {
                req.id = head.text;
                lex_.take();
            } else {
                pending_head_ = head;
            }
        }
        req.property = property();
        if (!lex_.peek().is_symbol(">=") && !lex_.peek().is_symbol("<="))
            throw UnboundComparator(req.id);
        req.comparator =
            lex_.take().text == ">=" ? Comparator::GreaterEq : Comparator::LessEq;
        Token num = lex_.expect_number();
        req.threshold = std::stod(num.text);
        return req;
    }

    PropertyAst property() {
        Token head;
        if (pending_head_) {
            head = *pending_head_;
            pending_head_.reset();
        } else {
            head = lex_.expect_ident();
        }
        if (head.text == "P") {
            lex_.expect_symbol("=?");
            lex_.expect_symbol("[");
            PathFormula path = path_formula();
            lex_.expect_symbol("]");
            return PropertyAst{ProbQuery{std::move(path)}};
        }
        if (head.text == "R") {
            lex_.expect_symbol("{");
            const Token name = lex_.expect_string();
            lex_.expect_symbol("}");
            lex_.expect_symbol("=?");
            lex_.expect_symbol("[");
            RewardQuery q = reward_body(name.text);
            lex_.expect_symbol("]");
            return PropertyAst{std::move(q)};
        }
        throw SyntaxError(head.line, head.col, "expected P=? or R{...}=? query");
    }

    PathFormula path_formula() {
        PathFormula out;
        if (lex_.peek().is_ident("X")) {
            lex_.take();
            out.kind = PathFormula::Kind::Next;
            out.rhs = state_formula();
            return out;
        }
        if (lex_.peek().is_ident("F")) {
            lex_.take();
            out.kind = PathFormula::Kind::Eventually;
            out.rhs = state_formula();
            return out;
        }
        out.lhs = state_formula();
        lex_.expect_keyword("U");
        if (lex_.peek().is_symbol("<=")) {
            lex_.take();
            out.kind = PathFormula::Kind::BoundedUntil;
            out.bound = step_bound();
        } else {
            out.kind = PathFormula::Kind::Until;
        }
        out.rhs = state_formula();
        return out;
    }

    RewardQuery reward_body(const std::string& reward_name) {
        RewardQuery q;
        q.reward_name = reward_name;
        if (lex_.peek().is_ident("F")) {
            lex_.take();
            q.kind = RewardQuery::Kind::Reachability;
            q.target = state_formula();
        } else if (lex_.peek().is_ident("C")) {
            lex_.take();
            lex_.expect_symbol("<=");
            q.kind = RewardQuery::Kind::Cumulative;
            q.bound = step_bound();
        } else if (lex_.peek().is_ident("I")) {
            lex_.take();
            lex_.expect_symbol("=");
            q.kind = RewardQuery::Kind::Instantaneous;
            q.bound = step_bound();
        } else if (lex_.peek().is_ident("S")) {
            lex_.take();
            q.kind = RewardQuery::Kind::SteadyState;
        } else {
            lex_.fail("expected F, C<=k, I=k or S reward query");
        }
        return q;
    }

    StateFormula state_formula() {
        StateFormula acc = unary_formula();
        while (lex_.peek().is_symbol("&")) {
            lex_.take();
            acc = StateFormula::conjunction(std::move(acc), unary_formula());
        }
        return acc;
    }

    StateFormula unary_formula() {
        if (lex_.peek().is_symbol("!")) {
            lex_.take();
            return StateFormula::negation(unary_formula());
        }
        if (lex_.peek().is_ident("true")) {
            lex_.take();
            return StateFormula::truth();
        }
        if (lex_.peek().kind == TokKind::String) return StateFormula::atom(lex_.take().text);
        if (lex_.peek().is_symbol("(")) {
            lex_.take();
            StateFormula inner = state_formula();
            lex_.expect_symbol(")");
            return inner;
        }
        lex_.fail("expected state formula, got '" + lex_.describe() + "'");
    }

    int step_bound() {
        const Token t = lex_.expect_number();
        if (t.text.find('.') != std::string::npos)
            throw SyntaxError(t.line, t.col, "step bound must be an integer");
        const int k = std::stoi(t.text);
        if (k < 1) throw SyntaxError(t.line, t.col, "step bound must be >= 1");
        return k;
    }

    Lexer lex_;
    std::optional<Token> pending_head_;
};

}  // namespace

namespace {

// Model expressions forbid '/' so coefficients are rendered as exact
// decimals; parsed models only ever contain decimal-representable ones.
std::string polynomial_to_model_expr(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        std::string vars;
        for (const auto& [param, e] : it->first.exponents())
            for (int i = 0; i < e; ++i) vars += (vars.empty() ? "" : "*") + param.name();
        const Rational& c = it->second;
        std::string term;
        if (vars.empty()) {
            term = rational_to_decimal_string(c);
            if (c < 0) term = "(" + term + ")";
        } else if (c == 1) {
            term = vars;
        } else {
            term = rational_to_decimal_string(c);
            if (c < 0) term = "(" + term + ")";
            term += "*" + vars;
        }
        out += (out.empty() ? "" : "+") + term;
    }
    return out;
}

}  // namespace

const RewardStructure* ParsedModel::reward_structure(const std::string& name) const {
    for (const auto& rs : rewards)
        if (rs.name == name) return &rs;
    return nullptr;
}

ParsedModel parse_model(const std::string& text) {
    return ModelParser(text).run();
}

std::vector<Requirement> parse_properties(const std::string& text) {
    return PropertyParser(text).run();
}

std::string serialize_model(const ParsedModel& pm) {
    std::ostringstream out;
    out << "pdtmc;\n\n";
    for (const auto& [p, dom] : pm.model.params.domains)
        out << "param " << p.name() << " in [" << double_to_string(dom.lo) << ", "
            << double_to_string(dom.hi) << "];\n";
    for (const auto& [p, value] : pm.model.params.constants)
        out << "const " << p.name() << " = " << rational_to_decimal_string(value) << ";\n";
    out << "\n";
    for (int s = 0; s < pm.model.state_count(); ++s) {
        out << "state " << pm.model.state_names[s];
        if (!pm.model.labels[s].empty()) {
            out << " {";
            bool first = true;
            for (const auto& l : pm.model.labels[s]) {
                out << (first ? "" : ", ") << '"' << l << '"';
                first = false;
            }
            out << "}";
        }
        out << ";\n";
    }
    out << "init " << pm.model.state_names[pm.model.init] << ";\n\n";
    for (int s = 0; s < pm.model.state_count(); ++s)
        for (const auto& [succ, f] : pm.model.trans[s])
            out << pm.model.state_names[s] << " -> " << pm.model.state_names[succ] << " : "
                << polynomial_to_model_expr(f.num()) << ";\n";
    for (const auto& rs : pm.rewards) {
        out << "\nreward \"" << rs.name << "\" {\n";
        for (const auto& [s, f] : rs.rewards)
            out << "  " << pm.model.state_names[s] << " : " << polynomial_to_model_expr(f.num())
                << ";\n";
        out << "}\n";
    }
    return out.str();
}

std::string serialize_properties(const std::vector<Requirement>& reqs) {
    std::ostringstream out;
    for (const auto& r : reqs) out << r.to_string() << "\n";
    return out.str();
}

}  // namespace presto
