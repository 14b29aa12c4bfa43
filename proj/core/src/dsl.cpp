#include "optop/dsl.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <exception>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace optop::dsl {

namespace {

std::string located(int line, int column, const std::string& message)
{
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

std::string join(const std::vector<std::string>& items)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i)
            out += ", ";
        out += items[i];
    }
    return out;
}

} // namespace

Error::Error(int line, int column, const std::string& message)
    : optop::Error(located(line, column, message)), line_(line), column_(column)
{
}

SyntaxError::SyntaxError(int line, int column, std::vector<std::string> expected, const std::string& found)
    : Error(line, column, "syntax error: expected " + join(expected) + " but found " + found),
      expected_(std::move(expected))
{
}

std::string_view name_of(Qualifier q)
{
    switch (q) {
    case Qualifier::Open: return "open";
    case Qualifier::Closed: return "closed";
    case Qualifier::RegOpen: return "regopen";
    case Qualifier::RegClosed: return "regclosed";
    case Qualifier::Clopen: return "clopen";
    case Qualifier::TstarClosed: return "tstarclosed";
    case Qualifier::Any: return "any";
    case Qualifier::Point: return "point";
    }
    throw std::logic_error("unknown Qualifier");
}

namespace {

constexpr int kMaxSlots = 32;

// ---------------------------------------------------------------- lexer

struct Token {
    enum class Kind { Ident, Symbol, End } kind;
    std::string text;
    int line;
    int column;
};

std::string describe(const Token& t)
{
    if (t.kind == Token::Kind::End)
        return "end of input";
    return "'" + t.text + "'";
}

std::vector<Token> tokenize(std::string_view src)
{
    std::vector<Token> out;
    int line = 1;
    int column = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j) {
            if (src[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
            ++i;
        }
    };
    static const std::array<std::string_view, 3> two_char{":=", "<=", "->"};
    while (i < src.size()) {
        const char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n')
                advance(1);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            out.push_back({Token::Kind::Ident, std::string(src.substr(i, j - i)), line, column});
            advance(j - i);
            continue;
        }
        bool matched = false;
        for (auto op : two_char) {
            if (src.substr(i, 2) == op) {
                out.push_back({Token::Kind::Symbol, std::string(op), line, column});
                advance(2);
                matched = true;
                break;
            }
        }
        if (matched)
            continue;
        if (std::string_view("(),;:.@=~|&").find(c) != std::string_view::npos) {
            out.push_back({Token::Kind::Symbol, std::string(1, c), line, column});
            advance(1);
            continue;
        }
        throw SyntaxError(line, column, {"a token"}, "'" + std::string(1, c) + "'");
    }
    out.push_back({Token::Kind::End, "", line, column});
    return out;
}

// --------------------------------------------------------------- parser

const std::set<std::string, std::less<>> kReserved{
    "setclass", "funclass", "operator", "forall", "exists", "not", "and",  "or",
    "in",       "Int",      "Cl",       "T",      "TCl",    "pCl", "inv",  "image",
    "EMPTY",    "FULLX",    "FULLY",    "X",      "Y",
};

std::optional<Qualifier> qualifier_from(std::string_view s)
{
    for (Qualifier q : {Qualifier::Open, Qualifier::Closed, Qualifier::RegOpen, Qualifier::RegClosed,
                        Qualifier::Clopen, Qualifier::TstarClosed, Qualifier::Any, Qualifier::Point})
        if (name_of(q) == s)
            return q;
    return std::nullopt;
}

using SetPtr = std::shared_ptr<const SetExpr>;
using FormulaPtr = std::shared_ptr<const Formula>;
using DefPtr = std::shared_ptr<const Definition>;

enum class Context { SetClass, Operator, FunClass };

struct Variable {
    std::string name;
    bool point;
    Side side;
    int slot;
};

Side combine(Side a, Side b, const Token& at)
{
    if (a == Side::Either)
        return b;
    if (b == Side::Either || a == b)
        return a;
    throw TypeError(at.line, at.column, "side mismatch: cannot combine X-side and Y-side sets");
}

// Fixes the side of EMPTY-built terms once the surrounding context knows it.
SetPtr settle(const SetPtr& e, Side side)
{
    if (e->side != Side::Either || side == Side::Either)
        return e;
    auto copy = std::make_shared<SetExpr>(*e);
    copy->side = side;
    for (auto& a : copy->args)
        a = settle(a, side);
    return copy;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, std::map<std::string, DefPtr, std::less<>> visible)
        : tokens_(std::move(tokens)), visible_(std::move(visible))
    {
    }

    std::vector<DefPtr> program()
    {
        std::vector<DefPtr> out;
        while (peek().kind != Token::Kind::End) {
            auto d = definition();
            expect(";");
            visible_[d->name] = d;
            out.push_back(std::move(d));
        }
        return out;
    }

    // A closed formula with function variable f.
    std::pair<FormulaPtr, int> target()
    {
        begin(Context::FunClass, "f");
        auto f = formula();
        if (peek().kind != Token::Kind::End)
            fail({"end of input"});
        return {f, slots_};
    }

private:
    // ---- token helpers
    const Token& peek(std::size_t k = 0) const { return tokens_[std::min(pos_ + k, tokens_.size() - 1)]; }
    bool at(std::string_view text) const { return peek().kind != Token::Kind::End && peek().text == text; }
    bool at_symbol(std::string_view text) const { return peek().kind == Token::Kind::Symbol && peek().text == text; }
    const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(std::vector<std::string> expected) const
    {
        throw SyntaxError(peek().line, peek().column, std::move(expected), describe(peek()));
    }

    const Token& expect(std::string_view text)
    {
        if (!at(text))
            fail({"'" + std::string(text) + "'"});
        return next();
    }

    const Token& identifier(const char* what)
    {
        if (peek().kind != Token::Kind::Ident)
            fail({what});
        return next();
    }

    [[noreturn]] static void type_error(const Token& at, const std::string& message)
    {
        throw TypeError(at.line, at.column, message);
    }

    // ---- scope
    void begin(Context c, std::string parameter)
    {
        context_ = c;
        scope_.clear();
        slots_ = 0;
        function_var_.clear();
        if (c == Context::FunClass) {
            function_var_ = std::move(parameter);
        } else {
            scope_.push_back({std::move(parameter), false, Side::X, slots_++});
        }
    }

    const Variable* lookup(std::string_view name) const
    {
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
            if (it->name == name)
                return &*it;
        return nullptr;
    }

    DefPtr visible(std::string_view name) const
    {
        auto it = visible_.find(name);
        return it == visible_.end() ? nullptr : it->second;
    }

    void require_y(const Token& at) const
    {
        if (context_ != Context::FunClass)
            type_error(at, "Y-side sets are only available in funclass definitions");
    }

    void require_operator(const Token& at) const
    {
        if (context_ == Context::Operator)
            type_error(at, "'" + at.text + "' refers to T, which operator definitions cannot use");
    }

    void require_function_var(const Token& at) const
    {
        if (context_ != Context::FunClass || at.text != function_var_)
            type_error(at, "unknown function '" + at.text + "'");
    }

    // ---- definitions
    DefPtr definition()
    {
        Context ctx;
        DefinitionKind kind;
        if (at("setclass")) {
            ctx = Context::SetClass;
            kind = DefinitionKind::SetClass;
        } else if (at("funclass")) {
            ctx = Context::FunClass;
            kind = DefinitionKind::FunClass;
        } else if (at("operator")) {
            ctx = Context::Operator;
            kind = DefinitionKind::Operator;
        } else {
            fail({"'setclass'", "'funclass'", "'operator'"});
        }
        next();
        const Token& name = identifier("a definition name");
        if (kReserved.contains(name.text))
            type_error(name, "'" + name.text + "' is reserved");
        expect("(");
        const Token& param = identifier("a parameter name");
        if (kReserved.contains(param.text))
            type_error(param, "'" + param.text + "' is reserved");
        expect(")");
        expect(":=");

        auto d = std::make_shared<Definition>();
        d->name = name.text;
        d->kind = kind;
        d->parameter = param.text;
        begin(ctx, param.text);
        if (ctx == Context::Operator) {
            const Token& start = peek();
            d->set = settle(set(), Side::X);
            if (d->set->side != Side::X)
                type_error(start, "operator body must be an X-side set");
        } else {
            d->formula = formula();
        }
        if (slots_ > kMaxSlots)
            type_error(name, "too many bound variables");
        d->slot_count = slots_;
        return d;
    }

    // ---- formulas
    FormulaPtr formula() { return implies(); }

    static FormulaPtr node(Formula::Kind k, std::vector<FormulaPtr> children)
    {
        auto f = std::make_shared<Formula>();
        f->kind = k;
        f->children = std::move(children);
        return f;
    }

    FormulaPtr implies()
    {
        auto lhs = disjunction();
        if (at_symbol("->")) {
            next();
            auto rhs = implies();
            return node(Formula::Kind::Implies, {lhs, rhs});
        }
        return lhs;
    }

    FormulaPtr disjunction()
    {
        auto lhs = conjunction();
        while (at("or")) {
            next();
            lhs = node(Formula::Kind::Or, {lhs, conjunction()});
        }
        return lhs;
    }

    FormulaPtr conjunction()
    {
        auto lhs = negation();
        while (at("and")) {
            next();
            lhs = node(Formula::Kind::And, {lhs, negation()});
        }
        return lhs;
    }

    FormulaPtr negation()
    {
        if (at("not")) {
            next();
            return node(Formula::Kind::Not, {negation()});
        }
        return atom();
    }

    FormulaPtr quantifier()
    {
        const bool forall = at("forall");
        next();
        auto f = std::make_shared<Formula>();
        f->kind = forall ? Formula::Kind::Forall : Formula::Kind::Exists;
        const std::size_t scope_depth = scope_.size();
        for (;;) {
            const Token& name = identifier("a variable name");
            if (kReserved.contains(name.text))
                type_error(name, "'" + name.text + "' is reserved");
            if (lookup(name.text) || name.text == function_var_)
                type_error(name, "'" + name.text + "' is already bound");
            expect(":");
            const Token& qual = identifier("a qualifier");
            auto q = qualifier_from(qual.text);
            if (!q)
                throw SyntaxError(qual.line, qual.column,
                                  {"open", "closed", "regopen", "regclosed", "clopen", "tstarclosed",
                                   "any", "point"},
                                  describe(qual));
            expect("@");
            const Token& side_tok = peek();
            Side side;
            if (at("X")) {
                side = Side::X;
            } else if (at("Y")) {
                side = Side::Y;
                require_y(side_tok);
            } else {
                fail({"'X'", "'Y'"});
            }
            next();
            if (*q == Qualifier::TstarClosed) {
                if (side == Side::Y)
                    type_error(qual, "tstarclosed sets exist only on the X side");
                require_operator(qual);
            }
            Binder b{name.text, *q, side, slots_++};
            f->binders.push_back(b);
            scope_.push_back({b.name, *q == Qualifier::Point, side, b.slot});
            if (!at_symbol(","))
                break;
            next();
        }
        expect(".");
        f->children.push_back(formula());
        scope_.resize(scope_depth);
        return f;
    }

    FormulaPtr atom()
    {
        if (at("forall") || at("exists"))
            return quantifier();

        if (at_symbol("("))
            return parenthesised();

        const Token& tok = peek();
        if (tok.kind == Token::Kind::Ident && !kReserved.contains(tok.text)) {
            const Variable* var = lookup(tok.text);
            if (var && var->point && peek(1).text == "in") {
                next();
                next();
                const Token& at_set = peek();
                auto s = set();
                if (s->side != Side::Either && s->side != var->side)
                    type_error(at_set, "side mismatch: '" + var->name + "' is a point of the other side");
                auto f = std::make_shared<Formula>();
                f->kind = Formula::Kind::Member;
                f->name = var->name;
                f->slot = var->slot;
                f->sets.push_back(settle(s, var->side));
                return f;
            }
            if (!var) {
                if (auto call = class_call())
                    return call;
            }
        }
        return comparison();
    }

    FormulaPtr parenthesised()
    {
        const std::size_t saved_pos = pos_;
        const int saved_slots = slots_;
        const std::size_t saved_scope = scope_.size();
        try {
            next();
            auto f = formula();
            expect(")");
            return f;
        } catch (const Error&) {
            // Not a parenthesised formula; retry as a comparison whose left
            // operand starts with a parenthesised set. Report whichever
            // attempt got further.
            const std::exception_ptr first = std::current_exception();
            const std::size_t first_pos = pos_;
            pos_ = saved_pos;
            slots_ = saved_slots;
            scope_.resize(saved_scope);
            try {
                return comparison();
            } catch (const Error&) {
                if (first_pos > pos_)
                    std::rethrow_exception(first);
                throw;
            }
        }
    }

    // IDENT "(" arg ")" or a bare function-class name.
    FormulaPtr class_call()
    {
        const Token& name = peek();
        DefPtr d = visible(name.text);
        auto f = std::make_shared<Formula>();
        f->name = name.text;

        const bool is_setclass = d ? d->kind == DefinitionKind::SetClass
                                   : set_class_from_name(name.text).has_value();
        const bool is_funclass = d ? d->kind == DefinitionKind::FunClass
                                   : function_class_from_name(name.text).has_value();

        if (is_setclass && peek(1).text == "(") {
            next();
            next();
            const Token& arg_tok = peek();
            auto arg = set();
            expect(")");
            if (d) {
                if (arg->side == Side::Y)
                    type_error(arg_tok, "setclass '" + name.text + "' applies to X-side sets");
                f->kind = Formula::Kind::SetClassCall;
                f->callee = d;
                f->sets.push_back(settle(arg, Side::X));
            } else {
                f->kind = Formula::Kind::NativeSetClass;
                f->native_set_class = *set_class_from_name(name.text);
                f->name = std::string(optop::name_of(f->native_set_class));
                f->sets.push_back(settle(arg, Side::X));
            }
            return f;
        }
        if (is_funclass) {
            if (context_ != Context::FunClass)
                type_error(name, "function class '" + name.text + "' used outside a funclass");
            next();
            if (at_symbol("(")) {
                next();
                const Token& fn = identifier("a function name");
                require_function_var(fn);
                expect(")");
            }
            if (d) {
                f->kind = Formula::Kind::FunClassCall;
                f->callee = d;
            } else {
                f->kind = Formula::Kind::NativeFunClass;
                f->native_function_class = *function_class_from_name(name.text);
                f->name = std::string(optop::name_of(f->native_function_class));
            }
            return f;
        }
        return nullptr;
    }

    FormulaPtr comparison()
    {
        auto lhs = set();
        Formula::Kind kind;
        if (at_symbol("<="))
            kind = Formula::Kind::Subseteq;
        else if (at_symbol("="))
            kind = Formula::Kind::SetEq;
        else
            fail({"'<='", "'='"});
        const Token& op = next();
        auto rhs = set();
        Side side = combine(lhs->side, rhs->side, op);
        if (side == Side::Either)
            side = Side::X;
        auto f = std::make_shared<Formula>();
        f->kind = kind;
        f->sets = {settle(lhs, side), settle(rhs, side)};
        return f;
    }

    // ---- sets
    static std::shared_ptr<SetExpr> make_set(SetExpr::Kind k, Side side, std::vector<SetPtr> args = {})
    {
        auto s = std::make_shared<SetExpr>();
        s->kind = k;
        s->side = side;
        s->args = std::move(args);
        return s;
    }

    SetPtr set() { return set_union(); }

    SetPtr set_union()
    {
        auto lhs = set_intersection();
        while (at_symbol("|")) {
            const Token& op = next();
            auto rhs = set_intersection();
            lhs = make_set(SetExpr::Kind::Union, combine(lhs->side, rhs->side, op), {lhs, rhs});
        }
        return lhs;
    }

    SetPtr set_intersection()
    {
        auto lhs = set_complement();
        while (at_symbol("&")) {
            const Token& op = next();
            auto rhs = set_complement();
            lhs = make_set(SetExpr::Kind::Intersection, combine(lhs->side, rhs->side, op), {lhs, rhs});
        }
        return lhs;
    }

    SetPtr set_complement()
    {
        if (at_symbol("~")) {
            next();
            auto child = set_complement();
            return make_set(SetExpr::Kind::Complement, child->side, {child});
        }
        return set_primary();
    }

    SetPtr unary(SetExpr::Kind k, std::optional<Side> forced)
    {
        next();
        expect("(");
        const Token& arg_tok = peek();
        auto arg = set();
        expect(")");
        Side side = arg->side;
        if (forced) {
            if (side != Side::Either && side != *forced)
                type_error(arg_tok, "side mismatch: expected an X-side set");
            side = *forced;
            arg = settle(arg, side);
        }
        return make_set(k, side, {arg});
    }

    SetPtr set_primary()
    {
        const Token& tok = peek();
        if (at_symbol("(")) {
            next();
            auto s = set();
            expect(")");
            return s;
        }
        if (tok.kind != Token::Kind::Ident)
            fail({"a set"});

        const std::string& w = tok.text;
        if (w == "Int")
            return unary(SetExpr::Kind::Interior, std::nullopt);
        if (w == "Cl")
            return unary(SetExpr::Kind::Closure, std::nullopt);
        if (w == "pCl")
            return unary(SetExpr::Kind::PClosure, std::nullopt);
        if (w == "T" || w == "TCl") {
            require_operator(tok);
            return unary(w == "T" ? SetExpr::Kind::Apply : SetExpr::Kind::TClosure, Side::X);
        }
        if (w == "inv" || w == "image") {
            const bool inverse = w == "inv";
            next();
            expect("(");
            const Token& fn = identifier("a function name");
            require_function_var(fn);
            expect(",");
            const Token& arg_tok = peek();
            auto arg = set();
            expect(")");
            const Side from = inverse ? Side::Y : Side::X;
            if (arg->side != Side::Either && arg->side != from)
                type_error(arg_tok, std::string("side mismatch: ") + (inverse ? "inv" : "image") +
                                        " expects a " + (inverse ? "Y" : "X") + "-side set");
            auto s = make_set(inverse ? SetExpr::Kind::Inverse : SetExpr::Kind::Image,
                              inverse ? Side::X : Side::Y, {settle(arg, from)});
            s->name = fn.text;
            return s;
        }
        if (w == "EMPTY") {
            next();
            return make_set(SetExpr::Kind::Empty, Side::Either);
        }

        const Variable* var = lookup(w);
        if (var) {
            if (var->point)
                type_error(tok, "'" + w + "' is a point, not a set");
            next();
            auto s = make_set(SetExpr::Kind::Var, var->side);
            s->name = w;
            s->slot = var->slot;
            return s;
        }
        if (w == "FULLX" || w == "X") {
            next();
            return make_set(SetExpr::Kind::FullX, Side::X);
        }
        if (w == "FULLY" || w == "Y") {
            require_y(tok);
            next();
            return make_set(SetExpr::Kind::FullY, Side::Y);
        }
        if (!kReserved.contains(w) && peek(1).text == "(") {
            DefPtr d = visible(w);
            if (d && d->kind == DefinitionKind::Operator) {
                next();
                next();
                const Token& arg_tok = peek();
                auto arg = set();
                expect(")");
                if (arg->side == Side::Y)
                    type_error(arg_tok, "operator '" + w + "' applies to X-side sets");
                auto s = make_set(SetExpr::Kind::Call, Side::X, {settle(arg, Side::X)});
                s->name = w;
                s->callee = d;
                return s;
            }
        }
        if (kReserved.contains(w))
            fail({"a set"});
        type_error(tok, "unknown identifier " + w);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::map<std::string, DefPtr, std::less<>> visible_;
    Context context_ = Context::FunClass;
    std::vector<Variable> scope_;
    std::string function_var_;
    int slots_ = 0;
};

// ------------------------------------------------------------ evaluator

struct Frame {
    const Topology* x = nullptr;
    const OperatorSpace* os = nullptr;
    const Topology* y = nullptr;
    const FunctionInstance* f = nullptr;
    std::array<Mask, kMaxSlots> slots{};
};

const Topology& side_topology(const Frame& fr, Side side)
{
    const Topology* t = side == Side::Y ? fr.y : fr.x;
    if (!t)
        throw std::logic_error("DSL evaluation without a " + std::string(side == Side::Y ? "Y" : "X") +
                               "-side space");
    return *t;
}

Subset apply_t(const Frame& fr, Subset s)
{
    if (!fr.os)
        throw std::logic_error("DSL evaluation of T without an operator");
    return fr.os->op().apply(*fr.x, s);
}

bool tstar_closed_by_definition(const Frame& fr, Subset u)
{
    const Subset c = fr.x->complement(u);
    return c.subset_of(apply_t(fr, c));
}

Subset eval_set(const SetExpr& e, const Frame& fr);
bool eval_formula(const Formula& f, const Frame& fr);

Subset eval_set(const SetExpr& e, const Frame& fr)
{
    switch (e.kind) {
    case SetExpr::Kind::Var:
        return Subset{fr.slots[e.slot]};
    case SetExpr::Kind::Complement:
        return side_topology(fr, e.side).complement(eval_set(*e.args[0], fr));
    case SetExpr::Kind::Union:
        return eval_set(*e.args[0], fr) | eval_set(*e.args[1], fr);
    case SetExpr::Kind::Intersection:
        return eval_set(*e.args[0], fr) & eval_set(*e.args[1], fr);
    case SetExpr::Kind::Interior:
        return side_topology(fr, e.side).interior(eval_set(*e.args[0], fr));
    case SetExpr::Kind::Closure:
        return side_topology(fr, e.side).closure(eval_set(*e.args[0], fr));
    case SetExpr::Kind::PClosure: {
        const Topology& t = side_topology(fr, e.side);
        const Subset s = eval_set(*e.args[0], fr);
        return s | t.closure(t.interior(s));
    }
    case SetExpr::Kind::Apply:
        return apply_t(fr, eval_set(*e.args[0], fr));
    case SetExpr::Kind::TClosure: {
        const Subset s = eval_set(*e.args[0], fr);
        Subset result = fr.x->full();
        for (Mask m = 0; m < subset_count(fr.x->points()); ++m) {
            const Subset u{m};
            if (s.subset_of(u) && tstar_closed_by_definition(fr, u))
                result &= u;
        }
        return result;
    }
    case SetExpr::Kind::Inverse:
        return fr.f->preimage(eval_set(*e.args[0], fr));
    case SetExpr::Kind::Image:
        return fr.f->image(eval_set(*e.args[0], fr));
    case SetExpr::Kind::Empty:
        return Subset::empty();
    case SetExpr::Kind::FullX:
        return fr.x->full();
    case SetExpr::Kind::FullY:
        return side_topology(fr, Side::Y).full();
    case SetExpr::Kind::Call: {
        Frame inner;
        inner.x = fr.x;
        inner.slots[0] = eval_set(*e.args[0], fr).bits();
        return eval_set(*e.callee->set, inner);
    }
    }
    throw std::logic_error("unknown set node");
}

bool qualifies(const Frame& fr, const Topology& t, Qualifier q, Subset s)
{
    switch (q) {
    case Qualifier::Open: return t.interior(s) == s;
    case Qualifier::Closed: return t.closure(s) == s;
    case Qualifier::RegOpen: return t.interior(t.closure(s)) == s;
    case Qualifier::RegClosed: return t.closure(t.interior(s)) == s;
    case Qualifier::Clopen: return t.interior(s) == s && t.closure(s) == s;
    case Qualifier::TstarClosed: return tstar_closed_by_definition(fr, s);
    case Qualifier::Any: return true;
    case Qualifier::Point: break;
    }
    throw std::logic_error("point qualifier has no subset test");
}

bool quantify(const Formula& f, Frame& fr, std::size_t i)
{
    if (i == f.binders.size())
        return eval_formula(*f.children[0], fr);
    const Binder& b = f.binders[i];
    const Topology& t = side_topology(fr, b.side);
    const bool forall = f.kind == Formula::Kind::Forall;
    const Mask limit = b.qualifier == Qualifier::Point ? static_cast<Mask>(t.points())
                                                       : subset_count(t.points());
    for (Mask m = 0; m < limit; ++m) {
        if (b.qualifier != Qualifier::Point && !qualifies(fr, t, b.qualifier, Subset{m}))
            continue;
        fr.slots[b.slot] = m;
        const bool r = quantify(f, fr, i + 1);
        if (forall && !r)
            return false;
        if (!forall && r)
            return true;
    }
    return forall;
}

bool eval_formula(const Formula& f, const Frame& fr)
{
    switch (f.kind) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
        Frame local = fr;
        return quantify(f, local, 0);
    }
    case Formula::Kind::Implies:
        return !eval_formula(*f.children[0], fr) || eval_formula(*f.children[1], fr);
    case Formula::Kind::Or:
        return eval_formula(*f.children[0], fr) || eval_formula(*f.children[1], fr);
    case Formula::Kind::And:
        return eval_formula(*f.children[0], fr) && eval_formula(*f.children[1], fr);
    case Formula::Kind::Not:
        return !eval_formula(*f.children[0], fr);
    case Formula::Kind::Subseteq:
        return eval_set(*f.sets[0], fr).subset_of(eval_set(*f.sets[1], fr));
    case Formula::Kind::SetEq:
        return eval_set(*f.sets[0], fr) == eval_set(*f.sets[1], fr);
    case Formula::Kind::Member:
        return eval_set(*f.sets[0], fr).contains(static_cast<int>(fr.slots[f.slot]));
    case Formula::Kind::SetClassCall: {
        Frame inner;
        inner.x = fr.x;
        inner.os = fr.os;
        inner.slots[0] = eval_set(*f.sets[0], fr).bits();
        return eval_formula(*f.callee->formula, inner);
    }
    case Formula::Kind::NativeSetClass:
        return is_in_class(side_topology(fr, f.sets[0]->side), eval_set(*f.sets[0], fr), f.native_set_class);
    case Formula::Kind::FunClassCall: {
        Frame inner;
        inner.x = fr.x;
        inner.os = fr.os;
        inner.y = fr.y;
        inner.f = fr.f;
        return eval_formula(*f.callee->formula, inner);
    }
    case Formula::Kind::NativeFunClass:
        return satisfies(*fr.f, f.native_function_class);
    }
    throw std::logic_error("unknown formula node");
}

// -------------------------------------------------------------- printer

int precedence(const SetExpr& e)
{
    switch (e.kind) {
    case SetExpr::Kind::Union: return 1;
    case SetExpr::Kind::Intersection: return 2;
    case SetExpr::Kind::Complement: return 3;
    default: return 4;
    }
}

void print_set(std::ostream& os, const SetExpr& e, int min_prec);

void print_unary(std::ostream& os, const char* name, const SetExpr& e)
{
    os << name << '(';
    print_set(os, *e.args[0], 0);
    os << ')';
}

void print_set(std::ostream& os, const SetExpr& e, int min_prec)
{
    const bool parens = precedence(e) < min_prec;
    if (parens)
        os << '(';
    switch (e.kind) {
    case SetExpr::Kind::Var: os << e.name; break;
    case SetExpr::Kind::Complement:
        os << '~';
        print_set(os, *e.args[0], 3);
        break;
    case SetExpr::Kind::Union:
        print_set(os, *e.args[0], 1);
        os << " | ";
        print_set(os, *e.args[1], 2);
        break;
    case SetExpr::Kind::Intersection:
        print_set(os, *e.args[0], 2);
        os << " & ";
        print_set(os, *e.args[1], 3);
        break;
    case SetExpr::Kind::Interior: print_unary(os, "Int", e); break;
    case SetExpr::Kind::Closure: print_unary(os, "Cl", e); break;
    case SetExpr::Kind::Apply: print_unary(os, "T", e); break;
    case SetExpr::Kind::TClosure: print_unary(os, "TCl", e); break;
    case SetExpr::Kind::PClosure: print_unary(os, "pCl", e); break;
    case SetExpr::Kind::Inverse:
    case SetExpr::Kind::Image:
        os << (e.kind == SetExpr::Kind::Inverse ? "inv(" : "image(") << e.name << ", ";
        print_set(os, *e.args[0], 0);
        os << ')';
        break;
    case SetExpr::Kind::Empty: os << "EMPTY"; break;
    case SetExpr::Kind::FullX: os << "FULLX"; break;
    case SetExpr::Kind::FullY: os << "FULLY"; break;
    case SetExpr::Kind::Call: print_unary(os, e.name.c_str(), e); break;
    }
    if (parens)
        os << ')';
}

int precedence(const Formula& f)
{
    switch (f.kind) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: return 0;
    case Formula::Kind::Implies: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Not: return 4;
    default: return 5;
    }
}

void print_formula(std::ostream& os, const Formula& f, int min_prec, const std::string& fvar)
{
    const bool parens = precedence(f) < min_prec;
    if (parens)
        os << '(';
    switch (f.kind) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
        os << (f.kind == Formula::Kind::Forall ? "forall " : "exists ");
        for (std::size_t i = 0; i < f.binders.size(); ++i) {
            const Binder& b = f.binders[i];
            if (i)
                os << ", ";
            os << b.name << ": " << name_of(b.qualifier) << '@' << (b.side == Side::Y ? 'Y' : 'X');
        }
        os << " . ";
        print_formula(os, *f.children[0], 0, fvar);
        break;
    }
    case Formula::Kind::Implies:
        print_formula(os, *f.children[0], 2, fvar);
        os << " -> ";
        print_formula(os, *f.children[1], 1, fvar);
        break;
    case Formula::Kind::Or:
        print_formula(os, *f.children[0], 2, fvar);
        os << " or ";
        print_formula(os, *f.children[1], 3, fvar);
        break;
    case Formula::Kind::And:
        print_formula(os, *f.children[0], 3, fvar);
        os << " and ";
        print_formula(os, *f.children[1], 4, fvar);
        break;
    case Formula::Kind::Not:
        os << "not ";
        print_formula(os, *f.children[0], 4, fvar);
        break;
    case Formula::Kind::Subseteq:
    case Formula::Kind::SetEq:
        print_set(os, *f.sets[0], 0);
        os << (f.kind == Formula::Kind::Subseteq ? " <= " : " = ");
        print_set(os, *f.sets[1], 0);
        break;
    case Formula::Kind::Member:
        os << f.name << " in ";
        print_set(os, *f.sets[0], 0);
        break;
    case Formula::Kind::SetClassCall:
    case Formula::Kind::NativeSetClass:
        os << f.name << '(';
        print_set(os, *f.sets[0], 0);
        os << ')';
        break;
    case Formula::Kind::FunClassCall:
    case Formula::Kind::NativeFunClass:
        os << f.name << '(' << fvar << ')';
        break;
    }
    if (parens)
        os << ')';
}

} // namespace

// ----------------------------------------------------------- public API

Program Program::parse(std::string_view text, const Program* base)
{
    std::map<std::string, DefPtr, std::less<>> visible;
    Program out;
    if (base) {
        out.definitions_ = base->definitions_;
        for (const auto& d : base->definitions_)
            visible[d->name] = d;
    }
    Parser parser(tokenize(text), std::move(visible));
    for (auto& d : parser.program())
        out.definitions_.push_back(std::move(d));
    return out;
}

Program Program::load(const std::string& path, const Program* base)
{
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open definitions file " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse(text.str(), base);
}

std::shared_ptr<const Definition> Program::find(std::string_view name) const
{
    for (auto it = definitions_.rbegin(); it != definitions_.rend(); ++it)
        if ((*it)->name == name)
            return *it;
    return nullptr;
}

std::string Program::print() const
{
    std::string out;
    for (const auto& d : definitions_)
        out += dsl::print(*d) + ";\n";
    return out;
}

Target Target::parse(std::string_view text, const Program* defs)
{
    std::map<std::string, DefPtr, std::less<>> visible;
    if (defs)
        for (const auto& d : defs->definitions())
            visible[d->name] = d;
    Parser parser(tokenize(text), std::move(visible));
    Target t;
    std::tie(t.formula_, t.slot_count_) = parser.target();
    return t;
}

bool Target::operator()(const FunctionInstance& f) const
{
    Frame fr;
    fr.x = &f.domain().topology();
    fr.os = &f.domain();
    fr.y = &f.codomain();
    fr.f = &f;
    return eval_formula(*formula_, fr);
}

std::string Target::print() const { return dsl::print(*formula_); }

bool eval_setclass(const Definition& d, const OperatorSpace& os, Subset s)
{
    if (d.kind != DefinitionKind::SetClass)
        throw optop::Error("'" + d.name + "' is not a setclass");
    os.topology().ground().require_valid(s);
    Frame fr;
    fr.x = &os.topology();
    fr.os = &os;
    fr.slots[0] = s.bits();
    return eval_formula(*d.formula, fr);
}

bool eval_funclass(const Definition& d, const FunctionInstance& f)
{
    if (d.kind != DefinitionKind::FunClass)
        throw optop::Error("'" + d.name + "' is not a funclass");
    Frame fr;
    fr.x = &f.domain().topology();
    fr.os = &f.domain();
    fr.y = &f.codomain();
    fr.f = &f;
    return eval_formula(*d.formula, fr);
}

Subset eval_operator(const Definition& d, const Topology& t, Subset s)
{
    if (d.kind != DefinitionKind::Operator)
        throw optop::Error("'" + d.name + "' is not an operator");
    t.ground().require_valid(s);
    Frame fr;
    fr.x = &t;
    fr.slots[0] = s.bits();
    return eval_set(*d.set, fr);
}

Operator as_operator(std::shared_ptr<const Definition> d)
{
    if (!d || d->kind != DefinitionKind::Operator)
        throw optop::Error("not an operator definition");
    const std::string name = d->name;
    return Operator::custom(name, [d = std::move(d)](const Topology& t, Subset s) {
        return eval_operator(*d, t, s);
    });
}

std::string print(const SetExpr& s)
{
    std::ostringstream os;
    print_set(os, s, 0);
    return os.str();
}

std::string print(const Formula& f)
{
    std::ostringstream os;
    print_formula(os, f, 0, "f");
    return os.str();
}

std::string print(const Definition& d)
{
    std::ostringstream os;
    switch (d.kind) {
    case DefinitionKind::SetClass: os << "setclass "; break;
    case DefinitionKind::FunClass: os << "funclass "; break;
    case DefinitionKind::Operator: os << "operator "; break;
    }
    os << d.name << '(' << d.parameter << ") := ";
    if (d.kind == DefinitionKind::Operator)
        print_set(os, *d.set, 0);
    else
        print_formula(os, *d.formula, 0, d.parameter);
    return os.str();
}

std::string_view stdlib_source()
{
    static constexpr std::string_view text =
#include "optop_stdlib.inc"
        ;
    return text;
}

const Program& stdlib()
{
    static const Program program = Program::parse(stdlib_source());
    return program;
}

} // namespace optop::dsl
