#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "optop/function_classes.hpp"

/// A small language of quantified subset formulas.
///
///     program    := { definition ";" }
///     definition := ("setclass"|"funclass"|"operator") IDENT "(" IDENT ")" ":=" body
///     formula    := ("forall"|"exists") binders "." formula
///                 | formula "->" formula | formula "or" formula
///                 | formula "and" formula | "not" formula
///                 | set "<=" set | set "=" set | IDENT "in" set
///                 | IDENT "(" set ")" | IDENT | "(" formula ")"
///     binders    := IDENT ":" QUAL "@" SIDE { "," IDENT ":" QUAL "@" SIDE }
///     QUAL       := open | closed | regopen | regclosed | clopen | tstarclosed | any | point
///     set        := IDENT | "~" set | set "|" set | set "&" set | "(" set ")"
///                 | ("Int"|"Cl"|"T"|"TCl"|"pCl") "(" set ")" | IDENT "(" set ")"
///                 | ("inv"|"image") "(" IDENT "," set ")" | EMPTY | FULLX | FULLY | X | Y
///
/// Precedence: ~ over & over |; not over and over or over -> (right-assoc).
/// `#` starts a line comment.
///
/// Names are resolved while parsing: bound variables first, then earlier
/// definitions, then the built-in class catalogue (set classes such as
/// `preopen`, function classes such as `almost_tstar_cont`, upper-case ids
/// accepted). A later definition with a catalogue name shadows it.
namespace optop::dsl {

class Error : public optop::Error {
public:
    Error(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class SyntaxError : public Error {
public:
    SyntaxError(int line, int column, std::vector<std::string> expected, const std::string& found);
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::vector<std::string> expected_;
};

class TypeError : public Error {
public:
    using Error::Error;
};

enum class Side { X, Y, Either };
enum class Qualifier { Open, Closed, RegOpen, RegClosed, Clopen, TstarClosed, Any, Point };
enum class DefinitionKind { SetClass, Operator, FunClass };

struct Definition;

struct SetExpr {
    enum class Kind {
        Var,
        Complement,
        Union,
        Intersection,
        Interior,
        Closure,
        Apply,      // T(.)
        TClosure,   // TCl(.)
        PClosure,   // pCl(.) = S | Cl(Int(S))
        Inverse,    // inv(f, .)
        Image,      // image(f, .)
        Empty,
        FullX,
        FullY,
        Call,       // user operator
    };
    Kind kind;
    Side side = Side::X;
    std::string name;  // variable, function variable or callee name
    int slot = -1;
    std::shared_ptr<const Definition> callee;
    std::vector<std::shared_ptr<const SetExpr>> args;
};

struct Binder {
    std::string name;
    Qualifier qualifier;
    Side side;
    int slot;
};

struct Formula {
    enum class Kind {
        Forall,
        Exists,
        Implies,
        Or,
        And,
        Not,
        Subseteq,
        SetEq,
        Member,
        SetClassCall,      // DSL setclass
        NativeSetClass,
        FunClassCall,      // DSL funclass
        NativeFunClass,
    };
    Kind kind;
    std::vector<Binder> binders;
    std::vector<std::shared_ptr<const Formula>> children;
    std::vector<std::shared_ptr<const SetExpr>> sets;
    std::string name;  // point variable or callee name
    int slot = -1;
    std::shared_ptr<const Definition> callee;
    SetClassId native_set_class = SetClassId::Open;
    FunctionClassId native_function_class = FunctionClassId::Continuous;
};

struct Definition {
    std::string name;
    DefinitionKind kind;
    std::string parameter;
    std::shared_ptr<const Formula> formula;  // SetClass, FunClass
    std::shared_ptr<const SetExpr> set;      // Operator
    int slot_count = 0;
};

/// Parsed definitions in source order. Each definition holds its callees
/// directly, so a Definition can be evaluated on its own.
class Program {
public:
    /// Definitions of `base`, when given, are visible to the new text and
    /// are carried into the result ahead of the new ones.
    static Program parse(std::string_view text, const Program* base = nullptr);
    static Program load(const std::string& path, const Program* base = nullptr);

    const std::vector<std::shared_ptr<const Definition>>& definitions() const { return definitions_; }
    /// Latest definition with the given name.
    std::shared_ptr<const Definition> find(std::string_view name) const;

    std::string print() const;

private:
    std::vector<std::shared_ptr<const Definition>> definitions_;
};

/// A closed formula over one function instance, its function variable named `f`.
class Target {
public:
    static Target parse(std::string_view text, const Program* defs = nullptr);

    bool operator()(const FunctionInstance& f) const;
    const Formula& formula() const { return *formula_; }
    std::string print() const;

private:
    std::shared_ptr<const Formula> formula_;
    int slot_count_ = 0;
};

bool eval_setclass(const Definition& d, const OperatorSpace& os, Subset s);
bool eval_funclass(const Definition& d, const FunctionInstance& f);
Subset eval_operator(const Definition& d, const Topology& t, Subset s);

/// Wraps an operator definition for bind_operator. Name reported as dsl:<name>.
Operator as_operator(std::shared_ptr<const Definition> d);

std::string print(const Definition& d);
std::string print(const Formula& f);
std::string print(const SetExpr& s);

std::string_view name_of(Qualifier q);

/// Text of the built-in library of renditions of every native class.
std::string_view stdlib_source();
const Program& stdlib();

} // namespace optop::dsl
