#include "abreu/expr.hpp"

#include "abreu/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace abreu {

struct Expr::Node {
    enum Kind { Num, Var, Add, Sub, Mul, Div, Pow, Neg, Call } kind = Num;
    double value = 0.0;
    int var = 0;
    std::string fn;
    std::shared_ptr<const Node> a, b;

    double eval(const Point& p) const
    {
        switch (kind) {
        case Num: return value;
        case Var: return p[var];
        case Add: return a->eval(p) + b->eval(p);
        case Sub: return a->eval(p) - b->eval(p);
        case Mul: return a->eval(p) * b->eval(p);
        case Div: return a->eval(p) / b->eval(p);
        case Pow: return std::pow(a->eval(p), b->eval(p));
        case Neg: return -a->eval(p);
        case Call: {
            double x = a->eval(p);
            if (fn == "log") return std::log(x);
            if (fn == "exp") return std::exp(x);
            if (fn == "sqrt") return std::sqrt(x);
            return std::abs(x);
        }
        }
        return 0.0;
    }
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

[[noreturn]] void syntax(const std::string& text, std::size_t pos, const std::string& what)
{
    throw Error(ErrorKind::Config, "cli_reporting", "expression '" + text + "' at " + std::to_string(pos) + ": " + what);
}

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    void skip()
    {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c)
    {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    static NodePtr make(Expr::Node::Kind k, NodePtr a = nullptr, NodePtr b = nullptr)
    {
        auto n = std::make_shared<Expr::Node>();
        n->kind = k;
        n->a = std::move(a);
        n->b = std::move(b);
        return n;
    }

    NodePtr expr()
    {
        NodePtr l = term();
        for (;;) {
            if (eat('+')) l = make(Expr::Node::Add, l, term());
            else if (eat('-')) l = make(Expr::Node::Sub, l, term());
            else return l;
        }
    }
    NodePtr term()
    {
        NodePtr l = unary();
        for (;;) {
            if (eat('*')) l = make(Expr::Node::Mul, l, unary());
            else if (eat('/')) l = make(Expr::Node::Div, l, unary());
            else return l;
        }
    }
    NodePtr unary()
    {
        if (eat('-')) return make(Expr::Node::Neg, unary());
        if (eat('+')) return unary();
        return power();
    }
    NodePtr power()
    {
        NodePtr base = primary();
        if (eat('^')) return make(Expr::Node::Pow, base, unary());
        return base;
    }
    NodePtr primary()
    {
        skip();
        if (i >= s.size()) syntax(s, i, "unexpected end");
        if (eat('(')) {
            NodePtr e = expr();
            if (!eat(')')) syntax(s, i, "expected ')'");
            return e;
        }
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = s.c_str() + i;
            char* end = nullptr;
            double v = std::strtod(begin, &end);
            if (end == begin) syntax(s, i, "bad number");
            i += std::size_t(end - begin);
            auto n = std::make_shared<Expr::Node>();
            n->value = v;
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t b = i;
            while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
            std::string id = s.substr(b, i - b);
            if (id == "x1" || id == "xi1" || id == "x") {
                auto n = std::make_shared<Expr::Node>();
                n->kind = Expr::Node::Var;
                n->var = 0;
                return n;
            }
            if (id == "x2" || id == "xi2" || id == "y") {
                auto n = std::make_shared<Expr::Node>();
                n->kind = Expr::Node::Var;
                n->var = 1;
                return n;
            }
            if (id == "pi") {
                auto n = std::make_shared<Expr::Node>();
                n->value = M_PI;
                return n;
            }
            if (id == "log" || id == "exp" || id == "sqrt" || id == "abs") {
                if (!eat('(')) syntax(s, i, "expected '(' after " + id);
                NodePtr arg = expr();
                if (!eat(')')) syntax(s, i, "expected ')'");
                auto n = std::make_shared<Expr::Node>();
                n->kind = Expr::Node::Call;
                n->fn = id;
                n->a = arg;
                return n;
            }
            syntax(s, b, "unknown identifier '" + id + "'");
        }
        syntax(s, i, std::string("unexpected '") + c + "'");
    }
};

}  // namespace

Expr Expr::parse(const std::string& text)
{
    Parser p{text};
    Expr e;
    e.root_ = p.expr();
    p.skip();
    if (p.i != text.size()) syntax(text, p.i, "trailing input");
    e.text_ = text;
    return e;
}

double Expr::operator()(const Point& p) const { return root_->eval(p); }

ScalarFn Expr::fn() const
{
    auto root = root_;
    return [root](const Point& p) { return root->eval(p); };
}

ScalarFn parse_field_spec(const std::string& spec)
{
    if (spec.rfind("const:", 0) == 0) {
        const std::string v = spec.substr(6);
        char* end = nullptr;
        double c = std::strtod(v.c_str(), &end);
        if (v.empty() || *end != '\0' || !std::isfinite(c)) throw Error(ErrorKind::Config, "cli_reporting", "bad constant '" + v + "'");
        return [c](const Point&) { return c; };
    }
    if (spec.rfind("expr:", 0) == 0) return Expr::parse(spec.substr(5)).fn();
    return Expr::parse(spec).fn();
}

}  // namespace abreu
