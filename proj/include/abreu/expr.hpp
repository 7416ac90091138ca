#pragma once

#include "abreu/types.hpp"

#include <memory>
#include <string>

namespace abreu {

// Arithmetic over constants and the coordinates x1, x2 (also xi1, xi2, x, y):
// + - * / ^, parentheses, unary minus, log, exp, sqrt, abs.
class Expr {
public:
    static Expr parse(const std::string& text);
    double operator()(const Point& p) const;
    const std::string& text() const { return text_; }
    ScalarFn fn() const;

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

// "const:2", "expr:0.5*(x1^2+x2^2)" or a bare expression.
ScalarFn parse_field_spec(const std::string& spec);

}  // namespace abreu
