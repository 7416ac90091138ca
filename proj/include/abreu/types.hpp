#pragma once

#include <Eigen/Dense>
#include <functional>

namespace abreu {

// Points live in R^2; one-dimensional problems use the first coordinate only.
using Point = Eigen::Vector2d;
using ScalarFn = std::function<double(const Point&)>;

}  // namespace abreu
