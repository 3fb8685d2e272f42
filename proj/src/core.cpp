#include "nliouville/core.hpp"

#include <cmath>

namespace nliouville {

namespace {

Constants derive_constants(int n, double alpha) {
    const double nd = static_cast<double>(n);
    Constants k;
    k.c_n = nd * std::pow(nd * nd / (nd - 1.0), nd - 1.0);
    k.omega_n = std::pow(M_PI, nd / 2.0) / std::tgamma(nd / 2.0 + 1.0);
    k.sphere_area = nd * k.omega_n;
    k.slope = nd * nd * (alpha + 1.0) / (nd - 1.0);
    return k;
}

}  // namespace

Problem::Problem(int n, double alpha) : n_(n), alpha_(alpha) {
    if (n < 2)
        throw DomainError("Problem: dimension must satisfy n >= 2, got " + std::to_string(n));
    if (!(alpha > -1.0))
        throw DomainError("Problem: weight exponent must satisfy alpha > -1, got " +
                          std::to_string(alpha));
    constants_ = derive_constants(n_, alpha_);
}

double Problem::profile_exponent() const {
    return n_ * (alpha_ + 1.0) / (n_ - 1.0);
}

Problem make_problem(int n, double alpha) {
    return Problem(n, alpha);
}

RadialGrid log_grid(double r_min, double r_max, int count) {
    if (!(r_min > 0.0) || !(r_min < r_max))
        throw DomainError("log_grid: need 0 < r_min < r_max");
    if (count < 2)
        throw DomainError("log_grid: need count >= 2");
    RadialGrid grid;
    grid.scale = RadialGrid::Scale::logarithmic;
    grid.points.resize(count);
    const double l0 = std::log(r_min), l1 = std::log(r_max);
    for (int i = 0; i < count; ++i)
        grid.points[i] = std::exp(l0 + (l1 - l0) * i / (count - 1));
    grid.points.front() = r_min;
    grid.points.back() = r_max;
    return grid;
}

RadialGrid linear_grid(double r_min, double r_max, int count) {
    if (!(r_min > 0.0) || !(r_min < r_max))
        throw DomainError("linear_grid: need 0 < r_min < r_max");
    if (count < 2)
        throw DomainError("linear_grid: need count >= 2");
    RadialGrid grid;
    grid.scale = RadialGrid::Scale::linear;
    grid.points.resize(count);
    for (int i = 0; i < count; ++i)
        grid.points[i] = r_min + (r_max - r_min) * i / (count - 1);
    grid.points.back() = r_max;
    return grid;
}

RadialGrid default_grid() {
    return log_grid(1e-4, 1e4, 400);
}

}  // namespace nliouville
