#pragma once

// Gibbs vector calculus on expression triples. Spatial derivatives are
// taken with respect to variables 0, 1, 2 (x, y, z); the time derivative
// with respect to variable 3 (t).

#include <array>

#include "cartan/expr.hpp"

namespace cartan {

using Vec3 = std::array<Expr, 3>;

inline constexpr std::size_t kTime = 3;

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(const Expr& s, const Vec3& a);
Expr dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);

Vec3 grad(const Expr& f);
Expr div(const Vec3& v);
Vec3 curl(const Vec3& v);
Vec3 d_dt(const Vec3& v);
/// grad(div v) − curl curl v.
Vec3 vector_laplacian(const Vec3& v);

}  // namespace cartan
