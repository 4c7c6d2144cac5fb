#include "cartan/vector_calculus.hpp"

namespace cartan {

Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec3 operator*(const Expr& s, const Vec3& a) {
  return {s * a[0], s * a[1], s * a[2]};
}

Expr dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Vec3 grad(const Expr& f) { return {partial(f, 0), partial(f, 1), partial(f, 2)}; }

Expr div(const Vec3& v) {
  return partial(v[0], 0) + partial(v[1], 1) + partial(v[2], 2);
}

Vec3 curl(const Vec3& v) {
  return {partial(v[2], 1) - partial(v[1], 2), partial(v[0], 2) - partial(v[2], 0),
          partial(v[1], 0) - partial(v[0], 1)};
}

Vec3 d_dt(const Vec3& v) {
  return {partial(v[0], kTime), partial(v[1], kTime), partial(v[2], kTime)};
}

Vec3 vector_laplacian(const Vec3& v) { return grad(div(v)) - curl(curl(v)); }

}  // namespace cartan
