#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace wmbox {

using Cx = std::complex<double>;

/// Default absolute entrywise tolerance for matrix/vector comparisons.
/// All quantities in this library are O(1) in natural units.
inline constexpr double kDefaultTol = 1e-12;

/// Two-component complex spinor.
struct Vec2 {
  Cx c1{0.0, 0.0};
  Cx c2{0.0, 0.0};

  Vec2() = default;
  Vec2(Cx a, Cx b) : c1(a), c2(b) {}

  Vec2 operator+(const Vec2& o) const { return {c1 + o.c1, c2 + o.c2}; }
  Vec2 operator-(const Vec2& o) const { return {c1 - o.c1, c2 - o.c2}; }
  Vec2 operator*(Cx s) const { return {s * c1, s * c2}; }
  Vec2& operator+=(const Vec2& o) {
    c1 += o.c1;
    c2 += o.c2;
    return *this;
  }

  Vec2 conj() const { return {std::conj(c1), std::conj(c2)}; }

  double norm() const { return std::sqrt(std::norm(c1) + std::norm(c2)); }
  double max_abs() const { return std::max(std::abs(c1), std::abs(c2)); }

  bool finite() const {
    return std::isfinite(c1.real()) && std::isfinite(c1.imag()) &&
           std::isfinite(c2.real()) && std::isfinite(c2.imag());
  }
};

inline Vec2 operator*(Cx s, const Vec2& v) { return v * s; }

/// ⟨a,b⟩ with the first argument conjugated.
inline Cx dot(const Vec2& a, const Vec2& b) {
  return std::conj(a.c1) * b.c1 + std::conj(a.c2) * b.c2;
}

/// Complex 2×2 matrix, row-major entries. Plain value type: unitarity or
/// normalization is checked by callers, never enforced here.
struct Mat2 {
  Cx m11{0.0, 0.0}, m12{0.0, 0.0};
  Cx m21{0.0, 0.0}, m22{0.0, 0.0};

  Mat2() = default;
  Mat2(Cx a, Cx b, Cx c, Cx d) : m11(a), m12(b), m21(c), m22(d) {}

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 zero() { return {}; }
  static Mat2 diag(Cx a, Cx b) { return {a, 0.0, 0.0, b}; }

  Mat2 operator+(const Mat2& o) const {
    return {m11 + o.m11, m12 + o.m12, m21 + o.m21, m22 + o.m22};
  }
  Mat2 operator-(const Mat2& o) const {
    return {m11 - o.m11, m12 - o.m12, m21 - o.m21, m22 - o.m22};
  }
  Mat2 operator*(const Mat2& o) const {
    return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
            m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
  }
  Mat2 operator*(Cx s) const { return {s * m11, s * m12, s * m21, s * m22}; }
  Vec2 operator*(const Vec2& v) const {
    return {m11 * v.c1 + m12 * v.c2, m21 * v.c1 + m22 * v.c2};
  }

  Mat2 conj() const {
    return {std::conj(m11), std::conj(m12), std::conj(m21), std::conj(m22)};
  }
  Mat2 transpose() const { return {m11, m21, m12, m22}; }
  Mat2 adjoint() const {
    return {std::conj(m11), std::conj(m21), std::conj(m12), std::conj(m22)};
  }

  Cx det() const { return m11 * m22 - m12 * m21; }
  Cx trace() const { return m11 + m22; }

  Mat2 inverse() const {
    const Cx d = det();
    if (std::abs(d) < kDefaultTol) {
      throw std::domain_error("Mat2::inverse: matrix is singular");
    }
    const Cx s = 1.0 / d;
    return {s * m22, -s * m12, -s * m21, s * m11};
  }

  /// Entrywise max-modulus norm.
  double max_abs() const {
    return std::max(std::max(std::abs(m11), std::abs(m12)),
                    std::max(std::abs(m21), std::abs(m22)));
  }

  double frobenius_norm() const {
    return std::sqrt(std::norm(m11) + std::norm(m12) + std::norm(m21) +
                     std::norm(m22));
  }

  bool finite() const {
    auto ok = [](Cx z) {
      return std::isfinite(z.real()) && std::isfinite(z.imag());
    };
    return ok(m11) && ok(m12) && ok(m21) && ok(m22);
  }
};

inline Mat2 operator*(Cx s, const Mat2& m) { return m * s; }

inline double max_abs_diff(const Mat2& a, const Mat2& b) {
  return (a - b).max_abs();
}

inline bool approx_equal(const Mat2& a, const Mat2& b,
                         double tol = kDefaultTol) {
  return max_abs_diff(a, b) < tol;
}

inline Mat2 sigma_x() { return {0.0, 1.0, 1.0, 0.0}; }
inline Mat2 sigma_y() { return {0.0, Cx(0.0, -1.0), Cx(0.0, 1.0), 0.0}; }
inline Mat2 sigma_z() { return {1.0, 0.0, 0.0, -1.0}; }

/// Singular values in descending order. The smaller one is computed from
/// |det| / s_max to avoid cancellation when the matrix is near rank one.
inline std::array<double, 2> singular_values(const Mat2& a) {
  const double t = std::norm(a.m11) + std::norm(a.m12) + std::norm(a.m21) +
                   std::norm(a.m22);
  const double d = std::abs(a.det());
  const double disc = std::sqrt(std::max(t * t - 4.0 * d * d, 0.0));
  const double s_max = std::sqrt(0.5 * (t + disc));
  const double s_min = s_max > 0.0 ? d / s_max : 0.0;
  return {s_max, s_min};
}

}  // namespace wmbox
