// Uniform grids over axis-aligned boxes and the ScalarField sample container.
#pragma once

#include <functional>

#include "khess/core.hpp"

namespace khess {

struct Box {
  Vector lo, hi;

  int dim() const { return static_cast<int>(lo.size()); }
  double width(int axis) const { return hi[axis] - lo[axis]; }
  double min_width() const {
    double w = width(0);
    for (int i = 1; i < dim(); ++i) w = std::min(w, width(i));
    return w;
  }
  bool contains(const Vector& x, double margin = 0.0) const {
    for (int i = 0; i < dim(); ++i)
      if (x[i] < lo[i] + margin || x[i] > hi[i] - margin) return false;
    return true;
  }
  // distance to the boundary (0 outside)
  double boundary_distance(const Vector& x) const {
    double d = std::numeric_limits<double>::infinity();
    for (int i = 0; i < dim(); ++i) d = std::min({d, x[i] - lo[i], hi[i] - x[i]});
    return std::max(d, 0.0);
  }
  static Box cube(int n, double half_width, const Vector& center = {}) {
    Box b;
    b.lo.assign(n, -half_width);
    b.hi.assign(n, half_width);
    if (!center.empty())
      for (int i = 0; i < n; ++i) {
        b.lo[i] += center[i];
        b.hi[i] += center[i];
      }
    return b;
  }
};

using MultiIndex = std::vector<int>;

class ScalarField {
 public:
  ScalarField() = default;
  ScalarField(Box box, std::vector<int> res)
      : box_(std::move(box)), res_(std::move(res)) {
    std::size_t total = 1;
    for (std::size_t a = 0; a < res_.size(); ++a) {
      if (res_[a] < 5) throw std::domain_error("ScalarField: resolution must be >= 5 per axis");
      total *= static_cast<std::size_t>(res_[a]);
    }
    strides_.assign(res_.size(), 1);
    for (int a = static_cast<int>(res_.size()) - 2; a >= 0; --a)
      strides_[a] = strides_[a + 1] * res_[a + 1];
    values_.assign(total, 0.0);
  }

  static ScalarField sample(const Box& box, const std::vector<int>& res,
                            const std::function<double(const Vector&)>& f) {
    ScalarField u(box, res);
    u.for_each([&](const MultiIndex& idx, std::size_t flat) {
      u.values_[flat] = f(u.coords(idx));
    });
    return u;
  }

  int dim() const { return static_cast<int>(res_.size()); }
  const Box& box() const { return box_; }
  const std::vector<int>& resolution() const { return res_; }
  std::size_t size() const { return values_.size(); }
  double spacing(int axis) const { return box_.width(axis) / (res_[axis] - 1); }
  double max_spacing() const {
    double s = spacing(0);
    for (int a = 1; a < dim(); ++a) s = std::max(s, spacing(a));
    return s;
  }
  double cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < dim(); ++a) v *= spacing(a);
    return v;
  }

  std::size_t flat(const MultiIndex& idx) const {
    std::size_t f = 0;
    for (int a = 0; a < dim(); ++a) f += static_cast<std::size_t>(idx[a]) * strides_[a];
    return f;
  }
  MultiIndex unflatten(std::size_t f) const {
    MultiIndex idx(dim());
    for (int a = 0; a < dim(); ++a) {
      idx[a] = static_cast<int>(f / strides_[a]);
      f %= strides_[a];
    }
    return idx;
  }
  std::size_t stride(int axis) const { return strides_[axis]; }

  Vector coords(const MultiIndex& idx) const {
    Vector x(dim());
    for (int a = 0; a < dim(); ++a) x[a] = box_.lo[a] + idx[a] * spacing(a);
    return x;
  }

  double& at(const MultiIndex& idx) { return values_[flat(idx)]; }
  double at(const MultiIndex& idx) const { return values_[flat(idx)]; }
  double& operator[](std::size_t f) { return values_[f]; }
  double operator[](std::size_t f) const { return values_[f]; }
  Vector& values() { return values_; }
  const Vector& values() const { return values_; }

  bool interior(const MultiIndex& idx, int margin = 1) const {
    for (int a = 0; a < dim(); ++a)
      if (idx[a] < margin || idx[a] >= res_[a] - margin) return false;
    return true;
  }

  // odometer loop over all multi-indices
  template <typename F>
  void for_each(F&& f) const {
    MultiIndex idx(dim(), 0);
    const std::size_t total = values_.size();
    for (std::size_t fl = 0; fl < total; ++fl) {
      f(static_cast<const MultiIndex&>(idx), fl);
      for (int a = dim() - 1; a >= 0; --a) {
        if (++idx[a] < res_[a]) break;
        idx[a] = 0;
      }
    }
  }

  // trapezoid-weighted quadrature of |u| (or u via f) over the box
  double integrate(const std::function<double(double)>& transform) const {
    double total = 0.0;
    for_each([&](const MultiIndex& idx, std::size_t fl) {
      double w = 1.0;
      for (int a = 0; a < dim(); ++a)
        if (idx[a] == 0 || idx[a] == res_[a] - 1) w *= 0.5;
      const double v = values_[fl];
      if (std::isfinite(v)) total += w * transform(v);
    });
    return total * cell_volume();
  }
  double integrate_abs() const {
    return integrate([](double v) { return std::fabs(v); });
  }

 private:
  Box box_;
  std::vector<int> res_;
  std::vector<std::size_t> strides_;
  Vector values_;
};

}  // namespace khess
