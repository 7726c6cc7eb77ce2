#pragma once

#include <functional>
#include <vector>

#include "dbcohom/simplicial_complex.hpp"

namespace dbcohom {

// A p-cochain over a subcomplex (charts and intersections are subcomplexes of
// one common complex, so restriction is coefficient selection). T is Rational
// for exact structural work or double for metric work.
template <class T>
class Cochain {
 public:
  Cochain() = default;
  Cochain(Subcomplex domain, int degree)
      : domain_(std::move(domain)),
        degree_(degree),
        values_(domain_.count(degree), T(0)) {}
  Cochain(Subcomplex domain, int degree, std::vector<T> values)
      : domain_(std::move(domain)), degree_(degree), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != domain_.count(degree_)) {
      throw ShapeMismatchError("cochain coefficient count mismatch");
    }
  }

  static Cochain zero(const Subcomplex& domain, int degree) {
    return Cochain(domain, degree);
  }

  const Subcomplex& domain() const { return domain_; }
  const SimplicialComplex& complex() const { return domain_.parent(); }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(values_.size()); }

  // Coefficient on the k-th simplex of the domain (canonical orientation).
  T& operator[](int k) { return values_[k]; }
  const T& operator[](int k) const { return values_[k]; }
  const std::vector<T>& values() const { return values_; }

  // Value on a parent simplex index; the simplex must lie in the domain.
  const T& at_parent(SimplexIndex i) const {
    int k = domain_.local_index(degree_, i);
    if (k < 0) throw ShapeMismatchError("simplex outside cochain domain");
    return values_[k];
  }

  bool same_shape(const Cochain& other) const {
    return degree_ == other.degree_ && domain_ == other.domain_;
  }

  Cochain& operator+=(const Cochain& other) {
    require_shape(other);
    for (int k = 0; k < size(); ++k) values_[k] += other.values_[k];
    return *this;
  }
  Cochain& operator-=(const Cochain& other) {
    require_shape(other);
    for (int k = 0; k < size(); ++k) values_[k] -= other.values_[k];
    return *this;
  }
  Cochain& operator*=(const T& s) {
    for (auto& v : values_) v *= s;
    return *this;
  }
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const T& s, Cochain a) { return a *= s; }

  double max_abs() const {
    double m = 0;
    for (const auto& v : values_) m = std::max(m, abs_value(v));
    return m;
  }
  bool is_identically_zero() const {
    for (const auto& v : values_) {
      if (!is_zero(v)) return false;
    }
    return true;
  }

  // Restriction to a subdomain of the current domain.
  Cochain restrict_to(const Subcomplex& sub) const {
    std::vector<T> vals(sub.count(degree_));
    const auto& members = sub.members(degree_);
    for (size_t k = 0; k < members.size(); ++k) {
      vals[k] = at_parent(members[k]);
    }
    return Cochain(sub, degree_, std::move(vals));
  }

 private:
  void require_shape(const Cochain& other) const {
    if (!same_shape(other)) {
      throw ShapeMismatchError("cochain shape mismatch");
    }
  }

  Subcomplex domain_;
  int degree_ = 0;
  std::vector<T> values_;
};

// Discrete exterior derivative. Exact in rational mode; at top degree the
// result is the zero cochain of the empty next degree (flagged by size 0).
template <class T>
Cochain<T> coboundary(const Cochain<T>& c) {
  const int p = c.degree();
  Cochain<T> out(c.domain(), p + 1);
  const auto& members = out.domain().members(p + 1);
  for (size_t k = 0; k < members.size(); ++k) {
    T acc(0);
    for (const FaceRef& f : c.complex().faces(p + 1, members[k])) {
      acc += T(f.coefficient) * c.at_parent(f.index);
    }
    out[k] = acc;
  }
  return out;
}

// Integral over a chain: sum of chain coefficients times cochain values.
template <class T>
T integrate(const Cochain<T>& c, const Chain<T>& chain) {
  if (chain.degree != c.degree()) {
    throw ShapeMismatchError("integrate: degree mismatch");
  }
  if (chain.complex != &c.complex()) {
    throw ShapeMismatchError("integrate: complex mismatch");
  }
  T acc(0);
  for (const auto& [idx, coeff] : chain.coefficients) {
    acc += coeff * c.at_parent(idx);
  }
  return acc;
}

// Integral over a region: orientation-weighted sum over the region's
// top-dimensional simplices, which must match the cochain degree.
template <class T>
T integrate(const Cochain<T>& c, const Subcomplex& region) {
  if (region.dimension() != c.degree()) {
    throw ShapeMismatchError("integrate: region dimension != cochain degree");
  }
  return integrate(c, fundamental_chain<T>(region));
}

// Simplicial (front-face/back-face) cup product. The (p+q)-simplex
// [v0..v_{p+q}] evaluates a on its front p face and b on its back q face.
// Integrals of cup products converge to wedge integrals at O(h).
template <class T>
Cochain<T> cup_product(const Cochain<T>& a, const Cochain<T>& b) {
  if (&a.complex() != &b.complex()) {
    throw ShapeMismatchError("cup_product: complex mismatch");
  }
  const int p = a.degree(), q = b.degree();
  Subcomplex domain = a.domain().intersect(b.domain());
  if (p + q > domain.parent().dimension()) {
    throw ShapeMismatchError("cup_product: degree overflow");
  }
  Cochain<T> out(domain, p + q);
  const auto& members = out.domain().members(p + q);
  const auto& parent = domain.parent();
  std::vector<VertexId> front(p + 1), back(q + 1);
  for (size_t k = 0; k < members.size(); ++k) {
    const auto& verts = parent.simplex(p + q, members[k]).vertices;
    for (int m = 0; m <= p; ++m) front[m] = verts[m];
    for (int m = 0; m <= q; ++m) back[m] = verts[p + m];
    auto fi = parent.find(p, front);
    auto bi = parent.find(q, back);
    if (!fi || !bi) throw Error("cup_product: face lookup failed");
    out[k] = a.at_parent(*fi) * b.at_parent(*bi);
  }
  return out;
}

// Potential of a 1-cochain over a connected subcomplex by breadth-first
// integration from a base vertex. Exact along the traversal tree; for a
// closed cochain on a simply-connected chart the result is a potential up
// to the tree-independent defect (zero in rational mode when exact-closed).
template <class T>
Cochain<T> tree_potential(const Subcomplex& chart, const Cochain<T>& one_form,
                          int base_local, T base_value) {
  const auto& parent = chart.parent();
  Cochain<T> out(chart, 0);
  std::vector<char> seen(chart.count(0), 0);
  std::vector<int> queue;
  out[base_local] = base_value;
  seen[base_local] = 1;
  queue.push_back(base_local);
  // local adjacency: vertex -> incident chart edges
  std::vector<std::vector<SimplexIndex>> incident(chart.count(0));
  for (SimplexIndex e : chart.members(1)) {
    for (VertexId v : parent.simplex(1, e).vertices) {
      int vl = chart.local_index(0, *parent.find(0, {v}));
      if (vl >= 0) incident[vl].push_back(e);
    }
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    int vl = queue[head];
    VertexId v = parent.simplex(0, chart.members(0)[vl]).vertices[0];
    for (SimplexIndex e : incident[vl]) {
      const auto& verts = parent.simplex(1, e).vertices;
      VertexId other = (verts[0] == v) ? verts[1] : verts[0];
      int ol = chart.local_index(0, *parent.find(0, {other}));
      if (ol < 0 || seen[ol]) continue;
      T step = one_form.at_parent(e);
      out[ol] = (verts[0] == v) ? out[vl] + step : out[vl] - step;
      seen[ol] = 1;
      queue.push_back(ol);
    }
  }
  for (char s : seen) {
    if (!s) throw Error("tree_potential: chart is not edge-connected");
  }
  return out;
}

// Conversion between exact and floating coefficients. Rational-mode values
// are stored in units of 2*pi (see numbers.hpp), so the conversion applies
// the scale.
Cochain<double> to_real(const Cochain<Rational>& c, double scale = two_pi);
Cochain<Rational> to_exact_units(const Cochain<double>& c);

// Samples of smooth fields: vertex values for functions, chord quadrature for
// 1-forms, centroid values for 2-forms. Used to discretize analytic test
// data; all metric, double mode only.
using PointFn = std::function<double(const std::array<double, 3>&)>;
using CovectorFn =
    std::function<std::array<double, 3>(const std::array<double, 3>&)>;

Cochain<double> sample_function(const Subcomplex& domain, const PointFn& f);
Cochain<double> sample_one_form(const Subcomplex& domain, const CovectorFn& f);
// f(x) is the density against the oriented area element.
Cochain<double> sample_two_form(const Subcomplex& domain, const PointFn& f);

}  // namespace dbcohom
