#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <type_traits>
#include <utility>
#include <vector>

#include "dbcohom/cover.hpp"

namespace dbcohom {

// Symbols appearing in the block matrix of a Deligne-Beilinson differential.
enum class OpSymbol { zero, cech, plus_d, minus_d };

// Block pattern of D^[k,l]: rows are target layers (Cech degree l+1-k..l+2
// clipped at 0), columns are source layers. Generated programmatically for
// any truncation and diagonal; the four hand-written matrices of the U(1)
// and (-1)-gerbe complexes are special cases.
//
// The d-sign alternates between consecutive diagonals so that
// D^[k,l+1] o D^[k,l] = 0; the absolute sign is +d on even diagonals, which
// reproduces the l = 0 operator literally.
struct DBOperatorSpec {
  int truncation = 0;
  int source_diagonal = 0;
  std::vector<int> source_layers;  // Cech degrees of the source layers
  std::vector<int> target_layers;
  // entry(r, c): symbol applied to source layer c contributing to target r
  std::vector<std::vector<OpSymbol>> blocks;
};

DBOperatorSpec db_operator_spec(int truncation, int diagonal);

// Cech degree range [q_min, q_max] of the layers of a (k, l) cochain; the
// layer at q has form degree l - q, the bottom layer (form degree -1) is one
// integer per intersection.
inline int db_layer_min(int k, int l) { return std::max(0, l - k); }
inline int db_layer_max(int /*k*/, int l) { return l + 1; }

// One ladder of local form cochains descending to an exact integer layer.
// Form layers at Cech degree q hold (l-q)-forms on (q+1)-fold intersections;
// the integer layer sits at Cech degree l+1 and counts multiples of 2*pi.
// Layers beyond the nerve dimension are present but empty: a good cover has
// bounded multiplicity, so deep intersections vanish identically.
template <class T>
class DBCochain {
 public:
  DBCochain() = default;
  DBCochain(const GoodCover* cover, int truncation, int diagonal)
      : cover_(cover), k_(truncation), l_(diagonal) {
    if (k_ < 0) throw InvalidParameterError("truncation must be >= 0");
    if (l_ < -1) throw InvalidParameterError("diagonal must be >= -1");
    for (int q = db_layer_min(k_, l_); q <= l_; ++q) {
      std::vector<Cochain<T>> layer;
      for (int m = 0; m < cover_->nerve().count(q); ++m) {
        layer.emplace_back(cover_->intersection(q, m), l_ - q);
      }
      form_layers_.push_back(std::move(layer));
    }
    int_layer_.assign(cover_->nerve().count(l_ + 1), 0);
  }

  const GoodCover& cover() const { return *cover_; }
  int truncation() const { return k_; }
  int diagonal() const { return l_; }

  bool has_form_layer(int q) const {
    return q >= db_layer_min(k_, l_) && q <= l_;
  }
  // Form layer at Cech degree q; member m lives on intersection(q, m).
  std::vector<Cochain<T>>& form_layer(int q) {
    return form_layers_[q - db_layer_min(k_, l_)];
  }
  const std::vector<Cochain<T>>& form_layer(int q) const {
    return form_layers_[q - db_layer_min(k_, l_)];
  }
  // Integer layer at Cech degree l+1, one entry per intersection, unit 2*pi.
  std::vector<IntCoeff>& integer_layer() { return int_layer_; }
  const std::vector<IntCoeff>& integer_layer() const { return int_layer_; }

  bool same_shape(const DBCochain& other) const {
    return cover_ == other.cover_ && k_ == other.k_ && l_ == other.l_;
  }

  DBCochain& operator+=(const DBCochain& other) {
    if (!same_shape(other)) throw ShapeMismatchError("DBCochain shape mismatch");
    for (size_t i = 0; i < form_layers_.size(); ++i) {
      for (size_t m = 0; m < form_layers_[i].size(); ++m) {
        form_layers_[i][m] += other.form_layers_[i][m];
      }
    }
    for (size_t m = 0; m < int_layer_.size(); ++m) {
      int_layer_[m] += other.int_layer_[m];
    }
    return *this;
  }
  DBCochain& operator-=(const DBCochain& other) {
    if (!same_shape(other)) throw ShapeMismatchError("DBCochain shape mismatch");
    for (size_t i = 0; i < form_layers_.size(); ++i) {
      for (size_t m = 0; m < form_layers_[i].size(); ++m) {
        form_layers_[i][m] -= other.form_layers_[i][m];
      }
    }
    for (size_t m = 0; m < int_layer_.size(); ++m) {
      int_layer_[m] -= other.int_layer_[m];
    }
    return *this;
  }
  friend DBCochain operator+(DBCochain a, const DBCochain& b) { return a += b; }
  friend DBCochain operator-(DBCochain a, const DBCochain& b) { return a -= b; }

  // Max-abs coefficient over all layers, integer layer in 2*pi units.
  double max_abs() const {
    double m = 0;
    for (const auto& layer : form_layers_) {
      for (const auto& c : layer) m = std::max(m, c.max_abs());
    }
    for (IntCoeff w : int_layer_) {
      m = std::max(m, std::abs(static_cast<double>(w)));
    }
    return m;
  }
  bool is_identically_zero() const {
    for (const auto& layer : form_layers_) {
      for (const auto& c : layer) {
        if (!c.is_identically_zero()) return false;
      }
    }
    for (IntCoeff w : int_layer_) {
      if (w != 0) return false;
    }
    return true;
  }

 private:
  const GoodCover* cover_ = nullptr;
  int k_ = 0;
  int l_ = 0;
  std::vector<std::vector<Cochain<T>>> form_layers_;  // q = q_min .. l
  std::vector<IntCoeff> int_layer_;                   // q = l + 1
};

// Scale applied when the integer layer is injected into constant functions:
// rational-mode forms are stored in 2*pi units (injection is w -> w, exact);
// double-mode forms are plain reals (injection is w -> 2*pi*w).
template <class T>
T integer_injection_scale();
template <>
inline Rational integer_injection_scale<Rational>() { return Rational(1); }
template <>
inline double integer_injection_scale<double>() { return two_pi; }

// The Deligne-Beilinson differential D^[k,l], mapping diagonal l to l+1.
// Layer q' of the result is cech(x_{q'-1}) + sign(l) * d(x_{q'}), where d on
// the integer layer is the canonical injection into constant functions and d
// on a form layer of degree k is the zero map (truncation).
template <class T>
DBCochain<T> db_differential(const DBCochain<T>& x) {
  const GoodCover& cover = x.cover();
  const int k = x.truncation(), l = x.diagonal();
  DBCochain<T> out(&cover, k, l + 1);
  const T d_sign = (((l % 2) + 2) % 2 == 0) ? T(1) : T(-1);

  for (int q = db_layer_min(k, l + 1); q <= l + 1; ++q) {
    auto& target = out.form_layer(q);
    // cech part from source form layer q-1
    if (x.has_form_layer(q - 1)) {
      CechFormFamily<T> fam{&cover, q - 1, l - (q - 1), x.form_layer(q - 1)};
      CechFormFamily<T> shifted = cech_coboundary(fam);
      for (size_t m = 0; m < target.size(); ++m) {
        target[m] += shifted.members[m];
      }
    }
    // d part from source form layer q (same Cech degree, one form degree up)
    if (x.has_form_layer(q)) {
      for (size_t m = 0; m < target.size(); ++m) {
        target[m] += d_sign * coboundary(x.form_layer(q)[m]);
      }
    }
    // injection of the integer layer when q = l + 1
    if (q == l + 1) {
      const T scale = d_sign * integer_injection_scale<T>();
      for (size_t m = 0; m < target.size(); ++m) {
        T value = scale * T(x.integer_layer()[m]);
        for (int c = 0; c < target[m].size(); ++c) {
          target[m][c] += value;
        }
      }
    }
  }

  // integer layer of the result: cech coboundary of the source integers
  CechIntFamily ints{&cover, l + 1, x.integer_layer()};
  out.integer_layer() = cech_coboundary(ints).members;
  return out;
}

// Cocycle test at the cochain's own bidegree. Exact in rational mode;
// real-mode inputs compare the residual against the tolerance. The residual
// (max-abs over all layers of D x) is returned either way.
template <class T>
std::pair<bool, double> is_cocycle(const DBCochain<T>& x,
                                   double tolerance = 1e-10) {
  DBCochain<T> d = db_differential(x);
  if constexpr (std::is_same_v<T, Rational>) {
    return {d.is_identically_zero(), d.max_abs()};
  } else {
    double r = d.max_abs();
    return {r <= tolerance, r};
  }
}

// x + D^[k,l-1] q: gauge transformation by a cochain one diagonal lower.
// Cocycles map to cocycles since D o D = 0.
template <class T>
DBCochain<T> gauge_transform(const DBCochain<T>& x, const DBCochain<T>& q) {
  if (q.truncation() != x.truncation() || q.diagonal() != x.diagonal() - 1 ||
      &q.cover() != &x.cover()) {
    throw ShapeMismatchError("gauge parameter has wrong shape");
  }
  return x + db_differential(q);
}

// Deterministic random cochain with small rational coefficients (numerators
// in [-9, 9], denominators in [1, 9]) and small integers, used by the
// structural verification passes.
template <class Rng>
DBCochain<Rational> random_rational_db_cochain(const GoodCover& cover,
                                               int truncation, int diagonal,
                                               Rng& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  DBCochain<Rational> out(&cover, truncation, diagonal);
  for (int q = db_layer_min(truncation, diagonal); q <= diagonal; ++q) {
    for (auto& member : out.form_layer(q)) {
      for (int c = 0; c < member.size(); ++c) {
        member[c] = Rational(num(rng), den(rng));
      }
    }
  }
  for (auto& w : out.integer_layer()) {
    w = num(rng);
  }
  return out;
}

}  // namespace dbcohom
