#include "dbcohom/ses.hpp"

#include <cmath>

#include "dbcohom/mesh_builders.hpp"
#include "dbcohom/wilson.hpp"

namespace dbcohom {

namespace {

template <class T>
DBCochain<T> ses_v_impl(const GoodCover& cover, const std::vector<T>& m_lift) {
  const Nerve& nerve = cover.nerve();
  if (static_cast<int>(m_lift.size()) != nerve.count(1)) {
    throw ShapeMismatchError("ses_v: one lift per double overlap");
  }
  DBCochain<T> out(&cover, 1, 1);
  const T scale = integer_injection_scale<T>();
  for (int m = 0; m < nerve.count(1); ++m) {
    // constant function with value 2*pi*m_ij on the overlap
    auto& layer = out.form_layer(1)[m];
    for (int c = 0; c < layer.size(); ++c) layer[c] = scale * m_lift[m];
  }
  // integer layer: cech coboundary of the lifts, must be integral
  for (int t = 0; t < nerve.count(2); ++t) {
    const auto& tuple = nerve.simplex(2, t);
    T acc(0);
    std::vector<int> face(2);
    for (int drop = 0; drop < 3; ++drop) {
      int pos = 0;
      for (int r = 0; r < 3; ++r) {
        if (r != drop) face[pos++] = tuple[r];
      }
      int fi = nerve.find(1, face);
      int sign = ((2 - drop) % 2 == 0) ? 1 : -1;
      acc += T(sign) * m_lift[fi];
    }
    IntCoeff snapped;
    if constexpr (std::is_same_v<T, Rational>) {
      if (denominator(acc) != 1) {
        throw InvalidParameterError("ses_v: lifts are not an R/Z cocycle");
      }
      snapped = acc.template convert_to<IntCoeff>();
    } else {
      snapped = static_cast<IntCoeff>(std::llround(acc));
      if (std::abs(acc - static_cast<double>(snapped)) > 1e-8) {
        throw InvalidParameterError("ses_v: lifts are not an R/Z cocycle");
      }
    }
    out.integer_layer()[t] = snapped;
  }
  return out;
}

}  // namespace

DBCochain<double> ses_v(const GoodCover& cover,
                        const std::vector<double>& m_lift) {
  return ses_v_impl<double>(cover, m_lift);
}
DBCochain<Rational> ses_v(const GoodCover& cover,
                          const std::vector<Rational>& m_lift) {
  return ses_v_impl<Rational>(cover, m_lift);
}

SesOutput apply_ses_map(SesMap map_id, const GoodCover& cover,
                        const SesInput& x) {
  switch (map_id) {
    case SesMap::delta_check:
      return ses_delta_lift(cover, std::get<Cochain<double>>(x));
    case SesMap::u:
      return ses_u(U1Connection<double>(std::get<DBCochain<double>>(x)));
    case SesMap::v:
      return ses_v(cover, std::get<std::vector<double>>(x));
    case SesMap::d:
      return ses_d(U1Connection<double>(std::get<DBCochain<double>>(x)));
  }
  throw Error("unknown SES map");
}

std::vector<Chain<double>> one_cycle_basis(const SimplicialComplex& complex) {
  std::vector<Chain<double>> basis;
  if (complex.kind() == MeshKind::circle) {
    basis.push_back(fundamental_chain<double>(Subcomplex::whole(complex)));
  } else if (complex.kind() == MeshKind::annulus) {
    basis.push_back(ring_cycle(complex, inner_ring(complex)));
  }
  return basis;
}

bool has_integral_periods(const Cochain<double>& form, double tolerance) {
  const SimplicialComplex& complex = form.complex();
  if (form.degree() == 1) {
    Cochain<double> closure = coboundary(form);
    if (closure.max_abs() > tolerance) return false;
    for (const auto& cycle : one_cycle_basis(complex)) {
      double period = integrate(form, cycle) / two_pi;
      if (std::abs(period - std::llround(period)) > tolerance) return false;
    }
    return true;
  }
  if (form.degree() == 2 && form.degree() == complex.dimension()) {
    double period =
        integrate(form, Subcomplex::whole(complex)) / two_pi;
    // closed surfaces only; open meshes have no period quantization
    if (!complex.boundary_simplices().empty()) return true;
    return std::abs(period - std::llround(period)) <= tolerance;
  }
  throw ShapeMismatchError("integral-period test expects 1- or 2-forms");
}

namespace {

template <class T>
bool snap_integer(const T& value, double tolerance, IntCoeff& out) {
  if constexpr (std::is_same_v<T, Rational>) {
    if (denominator(value) != 1) return false;
    out = value.template convert_to<IntCoeff>();
    return true;
  } else {
    double v = value;
    out = static_cast<IntCoeff>(std::llround(v));
    return std::abs(v - static_cast<double>(out)) <= tolerance;
  }
}

template <class T>
bool nearly_equal(const T& a, const T& b, double tolerance) {
  if constexpr (std::is_same_v<T, Rational>) {
    return a == b;
  } else {
    return std::abs(a - b) <= tolerance;
  }
}

// constant value of a 0-cochain, or nullopt when not constant
template <class T>
std::optional<T> constant_value(const Cochain<T>& c, double tolerance) {
  if (c.size() == 0) return T(0);
  T v0 = c[0];
  for (int i = 1; i < c.size(); ++i) {
    if (!nearly_equal(c[i], v0, tolerance)) return std::nullopt;
  }
  return v0;
}

}  // namespace

template <class T>
std::optional<DBCochain<T>> find_gauge_equivalence(const DBCochain<T>& from,
                                                   const DBCochain<T>& to,
                                                   double tolerance) {
  if (!from.same_shape(to)) {
    throw ShapeMismatchError("gauge search needs matching shapes");
  }
  const GoodCover& cover = from.cover();
  const Nerve& nerve = cover.nerve();
  const int k = from.truncation();
  const T scale = integer_injection_scale<T>();
  DBCochain<T> delta = to - from;

  if (k == 0 && from.diagonal() == 0) {
    // q = (n_i): -inject(n_i) = delta phi_i and cech(n) = delta m
    DBCochain<T> q(&cover, 0, -1);
    for (int i = 0; i < cover.chart_count(); ++i) {
      auto constant = constant_value(delta.form_layer(0)[i], tolerance);
      if (!constant) return std::nullopt;
      IntCoeff n_i;
      if (!snap_integer(T(-*constant / scale), tolerance, n_i)) {
        return std::nullopt;
      }
      q.integer_layer()[i] = n_i;
    }
    DBCochain<T> residual = to - gauge_transform(from, q);
    if constexpr (std::is_same_v<T, Rational>) {
      if (!residual.is_identically_zero()) return std::nullopt;
    } else {
      if (residual.max_abs() > tolerance * 100) return std::nullopt;
    }
    return q;
  }

  if (k == 1 && from.diagonal() == 1) {
    DBCochain<T> q(&cover, 1, 0);
    // chart potentials for the form layer
    std::vector<Cochain<T>> base_potentials;
    for (int i = 0; i < cover.chart_count(); ++i) {
      const Cochain<T>& da = delta.form_layer(0)[i];
      Cochain<T> closure = coboundary(da);
      if constexpr (std::is_same_v<T, Rational>) {
        if (!closure.is_identically_zero()) return std::nullopt;
      } else {
        if (closure.max_abs() > tolerance) return std::nullopt;
      }
      base_potentials.push_back(tree_potential(cover.chart(i), da, 0, T(0)));
    }

    // overlap residues r_ij = delta Lambda_ij - q_i + q_j, must be constant
    std::vector<T> residue(nerve.count(1), T(0));
    for (int m = 0; m < nerve.count(1); ++m) {
      const auto& pair = nerve.simplex(1, m);
      const Subcomplex& overlap = cover.intersection(1, m);
      Cochain<T> r = delta.form_layer(1)[m] -
                     base_potentials[pair[0]].restrict_to(overlap) +
                     base_potentials[pair[1]].restrict_to(overlap);
      auto constant = constant_value(r, tolerance * 10);
      if (!constant) return std::nullopt;
      residue[m] = *constant;
    }

    // propagate chart constants over a spanning tree of the nerve graph
    std::vector<T> chart_constant(cover.chart_count(), T(0));
    std::vector<char> fixed(cover.chart_count(), 0);
    std::vector<IntCoeff> jumps(nerve.count(1), 0);
    std::vector<char> edge_used(nerve.count(1), 0);
    fixed[0] = 1;
    std::vector<int> queue = {0};
    for (size_t head = 0; head < queue.size(); ++head) {
      int i = queue[head];
      for (int m = 0; m < nerve.count(1); ++m) {
        if (edge_used[m]) continue;
        const auto& pair = nerve.simplex(1, m);
        int other = -1;
        if (pair[0] == i && !fixed[pair[1]]) other = pair[1];
        if (pair[1] == i && !fixed[pair[0]]) other = pair[0];
        if (other < 0) continue;
        edge_used[m] = 1;
        // c_a - c_b + scale*m_ab = r_ab with m_ab = 0 on tree edges
        if (pair[0] == i) {
          chart_constant[other] = chart_constant[i] - residue[m];
        } else {
          chart_constant[other] = residue[m] + chart_constant[i];
        }
        fixed[other] = 1;
        queue.push_back(other);
      }
    }
    for (char f : fixed) {
      if (!f) throw Error("gauge search: nerve is disconnected");
    }
    // non-tree edges: the cycle obstruction must be integral
    for (int m = 0; m < nerve.count(1); ++m) {
      if (edge_used[m]) continue;
      const auto& pair = nerve.simplex(1, m);
      T gap = (residue[m] - chart_constant[pair[0]] + chart_constant[pair[1]]) /
              scale;
      IntCoeff mw;
      if (!snap_integer(gap, tolerance, mw)) {
        return std::nullopt;  // holonomies differ by a non-integral amount
      }
      jumps[m] = mw;
    }

    // assemble q and check the integer layer via the final residual
    for (int i = 0; i < cover.chart_count(); ++i) {
      q.form_layer(0)[i] = base_potentials[i];
      for (int c = 0; c < q.form_layer(0)[i].size(); ++c) {
        q.form_layer(0)[i][c] += chart_constant[i];
      }
    }
    q.integer_layer() = jumps;
    DBCochain<T> residual = to - gauge_transform(from, q);
    if constexpr (std::is_same_v<T, Rational>) {
      if (!residual.is_identically_zero()) return std::nullopt;
    } else {
      if (residual.max_abs() > tolerance * 100) return std::nullopt;
    }
    return q;
  }

  throw InvalidParameterError("gauge search supports (k,l) in {(0,0),(1,1)}");
}

template std::optional<DBCochain<double>> find_gauge_equivalence(
    const DBCochain<double>&, const DBCochain<double>&, double);
template std::optional<DBCochain<Rational>> find_gauge_equivalence(
    const DBCochain<Rational>&, const DBCochain<Rational>&, double);

template <class T>
DBCochain<T> trivializing_gauge(const U1Connection<T>& connection) {
  const GoodCover& cover = connection.cover();
  const Nerve& nerve = cover.nerve();
  const DBCochain<T>& x = connection.db();
  const T scale = integer_injection_scale<T>();

  // stage 1: kill the integer layer; solvable iff u(x) = 0
  IntegerMatrix d1 = nerve_coboundary_matrix(nerve, 1);
  std::vector<BigInt> rhs(nerve.count(2));
  for (int t = 0; t < nerve.count(2); ++t) {
    rhs[t] = -BigInt(x.integer_layer()[t]);
  }
  auto beta = solve_integer_system(d1, rhs);
  if (!beta) {
    throw InvalidParameterError(
        "trivializing_gauge: integer-layer class is nonzero");
  }

  DBCochain<T> q(&cover, 1, 0);
  for (int m = 0; m < nerve.count(1); ++m) {
    q.integer_layer()[m] = (*beta)[m].template convert_to<IntCoeff>();
  }
  DBCochain<T> staged = gauge_transform(x, q);

  // stage 2: transition functions are now a cech cocycle of functions; the
  // partition-of-unity contraction mu_i = -sum_l rho_l Lambda_il kills them
  const auto& multiplicity = cover.vertex_multiplicity();
  DBCochain<T> q2(&cover, 1, 0);
  for (int i = 0; i < cover.chart_count(); ++i) {
    Cochain<T>& mu = q2.form_layer(0)[i];
    const Subcomplex& chart = cover.chart(i);
    for (int c = 0; c < chart.count(0); ++c) {
      SimplexIndex vs = chart.members(0)[c];
      VertexId v = cover.complex().simplex(0, vs).vertices[0];
      T acc(0);
      for (int l = 0; l < cover.chart_count(); ++l) {
        if (l == i) continue;
        if (cover.partition_of_unity(l)[v] == 0.0) continue;
        int idx = nerve.find(1, {std::min(i, l), std::max(i, l)});
        if (idx < 0) throw Error("pou support outside the nerve");
        T lambda = staged.form_layer(1)[idx].at_parent(vs);
        if (i > l) lambda = -lambda;  // antisymmetric indices
        acc += lambda / T(multiplicity[v]);
      }
      mu[c] = -acc;
    }
  }
  return q + q2;
}

template DBCochain<double> trivializing_gauge(const U1Connection<double>&);
template DBCochain<Rational> trivializing_gauge(const U1Connection<Rational>&);

}  // namespace dbcohom
