#pragma once

// Cap operators X, Y, Z, the standard rotator Omega on V_d, the weight
// operator Upsilon and the uniform rotator R = exp_q(n_x) Upsilon exp_q(n_z)
// on arbitrary type-1 modules, and the tau maps.

#include <vector>

#include "uqsl2/check.hpp"
#include "uqsl2/module.hpp"
#include "uqsl2/qexp.hpp"

namespace uqsl2 {

/// G_d with G(q^{d-2i}) = q^{2i(d-i)}, 0 <= i <= d.
inline PolyCoeffs standard_polynomial(int d, const QContext& ctx) {
  if (d < 0) throw Error(ErrorCode::ContractViolation, "diameter must be >= 0");
  std::vector<Rational> nodes, values;
  for (int i = 0; i <= d; ++i) {
    nodes.push_back(ctx.q_pow(d - 2 * i));
    values.push_back(ctx.q_pow(2 * i * (d - i)));
  }
  return lagrange_interpolate(nodes, values);
}

struct CapOperators {
  Matrix X, Y, Z;
  PolyCoeffs G;
};

namespace detail {

inline void require_irreducible_type_one(const Module& mod) {
  require_type_one(mod);
  if (!mod.is_irreducible())
    throw Error(ErrorCode::ContractViolation, mod.describe() + " is not irreducible");
}

}  // namespace detail

/// X = G(x), Y = G(y), Z = G(z); each is cross-checked against G of the inverse.
inline CapOperators cap_operators(const Module& mod) {
  detail::require_irreducible_type_one(mod);
  const QContext& ctx = mod.context();
  CapOperators c;
  c.G = standard_polynomial(mod.diameter(), ctx);
  auto cap = [&](const Matrix& g, const Matrix& g_inv, const char* name) {
    Matrix direct = poly_eval(c.G, g);
    if (direct != poly_eval(c.G, g_inv))
      throw Error(ErrorCode::Inconsistent, std::string("G(") + name + ") != G(" + name + "^-1)");
    return direct;
  };
  c.X = cap(mod[Symbol::x], mat_inverse(mod[Symbol::x]), "x");
  c.Y = cap(mod[Symbol::y], mod[Symbol::y_inv], "y");
  c.Z = cap(mod[Symbol::z], mat_inverse(mod[Symbol::z]), "z");
  return c;
}

/// The pieces every rotator identity is built from: the cap operators, the
/// three q-exponentials and Omega = exp_q(n_x) Y exp_q(n_z).
struct RotatorKit {
  CapOperators caps;
  Matrix ex, ey, ez;
  Matrix omega;
};

inline RotatorKit rotator_kit(const Module& mod) {
  detail::require_irreducible_type_one(mod);
  const QContext& ctx = mod.context();
  RotatorKit kit{cap_operators(mod), exp_q(mod[Symbol::n_x], ctx), exp_q(mod[Symbol::n_y], ctx),
                 exp_q(mod[Symbol::n_z], ctx), Matrix()};
  kit.omega = kit.ex * kit.caps.Y * kit.ez;
  return kit;
}

/// Omega = exp_q(n_x) Y exp_q(n_z) on an irreducible type-1 module.
inline Matrix standard_rotator(const Module& mod) { return rotator_kit(mod).omega; }

/// The nine product formulas for Omega: the three cyclic exp-cap-exp forms
/// followed by the six exp-exp-cap / cap-exp-exp forms.
inline std::vector<Matrix> rotator_formulas(const RotatorKit& k) {
  const auto& c = k.caps;
  return {
      k.ex * c.Y * k.ez, k.ey * c.Z * k.ex, k.ez * c.X * k.ey,
      k.ex * k.ez * c.X, k.ey * k.ex * c.Y, k.ez * k.ey * c.Z,
      c.Z * k.ex * k.ez, c.X * k.ey * k.ex, c.Y * k.ez * k.ey,
  };
}

inline std::vector<Matrix> rotator_formulas(const Module& mod) {
  return rotator_formulas(rotator_kit(mod));
}

/// R^{-1} x R = y, R^{-1} y R = z, R^{-1} z R = x.
inline CheckList rotator_law(const Matrix& r, const Module& mod, const std::string& name) {
  const Matrix r_inv = mat_inverse(r);
  const Matrix& x = mod[Symbol::x];
  const Matrix& y = mod[Symbol::y];
  const Matrix& z = mod[Symbol::z];
  return {
      {name + "^-1 x " + name + " = y", r_inv * x * r, y},
      {name + "^-1 y " + name + " = z", r_inv * y * r, z},
      {name + "^-1 z " + name + " = x", r_inv * z * r, x},
  };
}

/// Conjugation identities satisfied by Omega and the cap operators.
inline CheckList rotator_conjugations(const Module& mod, const RotatorKit& kit) {
  const QContext& ctx = mod.context();
  const auto& c = kit.caps;
  const Matrix& y = mod[Symbol::y];
  const Matrix& yi = mod[Symbol::y_inv];
  const Matrix& nx = mod[Symbol::n_x];
  const Matrix& ny = mod[Symbol::n_y];
  const Matrix& nz = mod[Symbol::n_z];
  const Matrix &ex = kit.ex, &ey = kit.ey, &ez = kit.ez;
  const Matrix& omega = kit.omega;
  const Matrix om_inv = mat_inverse(omega);
  const Matrix Y_inv = mat_inverse(c.Y);
  auto conj = [&](const Matrix& m) { return om_inv * m * omega; };

  CheckList out = rotator_law(omega, mod, "Omega");
  out.push_back({"Omega^-1 nx Omega = ny", conj(nx), ny});
  out.push_back({"Omega^-1 ny Omega = nz", conj(ny), nz});
  out.push_back({"Omega^-1 nz Omega = nx", conj(nz), nx});
  out.push_back({"Omega^-1 exp_q(nx) Omega = exp_q(ny)", conj(ex), ey});
  out.push_back({"Omega^-1 exp_q(ny) Omega = exp_q(nz)", conj(ey), ez});
  out.push_back({"Omega^-1 exp_q(nz) Omega = exp_q(nx)", conj(ez), ex});
  out.push_back({"Omega^-1 X Omega = Y", conj(c.X), c.Y});
  out.push_back({"Omega^-1 Y Omega = Z", conj(c.Y), c.Z});
  out.push_back({"Omega^-1 Z Omega = X", conj(c.Z), c.X});
  out.push_back({"exp_q(nz)^-1 Y exp_q(nz) = X", exp_q_inverse(nz, ctx) * c.Y * ez, c.X});
  out.push_back({"Y y = y Y", c.Y * y, y * c.Y});
  out.push_back({"Y^-1 nx Y = y^-1 nx y^-1", Y_inv * nx * c.Y, yi * nx * yi});
  out.push_back({"Y nx Y^-1 = y nx y", c.Y * nx * Y_inv, y * nx * y});
  out.push_back({"Y^-1 nz Y = y nz y", Y_inv * nz * c.Y, y * nz * y});
  out.push_back({"Y nz Y^-1 = y^-1 nz y^-1", c.Y * nz * Y_inv, yi * nz * yi});
  return out;
}

inline CheckList rotator_conjugations(const Module& mod) {
  return rotator_conjugations(mod, rotator_kit(mod));
}

/// Upsilon acts on V(lambda) as q^{-lambda^2/2} = (q^{1/2})^{-lambda^2}.
inline Matrix upsilon(const Module& mod) {
  require_type_one(mod);
  const auto w = weight_decomposition(mod);
  std::vector<Rational> diag;
  diag.reserve(mod.dim());
  for (int lambda : w.weight_of)
    diag.push_back(q_half_power(-static_cast<std::int64_t>(lambda) * lambda, mod.context()));
  return Matrix::diagonal(diag);
}

/// R = exp_q(n_x) Upsilon exp_q(n_z), a rotator on every type-1 module.
inline Matrix frak_r(const Module& mod) {
  require_type_one(mod);
  const QContext& ctx = mod.context();
  return exp_q(mod[Symbol::n_x], ctx) * upsilon(mod) * exp_q(mod[Symbol::n_z], ctx);
}

struct TauMaps {
  Matrix tau_x, tau_y, tau_z;
};

/// tau_x = exp_q(n_y) Omega, tau_y = exp_q(n_z) Omega, tau_z = exp_q(n_x) Omega.
inline TauMaps tau_maps(const RotatorKit& k) {
  return {k.ey * k.omega, k.ez * k.omega, k.ex * k.omega};
}

inline TauMaps tau_maps(const Module& mod) { return tau_maps(rotator_kit(mod)); }

/// Keeps only the entries of m that send V(lambda) into V(-lambda); m passes
/// the flip test iff this leaves it unchanged.
inline Matrix weight_flip_part(const Matrix& m, const WeightDecomposition& w) {
  Matrix kept(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (w.weight_of[i] == -w.weight_of[j]) kept(i, j) = m(i, j);
  return kept;
}

inline CheckList tau_checks(const Module& mod, const RotatorKit& kit) {
  const Matrix& omega = kit.omega;
  const auto& caps = kit.caps;
  const auto tau = tau_maps(kit);
  const Matrix& y = mod[Symbol::y];
  const Matrix& yi = mod[Symbol::y_inv];
  const Matrix& nx = mod[Symbol::n_x];
  const Matrix& nz = mod[Symbol::n_z];
  const Matrix ty_inv = mat_inverse(tau.tau_y);
  const Matrix omega3 = omega * omega * omega;
  auto inv_sq = [](const Matrix& m) {
    const Matrix i = mat_inverse(m);
    return i * i;
  };
  const auto w = weight_decomposition(mod);
  return {
      {"tau_x = Omega exp_q(nz)", tau.tau_x, omega * kit.ez},
      {"tau_y = Omega exp_q(nx)", tau.tau_y, omega * kit.ex},
      {"tau_z = Omega exp_q(ny)", tau.tau_z, omega * kit.ey},
      {"tau_y^-1 nx tau_y = y^-1 nz y^-1", ty_inv * nx * tau.tau_y, yi * nz * yi},
      {"tau_y^-1 y tau_y = y^-1", ty_inv * y * tau.tau_y, yi},
      {"tau_y^-1 nz tau_y = nx", ty_inv * nz * tau.tau_y, nx},
      {"X = Omega^3 tau_x^-2", caps.X, omega3 * inv_sq(tau.tau_x)},
      {"Y = Omega^3 tau_y^-2", caps.Y, omega3 * inv_sq(tau.tau_y)},
      {"Z = Omega^3 tau_z^-2", caps.Z, omega3 * inv_sq(tau.tau_z)},
      {"tau_y V(lambda) = V(-lambda)", tau.tau_y, weight_flip_part(tau.tau_y, w)},
  };
}

inline CheckList tau_checks(const Module& mod) { return tau_checks(mod, rotator_kit(mod)); }

}  // namespace uqsl2
