#pragma once

// JSON forms for rationals, matrices, polynomials, modules and contexts.

#include <string>

#include <json.hpp>

#include "uqsl2/module.hpp"

namespace uqsl2 {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return to_string(r); }

/// {"rows": n, "cols": m, "entries": [[...row...], ...]} with "num/den" strings.
inline Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

/// Coefficients in increasing degree.
inline Json to_json(const PolyCoeffs& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_string(c));
  return Json{{"degree", p.degree()}, {"coefficients", std::move(coeffs)}};
}

inline Json to_json(const QContext& ctx) {
  return Json{{"q", to_string(ctx.q())},
              {"theta", to_string(ctx.theta())},
              {"theta_mode", std::string(to_string(ctx.theta_mode()))},
              {"t", ctx.t()},
              {"ident", std::string(to_string(ctx.ident()))}};
}

inline Json to_json(const Module& mod) {
  Json out;
  if (mod.is_irreducible()) {
    out["d"] = mod.diameter();
    out["epsilon"] = mod.epsilon();
  } else {
    Json ds = Json::array();
    for (const auto& s : mod.summands()) ds.push_back(s.d);
    out["d"] = std::move(ds);
    out["epsilon"] = 1;
  }
  out["basis"] = std::string(to_string(mod.basis()));
  Json gens = Json::object();
  for (const auto& [sym, m] : mod.generators().all()) gens[std::string(to_string(sym))] = to_json(m);
  out["generators"] = std::move(gens);
  return out;
}

inline Matrix matrix_from_json(const Json& j) {
  try {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const Json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows)
      throw Error(ErrorCode::ParseError, "matrix entries do not match rows");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (!entries[i].is_array() || entries[i].size() != cols)
        throw Error(ErrorCode::ParseError, "matrix row " + std::to_string(i) + " has wrong length");
      for (std::size_t c = 0; c < cols; ++c)
        m(i, c) = parse_rational(entries[i][c].get<std::string>());
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

inline QContext context_from_json(const Json& j) {
  try {
    return QContext::make(parse_rational(j.at("q").get<std::string>()),
                          parse_rational(j.at("theta").get<std::string>()),
                          parse_theta_mode(j.at("theta_mode").get<std::string>()),
                          j.at("t").get<int>(), parse_ident_kind(j.at("ident").get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

/// {"operator": name, "matrix": {...}}.
inline Json tagged(const std::string& name, const Matrix& m) {
  return Json{{"operator", name}, {"matrix", to_json(m)}};
}

inline Json tagged(const std::string& name, const PolyCoeffs& p) {
  return Json{{"operator", name}, {"polynomial", to_json(p)}};
}

}  // namespace uqsl2
