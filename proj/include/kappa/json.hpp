#pragma once

// JSON encodings used by the command-line tool.

#include "kappa/cubic_family.hpp"
#include "kappa/homology.hpp"
#include "kappa/lines.hpp"

#include <json.hpp>

namespace kappa {

using nlohmann::json;

// Rationals and big integers travel as strings so nothing is rounded.
inline json to_json_value(const Rational &r) { return to_string(r); }
inline json to_json_value(const Integer &z) { return to_string(z); }

inline json matrix_json(const IntMatrix &m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer &e = m(i, j);
      if (e.fits_slong_p())
        row.push_back(e.get_si());
      else
        row.push_back(to_string(e));
    }
    rows.push_back(row);
  }
  return rows;
}

inline json matrix_json(const IntMatrix &m, const std::string &basis) {
  return json{{"basis", basis}, {"matrix", matrix_json(m)}};
}

inline json point_json(const Point3 &p) {
  return json::array({to_string(p[0]), to_string(p[1]), to_string(p[2])});
}

inline json critical_point_json(const CriticalPoint &cp) {
  json j;
  if (cp.point) {
    j["point"] = point_json(*cp.point);
  } else {
    static const char *names[3] = {"x", "y", "z"};
    const auto &l = *cp.locus;
    j["minpoly"] = l.minpoly.to_string(names[l.variable]);
    j["variable"] = names[l.variable];
    j["coordinates"] = json::array(
        {l.coordinate_string(0), l.coordinate_string(1), l.coordinate_string(2)});
    j["count"] = cp.count();
  }
  j["multiplicity"] = cp.multiplicity;
  if (cp.value)
    j["value"] = to_string(*cp.value);
  else
    j["value_poly"] = cp.value_poly.to_string("t");
  return j;
}

inline json critical_values_json(const CriticalValues &v) {
  json out = json::array();
  for (const auto &[val, m] : v.exact) out.push_back({{"value", to_string(val)}, {"multiplicity", m}});
  for (const auto &[p, m] : v.algebraic)
    out.push_back({{"value_poly", p.to_string("t")}, {"multiplicity", m}});
  return out;
}

inline json line_json(const Line &l) {
  auto coords = [](const AlgPoint &p) {
    return json::array({p[0].to_string(), p[1].to_string(), p[2].to_string()});
  };
  return json{{"label", l.label()},
              {"equations", l.equations()},
              {"base", coords(l.base)},
              {"direction", coords(l.direction)}};
}

inline json abelian_group_json(const AbelianGroup &g) {
  json tors = json::array();
  for (const auto &t : g.torsion) tors.push_back(to_json_value(t));
  return json{{"free_rank", g.free_rank}, {"torsion", tors}, {"group", g.to_string()}};
}

} // namespace kappa
