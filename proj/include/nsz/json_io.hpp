#ifndef NSZ_JSON_IO_HPP
#define NSZ_JSON_IO_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "nsz/certificate.hpp"
#include "nsz/poly_io.hpp"
#include "nsz/support.hpp"

namespace nsz {

using nlohmann::json;

// Exact integers serialize as decimal strings; doubles stay doubles.
inline json certificate_to_json(const BezoutCertificate& cert) {
  json j;
  j["n"] = cert.n;
  j["s"] = cert.s;
  j["a"] = cert.a.get_str();
  j["g"] = json::array();
  for (const auto& g : cert.g) j["g"].push_back(render_poly(g));
  j["degree_bound"] = cert.degree_bound_used;
  j["provenance"] = cert.provenance;
  return j;
}

inline BezoutCertificate certificate_from_json(const json& j) {
  BezoutCertificate cert;
  cert.n = j.at("n").get<int>();
  cert.s = j.at("s").get<int>();
  cert.a = parse_int(j.at("a").get<std::string>());
  for (const auto& gtext : j.at("g")) cert.g.push_back(parse_poly(gtext.get<std::string>(), cert.n));
  cert.degree_bound_used = j.at("degree_bound").get<int>();
  cert.provenance = j.value("provenance", std::string("external"));
  if (static_cast<int>(cert.g.size()) != cert.s)
    throw std::invalid_argument("certificate JSON: g length differs from s");
  return cert;
}

inline json support_to_json(const SupportSet& a) {
  json j;
  j["n"] = a.dim;
  j["points"] = json::array();
  for (const auto& p : a.points) {
    json row = json::array();
    for (const auto& c : p) row.push_back(c.get_str());
    j["points"].push_back(row);
  }
  return j;
}

inline SupportSet support_from_json(const json& j) {
  int n = j.at("n").get<int>();
  std::vector<LatticePoint> pts;
  for (const auto& row : j.at("points")) {
    LatticePoint p;
    for (const auto& c : row) {
      if (c.is_string())
        p.push_back(parse_int(c.get<std::string>()));
      else
        p.push_back(Int(c.get<long>()));
    }
    pts.push_back(std::move(p));
  }
  return SupportSet::from_points(n, std::move(pts));
}

inline json bound_report_to_json(const BoundReport& rep) {
  json j;
  j["statement"] = rep.statement;
  j["formula"] = rep.formula;
  j["values"] = json::object();
  for (const auto& [k, v] : rep.values) j["values"][k] = v;
  for (const auto& [k, v] : rep.exact_values) j["values"][k] = v.get_str();
  return j;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace nsz

#endif
