#ifndef NSZ_CLI_HPP
#define NSZ_CLI_HPP

#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nsz/cematrix.hpp"
#include "nsz/certificate.hpp"
#include "nsz/json_io.hpp"
#include "nsz/mahler.hpp"
#include "nsz/selftest.hpp"
#include "nsz/variety_height.hpp"

namespace nsz::cli {

// Exit codes: 0 success/verified, 1 verification failed, 2 parse/arity
// error, 3 infeasible at the requested degree bound.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kParseError = 2;
inline constexpr int kInfeasible = 3;

namespace detail {

inline std::vector<MultiPoly> load_polys(const std::vector<std::string>& paths) {
  std::vector<std::string> texts;
  int nvars = 0;
  for (const auto& p : paths) {
    texts.push_back(read_text_file(p));
    nvars = std::max(nvars, nsz::detail::scan_nvars(texts.back()));
  }
  std::vector<MultiPoly> out;
  for (const auto& t : texts) out.push_back(parse_poly(t, nvars));
  return out;
}

inline Place parse_place(const std::string& s) {
  if (s == "inf" || s == "infinity" || s.empty()) return Place::infinity();
  return Place::prime(parse_int(s));
}

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact heights, sparse volumes, trace-formula division and Bezout certificates"};
  app.require_subcommand(1);

  // ---- height ----
  auto* c_height = app.add_subcommand(
      "height", "local/global coefficient heights of a polynomial (statement context: eq1, hprod, product-formula)");
  std::string h_file, h_place = "inf";
  bool h_all = false;
  c_height->add_option("file", h_file, "polynomial file")->required();
  c_height->add_option("--place", h_place, "inf or a prime p");
  c_height->add_flag("--all-places", h_all, "report every contributing place and the global sum");

  // ---- mahler ----
  auto* c_mahler = app.add_subcommand(
      "mahler", "Monte Carlo Mahler measure on the torus or spheres (statement context: eq1, emes)");
  std::string m_file, m_spherical;
  long m_samples = kDefaultSamples;
  std::uint64_t m_seed = 0;
  c_mahler->add_option("file", m_file, "polynomial file")->required();
  c_mahler->add_option("--samples", m_samples, "sample count");
  c_mahler->add_option("--seed", m_seed, "RNG seed");
  c_mahler->add_option("--spherical", m_spherical, "r:n for the S_n^r measure");

  // ---- volume ----
  auto* c_volume = app.add_subcommand(
      "volume", "normalized lattice volume of the support (statement context: bernstein, cor3)");
  std::vector<std::string> v_files;
  bool v_frame = false;
  c_volume->add_option("files", v_files, "polynomial files")->required();
  c_volume->add_flag("--frame", v_frame, "include 0 and the unit vectors in the support");

  // ---- bound ----
  auto* c_bound = app.add_subcommand(
      "bound",
      "closed-form degree/height bound calculators (statement ids: theorem1, theorem2, cor3, d1, n1, "
      "bertini, radical, noether, bernstein, toric, arith-bezout, afin, proyeccion, inversible, "
      "import, inters, bezloc, bezloc1, inters-global, norma, traza, division, division-n0, "
      "nullstlocal, extrinseco, dn, sparse-params, geo-family, ejemplo-sparse)");
  c_bound->set_help_flag("--help", "print help");
  std::string b_statement;
  c_bound->add_option("statement", b_statement, "statement id")->required();
  std::map<std::string, long> b_counts;
  std::map<std::string, double> b_reals;
  std::string b_di;
  std::string b_vheights;
  for (const char* k : {"n", "d", "s", "delta", "vol", "r", "N", "m", "degV", "degW", "dimV",
                        "dimW", "degf", "degg", "l", "degt-g", "degx-g"}) {
    b_counts[k] = LONG_MIN;
    c_bound->add_option("--" + std::string(k), b_counts[k]);
  }
  for (const char* k : {"h", "eta", "hV", "hW", "hf", "hphi", "hpsi", "hv", "hg"}) {
    b_reals[k] = NAN;
    c_bound->add_option("--" + std::string(k), b_reals[k]);
  }
  c_bound->add_option("--di", b_di, "comma-separated degree list d1,d2,...");
  c_bound->add_option("--vh", b_vheights, "comma-separated variety heights");

  // ---- ce-matrix ----
  auto* c_ce = app.add_subcommand(
      "ce-matrix", "symbolic sparse-resultant matrix from a support set (statement context: toric, cor3)");
  std::string ce_support, ce_spec_path;
  std::uint64_t ce_seed = 0;
  c_ce->add_option("--support", ce_support, "support.json with {n, points}")->required();
  c_ce->add_option("--seed", ce_seed, "lifting seed");
  c_ce->add_option("--specialize", ce_spec_path, "spec.json with [{i, alpha, value}, ...]");

  // ---- divide ----
  auto* c_div = app.add_subcommand(
      "divide", "trace-formula division in a zero-dimensional quotient (statement context: division, traza, norma)");
  std::vector<std::string> d_ideal;
  std::string d_divisor, d_dividend;
  c_div->add_option("--ideal", d_ideal, "ideal generator files (square system)")->required();
  c_div->add_option("--divisor", d_divisor, "divisor polynomial file")->required();
  c_div->add_option("--dividend", d_dividend, "dividend polynomial file")->required();

  // ---- certify ----
  auto* c_cert = app.add_subcommand(
      "certify", "search a Bezout certificate by exact linear algebra (statement context: theorem1, n1, d1)");
  std::vector<std::string> cert_files;
  long cert_bound = -1;
  std::uint64_t cert_seed = 0;
  std::string cert_out;
  c_cert->add_option("files", cert_files, "system polynomial files")->required();
  c_cert->add_option("--deg-bound", cert_bound, "cofactor degree cap (default: 4 n d^n)");
  c_cert->add_option("--seed", cert_seed, "seed (reserved for solver scheduling)");
  c_cert->add_option("-o,--output", cert_out, "certificate JSON path (default: stdout)");

  // ---- verify ----
  auto* c_ver = app.add_subcommand(
      "verify", "verify a certificate exactly and report bound comparisons (statement context: theorem1, theorem2, cor3)");
  std::string ver_cert;
  std::vector<std::string> ver_files;
  c_ver->add_option("cert", ver_cert, "certificate JSON")->required();
  c_ver->add_option("files", ver_files, "system polynomial files")->required();

  // ---- fixture ----
  auto* c_fix = app.add_subcommand(
      "fixture", "generate the worked families geo | mp | dnh (statement context: geo-family, ejemplo-sparse)");
  std::string fix_kind, fix_dir = ".";
  long fix_n = 1, fix_d = 2;
  std::string fix_h = "3";
  c_fix->add_option("kind", fix_kind, "geo | mp | dnh")->required();
  c_fix->add_option("--n", fix_n, "variable count")->required();
  c_fix->add_option("--d", fix_d, "degree parameter")->required();
  c_fix->add_option("--H", fix_h, "height parameter H");
  c_fix->add_option("-o,--output", fix_dir, "output directory");

  // ---- bound-report ----
  auto* c_rep = app.add_subcommand(
      "bound-report", "every applicable bound for a system, optionally checked against a certificate");
  std::vector<std::string> rep_files;
  std::string rep_cert;
  c_rep->add_option("files", rep_files, "system polynomial files")->required();
  c_rep->add_option("--cert", rep_cert, "certificate JSON");

  // ---- selftest ----
  auto* c_self = app.add_subcommand("selftest", "run the acceptance criteria and print a pass/fail table");

  try {
    std::vector<const char*> argv;
    argv.push_back("nullsatz");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kParseError;
  }

  try {
    if (*c_height) {
      MultiPoly f = detail::load_polys({h_file})[0];
      json j;
      if (h_all) {
        HeightReport rep = global_height({f});
        j["value"] = rep.global;
        j["method"] = "exact";
        j["places"] = json::object();
        for (const auto& [pl, v] : rep.locals) j["places"][pl.name()] = v;
      } else {
        Place pl = detail::parse_place(h_place);
        j["value"] = local_height(f, pl);
        j["place"] = pl.name();
        j["method"] = "exact";
      }
      detail::emit(out, j);
      return kOk;
    }

    if (*c_mahler) {
      MultiPoly f = detail::load_polys({m_file})[0];
      MahlerEstimate est;
      if (!m_spherical.empty()) {
        auto colon = m_spherical.find(':');
        if (colon == std::string::npos) throw ParseError("--spherical expects r:n");
        int r = std::stoi(m_spherical.substr(0, colon));
        int n = std::stoi(m_spherical.substr(colon + 1));
        est = mahler_sphere_mc(f, r, n, m_samples, m_seed);
      } else {
        est = mahler_torus_mc(f, m_samples, m_seed);
      }
      json j;
      j["value"] = est.value;
      j["stderr"] = est.stderr_;
      j["method"] = est.method;
      j["samples"] = est.samples;
      detail::emit(out, j);
      return kOk;
    }

    if (*c_volume) {
      std::vector<MultiPoly> fs = detail::load_polys(v_files);
      SupportSet a = support(fs, v_frame);
      json j;
      j["volume"] = normalized_volume(a).get_str();
      j["lattice_rank"] = lattice_rank(a);
      j["support_size"] = a.points.size();
      detail::emit(out, j);
      return kOk;
    }

    if (*c_bound) {
      BoundInputs in;
      for (const auto& [k, v] : b_counts)
        if (v != LONG_MIN) {
          std::string key = k == "degt-g" ? "degt_g" : (k == "degx-g" ? "degx_g" : k);
          in.counts[key] = Int(v);
        }
      for (const auto& [k, v] : b_reals)
        if (!std::isnan(v)) in.reals[k] = v;
      auto split_list = [](const std::string& s) {
        std::vector<std::string> parts;
        std::string cur;
        for (char ch : s) {
          if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
          } else
            cur += ch;
        }
        if (!cur.empty()) parts.push_back(cur);
        return parts;
      };
      for (const auto& p : split_list(b_di)) in.degrees.push_back(parse_int(p));
      for (const auto& p : split_list(b_vheights)) in.variety_heights.push_back(std::stod(p));
      detail::emit(out, bound_report_to_json(bound_calculators(b_statement, in)));
      return kOk;
    }

    if (*c_ce) {
      SupportSet a = support_from_json(json::parse(read_text_file(ce_support)));
      int r = lattice_rank(a);
      Int span(1);
      for (const auto& p : a.points)
        for (const auto& c : p) span = std::max(span, int_abs(c));
      auto eps = ce_default_epsilon(r, span, ce_seed);
      CEMatrixSpec spec = ce_matrix_generic(a, r, eps, ce_seed);
      json j;
      j["order"] = spec.order;
      j["r"] = spec.r;
      j["points"] = json::array();
      for (const auto& p : spec.points) {
        json row = json::array();
        for (const auto& c : p) row.push_back(c.get_str());
        j["points"].push_back(row);
      }
      j["rows"] = json::array();
      for (int i = 0; i < spec.order; ++i) {
        json row;
        row["poly"] = spec.row_content[i].first;
        json al = json::array();
        for (const auto& c : spec.row_content[i].second) al.push_back(c.get_str());
        row["vertex"] = al;
        json entries = json::array();
        for (int col = 0; col < spec.order; ++col)
          if (spec.grid[i][col]) {
            json e;
            e["col"] = col;
            e["poly"] = spec.grid[i][col]->first;
            json av = json::array();
            for (const auto& c : spec.grid[i][col]->second) av.push_back(c.get_str());
            e["alpha"] = av;
            entries.push_back(e);
          }
        row["entries"] = entries;
        j["rows"].push_back(row);
      }
      if (!ce_spec_path.empty()) {
        json sj = json::parse(read_text_file(ce_spec_path));
        CESpecialization values;
        for (const auto& item : sj) {
          LatticePoint alpha;
          for (const auto& c : item.at("alpha")) {
            if (c.is_string())
              alpha.push_back(parse_int(c.get<std::string>()));
            else
              alpha.push_back(Int(c.get<long>()));
          }
          std::string vs = item.at("value").is_string() ? item.at("value").get<std::string>()
                                                        : std::to_string(item.at("value").get<long>());
          Rat v(vs);
          v.canonicalize();
          values[{item.at("i").get<int>(), alpha}] = v;
        }
        j["det"] = render_rat(q_det(ce_specialize(spec, values)));
        if (a.dim == 1) {
          ResultantCheck rc = ce_resultant_check(a, values, ce_seed + 1);
          j["resultant"] = render_rat(rc.resultant);
          j["quotient_ok"] = rc.quotient_ok;
        }
      }
      detail::emit(out, j);
      return kOk;
    }

    if (*c_div) {
      std::vector<std::string> all = d_ideal;
      all.push_back(d_divisor);
      all.push_back(d_dividend);
      std::vector<MultiPoly> polys = detail::load_polys(all);
      std::vector<MultiPoly> ideal(polys.begin(), polys.end() - 2);
      MultiPoly f = polys[polys.size() - 2];
      MultiPoly g = polys[polys.size() - 1];
      QuotientAlgebra b = quotient_algebra(ideal);
      TraceDecomposition td = pseudo_jacobian(ideal);
      DivisionResult dr = divide_trace_formula(b, td, f, g);
      json j;
      j["q"] = render_poly(dr.q);
      j["checks"]["identity"] = dr.identity_ok;
      j["checks"]["degree_x"] = dr.degree_x;
      j["checks"]["degree_bound"] = dr.degree_cap;
      detail::emit(out, j);
      return kOk;
    }

    if (*c_cert) {
      std::vector<MultiPoly> fs = detail::load_polys(cert_files);
      std::optional<int> bound;
      if (cert_bound >= 0) bound = static_cast<int>(cert_bound);
      SearchResult sr = certificate_search(fs, bound);
      if (sr.status != SearchStatus::found) {
        json j;
        j["status"] = sr.status == SearchStatus::infeasible_at_requested_bound
                          ? "infeasible-at-requested-bound"
                          : "infeasible-at-theorem-cap";
        j["last_degree_tried"] = sr.last_degree_tried;
        j["theorem_cap"] = sr.theorem_cap.get_str();
        detail::emit(out, j);
        err << (sr.status == SearchStatus::infeasible_at_requested_bound
                    ? "no certificate at the requested degree bound\n"
                    : "no certificate at the guarantee cap: the system has common zeros, or this is an internal error\n");
        return kInfeasible;
      }
      json j = certificate_to_json(*sr.certificate);
      if (!cert_out.empty()) {
        write_text_file(cert_out, j.dump(2) + "\n");
        json note;
        note["written"] = cert_out;
        note["degree_bound"] = sr.certificate->degree_bound_used;
        detail::emit(out, note);
      } else {
        detail::emit(out, j);
      }
      return kOk;
    }

    if (*c_ver) {
      BezoutCertificate cert = certificate_from_json(json::parse(read_text_file(ver_cert)));
      std::vector<MultiPoly> fs = detail::load_polys(ver_files);
      for (auto& f : fs)
        if (f.nvars() < cert.n) f = f.extended(cert.n);
      try {
        VerifyReport vr = certificate_verify(cert, fs);
        json j;
        j["identity"] = vr.identity_ok;
        j["max_cofactor_degree"] = vr.max_cofactor_degree;
        j["certificate_height"] = vr.certificate_height;
        j["checks"] = json::array();
        for (const auto& c : vr.checks) {
          json cj;
          cj["name"] = c.name;
          cj["bound"] = c.bound;
          cj["actual"] = c.actual;
          cj["pass"] = c.pass;
          j["checks"].push_back(cj);
        }
        detail::emit(out, j);
        return kOk;
      } catch (const IdentityFailure& e) {
        err << e.what() << "\n";
        return kVerifyFailed;
      }
    }

    if (*c_fix) {
      Int H = parse_int(fix_h);
      Fixture fx;
      if (fix_kind == "geo")
        fx = fixture_geometric(static_cast<int>(fix_n), static_cast<int>(fix_d), H);
      else if (fix_kind == "mp")
        fx = fixture_masser_philippon(static_cast<int>(fix_n), static_cast<int>(fix_d), H);
      else if (fix_kind == "dnh")
        fx = fixture_dnh(static_cast<int>(fix_n), static_cast<int>(fix_d), H);
      else
        throw ParseError("fixture kind must be geo | mp | dnh");
      std::filesystem::create_directories(fix_dir);
      json j;
      j["files"] = json::array();
      for (size_t i = 0; i < fx.system.size(); ++i) {
        std::string path = fix_dir + "/f" + std::to_string(i + 1) + ".txt";
        write_text_file(path, render_poly(fx.system[i]) + "\n");
        j["files"].push_back(path);
      }
      if (fx.closed_form) {
        std::string path = fix_dir + "/cert.json";
        write_text_file(path, certificate_to_json(*fx.closed_form).dump(2) + "\n");
        j["certificate"] = path;
      }
      detail::emit(out, j);
      return kOk;
    }

    if (*c_rep) {
      std::vector<MultiPoly> fs = detail::load_polys(rep_files);
      std::optional<BezoutCertificate> cert;
      if (!rep_cert.empty()) cert = certificate_from_json(json::parse(read_text_file(rep_cert)));
      BoundBundle bundle = report_all_bounds(fs, cert);
      json j;
      j["reports"] = json::array();
      for (const auto& rep : bundle.reports) j["reports"].push_back(bound_report_to_json(rep));
      if (cert) {
        j["checks"] = json::array();
        for (const auto& c : bundle.checks) {
          json cj;
          cj["name"] = c.name;
          cj["bound"] = c.bound;
          cj["actual"] = c.actual;
          cj["pass"] = c.pass;
          j["checks"].push_back(cj);
        }
      }
      detail::emit(out, j);
      return kOk;
    }

    if (*c_self) {
      selftest::SelftestOutcome outc = selftest::run_selftest();
      for (const auto& c : outc.results)
        err << (c.pass ? "PASS" : "FAIL") << "  criterion " << c.id << "  " << c.name << " — "
            << c.detail << "\n";
      detail::emit(out, outc.summary);
      return outc.all_pass ? kOk : kVerifyFailed;
    }
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kParseError;
  } catch (const json::exception& e) {
    err << "JSON error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kVerifyFailed;
  }
  return kParseError;
}

}  // namespace nsz::cli

#endif
