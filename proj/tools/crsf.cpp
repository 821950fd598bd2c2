// crsf: command-line front end for the CR-Seifert invariant library.
//
// Exit codes: 0 success, 1 failed exact assertion, 2 schema or usage error,
// 3 domain error (non-pseudoconvex data, invalid cone points, ...).

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <exception>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "crsf/crsf.hpp"
#include "crsf/io.hpp"

namespace {

using crsf::Errc;
using crsf::Error;
using crsf::Rational;
using nlohmann::json;

constexpr int kExitAssertion = 1;
constexpr int kExitSchema = 2;
constexpr int kExitDomain = 3;

// ---------------------------------------------------------------------------
// Seifert input: --input FILE | --lens P Q | --sphere

struct SeifertInput {
  std::string path;
  std::vector<std::int64_t> lens;
  bool sphere = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("-i,--input", path, "Seifert data JSON file");
    cmd->add_option("--lens", lens, "lens space L(p,q)")->expected(2);
    cmd->add_flag("--sphere", sphere, "standard S^3");
  }

  crsf::SeifertData load() const {
    const int given = !path.empty() + !lens.empty() + sphere;
    if (given != 1) throw Error(Errc::Schema, "give exactly one of --input, --lens, --sphere");
    if (sphere) return crsf::sphere();
    if (!lens.empty()) return crsf::lens_space(lens[0], lens[1]);
    return crsf::io::seifert_from_json(crsf::io::read_json_file(path));
  }
};

void print_value(bool as_json, const std::string& invariant, const std::string& value, const std::string& route,
                 const crsf::SeifertData* data) {
  if (!as_json) {
    std::cout << value << '\n';
    return;
  }
  json out{{"invariant", invariant}, {"value", value}, {"route", route}};
  if (data) out["data"] = crsf::io::seifert_to_json(*data);
  std::cout << out.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Tables

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void emit(const Table& t, const std::string& format) {
  if (format == "csv") {
    auto line = [](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "," : "") << cells[i];
      std::cout << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
  } else if (format == "md") {
    auto line = [](const std::vector<std::string>& cells) {
      std::cout << '|';
      for (const auto& c : cells) std::cout << ' ' << c << " |";
      std::cout << '\n';
    };
    line(t.header);
    std::cout << '|';
    for (std::size_t i = 0; i < t.header.size(); ++i) std::cout << "---|";
    std::cout << '\n';
    for (const auto& r : t.rows) line(r);
  } else {
    json out = json::array();
    for (const auto& r : t.rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < t.header.size(); ++i) obj[t.header[i]] = r[i];
      out.push_back(std::move(obj));
    }
    std::cout << out.dump(2) << '\n';
  }
}

Table check_table(const std::vector<crsf::CheckRow>& rows) {
  Table t{{"check", "lhs", "rhs", "status"}, {}};
  for (const auto& r : rows) t.rows.push_back({r.check, r.lhs, r.rhs, std::string(crsf::to_string(r.status))});
  return t;
}

unsigned sweep_threads() {
  unsigned n = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CRSF_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
      throw Error(Errc::Schema, std::string("CRSF_THREADS must be a positive integer, got '") + env + "'");
    }
  }
  return n;
}

/// Fills rows[i] = job(i) on a worker pool. Row order is the index order.
template <class Row>
std::vector<Row> parallel_rows(std::size_t count, const std::function<Row(std::size_t)>& job) {
  std::vector<Row> rows(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        rows[i] = job(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<std::size_t>(sweep_threads(), std::max<std::size_t>(count, 1));
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of CR-Seifert manifolds"};
  app.require_subcommand(1);
  bool as_json = false;

  // nu
  SeifertInput nu_in;
  std::string nu_integral;
  auto* nu_cmd = app.add_subcommand("nu", "nu invariant");
  nu_in.attach(nu_cmd);
  nu_cmd->add_option("--int-R2-base", nu_integral,
                     "base integral of R^2 (pi-Laurent such as 8*pi, or a float); selects the general formula");
  nu_cmd->add_flag("--json", as_json);

  // eta0
  SeifertInput eta0_in;
  std::string eta0_route = "formula";
  auto* eta0_cmd = app.add_subcommand("eta0", "renormalized eta invariant");
  eta0_in.attach(eta0_cmd);
  eta0_cmd->add_option("--route", eta0_route, "formula | ouyang | rrk")
      ->check(CLI::IsMember({"formula", "ouyang", "rrk"}));
  eta0_cmd->add_flag("--json", as_json);

  // eta-dstar
  SeifertInput dstar_in;
  auto* dstar_cmd = app.add_subcommand("eta-dstar", "eta invariant of D* on constant-curvature data");
  dstar_in.attach(dstar_cmd);
  dstar_cmd->add_flag("--json", as_json);

  // dedekind
  std::int64_t ded_alpha = 0, ded_rho = 0, ded_beta = 0;
  std::string ded_route = "sawtooth";
  auto* ded_cmd = app.add_subcommand("dedekind", "Dedekind-Rademacher sum s(alpha, rho, beta)");
  ded_cmd->add_option("alpha", ded_alpha)->required();
  ded_cmd->add_option("rho", ded_rho)->required();
  ded_cmd->add_option("beta", ded_beta)->required();
  ded_cmd->add_option("--route", ded_route, "sawtooth | fast | float")
      ->check(CLI::IsMember({"sawtooth", "fast", "float"}));
  ded_cmd->add_flag("--json", as_json);

  // ouyang
  SeifertInput ouyang_in;
  std::string ouyang_t2;
  auto* ouyang_cmd = app.add_subcommand("ouyang", "eta of t^2 theta^2 + gamma; polynomial in t^2 without --t2");
  ouyang_in.attach(ouyang_cmd);
  ouyang_cmd->add_option("--t2", ouyang_t2, "t^2 as p/q");
  ouyang_cmd->add_flag("--json", as_json);

  // diabatic
  SeifertInput diab_in;
  auto* diab_cmd = app.add_subcommand("diabatic", "diabatic expansion sum eta_i eps^i");
  diab_in.attach(diab_cmd);
  diab_cmd->add_flag("--json", as_json);

  // rrk-eta
  SeifertInput rrk_in;
  bool rrk_breakdown = false;
  auto* rrk_cmd = app.add_subcommand("rrk-eta", "eta0 through Riemann-Roch-Kawasaki counts");
  rrk_in.attach(rrk_cmd);
  rrk_cmd->add_flag("--breakdown", rrk_breakdown, "emit the affine/periodic split as JSON");
  rrk_cmd->add_flag("--json", as_json);

  // berger
  std::string berger_l2;
  bool berger_all = false;
  auto* berger_cmd = app.add_subcommand("berger", "Berger sphere invariants at lambda^2");
  berger_cmd->add_option("--lambda2", berger_l2, "lambda^2 as p/q")->required();
  berger_cmd->add_flag("--all-identities", berger_all, "also assert the identity battery at this lambda^2");

  // spectrum
  std::string spec_modes, spec_holo, spec_eps;
  bool spec_limit = false;
  auto* spec_cmd = app.add_subcommand("spectrum", "diabatic spectrum; CSV value,mult,family,origin");
  spec_cmd->add_option("--modes", spec_modes, "mode file [{k, n, mult}]")->required();
  spec_cmd->add_option("--holo", spec_holo, "holomorphic counts {h0, h2}")->required();
  spec_cmd->add_option("--eps", spec_eps, "eps as p/q");
  spec_cmd->add_flag("--limit", spec_limit, "limit spectrum of D* instead");

  // lens
  std::int64_t lens_p = 0, lens_q = 0;
  std::string lens_format = "md";
  auto* lens_cmd = app.add_subcommand("lens", "lens space report");
  lens_cmd->add_option("p", lens_p)->required();
  lens_cmd->add_option("q", lens_q)->required();
  lens_cmd->add_option("--format", lens_format)->check(CLI::IsMember({"csv", "md", "json"}));

  // obstruction
  SeifertInput obs_in;
  std::string obs_format = "md";
  auto* obs_cmd = app.add_subcommand("obstruction", "filling obstructions");
  obs_in.attach(obs_cmd);
  obs_cmd->add_option("--format", obs_format)->check(CLI::IsMember({"csv", "md", "json"}));

  // sweep
  std::string sweep_family, sweep_format = "csv";
  std::int64_t sweep_pmax = 50, sweep_chimin = -40, sweep_chimax = -2;
  std::size_t sweep_samples = 20;
  auto* sweep_cmd = app.add_subcommand(
      "sweep",
      "parameter sweeps, rows sorted by parameters.\n"
      "  lens:   p,q,nu,eta_round,nu_direct,eta_aps,identity,nu_vs_direct,eta_vs_aps\n"
      "  berger: lambda2,eta0,nu,mu,R2,nu_plus_3eta0,status\n"
      "  disk:   chi,d,chi_over_2,status");
  sweep_cmd->add_option("family", sweep_family)->required()->check(CLI::IsMember({"lens", "berger", "disk"}));
  sweep_cmd->add_option("--pmax", sweep_pmax, "lens: largest p");
  sweep_cmd->add_option("--samples", sweep_samples, "berger: number of lambda^2 values");
  sweep_cmd->add_option("--chimin", sweep_chimin, "disk: smallest chi");
  sweep_cmd->add_option("--chimax", sweep_chimax, "disk: largest chi");
  sweep_cmd->add_option("--format", sweep_format)->check(CLI::IsMember({"csv", "md", "json"}));

  // verify
  std::string verify_scope = "all";
  std::string verify_format = "md";
  auto* verify_cmd = app.add_subcommand("verify", "identity battery; exit 0 iff every exact assertion passes");
  verify_cmd->add_option("scope", verify_scope, "all | module name");
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"csv", "md", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitSchema;
  }

  try {
    if (*nu_cmd) {
      const auto data = nu_in.load();
      if (nu_integral.empty()) {
        print_value(as_json, "nu", crsf::nu(data).str(), "constant-curvature", &data);
      } else {
        crsf::CurvatureIntegral integral = crsf::PiLaurent();
        try {
          integral = crsf::PiLaurent::parse(nu_integral);
        } catch (const Error&) {
          try {
            integral = std::stod(nu_integral);
          } catch (const std::exception&) {
            throw Error(Errc::Schema, "cannot read --int-R2-base '" + nu_integral + "'");
          }
        }
        print_value(as_json, "nu", crsf::nu(data, integral).str(), "general", &data);
      }
    } else if (*eta0_cmd) {
      const auto data = eta0_in.load();
      Rational v;
      if (eta0_route == "formula")
        v = crsf::eta0(data);
      else if (eta0_route == "ouyang")
        v = crsf::ouyang_polynomial(data).c0;
      else
        v = crsf::eta0_via_rrk(data);
      print_value(as_json, "eta0", v.str(), eta0_route, &data);
    } else if (*dstar_cmd) {
      const auto data = dstar_in.load();
      print_value(as_json, "eta_dstar", crsf::eta_dstar(data).str(), "constant-curvature", &data);
    } else if (*ded_cmd) {
      std::string v;
      if (ded_route == "sawtooth") {
        v = crsf::dedekind_rademacher(ded_alpha, ded_rho, ded_beta).str();
      } else if (ded_route == "fast") {
        const auto [a, c] = crsf::reduce_to_classical(ded_alpha, ded_rho, ded_beta);
        v = crsf::dedekind_fast(c, a).str();
      } else {
        v = crsf::Scalar(crsf::dedekind_float_oracle(ded_alpha, ded_rho, ded_beta)).str();
      }
      print_value(as_json, "dedekind", v, ded_route, nullptr);
    } else if (*ouyang_cmd) {
      const auto data = ouyang_in.load();
      if (!ouyang_t2.empty()) {
        print_value(as_json, "ouyang_eta", crsf::ouyang_eta(data, Rational::parse(ouyang_t2)).str(),
                    "t2=" + ouyang_t2, &data);
      } else {
        const auto poly = crsf::ouyang_polynomial(data);
        if (as_json) {
          std::cout << json{{"invariant", "ouyang_eta"},
                            {"c0", poly.c0.str()},
                            {"c1", poly.c1.str()},
                            {"c2", poly.c2.str()},
                            {"data", crsf::io::seifert_to_json(data)}}
                           .dump(2)
                    << '\n';
        } else {
          std::cout << poly.c0.str() << " + (" << poly.c1.str() << ")*t^2 + (" << poly.c2.str() << ")*t^4\n";
        }
      }
    } else if (*diab_cmd) {
      const auto data = diab_in.load();
      const auto eps = crsf::diabatic_expansion(data);
      if (as_json) {
        json coeffs = json::object();
        for (const auto& [i, v] : eps.terms()) coeffs[std::to_string(i)] = v.str();
        std::cout << json{{"invariant", "diabatic"}, {"value", coeffs}, {"data", crsf::io::seifert_to_json(data)}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << eps.str() << '\n';
      }
    } else if (*rrk_cmd) {
      const auto data = rrk_in.load();
      if (rrk_breakdown) {
        const auto b = crsf::regularized_eta_difference(data);
        std::cout << json{{"affine_part", b.affine_part.str()},
                          {"periodic_part", b.periodic_part.str()},
                          {"total", b.total.str()},
                          {"period", b.period},
                          {"eta0", (Rational(1) + Rational(2) * b.total).str()}}
                         .dump(2)
                  << '\n';
      } else {
        print_value(as_json, "eta0", crsf::eta0_via_rrk(data).str(), "rrk", &data);
      }
    } else if (*berger_cmd) {
      const Rational l2 = Rational::parse(berger_l2);
      const auto w = crsf::berger_webster(l2);
      const Rational e = crsf::berger_eta0(l2), n = crsf::berger_nu(l2), m = crsf::berger_mu(l2);
      std::cout << "eta0 " << e.str() << "\nnu " << n.str() << "\nmu " << m.str() << "\nR^2 " << w.R2.str()
                << "\n|tau|^2 " << w.tau2.str() << '\n';
      if (berger_all) {
        const Rational lhs = n + Rational(3) * e;
        const Rational one_plus = Rational(1) + l2;
        std::vector<crsf::CheckRow> rows{
            crsf::assert_row("nu + 3 eta0 = (1 + l^2)^2/(4 l^2)", lhs.str(),
                             (one_plus * one_plus / (Rational(4) * l2)).str()),
            crsf::assert_row("nu = 3 mu + 2", n.str(), (Rational(3) * m + Rational(2)).str()),
            crsf::assert_row("nu + 3 eta0 = R^2", lhs.str(), w.R2.str()),
            crsf::assert_row("adiabatic constant term = eta0",
                             crsf::hitchin_adiabatic_coefficients(l2)[2].str(), e.str()),
        };
        emit(check_table(rows), "md");
        if (!crsf::battery_passed(rows)) return kExitAssertion;
      }
    } else if (*spec_cmd) {
      const auto modes = crsf::io::modes_from_json(crsf::io::read_json_file(spec_modes));
      const auto holo = crsf::io::holo_from_json(crsf::io::read_json_file(spec_holo));
      crsf::LineSet lines;
      if (spec_limit) {
        lines = crsf::dstar_limit_spectrum(modes, holo);
      } else {
        if (spec_eps.empty()) throw Error(Errc::Schema, "--eps is required unless --limit is given");
        lines = crsf::virtual_spectrum(modes, holo, Rational::parse(spec_eps));
      }
      std::cout << crsf::io::lines_to_csv(lines);
    } else if (*lens_cmd) {
      const auto r = crsf::lens_report(lens_p, lens_q);
      emit(check_table(r.rows), lens_format);
      if (!crsf::battery_passed(r.rows)) return kExitAssertion;
    } else if (*obs_cmd) {
      const auto data = obs_in.load();
      const auto integral = crsf::check_integer_nu(data);
      const auto chi2 = crsf::check_chi2_over_4d(data.chi_orb, data.degree);
      Table t{{"check", "value", "verdict"}, {}};
      t.rows.push_back({"nu integral", integral.value.str(), integral.pass ? "pass" : "obstructed"});
      t.rows.push_back({"chi^2/4d integral", chi2.value.str(), chi2.pass ? "pass" : "obstructed"});
      t.rows.push_back({"Miyaoka-Yau bound chi - 3 tau >=", crsf::miyaoka_yau_bound(data).str(), "-"});
      emit(t, obs_format);
    } else if (*sweep_cmd) {
      Table t;
      if (sweep_family == "lens") {
        t.header = {"p", "q", "nu", "eta_round", "nu_direct", "eta_aps", "identity", "nu_vs_direct", "eta_vs_aps"};
        const auto pairs = crsf::admissible_lens_pairs(sweep_pmax);
        t.rows = parallel_rows<std::vector<std::string>>(pairs.size(), [&](std::size_t i) {
          const auto r = crsf::lens_report(pairs[i].first, pairs[i].second);
          std::vector<std::string> row{std::to_string(r.p), std::to_string(r.q), r.nu.str(),
                                       r.eta_round.str(), r.nu_direct.str(), r.eta_aps.str()};
          for (const auto& c : r.rows) row.emplace_back(crsf::to_string(c.status));
          return row;
        });
        emit(t, sweep_format);
        for (const auto& row : t.rows)
          if (row[6] != crsf::to_string(crsf::CheckStatus::exact_pass)) return kExitAssertion;
      } else if (sweep_family == "berger") {
        t.header = {"lambda2", "eta0", "nu", "mu", "R2", "nu_plus_3eta0", "status"};
        auto samples = crsf::fixtures::rational_samples(sweep_samples);
        std::sort(samples.begin(), samples.end());
        bool ok = true;
        for (const auto& l : samples) {
          const Rational e = crsf::berger_eta0(l), n = crsf::berger_nu(l);
          const Rational sum = n + Rational(3) * e, r2 = crsf::berger_webster(l).R2;
          const bool pass = sum == r2 && n == Rational(3) * crsf::berger_mu(l) + Rational(2);
          ok = ok && pass;
          t.rows.push_back({l.str(), e.str(), n.str(), crsf::berger_mu(l).str(), r2.str(), sum.str(),
                            std::string(crsf::to_string(pass ? crsf::CheckStatus::exact_pass
                                                             : crsf::CheckStatus::exact_fail))});
        }
        emit(t, sweep_format);
        if (!ok) return kExitAssertion;
      } else {
        t.header = {"chi", "d", "chi_over_2", "status"};
        if (sweep_chimax > -2) throw Error(Errc::DomainError, "--chimax must be <= -2");
        bool ok = true;
        for (std::int64_t chi = sweep_chimin + (sweep_chimin % 2 != 0); chi <= sweep_chimax; chi += 2) {
          const auto roots = crsf::disk_bundle_solve(chi);
          std::string ds;
          for (const auto& d : roots) ds += (ds.empty() ? "" : ";") + d.str();
          const bool pass = roots.size() == 1 && roots.front() == Rational(chi, 2);
          ok = ok && pass;
          t.rows.push_back({std::to_string(chi), ds, Rational(chi, 2).str(),
                            std::string(crsf::to_string(pass ? crsf::CheckStatus::exact_pass
                                                             : crsf::CheckStatus::exact_fail))});
        }
        emit(t, sweep_format);
        if (!ok) return kExitAssertion;
      }
    } else if (*verify_cmd) {
      const auto rows = crsf::run_battery(verify_scope);
      emit(check_table(rows), verify_format);
      std::size_t pass = 0, fail = 0, reported = 0;
      for (const auto& r : rows) {
        if (r.status == crsf::CheckStatus::exact_pass) ++pass;
        else if (r.status == crsf::CheckStatus::exact_fail) ++fail;
        else ++reported;
      }
      std::cerr << "verify " << verify_scope << ": " << pass << " exact passed, " << fail << " exact failed, "
                << reported << " reported\n";
      if (fail) return kExitAssertion;
    }
  } catch (const Error& e) {
    std::cerr << "crsf: " << e.what() << '\n';
    return e.code() == Errc::Schema ? kExitSchema : kExitDomain;
  }
  return 0;
}
