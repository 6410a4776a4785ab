#include "fockdual/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fockdual/json_io.hpp"
#include "fockdual/verify.hpp"

namespace fockdual::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct OutputTarget {
  std::string path;  // empty: stdout

  int write(const std::string& text, std::ostream& out, std::ostream& err) const {
    if (path.empty()) {
      out << text;
      return kExitOk;
    }
    std::ofstream file(path);
    if (!file) {
      err << "cannot open output file: " << path << "\n";
      return kExitUsage;
    }
    file << text;
    return kExitOk;
  }
};

std::string rats_str(const std::vector<Rat>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

std::vector<long long> parse_rows(const std::string& text) {
  std::vector<long long> rows;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) rows.push_back(std::stoll(item));
  return rows;
}

std::vector<Rat> parse_rats(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(Rat::parse(item));
  return out;
}

std::string pairing_table_text(const PairingTable& table) {
  std::ostringstream os;
  os << to_string(table.type) << " pairing for d=" << table.d << ", k=" << table.k << " ("
     << table.entries.size() << " entries)\n";
  for (const auto& e : table.entries) {
    os << "  lambda=" << to_string(e.lambda);
    if (e.lambda_pm) os << " [+/- last row]";
    const std::vector<Rat>& w = e.w.w();
    os << "  <->  w=(";
    for (size_t i = 0; i < w.size(); ++i) {
      os << (i ? "," : "");
      if (e.w_pm && i + 1 == w.size()) os << "+/-";
      os << w[i].str();
    }
    os << ")\n";
  }
  return os.str();
}

std::string report_text(const DecompositionReport& report) {
  std::ostringstream os;
  os << to_string(report.type) << " decomposition for d=" << report.d << ", k=" << report.k
     << ": " << report.records.size() << " joint highest weights, Fock dimension "
     << report.fock_dimension() << "\n";
  for (size_t i = 0; i < report.records.size(); ++i) {
    const auto& rec = report.records[i];
    os << "  [" << i << "] lambda=" << rats_str(rec.lambda) << "  w=" << rats_str(rec.w)
       << "  dim=" << rec.module_dimension;
    if (rec.r_partner) os << "  r->[" << *rec.r_partner << "]";
    if (rec.r_eigen) os << "  r_eigen=" << rec.r_eigen->str();
    if (rec.sigma_partner) os << "  sigma->[" << *rec.sigma_partner << "]";
    if (rec.sigma_eigen) os << "  sigma_eigen=" << rec.sigma_eigen->str();
    os << "\n";
  }
  os << "checks: multiplicity_free=" << (report.multiplicity_free ? "yes" : "NO")
     << " dimension_sum=" << (report.dimension_sum_ok ? "yes" : "NO")
     << " modules_disjoint=" << (report.modules_disjoint ? "yes" : "NO")
     << " weights_valid=" << (report.weights_valid ? "yes" : "NO")
     << " prediction_diff=" << report.prediction_diff.size() << "\n";
  for (const auto& m : report.prediction_diff)
    os << "  " << m.where << ": lambda=" << rats_str(m.lambda) << " w=" << rats_str(m.w) << "\n";
  for (const auto& note : report.notes) os << "note: " << note << "\n";
  return os.str();
}

int apply_env_guard(std::ostream& err) {
  const char* env = std::getenv("FOCK_MAX_DK");
  if (env == nullptr) return kExitOk;
  try {
    int value = std::stoi(env);
    set_max_full_basis_modes(value);
  } catch (const std::exception&) {
    err << "FOCK_MAX_DK must be an integer between 1 and 30\n";
    return kExitUsage;
  }
  return kExitOk;
}

std::string checklist_text(const CheckList& checks) {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.pass && !c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << (all_pass(checks) ? "all checks passed" : "CHECKS FAILED") << "\n";
  return os.str();
}

nlohmann::json checklist_json(const std::string& suite, const CheckList& checks) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"suite", suite}, {"checks", arr}, {"pass", all_pass(checks)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (int rc = apply_env_guard(err); rc != kExitOk) return rc;

  CLI::App app{"Exact dual-pair decompositions of fermionic Fock spaces"};
  app.require_subcommand(1);

  int d = 0, k = 1, max_dk = 10;
  std::string pair_name = "o-o", format = "table", suite = "all";
  std::string lambda_text, w_text;
  OutputTarget target;
  bool dump_generators = false;

  auto add_common = [&](CLI::App* cmd, bool need_pair) {
    cmd->add_option("--d", d, "orbital dimension")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--k", k, "number of particle kinds")->check(CLI::PositiveNumber);
    if (need_pair)
      cmd->add_option("--pair", pair_name, "duality type")
          ->check(CLI::IsMember({"gl-gl", "sp-sp", "o-o"}));
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--out", target.path, "write output to a file");
  };

  CLI::App* cmd_pairs = app.add_subcommand("pairs", "print the predicted pairing table");
  add_common(cmd_pairs, true);

  CLI::App* cmd_dec = app.add_subcommand("decompose", "brute-force joint decomposition");
  add_common(cmd_dec, true);
  cmd_dec->add_flag("--generators", dump_generators,
                    "include the generator lists in JSON output");

  CLI::App* cmd_hw = app.add_subcommand("hw", "inspect a joint highest-weight state");
  add_common(cmd_hw, false);
  cmd_hw->add_option("--lambda", lambda_text, "diagram rows, e.g. 4,3,3,2,1,1,1,1")->required();

  CLI::App* cmd_verify = app.add_subcommand("verify", "run property suites");
  cmd_verify->add_option("--suite", suite, "which suite")
      ->check(CLI::IsMember({"all", "car", "involutions", "tensor", "quasispin"}));
  cmd_verify->add_option("--max-dk", max_dk, "bound on d*k for the grid")
      ->check(CLI::Range(1, 16));
  cmd_verify->add_option("--d", d, "restrict quasispin checks to one orbital dimension")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  cmd_verify->add_option("--out", target.path, "write output to a file");

  CLI::App* cmd_render = app.add_subcommand("render", "ASCII Young diagrams");
  cmd_render->add_option("--lambda", lambda_text, "integer diagram rows, e.g. 3,1");
  cmd_render->add_option("--w", w_text, "algebra diagram rows, e.g. 11/2,7/2,-3/2");
  cmd_render->add_option("--out", target.path, "write output to a file");

  std::vector<const char*> argv;
  argv.push_back("fockdual");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(cmd_pairs)) {
      PairType type = pair_type_from_string(pair_name);
      if (type == PairType::sp_sp && d % 2 != 0) {
        err << "sp-sp requires even d\n";
        return kExitUsage;
      }
      PairingTable table = type == PairType::gl_gl  ? gl_conjugate_pairs(d, k)
                           : type == PairType::o_o ? frame_fill_pairs(d, k)
                                                   : helmers_pairs(d, k);
      std::string text = format == "json" ? to_json(table).dump(2) + "\n"
                                          : pairing_table_text(table);
      return target.write(text, out, err);
    }

    if (app.got_subcommand(cmd_dec)) {
      PairType type = pair_type_from_string(pair_name);
      if (type == PairType::sp_sp && d % 2 != 0) {
        err << "sp-sp requires even d\n";
        return kExitUsage;
      }
      DecompositionReport report = decompose(type, d, k);
      std::string text;
      if (format == "json") {
        nlohmann::json j = to_json(report);
        if (dump_generators) j["generators"] = generators_to_json(build_pair(type, d, k));
        text = j.dump(2) + "\n";
      } else {
        text = report_text(report);
      }
      int rc = target.write(text, out, err);
      if (rc != kExitOk) return rc;
      return report.all_checks_pass() ? kExitOk : kExitCheckFailed;
    }

    if (app.got_subcommand(cmd_hw)) {
      OGroupDiagram lam{GLDiagram(parse_rows(lambda_text)), d};
      if (!lam.valid() || lam.shape.width() > k) {
        err << "lambda is not a valid O(d) diagram with at most k columns\n";
        return kExitUsage;
      }
      FockState phi = phi_hw(lam, k);
      OAlgebraDiagram w = rowe_w_from_lambda(lam, k);
      DualPairRealization pair = build_pair(PairType::o_o, d, k);
      bool annihilated = true;
      for (const auto& op : pair.raising_b)
        if (!op.apply(phi).is_zero()) annihilated = false;
      bool cartan_ok = true;
      for (size_t j = 0; j < pair.cartan_b.size(); ++j)
        if (!(pair.cartan_b[j].apply(phi) ==
              StateVector::unit(phi).scaled(w.w()[j])))
          cartan_ok = false;
      SignedState rphi = reflection_r(d, k).apply(phi);
      SignedState sphi = sigma(d, k).apply(phi);

      std::ostringstream os;
      nlohmann::json j;
      if (format == "json") {
        j["d"] = d;
        j["k"] = k;
        j["lambda"] = lam.shape.rows();
        j["state"] = to_json(StateVector::unit(phi));
        nlohmann::json warr = nlohmann::json::array();
        for (const Rat& r : w.w()) warr.push_back(r.str());
        j["w"] = warr;
        j["raising_annihilates"] = annihilated;
        j["cartan_matches"] = cartan_ok;
        j["r_fixed"] = (rphi.state == phi);
        if (rphi.state == phi) j["r_eigen"] = rphi.sign;
        j["sigma_fixed"] = (sphi.state == phi);
        if (sphi.state == phi) j["sigma_eigen"] = sphi.sign;
        os << j.dump(2) << "\n";
      } else {
        os << "highest-weight state for lambda=" << to_string(lam.shape) << ", d=" << d
           << ", k=" << k << "\n";
        os << "  occupied modes (p,tau):";
        for (const ModeIndex& m : phi.occupied_modes()) os << " (" << m.p << "," << m.tau << ")";
        os << "\n  partner diagram w=" << to_string(w) << "\n";
        for (const std::string& line : render_diagram(w)) os << "    " << line << "\n";
        os << "  raising operators annihilate: " << (annihilated ? "yes" : "NO") << "\n";
        os << "  Cartan eigenvalues match: " << (cartan_ok ? "yes" : "NO") << "\n";
        if (rphi.state == phi)
          os << "  r eigenvalue: " << (rphi.sign > 0 ? "+1" : "-1") << "\n";
        else
          os << "  r maps the state to a partner (self-complementary diagram)\n";
        if (sphi.state == phi)
          os << "  sigma eigenvalue: " << (sphi.sign > 0 ? "+1" : "-1") << "\n";
        else
          os << "  sigma maps the state to a partner\n";
      }
      int rc = target.write(os.str(), out, err);
      if (rc != kExitOk) return rc;
      return (annihilated && cartan_ok) ? kExitOk : kExitCheckFailed;
    }

    if (app.got_subcommand(cmd_verify)) {
      CheckList checks;
      auto append = [&checks](CheckList more) {
        checks.insert(checks.end(), more.begin(), more.end());
      };
      std::vector<int> quasispin_ds = d > 0 ? std::vector<int>{d} : std::vector<int>{2, 3, 4};
      if (suite == "car" || suite == "all") append(verify_car(max_dk));
      if (suite == "involutions" || suite == "all") append(verify_involutions(max_dk));
      if (suite == "tensor" || suite == "all") append(verify_tensor());
      if (suite == "quasispin" || suite == "all") append(verify_quasispin(quasispin_ds));
      if (suite == "all") {
        append(verify_commutant_closure(max_dk));
        append(verify_hw_states(max_dk));
      }
      std::string text = format == "json" ? checklist_json(suite, checks).dump(2) + "\n"
                                          : checklist_text(checks);
      int rc = target.write(text, out, err);
      if (rc != kExitOk) return rc;
      return all_pass(checks) ? kExitOk : kExitCheckFailed;
    }

    if (app.got_subcommand(cmd_render)) {
      if (lambda_text.empty() == w_text.empty()) {
        err << "render needs exactly one of --lambda or --w\n";
        return kExitUsage;
      }
      std::ostringstream os;
      if (!lambda_text.empty())
        for (const std::string& line : render_diagram(GLDiagram(parse_rows(lambda_text))))
          os << line << "\n";
      else
        for (const std::string& line : render_diagram(OAlgebraDiagram(parse_rats(w_text))))
          os << line << "\n";
      return target.write(os.str(), out, err);
    }
  } catch (const guard_error& e) {
    err << e.what() << "\n";
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace fockdual::cli
