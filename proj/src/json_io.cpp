#include "fockdual/json_io.hpp"

namespace fockdual {

using nlohmann::json;

json to_json(const Rat& r) { return r.str(); }
Rat rat_from_json(const json& j) { return Rat::parse(j.get<std::string>()); }

static json rats_to_json(const std::vector<Rat>& v) {
  json out = json::array();
  for (const Rat& r : v) out.push_back(to_json(r));
  return out;
}

static std::vector<Rat> rats_from_json(const json& j) {
  std::vector<Rat> out;
  for (const auto& e : j) out.push_back(rat_from_json(e));
  return out;
}

static json modes_to_json(const FockState& s) {
  json out = json::array();
  for (const ModeIndex& m : s.occupied_modes()) out.push_back(json::array({m.p, m.tau}));
  return out;
}

json to_json(const StateVector& v) {
  json terms = json::array();
  for (const auto& [bits, c] : v.terms()) {
    FockState s{bits, v.d(), v.k()};
    terms.push_back({{"modes", modes_to_json(s)}, {"coeff", to_json(c)}});
  }
  return {{"d", v.d()}, {"k", v.k()}, {"terms", terms}};
}

StateVector state_vector_from_json(const json& j) {
  int d = j.at("d").get<int>(), k = j.at("k").get<int>();
  StateVector v(d, k);
  for (const auto& term : j.at("terms")) {
    FockState s = vacuum(d, k);
    for (const auto& m : term.at("modes")) {
      ModeIndex mi{m.at(0).get<int>(), m.at(1).get<int>()};
      s.bits |= uint64_t(1) << mode_number(mi, d, k);
    }
    v.add(s, rat_from_json(term.at("coeff")));
  }
  return v;
}

static json mode_pair_json(int m1, int m2, const Rat& c, int d, int k) {
  ModeIndex a = mode_from_number(m1, d, k), b = mode_from_number(m2, d, k);
  return {{"modes", json::array({json::array({a.p, a.tau}), json::array({b.p, b.tau})})},
          {"coeff", to_json(c)}};
}

json to_json(const QuadraticOperator& op) {
  json cc = json::array(), ca = json::array(), aa = json::array();
  for (const auto& [mm, c] : op.cc()) cc.push_back(mode_pair_json(mm.first, mm.second, c, op.d(), op.k()));
  for (const auto& [mm, c] : op.ca()) ca.push_back(mode_pair_json(mm.first, mm.second, c, op.d(), op.k()));
  for (const auto& [mm, c] : op.aa()) aa.push_back(mode_pair_json(mm.first, mm.second, c, op.d(), op.k()));
  return {{"d", op.d()}, {"k", op.k()}, {"scalar", to_json(op.scalar())},
          {"cc", cc},    {"ca", ca},    {"aa", aa}};
}

QuadraticOperator quadratic_from_json(const json& j) {
  int d = j.at("d").get<int>(), k = j.at("k").get<int>();
  QuadraticOperator op(d, k);
  op.add_scalar(rat_from_json(j.at("scalar")));
  auto read_mode = [&](const json& m) {
    return mode_number(ModeIndex{m.at(0).get<int>(), m.at(1).get<int>()}, d, k);
  };
  for (const auto& t : j.at("cc"))
    op.add_cc(read_mode(t.at("modes").at(0)), read_mode(t.at("modes").at(1)),
              rat_from_json(t.at("coeff")));
  for (const auto& t : j.at("ca"))
    op.add_ca(read_mode(t.at("modes").at(0)), read_mode(t.at("modes").at(1)),
              rat_from_json(t.at("coeff")));
  for (const auto& t : j.at("aa"))
    op.add_aa(read_mode(t.at("modes").at(0)), read_mode(t.at("modes").at(1)),
              rat_from_json(t.at("coeff")));
  return op;
}

json to_json(const PairingTable& table) {
  json entries = json::array();
  for (const auto& e : table.entries) {
    json lam = json::array();
    size_t pad = table.type == PairType::gl_gl ? size_t(table.d) : size_t(table.d / 2);
    for (long long r : e.lambda.padded(std::max(pad, e.lambda.depth()))) lam.push_back(r);
    entries.push_back({{"lambda", lam},
                       {"w", rats_to_json(e.w.w())},
                       {"lambda_pm", e.lambda_pm},
                       {"w_pm", e.w_pm}});
  }
  return {{"duality_type", to_string(table.type)},
          {"d", table.d},
          {"k", table.k},
          {"entries", entries}};
}

PairingTable pairing_table_from_json(const json& j) {
  PairingTable table;
  table.type = pair_type_from_string(j.at("duality_type").get<std::string>());
  table.d = j.at("d").get<int>();
  table.k = j.at("k").get<int>();
  for (const auto& e : j.at("entries")) {
    PairingEntry entry;
    entry.lambda = GLDiagram(e.at("lambda").get<std::vector<long long>>());
    entry.w = OAlgebraDiagram(rats_from_json(e.at("w")));
    entry.lambda_pm = e.at("lambda_pm").get<bool>();
    entry.w_pm = e.at("w_pm").get<bool>();
    table.entries.push_back(std::move(entry));
  }
  return table;
}

json to_json(const DecompositionReport& report) {
  json records = json::array();
  for (const auto& rec : report.records) {
    json r = {{"lambda", rats_to_json(rec.lambda)},
              {"w", rats_to_json(rec.w)},
              {"dim", rec.module_dimension},
              {"r_partner", nullptr},
              {"r_eigen", nullptr},
              {"sigma_partner", nullptr},
              {"sigma_eigen", nullptr}};
    if (rec.r_partner) r["r_partner"] = *rec.r_partner;
    if (rec.r_eigen) r["r_eigen"] = to_json(*rec.r_eigen);
    if (rec.sigma_partner) r["sigma_partner"] = *rec.sigma_partner;
    if (rec.sigma_eigen) r["sigma_eigen"] = to_json(*rec.sigma_eigen);
    records.push_back(std::move(r));
  }
  json diff = json::array();
  for (const auto& m : report.prediction_diff)
    diff.push_back({{"where", m.where},
                    {"lambda", rats_to_json(m.lambda)},
                    {"w", rats_to_json(m.w)}});
  return {{"pair_type", to_string(report.type)},
          {"d", report.d},
          {"k", report.k},
          {"records", records},
          {"checks",
           {{"multiplicity_free", report.multiplicity_free},
            {"dimension_sum", report.dimension_sum_ok},
            {"modules_disjoint", report.modules_disjoint},
            {"weights_valid", report.weights_valid},
            {"prediction_diff", diff}}},
          {"notes", report.notes}};
}

DecompositionReport report_from_json(const json& j) {
  DecompositionReport report;
  report.type = pair_type_from_string(j.at("pair_type").get<std::string>());
  report.d = j.at("d").get<int>();
  report.k = j.at("k").get<int>();
  for (const auto& r : j.at("records")) {
    HighestWeightRecord rec;
    rec.lambda = rats_from_json(r.at("lambda"));
    rec.w = rats_from_json(r.at("w"));
    rec.weight = JointWeight{rec.lambda, rec.w};
    rec.module_dimension = r.at("dim").get<long long>();
    if (!r.at("r_partner").is_null()) rec.r_partner = r.at("r_partner").get<size_t>();
    if (!r.at("r_eigen").is_null()) rec.r_eigen = rat_from_json(r.at("r_eigen"));
    if (!r.at("sigma_partner").is_null()) rec.sigma_partner = r.at("sigma_partner").get<size_t>();
    if (!r.at("sigma_eigen").is_null()) rec.sigma_eigen = rat_from_json(r.at("sigma_eigen"));
    report.records.push_back(std::move(rec));
  }
  const json& checks = j.at("checks");
  report.multiplicity_free = checks.at("multiplicity_free").get<bool>();
  report.dimension_sum_ok = checks.at("dimension_sum").get<bool>();
  report.modules_disjoint = checks.at("modules_disjoint").get<bool>();
  report.weights_valid = checks.at("weights_valid").get<bool>();
  for (const auto& m : checks.at("prediction_diff"))
    report.prediction_diff.push_back({m.at("where").get<std::string>(),
                                      rats_from_json(m.at("lambda")), rats_from_json(m.at("w"))});
  report.notes = j.at("notes").get<std::vector<std::string>>();
  return report;
}

json generators_to_json(const DualPairRealization& pair) {
  auto side = [](const std::vector<QuadraticOperator>& ops,
                 const std::vector<std::string>& labels) {
    json out = json::array();
    for (size_t i = 0; i < ops.size(); ++i)
      out.push_back({{"label", labels[i]}, {"operator", to_json(ops[i])}});
    return out;
  };
  return {{"pair_type", to_string(pair.type)},
          {"d", pair.d},
          {"k", pair.k},
          {"side_a", side(pair.side_a, pair.labels_a)},
          {"side_b", side(pair.side_b, pair.labels_b)}};
}

}  // namespace fockdual
