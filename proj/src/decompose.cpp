#include "fockdual/decompose.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fockdual {

namespace {

void check_guard(int d, int k) {
  int n = d * k;
  if (n > max_full_basis_modes())
    throw guard_error("decompose: d*k = " + std::to_string(n) + " exceeds the guard of " +
                      std::to_string(max_full_basis_modes()) + " modes");
}

// Diagonal part of a Cartan operator: eigenvalue(s) = scalar + sum over
// occupied modes of ca[m,m]. Throws if the operator has any off-diagonal or
// number non-conserving monomial.
struct DiagonalOp {
  Rat scalar;
  std::vector<Rat> per_mode;

  static DiagonalOp from(const QuadraticOperator& op) {
    if (!op.cc().empty() || !op.aa().empty())
      throw std::logic_error("joint_weights: Cartan operator is not diagonal");
    DiagonalOp d;
    d.scalar = op.scalar();
    d.per_mode.assign(size_t(op.n_modes()), Rat(0));
    for (const auto& [mm, c] : op.ca()) {
      if (mm.first != mm.second)
        throw std::logic_error("joint_weights: Cartan operator is not diagonal");
      d.per_mode[size_t(mm.first)] = c;
    }
    return d;
  }

  Rat eigenvalue(uint64_t bits) const {
    Rat e = scalar;
    for (size_t m = 0; m < per_mode.size(); ++m)
      if (!per_mode[m].is_zero() && ((bits >> m) & 1u)) e += per_mode[m];
    return e;
  }
};

JointWeight weight_of(uint64_t bits, const std::vector<DiagonalOp>& da,
                      const std::vector<DiagonalOp>& db) {
  JointWeight w;
  w.a.reserve(da.size());
  w.b.reserve(db.size());
  for (const auto& op : da) w.a.push_back(op.eigenvalue(bits));
  for (const auto& op : db) w.b.push_back(op.eigenvalue(bits));
  return w;
}

SparseVec apply_to_sparse(const QuadraticOperator& op, const SparseVec& v, int d, int k) {
  StateVector sv = StateVector::from_sparse(v, d, k);
  return op.apply(sv).to_sparse();
}

// Module closure by breadth-first application of the generators with exact
// rank updates. Returns the echelon rows and the set of weight ids touched.
struct ModuleResult {
  Echelon span;
  std::set<JointWeight> weights;
};

ModuleResult grow_module(const SparseVec& seed, const std::vector<QuadraticOperator>& gens,
                         int d, int k, const std::vector<DiagonalOp>& da,
                         const std::vector<DiagonalOp>& db) {
  ModuleResult out;
  std::deque<SparseVec> queue;
  SparseVec s = seed;
  const SparseVec* stored = out.span.insert_get(std::move(s));
  if (stored == nullptr) return out;
  out.weights.insert(weight_of(stored->leading().first, da, db));
  queue.push_back(*stored);
  while (!queue.empty()) {
    SparseVec row = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      SparseVec img = apply_to_sparse(g, row, d, k);
      if (img.empty()) continue;
      const SparseVec* kept = out.span.insert_get(std::move(img));
      if (kept != nullptr) {
        out.weights.insert(weight_of(kept->leading().first, da, db));
        queue.push_back(*kept);
      }
    }
  }
  return out;
}

std::vector<DiagonalOp> diagonalize(const std::vector<QuadraticOperator>& cartan) {
  std::vector<DiagonalOp> out;
  out.reserve(cartan.size());
  for (const auto& op : cartan) out.push_back(DiagonalOp::from(op));
  return out;
}

bool is_partition_tuple(const std::vector<Rat>& t) {
  for (size_t i = 0; i < t.size(); ++i) {
    if (!t[i].is_integer() || t[i] < Rat(0)) return false;
    if (i > 0 && t[i] > t[i - 1]) return false;
  }
  return true;
}

bool valid_record_tuples(PairType type, int d, const std::vector<Rat>& lambda,
                         const std::vector<Rat>& w) {
  switch (type) {
    case PairType::gl_gl:
      return is_partition_tuple(lambda) && is_partition_tuple(w);
    case PairType::sp_sp:
      return is_partition_tuple(lambda) && is_partition_tuple(w);
    case PairType::o_o: {
      try {
        OAlgebraDiagram la(lambda), wb(w);
        for (const Rat& r : lambda)
          if (!r.is_integer()) return false;
        // dual side carries spin diagrams exactly when d is odd
        return w.empty() || wb.spin() == (d % 2 == 1);
      } catch (const std::invalid_argument&) {
        return false;
      }
    }
  }
  return false;
}

}  // namespace

size_t WeightTable::total_states() const {
  size_t n = 0;
  for (const auto& [w, states] : spaces) n += states.size();
  return n;
}

WeightTable joint_weights(const DualPairRealization& pair) {
  check_guard(pair.d, pair.k);
  auto da = diagonalize(pair.cartan_a);
  auto db = diagonalize(pair.cartan_b);
  WeightTable table;
  uint64_t total = uint64_t(1) << (pair.d * pair.k);
  for (uint64_t bits = 0; bits < total; ++bits)
    table.spaces[weight_of(bits, da, db)].push_back(bits);
  return table;
}

std::vector<HighestWeightRecord> highest_weight_vectors(const DualPairRealization& pair) {
  WeightTable table = joint_weights(pair);
  std::vector<QuadraticOperator> raising = pair.raising_a;
  raising.insert(raising.end(), pair.raising_b.begin(), pair.raising_b.end());
  int n = pair.d * pair.k;

  std::vector<HighestWeightRecord> records;
  for (const auto& [weight, states] : table.spaces) {
    // stack the raising images of the weight-space basis states
    std::vector<SparseVec> columns;
    columns.reserve(states.size());
    for (uint64_t bits : states) {
      std::map<uint64_t, Rat> img;
      for (size_t i = 0; i < raising.size(); ++i) {
        StateVector out = raising[i].apply(FockState{bits, pair.d, pair.k});
        for (const auto& [obits, c] : out.terms()) img[(uint64_t(i) << n) | obits] += c;
      }
      columns.push_back(sparse_from_map(img));
    }
    for (const auto& combo : kernel_of_columns(columns)) {
      HighestWeightRecord rec;
      rec.weight = weight;
      rec.lambda = weight.a;
      rec.w = weight.b;
      rec.vector = StateVector(pair.d, pair.k);
      for (size_t j = 0; j < states.size(); ++j) rec.vector.add(states[j], combo[j]);
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::vector<StateVector> generate_module(const StateVector& seed,
                                         const std::vector<QuadraticOperator>& generators) {
  if (seed.is_zero()) throw std::invalid_argument("generate_module: zero seed");
  int d = seed.d(), k = seed.k();
  Echelon span;
  std::deque<SparseVec> queue;
  const SparseVec* stored = span.insert_get(seed.to_sparse());
  queue.push_back(*stored);
  while (!queue.empty()) {
    SparseVec row = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      SparseVec img = apply_to_sparse(g, row, d, k);
      if (img.empty()) continue;
      const SparseVec* kept = span.insert_get(std::move(img));
      if (kept != nullptr) queue.push_back(*kept);
    }
  }
  std::vector<StateVector> out;
  out.reserve(span.rank());
  for (const auto& [pivot, row] : span.rows()) out.push_back(StateVector::from_sparse(row, d, k));
  return out;
}

std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> predicted_signed_pairs(PairType type,
                                                                                  int d, int k) {
  std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> out;
  auto tuple_of = [](const std::vector<long long>& v) {
    std::vector<Rat> t;
    t.reserve(v.size());
    for (long long x : v) t.emplace_back(x);
    return t;
  };
  if (type == PairType::gl_gl) {
    for (const auto& e : gl_conjugate_pairs(d, k).entries)
      out.emplace_back(tuple_of(e.lambda.padded(size_t(d))), e.w.w());
    return out;
  }
  const PairingTable table = (type == PairType::o_o) ? frame_fill_pairs(d, k)
                                                     : helmers_pairs(d, k);
  for (const auto& e : table.entries) {
    std::vector<Rat> lam = tuple_of(e.lambda.padded(size_t(d / 2)));
    std::vector<Rat> w = e.w.w();
    out.emplace_back(lam, w);
    if (e.lambda_pm) {
      std::vector<Rat> neg = lam;
      neg.back() = -neg.back();
      out.emplace_back(neg, w);
    } else if (e.w_pm) {
      std::vector<Rat> neg = w;
      neg.back() = -neg.back();
      out.emplace_back(lam, neg);
    }
  }
  return out;
}

DecompositionReport decompose(PairType type, int d, int k) {
  check_guard(d, k);
  DualPairRealization pair = build_pair(type, d, k);
  DecompositionReport report;
  report.type = type;
  report.d = d;
  report.k = k;
  report.records = highest_weight_vectors(pair);

  // multiplicity-freeness: each signed joint weight occurs exactly once
  std::set<JointWeight> seen;
  report.multiplicity_free = true;
  for (const auto& rec : report.records)
    if (!seen.insert(rec.weight).second) report.multiplicity_free = false;

  for (const auto& rec : report.records)
    if (!valid_record_tuples(type, d, rec.lambda, rec.w)) {
      report.weights_valid = false;
      std::ostringstream os;
      os << "highest weight tuple outside the admissible diagram family: lambda=(";
      for (size_t i = 0; i < rec.lambda.size(); ++i)
        os << (i ? "," : "") << rec.lambda[i].str();
      os << ") w=(";
      for (size_t i = 0; i < rec.w.size(); ++i) os << (i ? "," : "") << rec.w[i].str();
      os << ")";
      report.notes.push_back(os.str());
    }

  // grow the joint modules and check disjointness and completeness
  auto da = diagonalize(pair.cartan_a);
  auto db = diagonalize(pair.cartan_b);
  std::vector<QuadraticOperator> gens = pair.all_generators();
  Echelon global;
  long long dim_sum = 0;
  bool disjoint = true;
  for (auto& rec : report.records) {
    ModuleResult mod = grow_module(rec.vector.to_sparse(), gens, d, k, da, db);
    rec.module_dimension = static_cast<long long>(mod.span.rank());
    rec.module_weights.assign(mod.weights.begin(), mod.weights.end());
    dim_sum += rec.module_dimension;
    for (const auto& [pivot, row] : mod.span.rows())
      if (!global.insert(row)) disjoint = false;
  }
  report.modules_disjoint = disjoint;
  report.dimension_sum_ok = (dim_sum == report.fock_dimension()) &&
                            (static_cast<long long>(global.rank()) == report.fock_dimension());

  // diagram-level prediction
  auto predicted = predicted_signed_pairs(type, d, k);
  std::set<std::pair<std::vector<Rat>, std::vector<Rat>>> pred_set(predicted.begin(),
                                                                   predicted.end());
  std::set<std::pair<std::vector<Rat>, std::vector<Rat>>> obs_set;
  for (const auto& rec : report.records) obs_set.emplace(rec.lambda, rec.w);
  for (const auto& p : pred_set)
    if (!obs_set.count(p))
      report.prediction_diff.push_back({"predicted-only", p.first, p.second});
  for (const auto& o : obs_set)
    if (!pred_set.count(o))
      report.prediction_diff.push_back({"observed-only", o.first, o.second});

  if (type == PairType::o_o) {
    reflection_analysis(report, pair);
    if (d == 2)
      report.notes.push_back(
          "d = 2: the dual algebra is abelian here, so signed partner modules are not "
          "connected by any side-B operator; the decomposition refines accordingly.");
  }
  return report;
}

void reflection_analysis(DecompositionReport& report, const DualPairRealization& pair) {
  if (report.type != PairType::o_o || pair.type != PairType::o_o)
    throw std::invalid_argument("reflection_analysis: orthogonal pair required");
  FockInvolution r = reflection_r(report.d, report.k);
  FockInvolution s = sigma(report.d, report.k);
  std::map<JointWeight, size_t> by_weight;
  for (size_t i = 0; i < report.records.size(); ++i)
    by_weight.emplace(report.records[i].weight, i);
  auto diag_a = diagonalize(pair.cartan_a);
  auto diag_b = diagonalize(pair.cartan_b);

  auto analyse = [&](const FockInvolution& inv, bool is_r) {
    for (size_t i = 0; i < report.records.size(); ++i) {
      HighestWeightRecord& rec = report.records[i];
      StateVector image = inv.apply(rec.vector);
      if (image.is_zero()) throw std::logic_error("reflection_analysis: vanished image");
      // weight of the image, read from its leading basis state
      JointWeight w = weight_of(image.terms().begin()->first, diag_a, diag_b);
      auto it = by_weight.find(w);
      if (it == by_weight.end())
        throw std::logic_error("reflection_analysis: partner weight carries no record");
      const HighestWeightRecord& partner = report.records[it->second];
      Rat c = image.coeff(FockState{partner.vector.terms().begin()->first, report.d, report.k});
      if (c.is_zero() || !(image == partner.vector.scaled(c)))
        throw std::logic_error("reflection_analysis: image is not proportional to a record");
      if (!(c == Rat(1) || c == Rat(-1)))
        throw std::logic_error("reflection_analysis: pairing constant is not a sign");
      if (it->second == i) {
        (is_r ? rec.r_eigen : rec.sigma_eigen) = c;
        (is_r ? rec.r_partner : rec.sigma_partner).reset();
      } else {
        (is_r ? rec.r_partner : rec.sigma_partner) = it->second;
        (is_r ? rec.r_eigen : rec.sigma_eigen).reset();
      }
    }
  };
  analyse(r, true);
  analyse(s, false);
}

bool QuasispinReport::pass() const {
  if (!algebra_ok || !q0_identity_ok) return false;
  for (const auto& m : modules)
    if (!m.ok) return false;
  return true;
}

QuasispinReport quasispin_check(int d, const DecompositionReport& report) {
  if (report.k != 2 || report.type != PairType::o_o)
    throw std::invalid_argument("quasispin_check: needs an o-o report with k = 2");
  if (report.d != d) throw std::invalid_argument("quasispin_check: d mismatch");
  const int k = 2;
  QuasispinReport out;
  out.d = d;

  // number conserving sl(2): S+ = sum_p a^+_{p2} a_{p1}, S- its transpose,
  // S0 = (N2 - N1)/2; the quasispin copy is its sigma conjugate
  QuadraticOperator Sp(d, k), Sm(d, k), S0(d, k);
  for (int p = 1; p <= d; ++p) {
    Sp.add_ca(mode_number({p, 2}, d, k), mode_number({p, 1}, d, k), Rat(1));
    Sm.add_ca(mode_number({p, 1}, d, k), mode_number({p, 2}, d, k), Rat(1));
    S0.add_ca(mode_number({p, 2}, d, k), mode_number({p, 2}, d, k), Rat(1, 2));
    S0.add_ca(mode_number({p, 1}, d, k), mode_number({p, 1}, d, k), Rat(-1, 2));
  }
  FockInvolution sg = sigma(d, k);
  QuadraticOperator Qp = sg.conjugate(Sp), Qm = sg.conjugate(Sm), Q0 = sg.conjugate(S0);

  bool ok = true;
  ok = ok && bracket(S0, Sp) == Sp && bracket(S0, Sm) == (Sm * Rat(-1)) &&
       bracket(Sp, Sm) == (S0 * Rat(2));
  ok = ok && bracket(Q0, Qp) == Qp && bracket(Q0, Qm) == (Qm * Rat(-1)) &&
       bracket(Qp, Qm) == (Q0 * Rat(2));
  for (const auto& s : {Sp, Sm, S0})
    for (const auto& q : {Qp, Qm, Q0}) ok = ok && bracket(s, q).is_zero();
  // span{S, Q} equals side B
  {
    DualPairRealization pair = build_pair(PairType::o_o, d, k);
    Echelon span_sq, span_b;
    for (const auto& op : {Sp, Sm, S0, Qp, Qm, Q0}) span_sq.insert(op.coefficient_vector());
    for (const auto& op : pair.side_b) span_b.insert(op.coefficient_vector());
    ok = ok && span_sq.rank() == span_b.rank();
    for (const auto& op : pair.side_b)
      ok = ok && span_sq.contains(op.coefficient_vector());
    for (const auto& op : {Sp, Sm, S0, Qp, Qm, Q0})
      ok = ok && span_b.contains(op.coefficient_vector());
  }
  out.algebra_ok = ok;

  // Q0 = (n - d)/2 as an operator identity
  QuadraticOperator half_n_minus_d(d, k);
  half_n_minus_d.add_scalar(Rat(-d, 2));
  for (int m = 0; m < d * k; ++m) half_n_minus_d.add_ca(m, m, Rat(1, 2));
  out.q0_identity_ok = (Q0 == half_n_minus_d);

  // per module: seniority v = minimal particle number, quasispin from the
  // particle-number range, spin from the kind imbalance
  for (size_t i = 0; i < report.records.size(); ++i) {
    const HighestWeightRecord& rec = report.records[i];
    QuasispinModuleCheck check;
    check.record = i;
    if (rec.w.size() != 2 || rec.module_weights.empty()) {
      check.ok = false;
      out.modules.push_back(check);
      continue;
    }
    // side-B weights are d/2 - N_tau with tau = k+1-j at position j
    std::optional<Rat> min_n, max_n, max_s0;
    for (const auto& jw : rec.module_weights) {
      Rat n1 = Rat(d, 2) - jw.b[1];
      Rat n2 = Rat(d, 2) - jw.b[0];
      Rat n = n1 + n2;
      Rat s0 = (n2 - n1) / Rat(2);
      if (!min_n || n < *min_n) min_n = n;
      if (!max_n || n > *max_n) max_n = n;
      if (!max_s0 || s0 > *max_s0) max_s0 = s0;
    }
    check.v = *min_n;
    check.Q = (Rat(d) - *min_n) / Rat(2);
    check.S = *max_s0;
    const Rat w1 = rec.w[0], w2 = rec.w[1];
    check.ok = (check.v == Rat(d) - w1 - w2) && (check.v == Rat(d) - check.Q * Rat(2)) &&
               (*max_n == Rat(d) + check.Q * Rat(2)) && (w1 == check.Q + check.S) &&
               (w2 == check.Q - check.S);
    out.modules.push_back(check);
  }
  return out;
}

}  // namespace fockdual
