#include "fockdual/verify.hpp"

#include <random>
#include <sstream>

#include "fockdual/tensor.hpp"

namespace fockdual {

namespace {

std::string dk_tag(int d, int k) {
  return "d=" + std::to_string(d) + ",k=" + std::to_string(k);
}

std::vector<std::pair<int, int>> dk_grid(int max_dk) {
  std::vector<std::pair<int, int>> out;
  for (int d = 1; d <= max_dk; ++d)
    for (int k = 1; d * k <= max_dk; ++k) out.emplace_back(d, k);
  return out;
}

QuadraticOperator random_quadratic(std::mt19937& rng, int d, int k) {
  int n = d * k;
  std::uniform_int_distribution<int> mode(0, n - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> kind(0, 2);
  QuadraticOperator op(d, k);
  for (int t = 0; t < 4; ++t) {
    int m1 = mode(rng), m2 = mode(rng);
    Rat c(coef(rng));
    switch (kind(rng)) {
      case 0: op.add_cc(m1, m2, c); break;
      case 1: op.add_ca(m1, m2, c); break;
      default: op.add_aa(m1, m2, c); break;
    }
  }
  op.add_scalar(Rat(coef(rng)));
  return op;
}

StateVector random_vector(std::mt19937& rng, int d, int k) {
  int n = d * k;
  std::uniform_int_distribution<uint64_t> bits(0, (uint64_t(1) << n) - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  StateVector v(d, k);
  for (int t = 0; t < 4; ++t) v.add(bits(rng), Rat(coef(rng)));
  return v;
}

}  // namespace

bool all_pass(const CheckList& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

CheckList verify_car(int max_dk) {
  CheckList out;

  // anticommutator by double application, both orders, every state and pair
  {
    bool ok = true;
    std::string detail;
    for (auto [d, k] : dk_grid(std::min(max_dk, 8))) {
      for (const FockState& s : full_basis(d, k)) {
        for (int m1 = 0; m1 < d * k && ok; ++m1)
          for (int m2 = 0; m2 < d * k && ok; ++m2) {
            ModeIndex a = mode_from_number(m1, d, k), c = mode_from_number(m2, d, k);
            Rat acc(0);
            if (auto x = apply_annihilation(s, a))
              if (auto y = apply_creation(x->state, c))
                if (y->state == s) acc += Rat(x->sign * y->sign);
            if (auto x = apply_creation(s, c))
              if (auto y = apply_annihilation(x->state, a))
                if (y->state == s) acc += Rat(x->sign * y->sign);
            Rat expect(m1 == m2 ? 1 : 0);
            if (acc != expect) {
              ok = false;
              detail = "failed at " + dk_tag(d, k);
            }
          }
        if (!ok) break;
      }
      if (!ok) break;
    }
    out.push_back({"car: {a_m, a^+_m'} = delta on every basis state", ok, detail});
  }

  std::mt19937 rng(20230517);
  // bracket antisymmetry and Jacobi
  {
    bool ok = true;
    for (auto [d, k] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
      for (int rep = 0; rep < 12 && ok; ++rep) {
        auto A = random_quadratic(rng, d, k), B = random_quadratic(rng, d, k),
             C = random_quadratic(rng, d, k);
        if (!(bracket(A, B) + bracket(B, A)).is_zero()) ok = false;
        QuadraticOperator jac = bracket(A, bracket(B, C));
        jac += bracket(B, bracket(C, A));
        jac += bracket(C, bracket(A, B));
        if (!jac.is_zero()) ok = false;
      }
    }
    out.push_back({"car: bracket antisymmetry and Jacobi identity", ok, ""});
  }

  // linearity of apply
  {
    bool ok = true;
    for (int rep = 0; rep < 12 && ok; ++rep) {
      int d = 3, k = 2;
      auto A = random_quadratic(rng, d, k);
      auto u = random_vector(rng, d, k), v = random_vector(rng, d, k);
      Rat alpha(2, 3), beta(-5, 2);
      StateVector lhs_arg(d, k);
      lhs_arg.add_scaled(u, alpha);
      lhs_arg.add_scaled(v, beta);
      StateVector lhs = A.apply(lhs_arg);
      StateVector rhs(d, k);
      rhs.add_scaled(A.apply(u), alpha);
      rhs.add_scaled(A.apply(v), beta);
      if (!(lhs == rhs)) ok = false;
    }
    out.push_back({"car: apply is exactly linear", ok, ""});
  }

  // symbolic bracket against the dense matrix commutator on generator pairs
  {
    bool ok = true;
    std::string detail;
    for (auto [type, d, k] : std::vector<std::tuple<PairType, int, int>>{
             {PairType::o_o, 3, 1}, {PairType::o_o, 2, 2}, {PairType::sp_sp, 2, 2},
             {PairType::gl_gl, 2, 2}}) {
      DualPairRealization pair = build_pair(type, d, k);
      auto basis = full_basis(d, k);
      std::vector<QuadraticOperator> gens = pair.all_generators();
      for (size_t i = 0; i < gens.size() && ok; i += 2)
        for (size_t j = i; j < gens.size() && ok; j += 3) {
          SparseMatrix lhs = matrix_of(bracket(gens[i], gens[j]), basis);
          SparseMatrix rhs = matrix_of(gens[i], basis).commutator(matrix_of(gens[j], basis));
          if (!(lhs == rhs)) {
            ok = false;
            detail = "failed at " + dk_tag(d, k);
          }
        }
    }
    out.push_back({"car: matrix_of(bracket) equals the matrix commutator", ok, detail});
  }
  return out;
}

CheckList verify_involutions(int max_dk) {
  CheckList out;
  bool inv_ok = true, anti_ok = true, span_ok = true, fix_ok = true;
  std::string inv_detail, anti_detail, span_detail, fix_detail;
  for (auto [d, k] : dk_grid(max_dk)) {
    FockInvolution r = reflection_r(d, k);
    FockInvolution s = sigma(d, k);
    for (const FockState& st : full_basis(d, k)) {
      SignedState r1 = r.apply(st);
      SignedState r2 = r.apply(r1.state);
      SignedState s1 = s.apply(st);
      SignedState s2 = s.apply(s1.state);
      if (!(r2.state == st) || r1.sign * r2.sign != 1) {
        inv_ok = false;
        inv_detail = "r^2 failed at " + dk_tag(d, k);
      }
      if (!(s2.state == st) || s1.sign * s2.sign != 1) {
        inv_ok = false;
        inv_detail = "sigma^2 failed at " + dk_tag(d, k);
      }
      SignedState sr = s.apply(r1.state);
      SignedState rs = r.apply(s1.state);
      if (!(sr.state == rs.state) || r1.sign * sr.sign != -s1.sign * rs.sign) {
        anti_ok = false;
        anti_detail = "failed at " + dk_tag(d, k);
      }
    }
    // conjugation action on the dual side: r fixes each generator, sigma
    // preserves the span
    DualPairRealization pair = build_pair(PairType::o_o, d, k);
    Echelon span_b;
    for (const auto& op : pair.side_b) span_b.insert(op.coefficient_vector());
    for (const auto& op : pair.side_b) {
      if (!(r.conjugate(op) == op)) {
        fix_ok = false;
        fix_detail = "failed at " + dk_tag(d, k);
      }
      if (!span_b.contains(s.conjugate(op).coefficient_vector())) {
        span_ok = false;
        span_detail = "failed at " + dk_tag(d, k);
      }
    }
  }
  out.push_back({"involutions: r^2 = 1 and sigma^2 = 1 on every basis state", inv_ok, inv_detail});
  out.push_back({"involutions: sigma r = -r sigma on every basis state", anti_ok, anti_detail});
  out.push_back({"involutions: r fixes every dual-side generator", fix_ok, fix_detail});
  out.push_back({"involutions: sigma maps the dual-side span into itself", span_ok, span_detail});
  return out;
}

CheckList verify_tensor() {
  CheckList out;
  std::mt19937 rng(891275);

  // idempotence of the Young symmetrizer on unit and pseudo-random tensors
  {
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= 5 && ok; ++n) {
      for (const GLDiagram& lam : partitions_in_box(n, n)) {
        if (lam.cells() != n) continue;
        int d = std::max(1, n);
        std::vector<Tensor> seeds;
        seeds.push_back(chi_lambda(lam, d));
        std::uniform_int_distribution<int> idx(1, d), coef(-2, 2);
        for (int t = 0; t < 2; ++t) {
          Tensor rnd(n, d);
          for (int e = 0; e < 3; ++e) {
            std::vector<int> tuple;
            for (int i = 0; i < n; ++i) tuple.push_back(idx(rng));
            rnd.add(tuple, Rat(coef(rng)));
          }
          seeds.push_back(std::move(rnd));
        }
        for (const Tensor& t : seeds) {
          Tensor once = young_symmetrize(lam, t);
          Tensor twice = young_symmetrize(lam, once);
          if (!(once == twice)) {
            ok = false;
            detail = "failed for lambda=" + to_string(lam);
          }
        }
      }
    }
    out.push_back({"tensor: Young symmetrizer is idempotent for |lambda| <= 5", ok, detail});
  }

  // row-length eigenvalues and raising annihilation on chi_hw
  {
    bool ok = true;
    std::string detail;
    for (int d = 1; d <= 4 && ok; ++d)
      for (const GLDiagram& lam : partitions_in_box(d, 5)) {
        if (lam.cells() > 5) continue;
        Tensor hw = chi_hw(lam, d);
        if (hw.is_zero()) {
          ok = false;
          detail = "chi_hw vanished for lambda=" + to_string(lam);
          break;
        }
        for (int p = 1; p <= d && ok; ++p) {
          Tensor lhs = gl_act(e_matrix(p, p, d), hw);
          if (!(lhs == hw.scaled(Rat(lam.row(size_t(p)))))) {
            ok = false;
            detail = "eigenvalue failed for lambda=" + to_string(lam);
          }
          for (int q = p + 1; q <= d && ok; ++q)
            if (!gl_act(e_matrix(p, q, d), hw).is_zero()) {
              ok = false;
              detail = "raising failed for lambda=" + to_string(lam);
            }
        }
      }
    out.push_back({"tensor: row-length eigenvalues and raising annihilation on chi_hw", ok, detail});
  }

  // tracelessness for the anti-diagonal symmetric form
  {
    bool ok = true;
    std::string detail;
    for (int d = 2; d <= 4 && ok; ++d) {
      BilinearForm b(BilinearForm::Kind::symmetric, d);
      for (const GLDiagram& lam : partitions_in_box(d, 5)) {
        if (lam.cells() > 5) continue;
        if (!OGroupDiagram{lam, d}.valid()) continue;
        if (!is_traceless(chi_hw(lam, d), b)) {
          ok = false;
          detail = "failed for lambda=" + to_string(lam) + " d=" + std::to_string(d);
        }
      }
      // the plain identity 2-tensor is not traceless
      Tensor delta(2, d);
      for (int p = 1; p <= d; ++p) delta.add({p, p}, Rat(1));
      if (is_traceless(delta, b)) {
        ok = false;
        detail = "identity tensor reported traceless";
      }
    }
    out.push_back({"tensor: chi_hw traceless for the anti-diagonal form", ok, detail});
  }

  // complementary diagrams share the Cartan eigenvalue tuple
  {
    bool ok = true;
    std::string detail;
    for (int d = 2; d <= 4 && ok; ++d)
      for (const GLDiagram& lam : partitions_in_box(d, 4)) {
        if (lam.cells() > 5) continue;
        OGroupDiagram g{lam, d};
        if (!g.valid() || g.self_complementary()) continue;
        OGroupDiagram comp = complementary(g);
        if (comp.shape.cells() > 5) continue;
        Tensor hw1 = chi_hw(lam, d), hw2 = chi_hw(comp.shape, d);
        for (int p = 1; 2 * p <= d && ok; ++p) {
          auto eig = [&](const Tensor& t) -> std::optional<Rat> {
            Tensor img = gl_act(ebar_matrix(p, p, d), t);
            if (img.is_zero()) return Rat(0);
            const auto& [tuple, c] = *t.values().begin();
            Rat e = img.value(tuple) / c;
            if (!(img == t.scaled(e))) return std::nullopt;
            return e;
          };
          auto e1 = eig(hw1), e2 = eig(hw2);
          if (!e1 || !e2 || !(*e1 == *e2)) {
            ok = false;
            detail = "failed for lambda=" + to_string(lam) + " d=" + std::to_string(d);
          }
        }
      }
    out.push_back({"tensor: complementary diagrams share Cartan tuples", ok, detail});
  }

  // gl_act is a derivation: bracket compatibility on pseudo-random data
  {
    bool ok = true;
    std::uniform_int_distribution<int> coef(-2, 2), idx(1, 3);
    for (int rep = 0; rep < 8 && ok; ++rep) {
      int d = 3, n = 3;
      RatMatrix x(static_cast<size_t>(d), static_cast<size_t>(d));
      RatMatrix y(static_cast<size_t>(d), static_cast<size_t>(d));
      for (size_t i = 0; i < size_t(d); ++i)
        for (size_t j = 0; j < size_t(d); ++j) {
          x.at(i, j) = Rat(coef(rng));
          y.at(i, j) = Rat(coef(rng));
        }
      Tensor t(n, d);
      for (int e = 0; e < 4; ++e) t.add({idx(rng), idx(rng), idx(rng)}, Rat(coef(rng)));
      Tensor lhs = gl_act(x.commutator(y), t);
      Tensor rhs = gl_act(x, gl_act(y, t));
      rhs.add_scaled(gl_act(y, gl_act(x, t)), Rat(-1));
      if (!(lhs == rhs)) ok = false;
    }
    out.push_back({"tensor: gl action respects the matrix bracket", ok, ""});
  }
  return out;
}

CheckList verify_quasispin(const std::vector<int>& ds) {
  CheckList out;
  for (int d : ds) {
    DecompositionReport report = decompose(PairType::o_o, d, 2);
    QuasispinReport q = quasispin_check(d, report);
    std::ostringstream detail;
    if (!q.pass()) {
      detail << "algebra_ok=" << q.algebra_ok << " q0=" << q.q0_identity_ok;
      for (const auto& m : q.modules)
        if (!m.ok) detail << " module#" << m.record << " failed";
    }
    out.push_back({"quasispin: seniority relations at d=" + std::to_string(d),
                   q.pass() && report.all_checks_pass(), detail.str()});
  }
  return out;
}

CheckList verify_commutant_closure(int max_dk) {
  CheckList out;
  bool cross_ok = true, close_ok = true;
  std::string cross_detail, close_detail;
  for (auto [d, k] : dk_grid(max_dk)) {
    for (PairType type : {PairType::gl_gl, PairType::o_o, PairType::sp_sp}) {
      if (type == PairType::sp_sp && d % 2 != 0) continue;
      DualPairRealization pair = build_pair(type, d, k);
      for (const auto& a : pair.side_a)
        for (const auto& b : pair.side_b)
          if (!bracket(a, b).is_zero()) {
            cross_ok = false;
            cross_detail = to_string(type) + " at " + dk_tag(d, k);
          }
      auto closes = [](const std::vector<QuadraticOperator>& side) {
        Echelon span;
        for (const auto& op : side) span.insert(op.coefficient_vector());
        for (size_t i = 0; i < side.size(); ++i)
          for (size_t j = i + 1; j < side.size(); ++j)
            if (!span.contains(bracket(side[i], side[j]).coefficient_vector())) return false;
        return true;
      };
      if (!closes(pair.side_a) || !closes(pair.side_b)) {
        close_ok = false;
        close_detail = to_string(type) + " at " + dk_tag(d, k);
      }
    }
  }
  out.push_back({"pairs: all cross brackets vanish symbolically", cross_ok, cross_detail});
  out.push_back({"pairs: each side closes under the bracket", close_ok, close_detail});
  return out;
}

CheckList verify_hw_states(int max_dk) {
  CheckList out;
  bool borel_ok = true, cartan_ok = true, r_ok = true, sigma_ok = true;
  std::string borel_detail, cartan_detail, r_detail, sigma_detail;
  for (auto [d, k] : dk_grid(max_dk)) {
    DualPairRealization pair = build_pair(PairType::o_o, d, k);
    FockInvolution r = reflection_r(d, k);
    FockInvolution s = sigma(d, k);
    for (const GLDiagram& shape : partitions_in_box(d, k)) {
      OGroupDiagram lam{shape, d};
      if (!lam.valid()) continue;
      FockState phi = phi_hw(lam, k);
      StateVector phi_vec = StateVector::unit(phi);
      std::string tag = "lambda=" + to_string(shape) + " at " + dk_tag(d, k);

      for (const auto& op : pair.raising_b)
        if (!op.apply(phi).is_zero()) {
          borel_ok = false;
          borel_detail = tag;
        }

      OAlgebraDiagram expect = rowe_w_from_lambda(lam, k);
      for (size_t j = 0; j < pair.cartan_b.size(); ++j) {
        StateVector img = pair.cartan_b[j].apply(phi);
        if (!(img == phi_vec.scaled(expect.w()[j]))) {
          cartan_ok = false;
          cartan_detail = tag;
        }
      }

      if (!lam.self_complementary()) {
        SignedState rphi = r.apply(phi);
        int want = 2 * lam.first_column() < d ? 1 : -1;
        if (!(rphi.state == phi) || rphi.sign != want) {
          r_ok = false;
          r_detail = tag;
        }
      } else {
        int want = (d / 2) % 2 == 0 ? 1 : -1;
        SignedState sphi = s.apply(phi);
        if (!(sphi.state == phi) || sphi.sign != want) {
          sigma_ok = false;
          sigma_detail = tag;
        }
        SignedState rphi = r.apply(phi);
        SignedState s_rphi = s.apply(rphi.state);
        if (!(s_rphi.state == rphi.state) || s_rphi.sign != -want) {
          sigma_ok = false;
          sigma_detail = tag + " (partner)";
        }
      }
    }
  }
  out.push_back({"hw: dual-side raising operators annihilate every tableau state", borel_ok,
                 borel_detail});
  out.push_back({"hw: Cartan eigenvalues give the partner diagram rows", cartan_ok, cartan_detail});
  out.push_back({"hw: r eigenvalue follows the first-column rule", r_ok, r_detail});
  out.push_back({"hw: sigma eigenvalues on self-complementary states", sigma_ok, sigma_detail});
  return out;
}

}  // namespace fockdual
