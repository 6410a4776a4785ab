#include "fockdual/dual_pair.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fockdual {

BilinearForm::BilinearForm(Kind kind, int d) : kind_(kind), d_(d) {
  if (d < 1) throw std::invalid_argument("BilinearForm: d must be positive");
  if (kind == Kind::skew && d % 2 != 0)
    throw std::invalid_argument("BilinearForm: a skew form needs even d");
}

Rat BilinearForm::entry(int p, int q) const {
  if (p < 1 || p > d_ || q < 1 || q > d_) throw std::out_of_range("BilinearForm: index");
  if (p + q != d_ + 1) return Rat(0);
  return kind_ == Kind::symmetric ? Rat(1) : Rat(q > p ? 1 : -1);
}

Rat BilinearForm::dual_entry(int p, int q) const {
  // with the anti-diagonal normalization b* coincides with b
  return entry(p, q);
}

BilinearForm standard_form(BilinearForm::Kind kind, int d) { return BilinearForm(kind, d); }

std::vector<QuadraticOperator> DualPairRealization::all_generators() const {
  std::vector<QuadraticOperator> out = side_a;
  out.insert(out.end(), side_b.begin(), side_b.end());
  return out;
}

QuadraticOperator f_operator(int tau, int upsilon, int d, int k) {
  if (tau == 0 || upsilon == 0 || tau < -k || tau > k || upsilon < -k || upsilon > k)
    throw std::invalid_argument("f_operator: kind index must lie in -k..-1, 1..k");
  QuadraticOperator out(d, k);
  auto factor = [&](int idx, bool dagger, int p) -> FieldOp {
    // a^+_{p,tau} = a_{p*,-tau} for negative tau, and correspondingly for a
    if (idx > 0) return FieldOp{mode_number({p, idx}, d, k), dagger};
    return FieldOp{mode_number({d + 1 - p, -idx}, d, k), !dagger};
  };
  for (int p = 1; p <= d; ++p) {
    FieldOp x = factor(tau, true, p);
    FieldOp y = factor(upsilon, false, p);
    // (1/2)[x, y] = x y - (1/2){x, y}
    out.add_product(x, y, Rat(1));
    if (x.mode == y.mode && x.dagger != y.dagger) out.add_scalar(Rat(-1, 2));
  }
  return out;
}

namespace {

// realization of a one-body transformation sum_{pq,tau} <p|x|q> a^+_{p tau} a_{q tau}
QuadraticOperator realize_one_body(const std::vector<std::tuple<int, int, Rat>>& matrix_entries,
                                   int d, int k) {
  QuadraticOperator out(d, k);
  for (const auto& [p, q, c] : matrix_entries)
    for (int tau = 1; tau <= k; ++tau)
      out.add_ca(mode_number({p, tau}, d, k), mode_number({q, tau}, d, k), c);
  return out;
}

// ebar_{pq} = e_{pq} - e_{q* p*} for the orthogonal algebra, and
// xbar_{pq} = e_{pq} - eps_p eps_q e_{q* p*} for the symplectic algebra.
QuadraticOperator realize_bar(int p, int q, const BilinearForm& b, int k) {
  int d = b.d();
  std::vector<std::tuple<int, int, Rat>> entries;
  entries.emplace_back(p, q, Rat(1));
  entries.emplace_back(b.star(q), b.star(p), Rat(-b.eps(p) * b.eps(q)));
  return realize_one_body(entries, d, k);
}

std::string idx_label(const std::string& base, int i, int j) {
  std::ostringstream os;
  os << base << "(" << i << "," << j << ")";
  return os.str();
}

// sum_p a^+_{p tau} a_{p upsilon}
QuadraticOperator kind_mover(int tau, int upsilon, int d, int k) {
  QuadraticOperator out(d, k);
  for (int p = 1; p <= d; ++p)
    out.add_ca(mode_number({p, tau}, d, k), mode_number({p, upsilon}, d, k), Rat(1));
  return out;
}

void build_gl(DualPairRealization& pair) {
  int d = pair.d, k = pair.k;
  for (int p = 1; p <= d; ++p)
    for (int q = 1; q <= d; ++q) {
      QuadraticOperator op = realize_one_body({{p, q, Rat(1)}}, d, k);
      pair.side_a.push_back(op);
      pair.labels_a.push_back(idx_label("E", p, q));
      if (p == q) pair.cartan_a.push_back(op);
      if (p < q) pair.raising_a.push_back(op);
    }
  for (int tau = 1; tau <= k; ++tau)
    for (int ups = 1; ups <= k; ++ups) {
      QuadraticOperator op = kind_mover(tau, ups, d, k);
      pair.side_b.push_back(op);
      pair.labels_b.push_back(idx_label("F", tau, ups));
      if (tau == ups) pair.cartan_b.push_back(op);
      if (tau < ups) pair.raising_b.push_back(op);
    }
}

// Orthogonal side A plus the f-operator realization of o(2k) on side B. The
// independent representatives are chosen once per antisymmetry orbit
// (i,j) <-> (j*, i*) of the index grid, skipping the vanishing j = i* slots.
void build_o_o(DualPairRealization& pair) {
  int d = pair.d, k = pair.k;
  BilinearForm b(BilinearForm::Kind::symmetric, d);
  for (int p = 1; p <= d; ++p)
    for (int q = 1; q <= d; ++q) {
      if (q == b.star(p)) continue;  // ebar_{p,p*} = 0
      std::pair<int, int> mirror{b.star(q), b.star(p)};
      if (std::pair<int, int>{p, q} > mirror) continue;
      QuadraticOperator op = realize_bar(p, q, b, k);
      pair.side_a.push_back(op);
      pair.labels_a.push_back(idx_label("ebar", p, q));
      if (p == q && 2 * p <= d) pair.cartan_a.push_back(op);
      if (p < q) pair.raising_a.push_back(op);
    }
  // positions 1..2k stand for the kind range -k..-1,1..k in order
  auto pos_to_tau = [&](int i) { return i <= k ? i - k - 1 : i - k; };
  int n = 2 * k;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == n + 1 - i) continue;  // f_{tau,-tau} = 0
      std::pair<int, int> mirror{n + 1 - j, n + 1 - i};
      if (std::pair<int, int>{i, j} > mirror) continue;
      int tau = pos_to_tau(i), ups = pos_to_tau(j);
      QuadraticOperator op = f_operator(tau, ups, d, k);
      pair.side_b.push_back(op);
      pair.labels_b.push_back(idx_label("f", tau, ups));
      if (i == j && i <= k) pair.cartan_b.push_back(op);
      if (i < j) pair.raising_b.push_back(op);
    }
}

void build_sp_sp(DualPairRealization& pair) {
  int d = pair.d, k = pair.k;
  BilinearForm b(BilinearForm::Kind::skew, d);
  for (int p = 1; p <= d; ++p)
    for (int q = 1; q <= d; ++q) {
      std::pair<int, int> mirror{b.star(q), b.star(p)};
      if (std::pair<int, int>{p, q} > mirror) continue;  // xbar_{q*p*} dependent
      QuadraticOperator op = realize_bar(p, q, b, k);
      pair.side_a.push_back(op);
      pair.labels_a.push_back(idx_label("xbar", p, q));
      if (p == q && 2 * p <= d) pair.cartan_a.push_back(op);
      if (p < q) pair.raising_a.push_back(op);
    }
  // number conserving part: movers and the Cartan d/2 - N_tau; the Cartan
  // list runs tau = k..1 so that its eigenvalue tuple on a highest-weight
  // state reads off the partner diagram rows w_1, ..., w_k directly
  for (int tau = 1; tau <= k; ++tau)
    for (int ups = 1; ups <= k; ++ups) {
      if (tau == ups) {
        QuadraticOperator op(d, k);
        op.add_scalar(Rat(d, 2));
        op -= kind_mover(tau, tau, d, k);
        pair.side_b.push_back(op);
        pair.labels_b.push_back(idx_label("h", tau, tau));
      } else {
        QuadraticOperator op = kind_mover(tau, ups, d, k);
        pair.side_b.push_back(op);
        pair.labels_b.push_back(idx_label("F", tau, ups));
        if (tau < ups) pair.raising_b.push_back(op);
      }
    }
  for (int tau = k; tau >= 1; --tau) {
    QuadraticOperator op(d, k);
    op.add_scalar(Rat(d, 2));
    op -= kind_mover(tau, tau, d, k);
    pair.cartan_b.push_back(op);
  }
  // pair creators / annihilators contracted with the skew form; both are
  // symmetric in (tau, upsilon)
  for (int tau = 1; tau <= k; ++tau)
    for (int ups = tau; ups <= k; ++ups) {
      QuadraticOperator create(d, k), destroy(d, k);
      for (int p = 1; p <= d; ++p) {
        Rat e(b.eps(p));
        create.add_cc(mode_number({p, tau}, d, k), mode_number({b.star(p), ups}, d, k), e);
        destroy.add_aa(mode_number({b.star(p), tau}, d, k), mode_number({p, ups}, d, k), e);
      }
      pair.side_b.push_back(create);
      pair.labels_b.push_back(idx_label("C", tau, ups));
      pair.side_b.push_back(destroy);
      pair.labels_b.push_back(idx_label("A", tau, ups));
      pair.raising_b.push_back(destroy);
    }
}

}  // namespace

DualPairRealization build_pair(PairType type, int d, int k) {
  if (d < 1 || k < 1) throw std::invalid_argument("build_pair: d and k must be positive");
  if (d * k > 63) throw std::invalid_argument("build_pair: d*k exceeds 63 modes");
  if (type == PairType::sp_sp && d % 2 != 0)
    throw std::invalid_argument("build_pair: sp-sp requires even d");
  DualPairRealization pair;
  pair.type = type;
  pair.d = d;
  pair.k = k;
  switch (type) {
    case PairType::gl_gl: build_gl(pair); break;
    case PairType::o_o: build_o_o(pair); break;
    case PairType::sp_sp: build_sp_sp(pair); break;
  }
  return pair;
}

FockInvolution::FockInvolution(std::string name, int d, int k, std::vector<Factor> creation_image,
                               std::vector<Factor> annihilation_image, SignedState vacuum_image)
    : name_(std::move(name)),
      d_(d),
      k_(k),
      cimg_(std::move(creation_image)),
      aimg_(std::move(annihilation_image)),
      vac_(vacuum_image) {
  if (cimg_.size() != size_t(d * k) || aimg_.size() != size_t(d * k))
    throw std::invalid_argument("FockInvolution: image tables must cover all modes");
}

SignedState FockInvolution::apply(const FockState& s) const {
  if (s.d != d_ || s.k != k_) throw std::invalid_argument("FockInvolution: (d,k) mismatch");
  // s = a^+_{m1} ... a^+_{mn} |0| with m1 < ... < mn; substitute each factor
  // and evaluate the resulting string right to left on the vacuum image.
  std::vector<int> modes;
  for (int m = 0; m < s.n_modes(); ++m)
    if ((s.bits >> m) & 1u) modes.push_back(m);
  int sign = vac_.sign;
  FockState cur = vac_.state;
  for (auto it = modes.rbegin(); it != modes.rend(); ++it) {
    const Factor& f = cimg_[size_t(*it)];
    ModeIndex mi = mode_from_number(f.op.mode, d_, k_);
    auto next = f.op.dagger ? apply_creation(cur, mi) : apply_annihilation(cur, mi);
    if (!next) throw std::logic_error("FockInvolution: image of a basis state vanished");
    sign *= f.sign * next->sign;
    cur = next->state;
  }
  return SignedState{sign, cur};
}

StateVector FockInvolution::apply(const StateVector& v) const {
  StateVector out(v.d(), v.k());
  for (const auto& [bits, c] : v.terms()) {
    SignedState img = apply(FockState{bits, v.d(), v.k()});
    out.add(img.state.bits, c * Rat(img.sign));
  }
  return out;
}

QuadraticOperator FockInvolution::conjugate(const QuadraticOperator& x) const {
  if (x.d() != d_ || x.k() != k_) throw std::invalid_argument("FockInvolution: (d,k) mismatch");
  QuadraticOperator out(d_, k_);
  out.add_scalar(x.scalar());
  for (const auto& [f1, f2, c] : x.monomials()) {
    const Factor& g1 = f1.dagger ? cimg_[size_t(f1.mode)] : aimg_[size_t(f1.mode)];
    const Factor& g2 = f2.dagger ? cimg_[size_t(f2.mode)] : aimg_[size_t(f2.mode)];
    out.add_product(g1.op, g2.op, c * Rat(g1.sign * g2.sign));
  }
  return out;
}

SparseMatrix FockInvolution::matrix(const std::vector<FockState>& basis) const {
  std::map<uint64_t, size_t> index;
  for (size_t j = 0; j < basis.size(); ++j) index.emplace(basis[j].bits, j);
  SparseMatrix m(basis.size(), basis.size());
  for (size_t j = 0; j < basis.size(); ++j) {
    SignedState img = apply(basis[j]);
    auto it = index.find(img.state.bits);
    if (it == index.end()) throw std::invalid_argument("FockInvolution: image leaves basis");
    m.set(it->second, j, Rat(img.sign));
  }
  return m;
}

FockInvolution reflection_r(int d, int k) {
  int n = d * k;
  std::vector<FockInvolution::Factor> cimg(static_cast<size_t>(n)), aimg(static_cast<size_t>(n));
  for (int m = 0; m < n; ++m) {
    ModeIndex mi = mode_from_number(m, d, k);
    int p = mi.p;
    int sign = 1;
    if (d % 2 == 1) {
      if (p == (d + 1) / 2) sign = -1;
    } else {
      if (p == d / 2)
        p = d / 2 + 1;
      else if (p == d / 2 + 1)
        p = d / 2;
    }
    int target = mode_number({p, mi.tau}, d, k);
    cimg[size_t(m)] = {FieldOp{target, true}, sign};
    aimg[size_t(m)] = {FieldOp{target, false}, sign};
  }
  return FockInvolution("r", d, k, std::move(cimg), std::move(aimg),
                        SignedState{1, vacuum(d, k)});
}

FockInvolution sigma(int d, int k) {
  int n = d * k;
  std::vector<FockInvolution::Factor> cimg(static_cast<size_t>(n)), aimg(static_cast<size_t>(n));
  for (int m = 0; m < n; ++m) {
    ModeIndex mi = mode_from_number(m, d, k);
    if (mi.tau == 1) {
      int target = mode_number({d + 1 - mi.p, 1}, d, k);
      cimg[size_t(m)] = {FieldOp{target, false}, 1};
      aimg[size_t(m)] = {FieldOp{target, true}, 1};
    } else {
      cimg[size_t(m)] = {FieldOp{m, true}, 1};
      aimg[size_t(m)] = {FieldOp{m, false}, 1};
    }
  }
  // sigma|0> = a^+_{1,1} a^+_{2,1} ... a^+_{d,1} |0>, p increasing; these are
  // modes 0, k, 2k, ... so the product is already in canonical order.
  FockState vac = vacuum(d, k);
  for (int p = 1; p <= d; ++p) vac.bits |= uint64_t(1) << mode_number({p, 1}, d, k);
  return FockInvolution("sigma", d, k, std::move(cimg), std::move(aimg), SignedState{1, vac});
}

FockState phi_hw(const OGroupDiagram& lam, int k) {
  if (!lam.valid()) throw std::invalid_argument("phi_hw: invalid O(d) diagram");
  if (lam.shape.width() > k)
    throw std::invalid_argument("phi_hw: diagram wider than k columns");
  if (lam.d * k > 63) throw std::invalid_argument("phi_hw: d*k exceeds 63 modes");
  FockState s = vacuum(lam.d, k);
  const auto& rows = lam.shape.rows();
  for (size_t r = 0; r < rows.size(); ++r)
    for (long long c = 1; c <= rows[r]; ++c)
      s.bits |= uint64_t(1) << mode_number({int(r + 1), int(c)}, lam.d, k);
  return s;
}

}  // namespace fockdual
