#include "qgalois/findim.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qgalois {

namespace {

void axpy(FinVec& y, const CycloScalar& a, const SparseVec& x) {
  if (a.is_zero()) return;
  for (const auto& [i, c] : x) y[i] += a * c;
}

}  // namespace

FinDimHopf::FinDimHopf(HopfPtr presentation) : H_(std::move(presentation)) {
  auto basis = H_->finite_basis();
  if (!basis) throw std::invalid_argument(H_->name() + " is not finite-dimensional");
  basis_ = std::move(*basis);
  for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i].letters()] = i;
  const std::size_t n = dim();

  auto sparse = [this](const NCPoly& p) {
    SparseVec v;
    for (const auto& [w, c] : p.terms()) v.emplace_back(index(w), c);
    return v;
  };
  mul_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mul_[i * n + j] = sparse(H_->nf(H_->monomial(basis_[i] * basis_[j])));
  comul_.resize(n);
  counit_.resize(n);
  antipode_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const TensorPoly d = H_->coproduct(basis_[i]);
    for (const auto& [k, c] : d.terms())
      comul_[i].push_back(TensorEntry{index(k.first), index(k.second), c});
    counit_[i] = H_->counit(basis_[i]);
    antipode_[i] = sparse(H_->antipode(basis_[i]));
  }
}

std::optional<std::size_t> FinDimHopf::find(const Word& w) const {
  auto it = index_.find(w.letters());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FinDimHopf::index(const Word& w) const {
  auto i = find(w);
  if (!i) throw std::invalid_argument(name() + ": word is not a basis element");
  return *i;
}

std::string FinDimHopf::label(std::size_t i) const { return basis_[i].empty() ? "1" : basis_[i].to_string(*H_->alphabet()); }

FinVec FinDimHopf::basis_vec(std::size_t i) const {
  FinVec v(dim());
  v[i] = CycloScalar(1);
  return v;
}

FinVec FinDimHopf::to_vec(const NCPoly& p) const {
  FinVec v(dim());
  const NCPoly q = H_->nf(p);
  for (const auto& [w, c] : q.terms()) v[index(w)] += c;
  return v;
}

NCPoly FinDimHopf::to_poly(const FinVec& v) const {
  NCPoly p(H_->alphabet());
  for (std::size_t i = 0; i < dim(); ++i) p.add_term(basis_[i], v[i]);
  return p;
}

FinVec FinDimHopf::mul(const FinVec& x, const FinVec& y) const {
  FinVec out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (!y[j].is_zero()) axpy(out, x[i] * y[j], product(i, j));
  }
  return out;
}

FinVec FinDimHopf::apply_antipode(const FinVec& x) const {
  FinVec out(dim());
  for (std::size_t i = 0; i < dim(); ++i) axpy(out, x[i], antipode_[i]);
  return out;
}

CycloScalar FinDimHopf::apply_counit(const FinVec& x) const {
  CycloScalar out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (!x[i].is_zero()) out += x[i] * counit_[i];
  return out;
}

FinVec FinDimHopf::comul(const FinVec& x) const {
  FinVec out(dim() * dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& e : comul_[i]) out[e.left * dim() + e.right] += x[i] * e.coeff;
  }
  return out;
}

FinDimPtr findim(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, FinDimPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(name); it != cache.end()) return it->second;
  }
  if (name != "af" && name != "hplus" && name != "hminus" && name != "hpm")
    throw std::invalid_argument("no finite-dimensional Hopf algebra named '" + name + "'");
  auto built = std::make_shared<const FinDimHopf>(hopf(name));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.try_emplace(name, built).first->second;
}

FinDimPtr build_af() { return findim("af"); }
FinDimPtr build_hplus() { return findim("hplus"); }
FinDimPtr build_hminus() { return findim("hminus"); }
FinDimPtr build_hpm() { return findim("hpm"); }

Report hopf_axioms_exhaustive(const FinDimHopf& C) {
  const std::size_t n = C.dim();
  Report rep("hopf-axioms:" + C.name());
  auto lbl = [&](std::size_t i) { return C.label(i); };

  Check& assoc = rep.add(C.name() + ": associativity", "(xy)z = x(yz) on basis triples");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        FinVec l = C.mul(C.mul(C.basis_vec(i), C.basis_vec(j)), C.basis_vec(k));
        FinVec r = C.mul(C.basis_vec(i), C.mul(C.basis_vec(j), C.basis_vec(k)));
        assoc.expect(l == r, [&] { return lbl(i) + " " + lbl(j) + " " + lbl(k); });
      }

  Check& unit = rep.add(C.name() + ": unit", "1x = x = x1");
  for (std::size_t i = 0; i < n; ++i)
    unit.expect(C.mul(C.basis_vec(0), C.basis_vec(i)) == C.basis_vec(i) &&
                    C.mul(C.basis_vec(i), C.basis_vec(0)) == C.basis_vec(i),
                [&] { return lbl(i); });

  Check& coassoc = rep.add(C.name() + ": coassociativity", "(Delta (x) id)Delta = (id (x) Delta)Delta");
  for (std::size_t i = 0; i < n; ++i) {
    FinVec l(n * n * n), r(n * n * n);
    for (const auto& e : C.coproduct(i)) {
      for (const auto& f : C.coproduct(e.left)) l[(f.left * n + f.right) * n + e.right] += e.coeff * f.coeff;
      for (const auto& f : C.coproduct(e.right)) r[(e.left * n + f.left) * n + f.right] += e.coeff * f.coeff;
    }
    coassoc.expect(l == r, [&] { return lbl(i); });
  }

  Check& counit = rep.add(C.name() + ": counit", "(eps (x) id)Delta = id = (id (x) eps)Delta");
  for (std::size_t i = 0; i < n; ++i) {
    FinVec l(n), r(n);
    for (const auto& e : C.coproduct(i)) {
      l[e.right] += e.coeff * C.counit(e.left);
      r[e.left] += e.coeff * C.counit(e.right);
    }
    counit.expect(l == C.basis_vec(i) && r == C.basis_vec(i), [&] { return lbl(i); });
  }

  Check& anti = rep.add(C.name() + ": antipode", "m(S (x) id)Delta = eta eps = m(id (x) S)Delta");
  for (std::size_t i = 0; i < n; ++i) {
    FinVec l(n), r(n);
    for (const auto& e : C.coproduct(i)) {
      FinVec sl = C.mul(C.apply_antipode(C.basis_vec(e.left)), C.basis_vec(e.right));
      FinVec sr = C.mul(C.basis_vec(e.left), C.apply_antipode(C.basis_vec(e.right)));
      for (std::size_t k = 0; k < n; ++k) {
        l[k] += e.coeff * sl[k];
        r[k] += e.coeff * sr[k];
      }
    }
    FinVec expected = C.basis_vec(0);
    for (auto& x : expected) x *= C.counit(i);
    anti.expect(l == expected && r == expected, [&] { return lbl(i); });
  }

  Check& bialg = rep.add(C.name() + ": Delta is an algebra map", "Delta(xy) = Delta(x)Delta(y) on basis pairs");
  Check& counit_mult = rep.add(C.name() + ": counit is multiplicative", "eps(xy) = eps(x)eps(y)");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FinVec prod(n);
      axpy(prod, CycloScalar(1), C.product(i, j));
      FinVec lhs = C.comul(prod);
      FinVec rhs(n * n);
      for (const auto& e : C.coproduct(i))
        for (const auto& f : C.coproduct(j)) {
          const CycloScalar c = e.coeff * f.coeff;
          for (const auto& [x, cx] : C.product(e.left, f.left))
            for (const auto& [y, cy] : C.product(e.right, f.right)) rhs[x * n + y] += c * cx * cy;
        }
      bialg.expect(lhs == rhs, [&] { return lbl(i) + " * " + lbl(j); });
      counit_mult.expect(C.apply_counit(prod) == C.counit(i) * C.counit(j), [&] { return lbl(i) + " * " + lbl(j); });
    }
  return rep;
}

Functional counit_functional(const FinDimHopf& C) {
  Functional f(C.dim());
  for (std::size_t i = 0; i < C.dim(); ++i) f[i] = C.counit(i);
  return f;
}

EndoMap identity_map(const FinDimHopf& C) {
  EndoMap m;
  for (std::size_t i = 0; i < C.dim(); ++i) m.push_back(C.basis_vec(i));
  return m;
}

EndoMap antipode_map(const FinDimHopf& C) {
  EndoMap m;
  for (std::size_t i = 0; i < C.dim(); ++i) m.push_back(C.apply_antipode(C.basis_vec(i)));
  return m;
}

EndoMap unit_counit_map(const FinDimHopf& C) {
  EndoMap m;
  for (std::size_t i = 0; i < C.dim(); ++i) {
    FinVec v = C.basis_vec(0);
    v[0] = C.counit(i);
    m.push_back(std::move(v));
  }
  return m;
}

Functional convolve(const Functional& f, const Functional& g, const FinDimHopf& C) {
  if (f.size() != C.dim() || g.size() != C.dim()) throw std::invalid_argument("convolve: dimension mismatch");
  Functional out(C.dim());
  for (std::size_t i = 0; i < C.dim(); ++i)
    for (const auto& e : C.coproduct(i)) out[i] += e.coeff * f[e.left] * g[e.right];
  return out;
}

EndoMap convolve(const EndoMap& f, const EndoMap& g, const FinDimHopf& C) {
  if (f.size() != C.dim() || g.size() != C.dim()) throw std::invalid_argument("convolve: dimension mismatch");
  EndoMap out(C.dim(), C.zero());
  for (std::size_t i = 0; i < C.dim(); ++i)
    for (const auto& e : C.coproduct(i)) {
      FinVec p = C.mul(f[e.left], g[e.right]);
      for (std::size_t k = 0; k < C.dim(); ++k)
        if (!p[k].is_zero()) out[i][k] += e.coeff * p[k];
    }
  return out;
}

std::vector<Functional> integrals_on(const FinDimHopf& C, Side side) {
  const std::size_t n = C.dim();
  // for every basis x and slot j: sum_k Delta(x)[j,k] h_k - delta_{j,1} h_x = 0
  std::vector<FinVec> rows;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<FinVec> eq(n, FinVec(n));
    for (const auto& e : C.coproduct(x)) {
      if (side == Side::Left)
        eq[e.left][e.right] += e.coeff;
      else
        eq[e.right][e.left] += e.coeff;
    }
    eq[C.unit()][x] -= CycloScalar(1);
    for (auto& r : eq) {
      bool nonzero = false;
      for (const auto& c : r) nonzero = nonzero || !c.is_zero();
      if (nonzero) rows.push_back(std::move(r));
    }
  }
  return nullspace(std::move(rows), n);
}

std::vector<Functional> left_integrals(const FinDimHopf& C) { return integrals_on(C, Side::Left); }
std::vector<Functional> right_integrals(const FinDimHopf& C) { return integrals_on(C, Side::Right); }

std::vector<FinVec> integrals_in(const FinDimHopf& C, Side side) {
  const std::size_t n = C.dim();
  std::vector<FinVec> rows;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<FinVec> eq(n, FinVec(n));
    for (std::size_t k = 0; k < n; ++k) {
      const SparseVec& p = side == Side::Left ? C.product(x, k) : C.product(k, x);
      for (const auto& [j, c] : p) eq[j][k] += c;
      eq[k][k] -= C.counit(x);
    }
    for (auto& r : eq) {
      bool nonzero = false;
      for (const auto& c : r) nonzero = nonzero || !c.is_zero();
      if (nonzero) rows.push_back(std::move(r));
    }
  }
  return nullspace(std::move(rows), n);
}

FinVec normalize_at(FinVec v, std::size_t i) {
  if (v.at(i).is_zero()) throw std::invalid_argument("normalize_at: zero entry");
  const CycloScalar s = v[i].inv();
  for (auto& x : v) x *= s;
  return v;
}

Report verify_integrals() {
  Report rep("integrals");
  auto C = build_af();
  const FinDimHopf& F = *C;
  const std::size_t b2c2 = F.index(F.presentation().parse("b^2*c^2").terms().begin()->first);

  auto left = left_integrals(F);
  auto right = right_integrals(F);
  Check& dims = rep.add("integrals on A(F) form a line", "left and right solution spaces are 1-dimensional");
  dims.expect(left.size() == 1, [&] { return "left dimension " + std::to_string(left.size()); });
  dims.expect(right.size() == 1, [&] { return "right dimension " + std::to_string(right.size()); });
  if (left.size() != 1 || right.size() != 1) return rep;

  FinVec hl = normalize_at(left[0], b2c2);
  FinVec hr = normalize_at(right[0], b2c2);
  rep.add("unimodularity", "left integrals on A(F) equal right integrals").expect(hl == hr);

  Check& pattern = rep.add("delta pattern of the integral", "h(a^p b^r c^s) = z delta_p0 delta_r2 delta_s2");
  for (std::size_t i = 0; i < F.dim(); ++i) {
    const CycloScalar expected = i == b2c2 ? CycloScalar(1) : CycloScalar(0);
    pattern.expect(hl[i] == expected, [&] { return "h(" + F.label(i) + ") = " + hl[i].to_string(); });
  }
  rep.add("no Haar measure", "h(1) = 0 for every integral on A(F)").expect(hl[F.unit()].is_zero());

  auto inl = integrals_in(F, Side::Left);
  auto inr = integrals_in(F, Side::Right);
  const FinVec lambda_l = F.to_vec(F.presentation().parse("(1 + a + a^2)*b^2*c^2"));
  const FinVec lambda_r = F.to_vec(F.presentation().parse("b^2*c^2*(1 + a + a^2)"));
  Check& lam = rep.add("integrals in A(F)", "left span (1+a+a^2)b^2c^2, right span b^2c^2(1+a+a^2)");
  lam.expect(inl.size() == 1, [&] { return "left dimension " + std::to_string(inl.size()); });
  lam.expect(inr.size() == 1, [&] { return "right dimension " + std::to_string(inr.size()); });
  if (inl.size() == 1 && inr.size() == 1) {
    lam.expect(normalize_at(inl[0], b2c2) == lambda_l, [&] { return "left: " + F.format(normalize_at(inl[0], b2c2)); });
    lam.expect(normalize_at(inr[0], b2c2) == lambda_r, [&] { return "right: " + F.format(normalize_at(inr[0], b2c2)); });
  }
  Check& direct = rep.add("Lambda_L and Lambda_R satisfy the defining identities", "x L = eps(x) L, R x = eps(x) R");
  for (std::size_t i = 0; i < F.dim(); ++i) {
    FinVec el = lambda_l, er = lambda_r;
    for (auto& x : el) x *= F.counit(i);
    for (auto& x : er) x *= F.counit(i);
    direct.expect(F.mul(F.basis_vec(i), lambda_l) == el && F.mul(lambda_r, F.basis_vec(i)) == er,
                  [&] { return F.label(i); });
  }
  rep.add("A(F) is not semisimple", "eps(Lambda_L) = 0").expect(F.apply_counit(lambda_l).is_zero());
  rep.add("left and right integrals in A(F) are not proportional", "rank{Lambda_L, Lambda_R} = 2")
      .expect(rank(std::vector<FinVec>{lambda_l, lambda_r}) == 2);
  return rep;
}

Report verify_borel_quotients() {
  Report rep("borel-quotients");
  auto Hp = build_hplus();
  auto Hm = build_hminus();
  const std::size_t n = Hp->dim();
  const HopfPresentation& Pm = Hm->presentation();
  const NCPoly a = Pm.gen("a"), c = Pm.gen("c");

  // phi(a^p b^r) = a^p c^r, multiplicative; psi(a^p b^r) = c^r a^{2p}, anti-multiplicative.
  std::vector<FinVec> phi(n), psi(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Word& w = Hp->basis()[i];
    const std::size_t p = w.count(0), r = w.count(1);
    NCPoly x = Pm.one(), y = Pm.one();
    for (std::size_t k = 0; k < p; ++k) x = Pm.mul(x, a);
    for (std::size_t k = 0; k < r; ++k) x = Pm.mul(x, c);
    for (std::size_t k = 0; k < r; ++k) y = Pm.mul(y, c);
    for (std::size_t k = 0; k < 2 * p; ++k) y = Pm.mul(y, a);
    phi[i] = Hm->to_vec(x);
    psi[i] = Hm->to_vec(y);
  }
  auto apply = [&](const std::vector<FinVec>& m, const SparseVec& v) {
    FinVec out(n);
    for (const auto& [i, ci] : v)
      for (std::size_t k = 0; k < n; ++k) out[k] += ci * m[i][k];
    return out;
  };
  auto apply2 = [&](const std::vector<FinVec>& m, std::size_t i, bool flip) {
    FinVec out(n * n);
    for (const auto& e : Hp->coproduct(i))
      for (std::size_t x = 0; x < n; ++x) {
        if (m[e.left][x].is_zero()) continue;
        for (std::size_t y = 0; y < n; ++y) {
          if (m[e.right][y].is_zero()) continue;
          const CycloScalar c2 = e.coeff * m[e.left][x] * m[e.right][y];
          if (flip)
            out[y * n + x] += c2;
          else
            out[x * n + y] += c2;
        }
      }
    return out;
  };

  Check& alg = rep.add("a->a, b->c is an algebra isomorphism H+ -> H-", "phi(xy) = phi(x)phi(y), bijective");
  Check& coalg = rep.add("a->a, b->c is a coalgebra anti-isomorphism", "Delta phi = flip (phi (x) phi) Delta");
  Check& alg2 = rep.add("a->a^2, b->c is an algebra anti-isomorphism", "psi(xy) = psi(y)psi(x), bijective");
  Check& coalg2 = rep.add("a->a^2, b->c is a coalgebra isomorphism", "Delta psi = (psi (x) psi) Delta");
  alg.expect(rank(phi) == n);
  alg2.expect(rank(psi) == n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      alg.expect(apply(phi, Hp->product(i, j)) == Hm->mul(phi[i], phi[j]),
                 [&] { return Hp->label(i) + " * " + Hp->label(j); });
      alg2.expect(apply(psi, Hp->product(i, j)) == Hm->mul(psi[j], psi[i]),
                  [&] { return Hp->label(i) + " * " + Hp->label(j); });
    }
    coalg.expect(Hm->comul(phi[i]) == apply2(phi, i, true), [&] { return Hp->label(i); });
    coalg.expect(Hm->apply_counit(phi[i]) == Hp->counit(i), [&] { return "counit " + Hp->label(i); });
    coalg2.expect(Hm->comul(psi[i]) == apply2(psi, i, false), [&] { return Hp->label(i); });
    coalg2.expect(Hm->apply_counit(psi[i]) == Hp->counit(i), [&] { return "counit " + Hp->label(i); });
  }
  Check& nz = rep.add("b^2 is nonzero in H+", "basis fact used against a Hopf isomorphism");
  nz.expect(Hp->find(Hp->presentation().parse("b^2").terms().begin()->first).has_value());
  return rep;
}

}  // namespace qgalois
