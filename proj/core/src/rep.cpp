#include "qgalois/rep.hpp"

#include "qgalois/galois.hpp"

#include <mutex>
#include <stdexcept>

namespace qgalois {

ExactMatrix rho_J() {
  ExactMatrix m(3, 3);
  m(0, 2) = 1;
  m(1, 0) = 1;
  m(2, 1) = 1;
  return m;
}

ExactMatrix rho_Q() {
  ExactMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i) m(i, i) = qpow(-static_cast<long>(i));
  return m;
}

ExactMatrix rho_N() {
  ExactMatrix m(3, 3);
  m(1, 0) = 1;
  m(2, 1) = 1;
  return m;
}

ExactMatrix rho_generator(const std::string& name) {
  const ExactMatrix I = ExactMatrix::identity(3);
  if (name == "a") return kron(kron(rho_J(), I), I);
  if (name == "b") return kron(kron(rho_Q(), rho_N()), I);
  if (name == "c") return kron(kron(rho_Q(), I), rho_N());
  throw std::invalid_argument("rho: no generator '" + name + "'");
}

namespace {

ExactMatrix rho_word(const Word& w) {
  const Alphabet& al = *findim("af")->presentation().alphabet();
  static const std::vector<ExactMatrix> gens = {rho_generator(al.name(0)), rho_generator(al.name(1)),
                                                rho_generator(al.name(2))};
  ExactMatrix m = ExactMatrix::identity(27);
  for (std::size_t i = 0; i < w.size(); ++i) m = m * gens.at(w[i]);
  return m;
}

ExactMatrix rho_poly_unreduced(const NCPoly& p) {
  ExactMatrix m(27, 27);
  for (const auto& [w, c] : p.terms()) m += rho_word(w) * c;
  return m;
}

}  // namespace

const std::vector<ExactMatrix>& rho_basis() {
  static const std::vector<ExactMatrix> images = [] {
    std::vector<ExactMatrix> out;
    for (const Word& w : findim("af")->basis()) out.push_back(rho_word(w));
    return out;
  }();
  return images;
}

ExactMatrix rho(const FinVec& x) {
  ExactMatrix m(27, 27);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) m += rho_basis()[i] * x[i];
  return m;
}

ExactMatrix rho(const NCPoly& x) { return rho(findim("af")->to_vec(x)); }

CycloScalar h_klm(const ExactMatrix& m, unsigned k, unsigned l, unsigned n) { return m(9 * k + 3 * l + n, 0); }

Report verify_rho() {
  Report rep("rho");
  auto F = findim("af");
  const HopfPresentation& P = F->presentation();
  Check& rel = rep.add("rho respects the A(F) rules", "rho(lhs) = rho(rhs) for every rewrite rule");
  for (const Rule& r : P.rs().rules())
    rel.expect(rho_word(r.lhs) == rho_poly_unreduced(r.rhs),
               [&] { return r.lhs.to_string(*P.alphabet()) + " -> " + P.format(r.rhs); });

  Check& ex = rep.add("rho generator identities", "rho(a)^3 = I, rho(b)rho(a) = q^-1 rho(a)rho(b), rho(b)^3 = 0");
  const ExactMatrix A = rho_generator("a"), B = rho_generator("b"), C = rho_generator("c");
  ex.expect(matrix_power(A, 3) == ExactMatrix::identity(27));
  ex.expect(B * A == (A * B) * qpow(-1));
  ex.expect(matrix_power(B, 3).is_zero());
  ex.expect(matrix_power(C, 3).is_zero());
  ex.expect(rho(P.parse("d")) == rho_poly_unreduced(P.parse("a^2 + q*a^2*b*c")));

  Check& mult = rep.add("rho is an algebra map", "rho(xy) = rho(x)rho(y) on all 27 x 27 basis pairs");
  const auto& imgs = rho_basis();
  for (std::size_t i = 0; i < F->dim(); ++i)
    for (std::size_t j = 0; j < F->dim(); ++j) {
      FinVec prod(F->dim());
      for (const auto& [k, c] : F->product(i, j)) prod[k] += c;
      mult.expect(rho(prod) == imgs[i] * imgs[j], [&] { return F->label(i) + " * " + F->label(j); });
    }
  mult.expect(imgs[F->unit()] == ExactMatrix::identity(27));
  rep.append(faithfulness_check());
  return rep;
}

Report faithfulness_check() {
  Report rep("rho-faithful");
  auto F = findim("af");
  const auto& imgs = rho_basis();
  std::vector<FinVec> rows;
  for (const auto& m : imgs) rows.push_back(m.entries());
  rep.add("rho is faithful", "the 27 basis images are linearly independent").expect(rank(rows) == imgs.size() && imgs.size() == 27);

  Check& delta = rep.add("h^{klm} separates the basis", "h^{klm}(rho(a^p b^r c^s)) = delta_pk delta_rl delta_ms");
  const Alphabet& al = *F->presentation().alphabet();
  const Letter A = al.at("a"), B = al.at("b"), C = al.at("c");
  for (std::size_t i = 0; i < F->dim(); ++i) {
    const Word& w = F->basis()[i];
    const unsigned p = static_cast<unsigned>(w.count(A)), r = static_cast<unsigned>(w.count(B)),
                   s = static_cast<unsigned>(w.count(C));
    for (unsigned k = 0; k < 3; ++k)
      for (unsigned l = 0; l < 3; ++l)
        for (unsigned m = 0; m < 3; ++m) {
          const CycloScalar want = (p == k && r == l && s == m) ? CycloScalar(1) : CycloScalar(0);
          delta.expect(h_klm(imgs[i], k, l, m) == want, [&] {
            return "h^" + std::to_string(k) + std::to_string(l) + std::to_string(m) + "(" + F->label(i) + ")";
          });
        }
  }
  return rep;
}

ExactMatrix m3_x_matrix() {
  ExactMatrix m(3, 3);
  m(0, 1) = 1;
  m(1, 2) = 1;
  m(2, 0) = 1;
  return m;
}

ExactMatrix m3_y_matrix() {
  ExactMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i) m(i, i) = qpow(static_cast<long>(i));
  return m;
}

Report verify_m3() {
  Report rep("m3");
  auto M = algebra("m3");
  auto basis = M->finite_basis();
  Check& dim = rep.add("M(3) is 9-dimensional", "basis 1, x, y, x^2, xy, y^2, x^2y, xy^2, x^2y^2");
  const std::vector<std::string> names = {"1", "x", "y", "x^2", "x*y", "y^2", "x^2*y", "x*y^2", "x^2*y^2"};
  dim.expect(basis && basis->size() == 9);
  if (basis && basis->size() == 9)
    for (std::size_t i = 0; i < 9; ++i)
      dim.expect(M->monomial((*basis)[i]) == M->parse(names[i]), [&] { return names[i]; });

  Check& rel = rep.add("matrix model satisfies the relations", "XY = qYX, X^3 = Y^3 = I");
  const ExactMatrix X = m3_x_matrix(), Y = m3_y_matrix();
  rel.expect(X * Y == (Y * X) * qpow(1));
  rel.expect(matrix_power(X, 3) == ExactMatrix::identity(3));
  rel.expect(matrix_power(Y, 3) == ExactMatrix::identity(3));
  rel.expect(M->parse("y*x") == M->parse("q^-1*x*y"));
  rel.expect(M->parse("x^3") == M->one());

  Check& iso = rep.add("matrix model is an isomorphism", "images of the 9 basis words are independent and multiplicative");
  if (basis && basis->size() == 9) {
    const Alphabet& al = *M->alphabet();
    auto image = [&](const Word& w) {
      ExactMatrix m = ExactMatrix::identity(3);
      for (std::size_t i = 0; i < w.size(); ++i) m = m * (al.name(w[i]) == "x" ? X : Y);
      return m;
    };
    std::vector<FinVec> rows;
    for (const Word& w : *basis) rows.push_back(image(w).entries());
    iso.expect(rank(rows) == 9);
    for (const Rule& r : M->rs().rules()) {
      ExactMatrix rhs(3, 3);
      for (const auto& [w, c] : r.rhs.terms()) rhs += image(w) * c;
      iso.expect(image(r.lhs) == rhs, [&] { return r.lhs.to_string(al); });
    }
  }
  return rep;
}

// ---------------------------------------------------------------- corepresentation

namespace {

struct CorepData {
  AlgebraPtr M;
  FinDimPtr F;
  std::vector<Word> basis;
  TensorPoly dx, dy;
};

const CorepData& corep_data() {
  static const CorepData data = [] {
    CorepData d;
    d.M = algebra("m3");
    d.F = findim("af");
    d.basis = *d.M->finite_basis();
    const HopfPresentation& F = d.F->presentation();
    const NCPoly x = d.M->gen("x"), y = d.M->gen("y");
    d.dx = TensorPoly::pure(x, F.gen("a")) + TensorPoly::pure(y, F.gen("c"));
    d.dy = TensorPoly::pure(x, F.gen("b")) + TensorPoly::pure(y, F.nf(F.gen("d")));
    return d;
  }();
  return data;
}

TensorPoly corep_coaction(const Word& w) {
  const CorepData& d = corep_data();
  const Alphabet& al = *d.M->alphabet();
  TensorPoly t = TensorPoly::pure(d.M->one(), d.F->presentation().one());
  for (std::size_t i = 0; i < w.size(); ++i)
    t = tensor_product(t, al.name(w[i]) == "x" ? d.dx : d.dy, d.M->rs(), d.F->presentation().rs());
  return t;
}

TensorPoly corep_coaction(const NCPoly& p) {
  const CorepData& d = corep_data();
  TensorPoly t(d.M->alphabet(), d.F->presentation().alphabet());
  for (const auto& [w, c] : p.terms()) t += corep_coaction(w) * c;
  return t;
}

CorepMatrix parse_matrix(const std::vector<std::vector<const char*>>& rows) {
  const HopfPresentation& F = findim("af")->presentation();
  CorepMatrix out;
  for (const auto& row : rows) {
    std::vector<NCPoly> r;
    for (const char* s : row) r.push_back(F.parse(s));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

const CorepMatrix& corep_matrix() {
  static const CorepMatrix n = [] {
    const CorepData& d = corep_data();
    const HopfPresentation& F = d.F->presentation();
    const std::size_t dim = d.basis.size();
    CorepMatrix out(dim, std::vector<NCPoly>(dim, NCPoly(F.alphabet())));
    for (std::size_t i = 0; i < dim; ++i) {
      const TensorPoly t = corep_coaction(d.basis[i]);
      for (const auto& [k, c] : t.terms()) {
        std::size_t j = 0;
        while (j < dim && d.basis[j] != k.first) ++j;
        if (j == dim) throw std::logic_error("corep: left slot not in the m3 basis");
        out[j][i] += F.monomial(k.second) * c;
      }
    }
    return out;
  }();
  return n;
}

CorepMatrix corep_reference() {
  return parse_matrix({
      {"1", "0", "0", "0", "0", "0", "a^2*(b+q^2*c^2)", "a*(b^2+q^2*c-q*b*c^2)", "0"},
      {"0", "a", "b", "0", "0", "0", "0", "0", "a^2*(b^2-q*c)"},
      {"0", "c", "d", "0", "0", "0", "0", "0", "a*(q^2*b^2*c+q*c^2-b)"},
      {"0", "0", "0", "a^2", "a*b", "b^2", "0", "0", "0"},
      {"0", "0", "0", "-q^2*a*c", "1-b*c", "-q^2*b*d", "0", "0", "0"},
      {"0", "0", "0", "c^2", "c*d", "d^2", "0", "0", "0"},
      {"0", "0", "0", "0", "0", "0", "a", "-b", "0"},
      {"0", "0", "0", "0", "0", "0", "-c", "d", "0"},
      {"0", "0", "0", "0", "0", "0", "0", "0", "1"},
  });
}

CorepMatrix corep_n1_reference() {
  return parse_matrix({
      {"1", "a^2*(b+q^2*c^2)", "a*(b^2+q^2*c-q*b*c^2)"},
      {"0", "a", "-b"},
      {"0", "-c", "d"},
  });
}

CorepMatrix corep_n2_reference() {
  return parse_matrix({
      {"a", "b", "a^2*(b^2-q*c)"},
      {"c", "d", "a*(q^2*b^2*c+q*c^2-b)"},
      {"0", "0", "1"},
  });
}

CorepMatrix restrict_corep(const CorepMatrix& n, const std::vector<std::size_t>& idx) {
  CorepMatrix out;
  for (std::size_t j : idx) {
    std::vector<NCPoly> row;
    for (std::size_t i : idx) row.push_back(n.at(j).at(i));
    out.push_back(std::move(row));
  }
  return out;
}

const std::vector<std::size_t>& corep_block_n1() {
  static const std::vector<std::size_t> v{0, 6, 7};
  return v;
}
const std::vector<std::size_t>& corep_block_n2() {
  static const std::vector<std::size_t> v{1, 2, 8};
  return v;
}
const std::vector<std::size_t>& corep_block_middle() {
  static const std::vector<std::size_t> v{3, 4, 5};
  return v;
}

Report corep_axioms_and_reduction() {
  Report rep("corep");
  const CorepData& d = corep_data();
  const FinDimHopf& F = *d.F;
  const HopfPresentation& FP = F.presentation();
  const CorepMatrix& N = corep_matrix();
  const std::size_t n = N.size();
  const std::vector<std::string> e = {"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8", "e9"};

  Check& rel = rep.add("coaction respects the M(3) relations", "rule sides have equal images in M(3) (x) A(F)");
  for (const Rule& r : d.M->rs().rules())
    rel.expect(corep_coaction(r.lhs) == corep_coaction(r.rhs), [&] { return r.lhs.to_string(*d.M->alphabet()); });

  Check& ref = rep.add("corepresentation matrix", "all 81 entries of the displayed matrix");
  const CorepMatrix want = corep_reference();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      ref.expect(N[j][i] == want[j][i], [&] {
        return "N(" + e[j] + "," + e[i] + ") = " + FP.format(N[j][i]) + ", expected " + FP.format(want[j][i]);
      });

  Check& comul = rep.add("corepresentation axioms", "Delta(N_ji) = sum_k N_jk (x) N_ki, eps(N_ji) = delta_ji");
  std::vector<std::vector<FinVec>> V(n, std::vector<FinVec>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) V[j][i] = F.to_vec(N[j][i]);
  const std::size_t dim = F.dim();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      FinVec rhs(dim * dim);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t x = 0; x < dim; ++x) {
          if (V[j][k][x].is_zero()) continue;
          for (std::size_t y = 0; y < dim; ++y)
            if (!V[k][i][y].is_zero()) rhs[x * dim + y] += V[j][k][x] * V[k][i][y];
        }
      const CycloScalar eps = F.apply_counit(V[j][i]);
      comul.expect(F.comul(V[j][i]) == rhs && eps == CycloScalar(i == j ? 1 : 0),
                   [&] { return "N(" + e[j] + "," + e[i] + ")"; });
    }

  Check& inv = rep.add("N is invertible with inverse S(N)", "sum_k S(N_jk) N_ki = delta_ji = sum_k N_jk S(N_ki)");
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      FinVec l(dim), r(dim);
      for (std::size_t k = 0; k < n; ++k) {
        const FinVec a = F.mul(F.apply_antipode(V[j][k]), V[k][i]);
        const FinVec b = F.mul(V[j][k], F.apply_antipode(V[k][i]));
        for (std::size_t x = 0; x < dim; ++x) {
          l[x] += a[x];
          r[x] += b[x];
        }
      }
      FinVec want_v = F.zero();
      if (i == j) want_v[F.unit()] = 1;
      inv.expect(l == want_v && r == want_v, [&] { return "(" + e[j] + "," + e[i] + ")"; });
    }

  auto subcomodule = [&](const std::vector<std::size_t>& block) {
    bool ok = true;
    for (std::size_t i : block)
      for (std::size_t j = 0; j < n; ++j) {
        bool inside = false;
        for (std::size_t b : block) inside = inside || b == j;
        if (!inside && !N[j][i].is_zero()) ok = false;
      }
    return ok;
  };
  Check& subs = rep.add("spans {e1,e7,e8}, {e2,e3,e9}, {e4,e5,e6} are subcomodules", "off-block entries of their columns vanish");
  subs.expect(subcomodule(corep_block_n1()), [] { return std::string("{e1,e7,e8}"); });
  subs.expect(subcomodule(corep_block_n2()), [] { return std::string("{e2,e3,e9}"); });
  subs.expect(subcomodule(corep_block_middle()), [] { return std::string("{e4,e5,e6}"); });

  Check& blocks = rep.add("restricted corepresentations", "N1 on {e1,e7,e8} and N2 on {e2,e3,e9} entry by entry");
  const CorepMatrix n1 = restrict_corep(N, corep_block_n1()), n2 = restrict_corep(N, corep_block_n2());
  const CorepMatrix w1 = corep_n1_reference(), w2 = corep_n2_reference();
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) {
      blocks.expect(n1[j][i] == w1[j][i], [&] { return "N1(" + std::to_string(j + 1) + "," + std::to_string(i + 1) + ") = " + FP.format(n1[j][i]); });
      blocks.expect(n2[j][i] == w2[j][i], [&] { return "N2(" + std::to_string(j + 1) + "," + std::to_string(i + 1) + ") = " + FP.format(n2[j][i]); });
    }
  return rep;
}

// ---------------------------------------------------------------- quantum plane

long bracket1(long n) { return n >= 0 ? n / 3 : -((-n + 2) / 3); }
long bracket2(long n) { return n - 3 * bracket1(n); }

bool bracket_identity(long k, long m, long u) {
  return bracket1(k + m) + bracket1(bracket2(k + m) + u) == bracket1(m + u) + bracket1(k + bracket2(m + u));
}

Report quantum_plane_coinvariants(unsigned bound) {
  Report rep("quantum-plane");
  auto Q = algebra("qplane");
  auto M = algebra("m3");
  const AlgebraMap& j = algebra_map("qplane", "slq2");
  const QuotientCoaction& co = coaction("slq2");
  const Letter X = Q->alphabet()->at("x"), Y = Q->alphabet()->at("y");
  const Letter PA = co.P().alphabet()->at("a"), PB = co.P().alphabet()->at("b");
  auto mono = [&](unsigned i, unsigned k) { return Q->monomial(Word::power(X, i) * Word::power(Y, k)); };

  Check& inv = rep.add("cubes of the quantum plane are coinvariant", "x^3i y^3j (x) 1 for i + j <= " + std::to_string(bound));
  for (unsigned i = 0; i <= bound; ++i)
    for (unsigned k = 0; i + k <= bound; ++k)
      inv.expect(co.is_coinvariant(j.apply(mono(3 * i, 3 * k))), [&] { return Q->format(mono(3 * i, 3 * k)); });

  Check& non = rep.add("non-cube monomials are not coinvariant", "x^i y^j, i + j <= " + std::to_string(3 * bound));
  Check& sub = rep.add("the embedded plane is a subcomodule", "Delta_R j(x^i y^j) has left slots in a, b only");
  for (unsigned i = 0; i <= 3 * bound; ++i)
    for (unsigned k = 0; i + k <= 3 * bound; ++k) {
      const NCPoly p = j.apply(mono(i, k));
      const bool cube = i % 3 == 0 && k % 3 == 0;
      if (!cube) non.expect(!co.is_coinvariant(p), [&] { return Q->format(mono(i, k)); });
      const TensorPoly t = co(p);
      bool ok = true;
      for (const auto& [key, c] : t.terms()) ok = ok && key.first.count(PA) + key.first.count(PB) == key.first.size();
      sub.expect(ok, [&] { return Q->format(mono(i, k)); });
    }

  Check& ex = rep.add("quantum plane values", "x^3 coinvariant, x^2 not");
  ex.expect(co.is_coinvariant(j.apply(mono(3, 0))));
  ex.expect(!co.is_coinvariant(j.apply(mono(2, 0))));

  Check& brk = rep.add("bracket identity", "[k+m]_1 + [[k+m]_2+u]_1 = [m+u]_1 + [k+[m+u]_2]_1 for k, m, u in 0..5");
  for (long k = 0; k <= 5; ++k)
    for (long m = 0; m <= 5; ++m)
      for (long u = 0; u <= 5; ++u)
        brk.expect(bracket_identity(k, m, u), [&] { return std::to_string(k) + "," + std::to_string(m) + "," + std::to_string(u); });

  // Coordinates (p, r, k, l) <-> x^{3p+k} y^{3r+l}. The M(3) factor is
  // multiplied in M(3), which supplies the scalar q^{-lm}.
  struct Coord {
    long p, r, k, l;
  };
  const Letter MX = M->alphabet()->at("x"), MY = M->alphabet()->at("y");
  auto mono_m = [&](long k, long l) {
    return M->monomial(Word::power(MX, static_cast<std::size_t>(k)) * Word::power(MY, static_cast<std::size_t>(l)));
  };
  auto crossed = [&](const Coord& a, const Coord& b, CycloScalar& c) {
    const NCPoly prod = M->mul(mono_m(a.k, a.l), mono_m(b.k, b.l));
    const Coord out{a.p + b.p + bracket1(a.k + b.k), a.r + b.r + bracket1(a.l + b.l), bracket2(a.k + b.k),
                    bracket2(a.l + b.l)};
    if (prod.size() != 1 || prod.terms().begin()->first != mono_m(out.k, out.l).terms().begin()->first)
      throw std::logic_error("crossed product: unexpected M(3) product");
    c = prod.terms().begin()->second;
    return out;
  };
  std::vector<Coord> sample;
  for (long p = 0; p <= 1; ++p)
    for (long r = 0; r <= 1; ++r)
      for (long k = 0; k <= 2; ++k)
        for (long l = 0; l <= 2; ++l) sample.push_back({p, r, k, l});
  auto same = [](const Coord& a, const Coord& b) { return a.p == b.p && a.r == b.r && a.k == b.k && a.l == b.l; };

  Check& assoc = rep.add("crossed product rule is associative", "all triples with p, r in 0..1 and k, l in 0..2");
  for (const Coord& a : sample)
    for (const Coord& b : sample)
      for (const Coord& c : sample) {
        CycloScalar s1, s2, s3, s4;
        const Coord ab = crossed(a, b, s1);
        const Coord l = crossed(ab, c, s2);
        const Coord bc = crossed(b, c, s3);
        const Coord r = crossed(a, bc, s4);
        assoc.expect(same(l, r) && s1 * s2 == s3 * s4);
      }

  Check& agree = rep.add("crossed product rule agrees with the quantum plane", "x^{3p+k}y^{3r+l} products, scalar q^{-lm}");
  for (const Coord& a : sample)
    for (const Coord& b : sample) {
      CycloScalar s;
      const Coord c = crossed(a, b, s);
      const NCPoly lhs = Q->mul(mono(static_cast<unsigned>(3 * a.p + a.k), static_cast<unsigned>(3 * a.r + a.l)),
                                mono(static_cast<unsigned>(3 * b.p + b.k), static_cast<unsigned>(3 * b.r + b.l)));
      const NCPoly rhs = mono(static_cast<unsigned>(3 * c.p + c.k), static_cast<unsigned>(3 * c.r + c.l)) * s;
      agree.expect(lhs == rhs && s == qpow(-a.l * b.k), [&] { return Q->format(lhs) + " vs " + Q->format(rhs); });
    }
  return rep;
}

}  // namespace qgalois
