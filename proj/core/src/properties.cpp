#include "qgalois/properties.hpp"

#include "qgalois/algebras.hpp"
#include "qgalois/qcalc.hpp"

#include <random>

namespace qgalois {

namespace {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  CycloScalar scalar() {
    return CycloScalar(mpq_class(range(-9, 9), range(1, 5)), mpq_class(range(-9, 9), range(1, 5)));
  }

  CycloScalar nonzero() {
    CycloScalar x;
    while (x.is_zero()) x = scalar();
    return x;
  }

  Word word(std::size_t letters, std::size_t max_len) {
    Word w;
    const long len = range(0, static_cast<long>(max_len));
    for (long i = 0; i < len; ++i) w *= Word::letter(static_cast<Letter>(range(0, static_cast<long>(letters) - 1)));
    return w;
  }

  NCPoly poly(const AlphabetPtr& alpha, std::size_t max_terms, std::size_t max_len) {
    NCPoly p(alpha);
    const long terms = range(1, static_cast<long>(max_terms));
    for (long i = 0; i < terms; ++i) p.add_term(word(alpha->size(), max_len), scalar());
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

Report verify_properties(std::uint64_t seed, unsigned per_family) {
  Report rep("properties");
  Gen g(seed);
  const std::string tag = " (seed " + std::to_string(seed) + ")";

  Check& field = rep.add("field axioms" + tag, "ring laws, inverses, conjugation and norm on random triples");
  for (unsigned n = 0; n < per_family; ++n) {
    const CycloScalar x = g.scalar(), y = g.scalar(), z = g.scalar();
    bool ok = (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) && x * y == y * x && x + y == y + x &&
              x * (y + z) == x * y + x * z && x - x == CycloScalar() && x * CycloScalar(1) == x &&
              (x * y).conj() == x.conj() * y.conj() && (x * y).norm() == x.norm() * y.norm();
    if (!x.is_zero()) ok = ok && x * x.inv() == CycloScalar(1) && (y / x) * x == y;
    field.expect(ok, [&] { return x.to_string() + ", " + y.to_string() + ", " + z.to_string(); });
  }
  field.expect(CycloScalar::omega() * CycloScalar::omega() + CycloScalar::omega() + CycloScalar(1) == CycloScalar());

  Check& pascal = rep.add("q-Pascal and q-Lucas" + tag, "both recursions, symmetry, and [n,k]_w = C(n/3,k/3)[n%3,k%3]_w");
  for (unsigned c = 0; c < per_family; ++c) {
    const long n = g.range(1, 40), k = g.range(0, n);
    auto qb = [](long m, long i) { return i > m ? IntPoly() : qbinom(m, i); };
    const IntPoly lhs = qbinom(n, k);
    IntPoly r1 = IntPoly::monomial(static_cast<std::size_t>(k)) * qb(n - 1, k);
    IntPoly r2 = qb(n - 1, k);
    if (k > 0) {
      r1 += qbinom(n - 1, k - 1);
      r2 += IntPoly::monomial(static_cast<std::size_t>(n - k)) * qbinom(n - 1, k - 1);
    }
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n / 3), static_cast<unsigned long>(k / 3));
    const CycloScalar lucas =
        (k % 3 > n % 3) ? CycloScalar() : CycloScalar(mpq_class(binom), 0) * qbinom_at_omega(n % 3, k % 3);
    pascal.expect(lhs == r1 && lhs == r2 && lhs == qbinom(n, n - k) && qbinom_at_omega(n, k) == lucas,
                  [&] { return "n = " + std::to_string(n) + ", k = " + std::to_string(k); });
  }

  Check& theorem = rep.add("q-binomial theorem" + tag, "(u x + v y)^k = sum_i [k,i]_q v^i u^{k-i} y^i x^{k-i} in the quantum plane, k <= 6");
  {
    auto Q = algebra("qplane");
    const Letter X = Q->alphabet()->at("x"), Y = Q->alphabet()->at("y");
    for (unsigned c = 0; c < per_family; ++c) {
      const long k = g.range(0, 6);
      const CycloScalar u = g.scalar(), v = g.scalar();
      const NCPoly base = Q->gen("x") * u + Q->gen("y") * v;
      NCPoly lhs = Q->one();
      for (long i = 0; i < k; ++i) lhs = Q->mul(lhs, base);
      NCPoly rhs(Q->alphabet());
      for (long i = 0; i <= k; ++i) {
        CycloScalar coeff = qbinom_at_omega(k, i);
        for (long j = 0; j < i; ++j) coeff *= v;
        for (long j = 0; j < k - i; ++j) coeff *= u;
        rhs += Q->monomial(Word::power(Y, static_cast<std::size_t>(i)) * Word::power(X, static_cast<std::size_t>(k - i))) * coeff;
      }
      rhs = Q->nf(rhs);
      theorem.expect(lhs == rhs, [&] { return "k = " + std::to_string(k); });
    }
  }

  auto slq2 = hopf("slq2");
  auto af = hopf("af");
  Check& idem = rep.add("normal forms are idempotent and linear" + tag, "nf(nf p) = nf p, nf(u p + v r) = u nf p + v nf r, output irreducible");
  for (unsigned c = 0; c < per_family; ++c) {
    const auto& H = (c % 2 == 0) ? *slq2 : *af;
    const NCPoly p = g.poly(H.alphabet(), 4, 6), r = g.poly(H.alphabet(), 4, 6);
    const CycloScalar u = g.scalar(), v = g.scalar();
    const NCPoly np = H.nf(p);
    bool ok = H.nf(np) == np && H.nf(p * u + r * v) == np * u + H.nf(r) * v;
    for (const auto& [w, coeff] : np.terms()) ok = ok && H.rs().is_irreducible(w);
    idem.expect(ok, [&] { return H.name() + ": " + p.to_string(); });
  }

  Check& mult = rep.add("normal forms are multiplicative" + tag, "nf(p r) = nf(nf(p) nf(r))");
  for (unsigned c = 0; c < per_family; ++c) {
    const auto& H = (c % 2 == 0) ? *slq2 : *af;
    const NCPoly p = g.poly(H.alphabet(), 3, 4), r = g.poly(H.alphabet(), 3, 4);
    mult.expect(H.nf(p * r) == H.nf(H.nf(p) * H.nf(r)), [&] { return H.name() + ": " + p.to_string() + " ; " + r.to_string(); });
  }

  Check& axioms = rep.add("Hopf axioms on random elements" + tag, "coassociativity, counit and antipode laws");
  const std::vector<HopfPtr> algebras = {slq2, af, hopf("borel_plus"), hopf("hplus"), hopf("hminus")};
  for (unsigned c = 0; c < per_family; ++c) {
    const auto& H = *algebras[c % algebras.size()];
    const NCPoly x = H.nf(g.poly(H.alphabet(), 3, 3));
    const auto failures = hopf_axiom_failures(H, x);
    axioms.expect(failures.empty(), [&] { return H.name() + ": " + failures.front(); });
  }

  Check& hom = rep.add("Delta and eps multiplicative, S anti-multiplicative" + tag, "random pairs");
  for (unsigned c = 0; c < per_family; ++c) {
    const auto& H = *algebras[c % algebras.size()];
    const NCPoly x = H.nf(g.poly(H.alphabet(), 2, 3)), y = H.nf(g.poly(H.alphabet(), 2, 3));
    const NCPoly xy = H.mul(x, y);
    const bool ok = H.coproduct(xy) == tensor_product(H.coproduct(x), H.coproduct(y), H.rs(), H.rs()) &&
                    H.counit(xy) == H.counit(x) * H.counit(y) && H.antipode(xy) == H.mul(H.antipode(y), H.antipode(x));
    hom.expect(ok, [&] { return H.name() + ": " + H.format(x) + " ; " + H.format(y); });
  }
  return rep;
}

}  // namespace qgalois
