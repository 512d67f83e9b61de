#include "qgalois/algebras.hpp"

#include "qgalois/qcalc.hpp"

#include <functional>
#include <stdexcept>
#include <tuple>

namespace qgalois {

PresentedAlgebra::PresentedAlgebra(std::string name, std::shared_ptr<const ReductionSystem> rs)
    : name_(std::move(name)), rs_(std::move(rs)) {
  symbols_.alphabet = rs_->alphabet();
  auto keep = rs_;
  symbols_.reduce = [keep](const NCPoly& p) { return keep->normal_form(p); };
}

NCPoly PresentedAlgebra::gen(const std::string& name) const {
  if (auto it = symbols_.aliases.find(name); it != symbols_.aliases.end()) return it->second;
  return NCPoly::generator(alphabet(), name);
}

NCPoly PresentedAlgebra::parse(const std::string& text) const { return parse_poly(text, symbols_); }

std::pair<std::string, CycloScalar> PresentedAlgebra::display(const Word& w) const {
  if (display_) return display_(w);
  return {w.empty() ? std::string() : w.to_string(*alphabet()), CycloScalar(1)};
}

std::string PresentedAlgebra::format(const NCPoly& p, QStyle style) const {
  if (!display_) return rs_->format(p, style);
  std::vector<const NCPoly::Terms::value_type*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(),
                   [this](const auto* x, const auto* y) { return rs_->order().less(x->first, y->first); });
  std::vector<std::pair<CycloScalar, std::string>> terms;
  for (const auto* t : order) {
    auto [text, factor] = display_(t->first);
    terms.emplace_back(t->second * factor, text);
  }
  return format_terms(terms, style);
}

std::string format_tensor(const TensorPoly& t, const PresentedAlgebra& left, const PresentedAlgebra& right,
                          QStyle style) {
  std::vector<const TensorPoly::Terms::value_type*> order;
  for (const auto& x : t.terms()) order.push_back(&x);
  std::stable_sort(order.begin(), order.end(), [&](const auto* x, const auto* y) {
    if (x->first.first != y->first.first) return left.rs().order().less(x->first.first, y->first.first);
    return right.rs().order().less(x->first.second, y->first.second);
  });
  std::vector<std::pair<CycloScalar, std::string>> terms;
  for (const auto* x : order) {
    auto [l, fl] = left.display(x->first.first);
    auto [r, fr] = right.display(x->first.second);
    terms.emplace_back(x->second * fl * fr, (l.empty() ? "1" : l) + " (x) " + (r.empty() ? "1" : r));
  }
  return format_terms(terms, style);
}

std::string power_text(const std::string& name, long exponent) {
  if (exponent == 0) return {};
  if (exponent == 1) return name;
  return name + "^" + std::to_string(exponent);
}

void PresentedAlgebra::set_alias(const std::string& name, NCPoly value) { symbols_.aliases[name] = nf(value); }

void PresentedAlgebra::set_inverse(const std::string& name, NCPoly value) {
  symbols_.inverses[name] = nf(value);
}

std::optional<std::vector<Word>> PresentedAlgebra::finite_basis(std::size_t max_length) const {
  std::vector<Word> all{Word()};
  std::vector<Word> frontier{Word()};
  std::size_t len = 0;
  while (!frontier.empty()) {
    if (++len > max_length) return std::nullopt;
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (std::size_t l = 0; l < alphabet()->size(); ++l) {
        Word e = w * Word::letter(static_cast<Letter>(l));
        if (rs_->is_irreducible(e)) next.push_back(std::move(e));
      }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::stable_sort(all.begin(), all.end(), [this](const Word& a, const Word& b) { return rs_->order().less(a, b); });
  return all;
}

TensorPoly reduce_tensor(const TensorPoly& t, const ReductionSystem& left, const ReductionSystem& right) {
  TensorPoly out(common_alphabet(left.alphabet(), t.left_alphabet()),
                 common_alphabet(right.alphabet(), t.right_alphabet()));
  for (const auto& [k, c] : t.terms()) {
    NCPoly l = left.normal_form(k.first);
    NCPoly r = right.normal_form(k.second);
    for (const auto& [lw, lc] : l.terms())
      for (const auto& [rw, rc] : r.terms()) out.add_term(lw, rw, c * lc * rc);
  }
  return out;
}

TensorPoly tensor_product(const TensorPoly& x, const TensorPoly& y, const ReductionSystem& left,
                          const ReductionSystem& right) {
  return reduce_tensor(tensor_mul(x, y), left, right);
}

HopfPresentation::HopfPresentation(std::string name, std::shared_ptr<const ReductionSystem> rs,
                                   std::vector<TensorPoly> delta, std::vector<CycloScalar> eps,
                                   std::vector<NCPoly> antipode)
    : PresentedAlgebra(std::move(name), std::move(rs)),
      delta_(std::move(delta)),
      eps_(std::move(eps)),
      S_(std::move(antipode)) {
  const std::size_t n = alphabet()->size();
  if (delta_.size() != n || eps_.size() != n || S_.size() != n)
    throw std::invalid_argument("HopfPresentation: structure maps must be given on every generator");
  for (auto& d : delta_) d = reduce(d);
  for (auto& s : S_) s = nf(NCPoly(alphabet()) + s);
}

TensorPoly HopfPresentation::coproduct(const Word& w) const {
  if (w.empty()) {
    TensorPoly one(alphabet(), alphabet());
    one.add_term(Word(), Word(), CycloScalar(1));
    return one;
  }
  if (w.size() == 1) return delta_[w[0]];
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = delta_cache_.find(w.letters()); it != delta_cache_.end()) return it->second;
  }
  TensorPoly head = coproduct(w.sub(0, w.size() - 1));
  TensorPoly out = tensor_product(head, delta_[w[w.size() - 1]], rs(), rs());
  std::lock_guard<std::mutex> lock(mutex_);
  return delta_cache_.try_emplace(w.letters(), std::move(out)).first->second;
}

TensorPoly HopfPresentation::coproduct(const NCPoly& p) const {
  TensorPoly out(alphabet(), alphabet());
  for (const auto& [w, c] : p.terms()) out += coproduct(w) * c;
  return out;
}

CycloScalar HopfPresentation::counit(const Word& w) const {
  CycloScalar out(1);
  for (std::size_t i = 0; i < w.size() && !out.is_zero(); ++i) out *= eps_[w[i]];
  return out;
}

CycloScalar HopfPresentation::counit(const NCPoly& p) const {
  CycloScalar out;
  for (const auto& [w, c] : p.terms()) out += c * counit(w);
  return out;
}

NCPoly HopfPresentation::antipode(const Word& w) const {
  if (w.empty()) return one();
  if (w.size() == 1) return S_[w[0]];
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = S_cache_.find(w.letters()); it != S_cache_.end()) return it->second;
  }
  NCPoly out = mul(S_[w[w.size() - 1]], antipode(w.sub(0, w.size() - 1)));
  std::lock_guard<std::mutex> lock(mutex_);
  return S_cache_.try_emplace(w.letters(), std::move(out)).first->second;
}

NCPoly HopfPresentation::antipode(const NCPoly& p) const {
  NCPoly out(alphabet());
  for (const auto& [w, c] : p.terms()) out += antipode(w) * c;
  return out;
}

NCPoly HopfPresentation::multiply(const TensorPoly& t) const {
  NCPoly out(alphabet());
  for (const auto& [k, c] : t.terms()) out += nf(monomial(k.first * k.second)) * c;
  return out;
}

namespace {

using Triple = std::map<std::tuple<Word, Word, Word>, CycloScalar>;

void add_triple(Triple& t, const Word& x, const Word& y, const Word& z, const CycloScalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_tuple(x, y, z);
  auto [it, inserted] = t.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

}  // namespace

std::vector<std::string> hopf_axiom_failures(const HopfPresentation& H, const NCPoly& x_in) {
  std::vector<std::string> out;
  const NCPoly x = H.nf(NCPoly(H.alphabet()) + x_in);
  const std::string label = H.format(x);
  const TensorPoly dx = H.coproduct(x);

  Triple left, right;
  for (const auto& [k, c] : dx.terms()) {
    const TensorPoly d1 = H.coproduct(k.first);
    const TensorPoly d2 = H.coproduct(k.second);
    for (const auto& [k2, c2] : d1.terms()) add_triple(left, k2.first, k2.second, k.second, c * c2);
    for (const auto& [k2, c2] : d2.terms()) add_triple(right, k.first, k2.first, k2.second, c * c2);
  }
  if (left != right) out.push_back("coassociativity fails at " + label);

  NCPoly eps_left(H.alphabet()), eps_right(H.alphabet());
  NCPoly s_left(H.alphabet()), s_right(H.alphabet());
  for (const auto& [k, c] : dx.terms()) {
    eps_left += H.monomial(k.second) * (c * H.counit(k.first));
    eps_right += H.monomial(k.first) * (c * H.counit(k.second));
    s_left += H.mul(H.antipode(k.first), H.monomial(k.second)) * c;
    s_right += H.mul(H.monomial(k.first), H.antipode(k.second)) * c;
  }
  if (eps_left != x) out.push_back("left counit law fails at " + label);
  if (eps_right != x) out.push_back("right counit law fails at " + label);
  const NCPoly unit = NCPoly::constant(H.alphabet(), H.counit(x));
  if (s_left != unit) out.push_back("m(S(x)id)Delta != eta eps at " + label + ": got " + H.format(s_left));
  if (s_right != unit) out.push_back("m(id(x)S)Delta != eta eps at " + label + ": got " + H.format(s_right));
  return out;
}

std::vector<std::string> structure_map_failures(const HopfPresentation& H) {
  std::vector<std::string> out;
  for (const Rule& r : H.rs().rules()) {
    const std::string label = r.lhs.to_string(*H.alphabet());
    if (H.coproduct(r.lhs) != H.coproduct(r.rhs)) out.push_back("Delta does not respect rule " + label);
    if (H.counit(r.lhs) != H.counit(r.rhs)) out.push_back("epsilon does not respect rule " + label);
    if (H.antipode(r.lhs) != H.antipode(r.rhs)) out.push_back("S does not respect rule " + label);
  }
  return out;
}

AlgebraMap::AlgebraMap(AlgebraPtr source, AlgebraPtr target, std::vector<NCPoly> images)
    : src_(std::move(source)), dst_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != src_->alphabet()->size())
    throw std::invalid_argument("AlgebraMap: one image per source generator required");
  for (auto& im : images_) im = dst_->nf(NCPoly(dst_->alphabet()) + im);
}

NCPoly AlgebraMap::apply(const Word& w) const {
  if (w.empty()) return dst_->one();
  if (w.size() == 1) return images_[w[0]];
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = cache_.find(w.letters()); it != cache_.end()) return it->second;
  }
  NCPoly out = dst_->mul(apply(w.sub(0, w.size() - 1)), images_[w[w.size() - 1]]);
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.try_emplace(w.letters(), std::move(out)).first->second;
}

NCPoly AlgebraMap::apply(const NCPoly& p) const {
  NCPoly out(dst_->alphabet());
  for (const auto& [w, c] : p.terms()) out += apply(w) * c;
  return out;
}

TensorPoly AlgebraMap::apply_right(const TensorPoly& t) const {
  TensorPoly out(t.left_alphabet(), dst_->alphabet());
  for (const auto& [k, c] : t.terms())
  {
    const NCPoly image = apply(k.second);
    for (const auto& [w, c2] : image.terms()) out.add_term(k.first, w, c * c2);
  }
  return out;
}

TensorPoly AlgebraMap::apply_both(const TensorPoly& t) const {
  TensorPoly out(dst_->alphabet(), dst_->alphabet());
  for (const auto& [k, c] : t.terms()) {
    NCPoly l = apply(k.first);
    NCPoly r = apply(k.second);
    for (const auto& [lw, lc] : l.terms())
      for (const auto& [rw, rc] : r.terms()) out.add_term(lw, rw, c * lc * rc);
  }
  return out;
}

std::vector<std::string> AlgebraMap::relation_failures() const {
  std::vector<std::string> out;
  for (const Rule& r : src_->rs().rules())
    if (apply(r.lhs) != apply(r.rhs))
      out.push_back(src_->name() + " -> " + dst_->name() + " breaks rule " + r.lhs.to_string(*src_->alphabet()));
  return out;
}

namespace {

struct PresentationDef {
  std::string name;
  std::vector<std::string> letters;
  std::vector<unsigned> weights;
  std::vector<std::pair<std::string, std::string>> rules;
  std::vector<std::pair<std::string, std::string>> aliases;
  std::vector<std::pair<std::string, std::string>> inverses;
  // Hopf data, one entry per letter; empty for plain algebras.
  std::vector<std::string> delta;
  std::vector<long> eps;
  std::vector<std::string> antipode;
  PresentedAlgebra::DisplayFn display;
};

std::shared_ptr<const ReductionSystem> make_system(const PresentationDef& def) {
  AlphabetPtr alpha = Alphabet::make(def.letters);
  Symbols free_sym;
  free_sym.alphabet = alpha;
  std::vector<Rule> rules;
  for (const auto& [lhs_text, rhs_text] : def.rules) {
    NCPoly lhs = parse_poly(lhs_text, free_sym);
    if (lhs.size() != 1 || !lhs.terms().begin()->second.is_one())
      throw std::logic_error(def.name + ": rule left-hand side must be a word: " + lhs_text);
    rules.push_back(Rule{lhs.terms().begin()->first, NCPoly(alpha) + parse_poly(rhs_text, free_sym)});
  }
  auto rs = std::make_shared<const ReductionSystem>(alpha, std::move(rules), MonomialOrder(def.weights));
  ResolvabilityReport rep = check_resolvable(*rs);
  if (!rep.resolvable) throw std::logic_error(def.name + ": reduction system is not confluent");
  return rs;
}

void add_extras(PresentedAlgebra& A, const PresentationDef& def) {
  for (const auto& [n, text] : def.aliases) A.set_alias(n, A.parse(text));
  for (const auto& [n, text] : def.inverses) A.set_inverse(n, A.parse(text));
}

HopfPtr make_hopf(const PresentationDef& def) {
  auto rs = make_system(def);
  PresentedAlgebra scratch(def.name, rs);
  add_extras(scratch, def);
  std::vector<TensorPoly> delta;
  std::vector<CycloScalar> eps;
  std::vector<NCPoly> S;
  for (std::size_t i = 0; i < def.letters.size(); ++i) {
    delta.push_back(parse_tensor(def.delta[i], scratch.symbols(), scratch.symbols()));
    eps.emplace_back(def.eps[i]);
    S.push_back(scratch.parse(def.antipode[i]));
  }
  auto H = std::make_shared<HopfPresentation>(def.name, rs, std::move(delta), std::move(eps), std::move(S));
  add_extras(*H, def);
  if (def.display) H->set_display(def.display);
  std::vector<std::string> bad = structure_map_failures(*H);
  for (std::size_t i = 0; i < def.letters.size(); ++i) {
    auto f = hopf_axiom_failures(*H, H->monomial(Word::letter(static_cast<Letter>(i))));
    bad.insert(bad.end(), f.begin(), f.end());
  }
  if (!bad.empty()) throw std::logic_error(def.name + ": " + bad.front());
  return H;
}

AlgebraPtr make_algebra(const PresentationDef& def) {
  auto A = std::make_shared<PresentedAlgebra>(def.name, make_system(def));
  add_extras(*A, def);
  return A;
}

}  // namespace

namespace {

std::string join_powers(const std::vector<std::pair<std::string, long>>& parts) {
  std::string out;
  for (const auto& [n, e] : parts) {
    std::string t = power_text(n, e);
    if (t.empty()) continue;
    if (!out.empty()) out += "*";
    out += t;
  }
  return out;
}

// The word d^m b^k c^l is printed as b^k c^l d^m = q^{m(k+l)} d^m b^k c^l.
PresentedAlgebra::DisplayFn slq2_display(AlphabetPtr alpha) {
  return [alpha](const Word& w) -> std::pair<std::string, CycloScalar> {
    const std::size_t m = w.count(1), k = w.count(2), l = w.count(3);
    if (m > 0 && w == Word::power(1, m) * Word::power(2, k) * Word::power(3, l)) {
      return {join_powers({{"b", long(k)}, {"c", long(l)}, {"d", long(m)}}), qpow(-long(m * (k + l)))};
    }
    return {w.empty() ? std::string() : w.to_string(*alpha), CycloScalar(1)};
  };
}

// Leading d^k (d = a^-1) is printed as a^-k.
PresentedAlgebra::DisplayFn laurent_display(AlphabetPtr alpha) {
  return [alpha](const Word& w) -> std::pair<std::string, CycloScalar> {
    std::size_t k = 0;
    while (k < w.size() && w[k] == 1) ++k;
    std::string head = power_text("a", -long(k));
    std::string tail = w.sub(k).empty() ? std::string() : w.sub(k).to_string(*alpha);
    if (head.empty()) return {tail, CycloScalar(1)};
    return {tail.empty() ? head : head + "*" + tail, CycloScalar(1)};
  };
}

}  // namespace

HopfPtr build_slq2() {
  PresentationDef s;
  s.name = "slq2";
  s.letters = {"a", "d", "b", "c"};
  s.weights = {1, 1, 0, 0};
  s.rules = {{"b*a", "q^-1*a*b"}, {"c*a", "q^-1*a*c"}, {"c*b", "b*c"},          {"b*d", "q*d*b"},
             {"c*d", "q*d*c"},    {"d*a", "1 + q^-1*b*c"}, {"a*d", "1 + q*b*c"}};
  s.delta = {"a (x) a + b (x) c", "c (x) b + d (x) d", "a (x) b + b (x) d", "c (x) a + d (x) c"};
  s.eps = {1, 1, 0, 0};
  s.antipode = {"d", "a", "-q^-1*b", "-q*c"};
  s.display = slq2_display(Alphabet::make(s.letters));
  return make_hopf(s);
}

HopfPtr build_borel_plus() {
  PresentationDef s;
  s.name = "borel_plus";
  s.letters = {"a", "d", "b"};
  s.display = laurent_display(Alphabet::make(s.letters));
  s.rules = {{"a*d", "1"}, {"d*a", "1"}, {"b*a", "q^-1*a*b"}, {"b*d", "q*d*b"}};
  s.aliases = {{"a_inv", "d"}};
  s.inverses = {{"a", "d"}, {"d", "a"}};
  s.delta = {"a (x) a", "d (x) d", "a (x) b + b (x) d"};
  s.eps = {1, 1, 0};
  s.antipode = {"d", "a", "-q^-1*b"};
  return make_hopf(s);
}

HopfPtr build_borel_minus() {
  PresentationDef s;
  s.name = "borel_minus";
  s.letters = {"a", "d", "c"};
  s.display = laurent_display(Alphabet::make(s.letters));
  s.rules = {{"a*d", "1"}, {"d*a", "1"}, {"c*a", "q^-1*a*c"}, {"c*d", "q*d*c"}};
  s.aliases = {{"a_inv", "d"}};
  s.inverses = {{"a", "d"}, {"d", "a"}};
  s.delta = {"a (x) a", "d (x) d", "c (x) a + d (x) c"};
  s.eps = {1, 1, 0};
  s.antipode = {"d", "a", "-q*c"};
  return make_hopf(s);
}

HopfPtr build_cartan() {
  PresentationDef s;
  s.name = "cartan";
  s.letters = {"a", "d"};
  s.display = laurent_display(Alphabet::make(s.letters));
  s.rules = {{"a*d", "1"}, {"d*a", "1"}};
  s.aliases = {{"a_inv", "d"}};
  s.inverses = {{"a", "d"}, {"d", "a"}};
  s.delta = {"a (x) a", "d (x) d"};
  s.eps = {1, 1};
  s.antipode = {"d", "a"};
  return make_hopf(s);
}

HopfPtr build_af_presentation() {
  PresentationDef s;
  s.name = "af";
  s.letters = {"a", "b", "c"};
  s.rules = {{"b*a", "q^-1*a*b"}, {"c*a", "q^-1*a*c"}, {"c*b", "b*c"},
             {"a^3", "1"},        {"b^3", "0"},        {"c^3", "0"}};
  s.aliases = {{"d", "a^2 + q*a^2*b*c"}};
  s.inverses = {{"a", "a^2"}};
  s.delta = {"a (x) a + b (x) c", "a (x) b + b (x) d", "c (x) a + d (x) c"};
  s.eps = {1, 0, 0};
  s.antipode = {"d", "-q^-1*b", "-q*c"};
  return make_hopf(s);
}

HopfPtr build_hplus_presentation() {
  PresentationDef s;
  s.name = "hplus";
  s.letters = {"a", "b"};
  s.rules = {{"b*a", "q^-1*a*b"}, {"a^3", "1"}, {"b^3", "0"}};
  s.aliases = {{"d", "a^2"}};
  s.inverses = {{"a", "a^2"}};
  s.delta = {"a (x) a", "a (x) b + b (x) a^2"};
  s.eps = {1, 0};
  s.antipode = {"a^2", "-q^-1*b"};
  return make_hopf(s);
}

HopfPtr build_hminus_presentation() {
  PresentationDef s;
  s.name = "hminus";
  s.letters = {"a", "c"};
  s.rules = {{"c*a", "q^-1*a*c"}, {"a^3", "1"}, {"c^3", "0"}};
  s.aliases = {{"d", "a^2"}};
  s.inverses = {{"a", "a^2"}};
  s.delta = {"a (x) a", "c (x) a + a^2 (x) c"};
  s.eps = {1, 0};
  s.antipode = {"a^2", "-q*c"};
  return make_hopf(s);
}

HopfPtr build_hpm_presentation() {
  PresentationDef s;
  s.name = "hpm";
  s.letters = {"a"};
  s.rules = {{"a^3", "1"}};
  s.aliases = {{"d", "a^2"}};
  s.inverses = {{"a", "a^2"}};
  s.delta = {"a (x) a"};
  s.eps = {1};
  s.antipode = {"a^2"};
  return make_hopf(s);
}

AlgebraPtr build_quantum_plane() {
  PresentationDef s;
  s.name = "qplane";
  s.letters = {"x", "y"};
  s.rules = {{"y*x", "q^-1*x*y"}};
  return make_algebra(s);
}

AlgebraPtr build_m3() {
  PresentationDef s;
  s.name = "m3";
  s.letters = {"x", "y"};
  s.rules = {{"y*x", "q^-1*x*y"}, {"x^3", "1"}, {"y^3", "1"}};
  s.inverses = {{"x", "x^2"}, {"y", "y^2"}};
  return make_algebra(s);
}

namespace {

struct Registry {
  std::mutex mutex;
  std::map<std::string, AlgebraPtr> algebras;
  std::map<std::string, std::unique_ptr<AlgebraMap>> maps;
};

Registry& registry() {
  static Registry r;
  return r;
}

const std::map<std::string, std::function<HopfPtr()>>& hopf_factories() {
  static const std::map<std::string, std::function<HopfPtr()>> f = {
      {"slq2", build_slq2},
      {"borel_plus", build_borel_plus},
      {"borel_minus", build_borel_minus},
      {"cartan", build_cartan},
      {"af", build_af_presentation},
      {"hplus", build_hplus_presentation},
      {"hminus", build_hminus_presentation},
      {"hpm", build_hpm_presentation},
  };
  return f;
}

const std::map<std::string, std::function<AlgebraPtr()>>& plain_factories() {
  static const std::map<std::string, std::function<AlgebraPtr()>> f = {
      {"qplane", build_quantum_plane},
      {"m3", build_m3},
  };
  return f;
}

struct MapDef {
  std::string from, to;
  std::vector<std::string> images;
};

const std::vector<MapDef>& map_defs() {
  static const std::vector<MapDef> defs = {
      {"slq2", "af", {"a", "d", "b", "c"}},
      {"slq2", "borel_plus", {"a", "d", "b", "0"}},
      {"slq2", "borel_minus", {"a", "d", "0", "c"}},
      {"slq2", "cartan", {"a", "d", "0", "0"}},
      {"borel_plus", "hplus", {"a", "a^2", "b"}},
      {"borel_minus", "hminus", {"a", "a^2", "c"}},
      {"borel_plus", "cartan", {"a", "d", "0"}},
      {"borel_minus", "cartan", {"a", "d", "0"}},
      {"cartan", "hpm", {"a", "a^2"}},
      {"af", "hplus", {"a", "b", "0"}},
      {"af", "hminus", {"a", "0", "c"}},
      {"af", "hpm", {"a", "0", "0"}},
      {"hplus", "hpm", {"a", "0"}},
      {"hminus", "hpm", {"a", "0"}},
      {"hplus", "hminus", {"a", "c"}},
      {"qplane", "m3", {"x", "y"}},
      {"qplane", "slq2", {"a", "b"}},
  };
  return defs;
}

}  // namespace

AlgebraPtr algebra(const std::string& name) {
  Registry& r = registry();
  {
    std::lock_guard<std::mutex> lock(r.mutex);
    if (auto it = r.algebras.find(name); it != r.algebras.end()) return it->second;
  }
  AlgebraPtr built;
  if (auto it = hopf_factories().find(name); it != hopf_factories().end()) {
    built = it->second();
  } else if (auto jt = plain_factories().find(name); jt != plain_factories().end()) {
    built = jt->second();
  } else {
    throw std::invalid_argument("unknown algebra '" + name + "'");
  }
  std::lock_guard<std::mutex> lock(r.mutex);
  return r.algebras.try_emplace(name, built).first->second;
}

HopfPtr hopf(const std::string& name) {
  if (!hopf_factories().count(name)) throw std::invalid_argument("unknown Hopf algebra '" + name + "'");
  return std::static_pointer_cast<const HopfPresentation>(algebra(name));
}

std::vector<std::string> hopf_names() {
  return {"slq2", "borel_plus", "borel_minus", "cartan", "af", "hplus", "hminus", "hpm"};
}

std::vector<std::string> algebra_names() {
  auto names = hopf_names();
  names.push_back("qplane");
  names.push_back("m3");
  return names;
}

const AlgebraMap& algebra_map(const std::string& from, const std::string& to) {
  const std::string key = from + "->" + to;
  Registry& r = registry();
  {
    std::lock_guard<std::mutex> lock(r.mutex);
    if (auto it = r.maps.find(key); it != r.maps.end()) return *it->second;
  }
  const MapDef* def = nullptr;
  for (const auto& m : map_defs())
    if (m.from == from && m.to == to) def = &m;
  if (!def) throw std::invalid_argument("no registered map " + key);
  AlgebraPtr src = algebra(from);
  AlgebraPtr dst = algebra(to);
  std::vector<NCPoly> images;
  for (const auto& t : def->images) images.push_back(dst->parse(t));
  auto map = std::make_unique<AlgebraMap>(src, dst, std::move(images));
  auto bad = map->relation_failures();
  if (!bad.empty()) throw std::logic_error(bad.front());
  std::lock_guard<std::mutex> lock(r.mutex);
  return *r.maps.try_emplace(key, std::move(map)).first->second;
}

NCPoly frobenius_embed(const std::array<unsigned, 4>& e) {
  auto P = hopf("slq2");
  Word w = Word::power(0, 3 * e[0]) * Word::power(2, 3 * e[1]) * Word::power(3, 3 * e[2]) * Word::power(1, 3 * e[3]);
  return P->nf(P->monomial(w));
}

namespace {

Word letters(const std::vector<std::pair<Letter, unsigned>>& parts) {
  Word w;
  for (const auto& [l, n] : parts) w *= Word::power(l, n);
  return w;
}

constexpr Letter A = 0, D = 1, B = 2, C = 3;

}  // namespace

TensorPoly coproduct_closed_form_abc(unsigned p, unsigned r, unsigned s) {
  auto P = hopf("slq2");
  TensorPoly out(P->alphabet(), P->alphabet());
  for (unsigned lam = 0; lam <= p; ++lam)
    for (unsigned mu = 0; mu <= r; ++mu)
      for (unsigned nu = 0; nu <= s; ++nu) {
        CycloScalar coeff = qbinom_at_omega(p, lam) * qbinom_at_omega(r, mu) * qbinom_at_omega(s, nu);
        if (coeff.is_zero()) continue;
        Word l = letters({{A, p - lam}, {B, lam}, {A, mu}, {B, r - mu}, {C, s - nu}, {D, nu}});
        Word rt = letters({{A, p - lam}, {C, lam}, {B, mu}, {D, r - mu}, {A, s - nu}, {C, nu}});
        out.add_term(l, rt, coeff);
      }
  return P->reduce(out);
}

TensorPoly coproduct_closed_form_bcd(unsigned k, unsigned l, unsigned m) {
  auto P = hopf("slq2");
  TensorPoly out(P->alphabet(), P->alphabet());
  for (unsigned lam = 0; lam <= k; ++lam)
    for (unsigned mu = 0; mu <= l; ++mu)
      for (unsigned nu = 0; nu <= m; ++nu) {
        CycloScalar coeff = qbinom_at_omega(k, lam) * qbinom_at_omega(l, mu) * qbinom_at_omega(m, nu);
        if (coeff.is_zero()) continue;
        Word lw = letters({{A, lam}, {B, k - lam}, {C, l - mu}, {D, mu}, {C, nu}, {D, m - nu}});
        Word rw = letters({{B, lam}, {D, k - lam}, {A, l - mu}, {C, mu}, {B, nu}, {D, m - nu}});
        out.add_term(lw, rw, coeff);
      }
  return P->reduce(out);
}

Report verify_coproduct_closed_form(unsigned bound) {
  auto P = hopf("slq2");
  Report rep("coproduct-closed-form");
  Check& abc = rep.add("closed form on a^p b^r c^s", "coproduct of the a-b-c basis family");
  for (unsigned p = 0; p <= bound; ++p)
    for (unsigned r = 0; r <= bound; ++r)
      for (unsigned s = 0; s <= bound; ++s) {
        TensorPoly brute = P->coproduct(letters({{A, p}, {B, r}, {C, s}}));
        abc.expect(brute == coproduct_closed_form_abc(p, r, s), [&] {
          return "mismatch at (p,r,s)=(" + std::to_string(p) + "," + std::to_string(r) + "," + std::to_string(s) + ")";
        });
      }
  Check& bcd = rep.add("closed form on b^k c^l d^m", "coproduct of the b-c-d basis family, m > 0");
  for (unsigned k = 0; k <= bound; ++k)
    for (unsigned l = 0; l <= bound; ++l)
      for (unsigned m = 1; m <= bound; ++m) {
        TensorPoly brute = P->coproduct(letters({{B, k}, {C, l}, {D, m}}));
        bcd.expect(brute == coproduct_closed_form_bcd(k, l, m), [&] {
          return "mismatch at (k,l,m)=(" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(m) + ")";
        });
      }

  // Delta(T_ij^k) = sum_l (k l)_q T_i1^l T_i2^(k-l) (x) T_1j^l T_2j^(k-l)
  Check& binom = rep.add("q-binomial expansion of Delta(T_ij^k)", "powers of matrix coproducts, k <= 4");
  const Letter T[2][2] = {{A, B}, {C, D}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (unsigned k = 0; k <= 4; ++k) {
        TensorPoly rhs(P->alphabet(), P->alphabet());
        for (unsigned l = 0; l <= k; ++l)
          rhs.add_term(letters({{T[i][0], l}, {T[i][1], k - l}}), letters({{T[0][j], l}, {T[1][j], k - l}}),
                       qbinom_at_omega(k, l));
        binom.expect(P->coproduct(Word::power(T[i][j], k)) == P->reduce(rhs), [&] {
          return "T_" + std::to_string(i + 1) + std::to_string(j + 1) + "^" + std::to_string(k);
        });
      }
  return rep;
}

Report verify_frobenius() {
  auto P = hopf("slq2");
  Report rep("frobenius");
  const Letter T[2][2] = {{A, B}, {C, D}};
  auto cube = [&](Letter l) { return P->monomial(Word::power(l, 3)); };

  Check& hopf_map = rep.add("Fr is a coalgebra map on generators", "Delta(T_ij^3) = sum_k T_ik^3 (x) T_kj^3");
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      TensorPoly expected(P->alphabet(), P->alphabet());
      for (int k = 0; k < 2; ++k) expected.add_term(Word::power(T[i][k], 3), Word::power(T[k][j], 3), CycloScalar(1));
      hopf_map.expect(P->coproduct(Word::power(T[i][j], 3)) == P->reduce(expected),
                      [&] { return "T_" + std::to_string(i + 1) + std::to_string(j + 1); });
      hopf_map.expect(P->counit(Word::power(T[i][j], 3)) == CycloScalar(i == j ? 1 : 0),
                      [&] { return "counit of T_" + std::to_string(i + 1) + std::to_string(j + 1); });
    }
  Check& anti = rep.add("Fr intertwines antipodes", "S(T^3) is the classical antipode of the cubes");
  anti.expect(P->antipode(cube(A)) == cube(D));
  anti.expect(P->antipode(cube(D)) == cube(A));
  anti.expect(P->antipode(cube(B)) == -cube(B));
  anti.expect(P->antipode(cube(C)) == -cube(C));

  Check& det = rep.add("classical determinant", "a^3 d^3 - b^3 c^3 = 1");
  det.expect(P->nf(cube(A) * cube(D) - cube(B) * cube(C)) == P->one(), [&] {
    return "got " + P->format(P->nf(cube(A) * cube(D) - cube(B) * cube(C)));
  });

  Check& central = rep.add("cubes are central", "Fr(T)x = xFr(T) on generators and basis words of degree <= 3");
  std::vector<Word> sample = P->rs().irreducible_words(3);
  for (int g = 0; g < 4; ++g)
    for (const Word& w : sample) {
      NCPoly x = P->monomial(w);
      central.expect(P->mul(cube(static_cast<Letter>(g)), x) == P->mul(x, cube(static_cast<Letter>(g))),
                     [&] { return "T^3 with " + w.to_string(*P->alphabet()); });
    }

  Check& inj = rep.add("Fr sends classical basis monomials to distinct basis words", "injectivity on cube monomials");
  std::map<Word, int> seen;
  for (unsigned i = 0; i <= 2; ++i)
    for (unsigned j = 0; j <= 2; ++j)
      for (unsigned k = 0; k <= 2; ++k)
        for (unsigned l = 0; l <= 2; ++l) {
          if (i > 0 && l > 0) continue;
          NCPoly f = frobenius_embed({i, j, k, l});
          bool ok = f.size() == 1 && f.terms().begin()->second.is_one() && !seen.count(f.terms().begin()->first);
          if (ok) seen[f.terms().begin()->first] = 1;
          inj.expect(ok);
        }
  return rep;
}

}  // namespace qgalois
