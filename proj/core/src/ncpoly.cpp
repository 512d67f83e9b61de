#include "qgalois/ncpoly.hpp"

#include <algorithm>
#include <vector>

namespace qgalois {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > 255) throw std::invalid_argument("Alphabet: too many letters");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<Letter>(i)).second)
      throw std::invalid_argument("Alphabet: duplicate letter '" + names_[i] + "'");
  }
}

std::optional<Letter> Alphabet::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::at(const std::string& name) const {
  auto l = find(name);
  if (!l) throw std::invalid_argument("unknown generator '" + name + "'");
  return *l;
}

AlphabetPtr common_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (!a) return b;
  if (!b || a == b || *a == *b) return a;
  throw AlphabetMismatch("alphabet mismatch between operands");
}

Word::Word(std::initializer_list<Letter> letters) {
  for (Letter l : letters) letters_.push_back(static_cast<char>(l));
}

std::size_t Word::count(Letter l) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), static_cast<char>(l)));
}

std::string Word::to_string(const Alphabet& alpha) const {
  if (empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < size()) {
    std::size_t j = i;
    while (j < size() && letters_[j] == letters_[i]) ++j;
    if (!out.empty()) out += "*";
    out += alpha.name((*this)[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace {

std::string qpow_text(int k, QStyle style) {
  if (k == 1) return "q";
  return style == QStyle::Negative ? "q^-1" : "q^2";
}

// Splits a coefficient into sign and printable magnitude. `prefix` is empty
// for a unit magnitude, so callers can decide whether to print "1".
struct CoeffText {
  bool negative = false;
  std::string magnitude;  // empty means 1
};

CoeffText coeff_text(const CycloScalar& c, QStyle style) {
  mpq_class r;
  int k = 0;
  CoeffText out;
  if (as_rational_times_qpow(c, r, k)) {
    out.negative = sgn(r) < 0;
    mpq_class a = abs(r);
    if (k == 0) {
      if (a != 1) out.magnitude = a.get_str();
    } else {
      out.magnitude = (a != 1 ? a.get_str() + "*" : std::string()) + qpow_text(k, style);
    }
    return out;
  }
  const auto& re = c.re_part();
  const auto& om = c.om_part();
  std::string s = "(" + re.get_str();
  s += sgn(om) < 0 ? " - " : " + ";
  mpq_class a = abs(om);
  s += (a != 1 ? a.get_str() + "*" : std::string()) + "q)";
  out.magnitude = s;
  return out;
}

std::string join_terms(const std::vector<std::pair<CoeffText, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [ct, body] : terms) {
    std::string piece;
    if (body.empty()) {
      piece = ct.magnitude.empty() ? "1" : ct.magnitude;
    } else {
      piece = ct.magnitude.empty() ? body : ct.magnitude + "*" + body;
    }
    if (first) {
      out = (ct.negative ? "-" : "") + piece;
      first = false;
    } else {
      out += (ct.negative ? " - " : " + ") + piece;
    }
  }
  return out;
}

}  // namespace

std::string format_terms(const std::vector<std::pair<CycloScalar, std::string>>& terms, QStyle style) {
  std::vector<std::pair<CoeffText, std::string>> parts;
  for (const auto& [c, body] : terms)
    if (!c.is_zero()) parts.emplace_back(coeff_text(c, style), body);
  return join_terms(parts);
}

std::string format_scalar(const CycloScalar& c, QStyle style) {
  if (c.is_zero()) return "0";
  CoeffText ct = coeff_text(c, style);
  return (ct.negative ? "-" : "") + (ct.magnitude.empty() ? std::string("1") : ct.magnitude);
}

NCPoly NCPoly::constant(AlphabetPtr alpha, const CycloScalar& c) {
  NCPoly p(std::move(alpha));
  p.add_term(Word(), c);
  return p;
}

NCPoly NCPoly::monomial(AlphabetPtr alpha, const Word& w, const CycloScalar& c) {
  NCPoly p(std::move(alpha));
  p.add_term(w, c);
  return p;
}

NCPoly NCPoly::generator(AlphabetPtr alpha, const std::string& name) {
  Letter l = alpha->at(name);
  return monomial(std::move(alpha), Word::letter(l));
}

CycloScalar NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? CycloScalar() : it->second;
}

std::optional<CycloScalar> NCPoly::as_scalar() const {
  if (terms_.empty()) return CycloScalar();
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

void NCPoly::add_term(const Word& w, const CycloScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  alpha_ = common_alphabet(alpha_, o.alpha_);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  alpha_ = common_alphabet(alpha_, o.alpha_);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const CycloScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out(common_alphabet(a.alpha_, b.alpha_));
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  return out;
}

bool operator==(const NCPoly& a, const NCPoly& b) {
  (void)common_alphabet(a.alpha_, b.alpha_);
  return a.terms_ == b.terms_;
}

std::string NCPoly::to_string(QStyle style, const std::function<bool(const Word&, const Word&)>& less) const {
  std::vector<const Terms::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  if (less) {
    std::stable_sort(order.begin(), order.end(),
                     [&](const auto* x, const auto* y) { return less(x->first, y->first); });
  }
  std::vector<std::pair<CoeffText, std::string>> parts;
  for (const auto* t : order) {
    std::string body;
    if (!t->first.empty()) {
      if (!alpha_) throw std::logic_error("NCPoly::to_string: word without alphabet");
      body = t->first.to_string(*alpha_);
    }
    parts.emplace_back(coeff_text(t->second, style), body);
  }
  return join_terms(parts);
}

NCPoly ncp_add(const NCPoly& x, const NCPoly& y) { return x + y; }
NCPoly ncp_mul(const NCPoly& x, const NCPoly& y) { return x * y; }
NCPoly ncp_scale(const CycloScalar& c, const NCPoly& x) { return c * x; }

TensorPoly TensorPoly::pure(const NCPoly& x, const NCPoly& y) {
  TensorPoly t(x.alphabet(), y.alphabet());
  for (const auto& [wx, cx] : x.terms())
    for (const auto& [wy, cy] : y.terms()) t.add_term(wx, wy, cx * cy);
  return t;
}

CycloScalar TensorPoly::coeff(const Word& l, const Word& r) const {
  auto it = terms_.find({l, r});
  return it == terms_.end() ? CycloScalar() : it->second;
}

void TensorPoly::add_term(const Word& l, const Word& r, const CycloScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key(l, r), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
  left_ = common_alphabet(left_, o.left_);
  right_ = common_alphabet(right_, o.right_);
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
  left_ = common_alphabet(left_, o.left_);
  right_ = common_alphabet(right_, o.right_);
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

TensorPoly& TensorPoly::operator*=(const CycloScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

bool operator==(const TensorPoly& a, const TensorPoly& b) {
  (void)common_alphabet(a.left_, b.left_);
  (void)common_alphabet(a.right_, b.right_);
  return a.terms_ == b.terms_;
}

NCPoly TensorPoly::left_of(const Word& right) const {
  NCPoly out(left_);
  for (const auto& [k, c] : terms_)
    if (k.second == right) out.add_term(k.first, c);
  return out;
}

std::string TensorPoly::to_string(QStyle style) const {
  std::vector<std::pair<CoeffText, std::string>> parts;
  for (const auto& [k, c] : terms_) {
    std::string l = k.first.empty() ? "" : k.first.to_string(*left_);
    std::string r = k.second.empty() ? "1" : k.second.to_string(*right_);
    CoeffText ct = coeff_text(c, style);
    if (l.empty()) {
      // keep the scalar attached to the left slot: "q (x) a", "1 (x) a"
      std::string lhs = ct.magnitude.empty() ? "1" : ct.magnitude;
      ct.magnitude.clear();
      parts.emplace_back(ct, lhs + " (x) " + r);
    } else {
      parts.emplace_back(ct, l + " (x) " + r);
    }
  }
  return join_terms(parts);
}

TensorPoly tensor_mul(const TensorPoly& x, const TensorPoly& y) {
  TensorPoly out(common_alphabet(x.left_alphabet(), y.left_alphabet()),
                 common_alphabet(x.right_alphabet(), y.right_alphabet()));
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) out.add_term(kx.first * ky.first, kx.second * ky.second, cx * cy);
  return out;
}

}  // namespace qgalois
