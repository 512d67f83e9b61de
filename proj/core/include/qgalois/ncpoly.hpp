#pragma once

#include "qgalois/cyclo.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qgalois {

using Letter = std::uint8_t;

/// Generator alphabet of one algebra. A letter is its position in the list.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  static std::shared_ptr<const Alphabet> make(std::vector<std::string> names) {
    return std::make_shared<const Alphabet>(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter l) const { return names_.at(l); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Letter> find(const std::string& name) const;
  /// Throws std::invalid_argument for unknown names.
  Letter at(const std::string& name) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Letter> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Picks the common alphabet of two operands; a null alphabet (pure scalar) fits anything.
AlphabetPtr common_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

/// Finite sequence of letters; the empty word is the unit monomial.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters);

  static Word letter(Letter l) { return Word(std::string(1, static_cast<char>(l))); }
  static Word power(Letter l, std::size_t n) { return Word(std::string(n, static_cast<char>(l))); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }
  const std::string& letters() const { return letters_; }

  Word sub(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(letters_.substr(pos, len));
  }
  std::size_t find(const Word& w, std::size_t from = 0) const { return letters_.find(w.letters_, from); }
  bool contains(const Word& w) const { return find(w) != std::string::npos; }
  std::size_t count(Letter l) const;

  Word& operator*=(const Word& o) {
    letters_ += o.letters_;
    return *this;
  }
  friend Word operator*(Word a, const Word& b) { return a *= b; }

  /// Storage order: length first, then lexicographic on letter indices.
  friend bool operator<(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters_ < b.letters_;
  }
  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

  /// "a*b^2*c"; "1" for the empty word.
  std::string to_string(const Alphabet& alpha) const;

 private:
  std::string letters_;
};

/// How q-power coefficients are written: q^-1 (relation style) or q^2 (table style).
enum class QStyle { Negative, Positive };

std::string format_scalar(const CycloScalar& c, QStyle style = QStyle::Negative);

/// Joins (coefficient, monomial text) pairs in the given order; "" is the unit monomial.
std::string format_terms(const std::vector<std::pair<CycloScalar, std::string>>& terms,
                         QStyle style = QStyle::Negative);

/// Element of the free algebra over Q(w): a finite map Word -> coefficient with
/// no stored zeros.
class NCPoly {
 public:
  using Terms = std::map<Word, CycloScalar>;

  NCPoly() = default;
  explicit NCPoly(AlphabetPtr alpha) : alpha_(std::move(alpha)) {}

  static NCPoly constant(AlphabetPtr alpha, const CycloScalar& c);
  static NCPoly monomial(AlphabetPtr alpha, const Word& w, const CycloScalar& c = CycloScalar(1));
  static NCPoly generator(AlphabetPtr alpha, const std::string& name);

  const AlphabetPtr& alphabet() const { return alpha_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  CycloScalar coeff(const Word& w) const;
  /// Scalar value when the polynomial lies in the ground field.
  std::optional<CycloScalar> as_scalar() const;

  void add_term(const Word& w, const CycloScalar& c);

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const CycloScalar& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const CycloScalar& c) { return a *= c; }
  friend NCPoly operator*(const CycloScalar& c, NCPoly a) { return a *= c; }
  /// Free (unreduced) product: concatenation extended bilinearly.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  NCPoly operator-() const { return *this * CycloScalar(-1); }

  /// Equality of term maps; alphabets must agree.
  friend bool operator==(const NCPoly& a, const NCPoly& b);
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  /// Canonical text. Terms follow `less` (storage order when omitted).
  std::string to_string(QStyle style = QStyle::Negative,
                        const std::function<bool(const Word&, const Word&)>& less = {}) const;

 private:
  AlphabetPtr alpha_;
  Terms terms_;
};

NCPoly ncp_add(const NCPoly& x, const NCPoly& y);
NCPoly ncp_mul(const NCPoly& x, const NCPoly& y);
NCPoly ncp_scale(const CycloScalar& c, const NCPoly& x);

/// Element of a tensor product of two free algebras.
class TensorPoly {
 public:
  using Key = std::pair<Word, Word>;
  using Terms = std::map<Key, CycloScalar>;

  TensorPoly() = default;
  TensorPoly(AlphabetPtr left, AlphabetPtr right) : left_(std::move(left)), right_(std::move(right)) {}

  static TensorPoly pure(const NCPoly& x, const NCPoly& y);

  const AlphabetPtr& left_alphabet() const { return left_; }
  const AlphabetPtr& right_alphabet() const { return right_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  CycloScalar coeff(const Word& l, const Word& r) const;

  void add_term(const Word& l, const Word& r, const CycloScalar& c);

  TensorPoly& operator+=(const TensorPoly& o);
  TensorPoly& operator-=(const TensorPoly& o);
  TensorPoly& operator*=(const CycloScalar& c);
  friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
  friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
  friend TensorPoly operator*(TensorPoly a, const CycloScalar& c) { return a *= c; }
  friend bool operator==(const TensorPoly& a, const TensorPoly& b);
  friend bool operator!=(const TensorPoly& a, const TensorPoly& b) { return !(a == b); }

  /// Left slot: first factor; right slot: second factor.
  NCPoly left_of(const Word& right) const;

  std::string to_string(QStyle style = QStyle::Negative) const;

 private:
  AlphabetPtr left_;
  AlphabetPtr right_;
  Terms terms_;
};

/// (p (x) p')(r (x) r') = pr (x) p'r', unreduced.
TensorPoly tensor_mul(const TensorPoly& x, const TensorPoly& y);

}  // namespace qgalois
