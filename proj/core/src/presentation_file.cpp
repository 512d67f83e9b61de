#include "qgalois/presentation_file.hpp"

#include "qgalois/expr.hpp"

#include <fstream>
#include <sstream>

namespace qgalois {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

ParseError line_error(const std::string& what, std::size_t line) {
  return ParseError(ParseError::Verbatim{}, "line " + std::to_string(line) + ": " + what, line);
}

}  // namespace

AlgebraPtr parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line, name = "presentation";
  std::vector<std::string> letters;
  std::vector<unsigned> weights;
  std::vector<std::pair<std::string, std::size_t>> rule_texts;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw line_error("expected 'key: value'", lineno);
    const std::string key = trim(line.substr(0, colon)), value = trim(line.substr(colon + 1));
    std::istringstream vs(value);
    if (key == "name") {
      name = value;
    } else if (key == "letters") {
      for (std::string l; vs >> l;) letters.push_back(l);
    } else if (key == "weights") {
      for (long w; vs >> w;) {
        if (w < 0) throw line_error("negative weight", lineno);
        weights.push_back(static_cast<unsigned>(w));
      }
      if (!vs.eof()) throw line_error("weights must be integers", lineno);
    } else if (key == "rule") {
      rule_texts.emplace_back(value, lineno);
    } else {
      throw line_error("unknown directive '" + key + "'", lineno);
    }
  }
  if (letters.empty()) throw line_error("no letters declared", lineno);
  if (!weights.empty() && weights.size() != letters.size())
    throw line_error("weights and letters differ in length", lineno);

  auto alpha = Alphabet::make(letters);
  Symbols sym;
  sym.alphabet = alpha;
  std::vector<Rule> rules;
  for (const auto& [t, at] : rule_texts) {
    const auto arrow = t.find("->");
    if (arrow == std::string::npos) throw line_error("rule needs '->'", at);
    NCPoly lhs, rhs;
    try {
      lhs = parse_poly(t.substr(0, arrow), sym);
      rhs = parse_poly(t.substr(arrow + 2), sym);
    } catch (const ParseError& e) {
      throw line_error(e.what(), at);
    }
    if (lhs.size() != 1 || !lhs.terms().begin()->second.is_one())
      throw line_error("rule left-hand side must be a single word", at);
    rules.push_back(Rule{lhs.terms().begin()->first, rhs});
  }
  MonomialOrder order(weights.empty() ? std::vector<unsigned>(letters.size(), 1) : weights);
  auto rs = std::make_shared<const ReductionSystem>(alpha, std::move(rules), order);
  return std::make_shared<const PresentedAlgebra>(name, rs);
}

AlgebraPtr load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open presentation file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

}  // namespace qgalois
