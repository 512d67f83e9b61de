#include "tables.hpp"

#include "qgalois/findim.hpp"
#include "qgalois/rep.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qgalois::cli {

namespace {

std::string slot_tex(const std::string& s, bool tilde) {
  std::string out;
  std::size_t i = 0;
  auto space = [&] {
    if (!out.empty() && out.back() != ' ' && out.back() != '(' && out.back() != '-') out += ' ';
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      const std::string id = s.substr(i, j - i);
      space();
      out += (id == "q" || !tilde) ? id : "\\tilde{" + id + "}";
      i = j;
    } else if (c == '^') {
      std::size_t j = i + 1;
      if (j < s.size() && s[j] == '-') ++j;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out += "^{" + s.substr(i + 1, j - i - 1) + "}";
      i = j;
    } else if (c == '*') {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      std::string num = s.substr(i, j - i);
      if (j < s.size() && s[j] == '/') {
        std::size_t k = j + 1;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        num = "\\tfrac{" + num + "}{" + s.substr(j + 1, k - j - 1) + "}";
        j = k;
      }
      space();
      out += num;
      i = j;
    } else {
      out += c;
      ++i;
    }
  }
  return out;
}

const std::string kTensor = " (x) ";

TableEntry entry(std::vector<std::string> args, std::string value) { return TableEntry{std::move(args), std::move(value)}; }

std::string join_tex_args(const std::vector<std::string>& args, bool tilde) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) out += (i ? " \\otimes " : "") + to_tex(args[i], tilde);
  return out;
}

Table cleaving() {
  Table t{"cleaving", "H+ basis a^p b^r (p, r < 3) in deglex order; Phi values in P+ = borel_plus, a^-1 = d, q = e^{2 pi i/3}", {}, {}, {}};
  t.entries = cleaving_table();
  t.tex_lines.push_back("\\begin{align*}");
  for (const auto& e : t.entries) t.tex_lines.push_back("\\Phi(" + to_tex(e.args[0], true) + ") &= " + to_tex(e.value, false) + " \\\\");
  t.tex_lines.push_back("\\end{align*}");
  return t;
}

Table cocycle() {
  Table t{"cocycle", "sigma(h, l) for H+ basis words a^p b^r in deglex order; values in P+; entries listed are those differing from eps(h) eps(l) 1", {}, "eps(h) eps(l) 1", {}};
  t.entries = cocycle_table();
  t.tex_lines.push_back("\\begin{align*}");
  for (const auto& e : t.entries)
    t.tex_lines.push_back("\\sigma(" + join_tex_args(e.args, true) + ") &= " + to_tex(e.value, false) + " \\\\");
  t.tex_lines.push_back("\\sigma(h \\otimes l) &= \\varepsilon(h)\\varepsilon(l) \\quad \\text{otherwise}");
  t.tex_lines.push_back("\\end{align*}");
  return t;
}

Table lambda() {
  Table t{"lambda", "lambda(h) in H+ (x) P+ for H+ basis words a^p b^r in deglex order", {}, {}, {}};
  t.entries = lambda_table();
  t.tex_lines.push_back("\\begin{align*}");
  for (const auto& e : t.entries)
    t.tex_lines.push_back("\\lambda(" + to_tex(e.args[0], true) + ") &= " + to_tex(e.value, true, false) + " \\\\");
  t.tex_lines.push_back("\\end{align*}");
  return t;
}

Table matrix_table(const std::string& name, const CorepMatrix& m, const std::vector<std::size_t>& labels) {
  auto A = algebra("af");
  Table t{name, "Delta_R e_i = sum_j e_j (x) N_ji on the M(3) basis e1..e9 = 1, x, y, x^2, xy, y^2, x^2y, xy^2, x^2y^2; entries in A(F), args [row j, column i]", {}, {}, {}};
  std::string env = "N = \\begin{pmatrix}";
  if (name == "corep-n1") env = "N_1 = \\begin{pmatrix}";
  if (name == "corep-n2") env = "N_2 = \\begin{pmatrix}";
  t.tex_lines.push_back(env);
  for (std::size_t j = 0; j < m.size(); ++j) {
    std::string row;
    for (std::size_t i = 0; i < m[j].size(); ++i) {
      const std::string v = A->format(m[j][i]);
      t.entries.push_back(entry({"e" + std::to_string(labels[j] + 1), "e" + std::to_string(labels[i] + 1)}, v));
      row += (i ? " & " : "") + to_tex(v, true);
    }
    t.tex_lines.push_back(row + (j + 1 < m.size() ? " \\\\" : ""));
  }
  t.tex_lines.push_back("\\end{pmatrix}");
  return t;
}

Table corep(const std::string& sub) {
  if (sub.empty()) {
    std::vector<std::size_t> all(9);
    for (std::size_t i = 0; i < 9; ++i) all[i] = i;
    return matrix_table("corep", corep_matrix(), all);
  }
  if (sub == "N1" || sub == "n1") return matrix_table("corep-n1", restrict_corep(corep_matrix(), corep_block_n1()), corep_block_n1());
  if (sub == "N2" || sub == "n2") return matrix_table("corep-n2", restrict_corep(corep_matrix(), corep_block_n2()), corep_block_n2());
  throw std::invalid_argument("unknown sub-corepresentation '" + sub + "' (expected N1 or N2)");
}

Table integrals() {
  auto F = findim("af");
  const std::size_t b2c2 = F->index(F->presentation().parse("b^2*c^2").terms().begin()->first);
  Table t{"integrals", "A(F) basis a^p b^r c^s; integrals on A(F) normalized to 1 at b^2c^2, integrals in A(F) to coefficient 1 at b^2c^2", {}, {}, {}};
  t.tex_lines.push_back("\\begin{align*}");
  auto add_on = [&](const std::string& tag, const std::string& tex, Side side) {
    const auto sols = integrals_on(*F, side);
    if (sols.size() != 1) throw std::logic_error("integral space is not a line");
    const FinVec h = normalize_at(sols[0], b2c2);
    for (std::size_t i = 0; i < F->dim(); ++i)
      if (!h[i].is_zero()) {
        t.entries.push_back(entry({tag, F->label(i)}, format_scalar(h[i])));
        t.tex_lines.push_back(tex + "(" + to_tex(F->label(i), true) + ") &= " + to_tex(format_scalar(h[i]), false) + " \\\\");
      }
  };
  auto add_in = [&](const std::string& tag, const std::string& tex, Side side) {
    const auto sols = integrals_in(*F, side);
    if (sols.size() != 1) throw std::logic_error("integral space is not a line");
    const std::string v = F->format(normalize_at(sols[0], b2c2));
    t.entries.push_back(entry({tag}, v));
    t.tex_lines.push_back(tex + " &= " + to_tex(v, true) + " \\\\");
  };
  add_on("left_on", "h_L", Side::Left);
  add_on("right_on", "h_R", Side::Right);
  add_in("left_in", "\\Lambda_L", Side::Left);
  add_in("right_in", "\\Lambda_R", Side::Right);
  t.tex_lines.push_back("h(x) &= 0 \\quad \\text{on all other basis elements}");
  t.tex_lines.push_back("\\end{align*}");
  return t;
}

Table structure_constants(const std::string& alg) {
  const std::string name = alg.empty() ? "af" : alg;
  if (name != "af" && name != "hplus" && name != "hminus" && name != "hpm")
    throw std::invalid_argument("structure-constants needs a finite-dimensional algebra: af, hplus, hminus or hpm");
  auto F = findim(name);
  const auto& H = F->presentation();
  Table t{"structure-constants", name + " basis of irreducible words in deglex order; args [map, basis labels...]", {}, {}, {}};
  auto vec = [&](const SparseVec& v) {
    FinVec d = F->zero();
    for (const auto& [i, c] : v) d[i] += c;
    return F->format(d);
  };
  t.tex_lines.push_back("\\begin{align*}");
  for (std::size_t i = 0; i < F->dim(); ++i)
    for (std::size_t j = 0; j < F->dim(); ++j) {
      const std::string v = vec(F->product(i, j));
      t.entries.push_back(entry({"mul", F->label(i), F->label(j)}, v));
      t.tex_lines.push_back(to_tex(F->label(i), true) + " \\cdot " + to_tex(F->label(j), true) + " &= " + to_tex(v, true) + " \\\\");
    }
  for (std::size_t i = 0; i < F->dim(); ++i) {
    TensorPoly d(H.alphabet(), H.alphabet());
    for (const auto& e : F->coproduct(i)) d.add_term(F->basis()[e.left], F->basis()[e.right], e.coeff);
    const std::string v = format_tensor(d, H, H);
    t.entries.push_back(entry({"coproduct", F->label(i)}, v));
    t.tex_lines.push_back("\\Delta(" + to_tex(F->label(i), true) + ") &= " + to_tex(v, true, true) + " \\\\");
  }
  for (std::size_t i = 0; i < F->dim(); ++i) {
    const std::string v = format_scalar(F->counit(i));
    t.entries.push_back(entry({"counit", F->label(i)}, v));
    t.tex_lines.push_back("\\varepsilon(" + to_tex(F->label(i), true) + ") &= " + to_tex(v, false) + " \\\\");
  }
  for (std::size_t i = 0; i < F->dim(); ++i) {
    const std::string v = vec(F->antipode(i));
    t.entries.push_back(entry({"antipode", F->label(i)}, v));
    t.tex_lines.push_back("S(" + to_tex(F->label(i), true) + ") &= " + to_tex(v, true) + (i + 1 < F->dim() ? " \\\\" : ""));
  }
  t.tex_lines.push_back("\\end{align*}");
  return t;
}

}  // namespace

std::string to_tex(const std::string& text, bool tilde_left, bool tilde_right) {
  const auto at = text.find(kTensor);
  if (at == std::string::npos) return slot_tex(text, tilde_left);
  // A tensor sum "l1 (x) r1 + l2 (x) r2": split terms at top-level " + " / " - ".
  std::string out;
  std::size_t start = 0;
  int depth = 0;
  auto flush = [&](std::size_t end, const std::string& sep) {
    const std::string term = text.substr(start, end - start);
    const auto t = term.find(kTensor);
    out += t == std::string::npos ? slot_tex(term, tilde_left)
                                  : slot_tex(term.substr(0, t), tilde_left) + " \\otimes " +
                                        slot_tex(term.substr(t + kTensor.size()), tilde_right);
    out += sep;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(' && text.compare(i, 3, "(x)") != 0) ++depth;
    if (text[i] == ')' && (i < 2 || text.compare(i - 2, 3, "(x)") != 0)) --depth;
    if (depth == 0 && i + 3 <= text.size() && (text.compare(i, 3, " + ") == 0 || text.compare(i, 3, " - ") == 0)) {
      flush(i, text.substr(i, 3));
      start = i + 3;
      i += 2;
    }
  }
  flush(text.size(), "");
  return out;
}

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> names = {"cleaving", "cocycle",  "lambda",    "corep",
                                                 "corep-n1", "corep-n2", "integrals", "structure-constants"};
  return names;
}

Table build_table(const std::string& name, const std::string& alg, const std::string& sub) {
  if (name == "cleaving") return cleaving();
  if (name == "cocycle") return cocycle();
  if (name == "lambda") return lambda();
  if (name == "corep") return corep(sub);
  if (name == "corep-n1") return corep("N1");
  if (name == "corep-n2") return corep("N2");
  if (name == "integrals") return integrals();
  if (name == "structure-constants") return structure_constants(alg);
  throw std::invalid_argument("unknown table '" + name + "'");
}

std::string table_json(const Table& t) {
  nlohmann::ordered_json j;
  j["table"] = t.name;
  j["basis_convention"] = t.basis_convention;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& e : t.entries) entries.push_back({{"args", e.args}, {"value", e.value}});
  j["entries"] = entries;
  if (!t.default_rule.empty()) j["default"] = t.default_rule;
  return j.dump(2) + "\n";
}

std::string table_tex(const Table& t) {
  std::ostringstream out;
  out << "% " << t.name << ": " << t.basis_convention << "\n";
  for (std::size_t i = 0; i < t.tex_lines.size(); ++i) {
    std::string l = t.tex_lines[i];
    const bool closes = i + 1 < t.tex_lines.size() && t.tex_lines[i + 1].rfind("\\end{", 0) == 0;
    if (closes && l.size() >= 3 && l.compare(l.size() - 3, 3, " \\\\") == 0) l.resize(l.size() - 3);
    out << l << "\n";
  }
  return out.str();
}

}  // namespace qgalois::cli
