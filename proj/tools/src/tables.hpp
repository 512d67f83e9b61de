#pragma once

#include "qgalois/galois.hpp"

#include <string>
#include <vector>

namespace qgalois::cli {

struct Table {
  std::string name;
  std::string basis_convention;
  std::vector<TableEntry> entries;
  /// Extra rule applied to argument tuples not listed; empty when none.
  std::string default_rule;
  std::vector<std::string> tex_lines;
};

const std::vector<std::string>& table_names();
/// Throws std::invalid_argument on unknown names or unsupported algebras.
Table build_table(const std::string& name, const std::string& algebra = "", const std::string& sub = "");

std::string table_json(const Table& t);
std::string table_tex(const Table& t);

/// "q^2*a^-3*b^3 (x) a" -> "q^{2} a^{-3} b^{3} \otimes \tilde{a}". `tilde`
/// marks the slots (left, right) that live in a quotient Hopf algebra.
std::string to_tex(const std::string& text, bool tilde_left, bool tilde_right = false);

}  // namespace qgalois::cli
