#pragma once

#include <string>
#include <vector>

#include "mtk/cyclo.hpp"

namespace mtk {

/// Irreducible characters of one centralizer. values[rho][x] is the character
/// of irrep rho at the x-th element of the centralizer (ascending element
/// order). Irrep 0 is the trivial character.
struct CharacterTable {
  std::vector<std::string> names;
  std::vector<std::vector<CycloNum>> values;
};

/// Finite group given by its multiplication table, with conjugacy classes and
/// the character tables of the class representatives' centralizers.
/// Element 0 is the identity; class 0 is {0}; the first element of each
/// class is its representative.
struct GroupData {
  std::string name;
  std::vector<std::string> element_names;
  std::vector<std::vector<int>> mult;
  std::vector<int> inverse;
  std::vector<std::vector<int>> classes;
  std::vector<std::vector<int>> centralizers;
  std::vector<CharacterTable> char_tables;

  int order() const { return static_cast<int>(mult.size()); }
  int conjugate(int g, int x) const { return mult[g][mult[x][inverse[g]]]; }  // g x g^-1
  std::string class_name(std::size_t c) const;
};

/// Derives inverses and centralizers, then validates: group axioms, classes
/// partition G into conjugacy classes, every character table is square with
/// orthonormal rows and positive integer degrees. Throws InvariantError.
GroupData make_group(std::string name, std::vector<std::string> element_names, std::vector<std::vector<int>> mult,
                     std::vector<std::vector<int>> classes, std::vector<CharacterTable> char_tables);

GroupData cyclic_group(int n);
GroupData symmetric_group_3();

/// "Z<n>", "Zn:<n>", "S3" or "trivial".
GroupData builtin_group(const std::string& name);

}  // namespace mtk
