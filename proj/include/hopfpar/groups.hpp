#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopfpar/algebra.hpp"

namespace hopfpar {

/// Finite group given as a multiplication table. Element 0 is the identity.
struct GroupTable {
  std::vector<std::vector<std::size_t>> table;  // table[g][h] = g*h
  std::vector<std::string> names;

  std::size_t order() const { return table.size(); }
  std::size_t mul(std::size_t g, std::size_t h) const { return table[g][h]; }
  std::size_t inverse(std::size_t g) const;
  std::string name(std::size_t g) const {
    return g < names.size() ? names[g] : "g" + std::to_string(g);
  }

  /// Checks closure, associativity, identity at 0 and inverses.
  bool is_group(std::string* why = nullptr) const;

  static GroupTable trivial();
  static GroupTable cyclic(std::size_t n);
  static GroupTable direct_product(const GroupTable& a, const GroupTable& b);
  static GroupTable symmetric3();
  static GroupTable dihedral4();  // D4, order 8
  static GroupTable quaternion8();
};

/// Group Hopf algebra kG: basis the group elements, Delta(g) = g(x)g,
/// eps(g) = 1, S(g) = g^{-1}. Verified at construction.
HopfData group_algebra(const GroupTable& g, const FieldSpec& f);

/// Dual kG^*: basis {p_g}, p_g p_h = delta p_g, Delta(p_g) = sum_{ab=g}
/// p_a (x) p_b, S(p_g) = p_{g^{-1}}. Verified at construction.
HopfData dual_group_algebra(const GroupTable& g, const FieldSpec& f);

/// Sweedler's 4-dimensional Hopf algebra, basis {1, g, x, gx}. Rejects
/// characteristic 2.
HopfData sweedler_h4(const FieldSpec& f);

}  // namespace hopfpar
