#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace weylkl {

// Finite crystallographic families, Bourbaki numbering throughout.
enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Family family{Family::A};
  int rank{1};

  // Accepts "A3", "B2", "G2", ... Throws std::invalid_argument on anything
  // that is not a valid finite type, naming the valid families.
  static CartanType parse(std::string_view text);

  std::string str() const;

  // Coxeter matrix m(i,j): m(i,i)=1, off-diagonal entries in {2,3,4,6}.
  // Derived from the Cartan matrix, 0-based storage.
  std::vector<std::vector<int>> coxeter_matrix() const;

  // Cartan matrix c[i][j] = <alpha_j, alpha_i^vee>.
  std::vector<std::vector<int>> cartan_matrix() const;

  // |W| from the classification; saturates at UINT64_MAX for absurd ranks.
  uint64_t order() const;

  int positive_root_count() const;

  bool operator==(const CartanType&) const = default;
};

// Throws std::invalid_argument unless (family, rank) is a valid finite type:
// A_n n>=1, B_n/C_n n>=2, D_n n>=4, E_6..E_8, F_4, G_2.
void validate(const CartanType& t);

}  // namespace weylkl
