#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zoll/base_algebra.hpp"
#include "zoll/linalg.hpp"
#include "zoll/scalar.hpp"

namespace zoll {

/// Finite-dimensional Z/2-graded Q-vector space with a homogeneous basis
/// and an even super-symmetric bilinear form.
class SuperSpace {
 public:
  struct BasisVector {
    std::string name;
    int parity = 0;
  };

  /// Throws ConfigError if b is not even or not super-symmetric.
  SuperSpace(std::vector<BasisVector> basis, Matrix pairing);

  /// All even, b = identity.
  static SuperSpace even_identity(std::size_t dim);
  /// Mixed parity examples by dimension: 1 = {e}; 2 = {o1, o2};
  /// 3 = {e, o1, o2}; 4 = {e1, e2, o1, o2}. Odd pairs have
  /// b(o1,o2) = 1 = -b(o2,o1).
  static SuperSpace mixed(std::size_t dim);

  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<BasisVector>& basis() const noexcept { return basis_; }
  int parity(std::size_t i) const { return basis_[i].parity; }
  const Scalar& b(std::size_t i, std::size_t k) const { return pairing_(i, k); }
  const Matrix& pairing() const noexcept { return pairing_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::string describe() const;

 private:
  std::vector<BasisVector> basis_;
  Matrix pairing_;
};

/// Line format: `[space]`, `basis <name> parity <0|1>`, `pair <a> <b> = <q>`.
SuperSpace parse_super_space(std::string_view text);
SuperSpace load_super_space(const std::filesystem::path& path);

/// A tuple of basis indices v_0 (x) ... (x) v_n.
using BasisTuple = std::vector<std::uint8_t>;

/// Element of M^{(x)(n+1)} as a sum over basis tuples.
class SuperTensor {
 public:
  /// arity = number of tensor factors n+1, at least 2.
  explicit SuperTensor(std::size_t arity);
  static SuperTensor basis(BasisTuple tuple, const Scalar& coeff = 1);

  std::size_t arity() const noexcept { return arity_; }
  const std::map<BasisTuple, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(const BasisTuple& tuple, const Scalar& coeff);
  /// Total parity when homogeneous.
  std::optional<int> parity(const SuperSpace& space) const;

  friend SuperTensor operator+(SuperTensor a, const SuperTensor& b);
  friend SuperTensor operator*(const Scalar& c, SuperTensor a);
  friend bool operator==(const SuperTensor&, const SuperTensor&) = default;

  std::string format(const SuperSpace& space) const;

 private:
  std::size_t arity_;
  std::map<BasisTuple, Scalar> terms_;
};

/// A single signed basis tuple; coeff 0 means the zero tensor.
struct BasisTerm {
  Scalar coeff;
  BasisTuple tuple;
};

int tuple_parity(const SuperSpace& space, const BasisTuple& t);

/// Composition on basis tuples, v has m+1 factors, w has n+1, 1 <= j <= m.
BasisTerm es_compose_basis(const SuperSpace& space, const BasisTuple& v, const BasisTuple& w, std::size_t j);
/// pi(v) with Koszul sign, via bubble sort into adjacent transpositions.
BasisTerm es_permute_basis(const SuperSpace& space, const Permutation& pi, const BasisTuple& v);
/// Applies the adjacent transpositions (k, k+1) right to left, as
/// word[0] o word[1] o ... acting on v.
BasisTerm es_permute_word(const SuperSpace& space, const std::vector<std::size_t>& word, const BasisTuple& v);

SuperTensor es_compose(const SuperSpace& space, const SuperTensor& v, const SuperTensor& w, std::size_t j);
SuperTensor es_permute(const SuperSpace& space, const Permutation& pi, const SuperTensor& v);

/// <v, alpha> = sum (-1)^S prod b(v_i, alpha_i), S = sum_{i>j} |v_i||alpha_j|.
Scalar pair_basis(const SuperSpace& space, const BasisTuple& v, const BasisTuple& alpha);
Scalar pair(const SuperSpace& space, const SuperTensor& v, const SuperTensor& alpha);

/// Homogeneous bases with b(primal_nu, dual_nu') = delta. The primal basis
/// is the standard one; the dual is read from the columns of b^{-1}.
struct DualBasisPair {
  std::vector<std::vector<Scalar>> primal;
  std::vector<std::vector<Scalar>> dual;
  std::vector<int> parity;

  /// Throws DomainError if b is degenerate.
  static DualBasisPair standard(const SuperSpace& space);
};

struct VowaOutcome {
  bool holds = true;
  /// The simplified sign (-1)^{|Delta_nu|} agreed with (-1)^{N_nu} on every
  /// summand with nonzero pairings.
  bool sign_agrees = true;
  Scalar lhs;
  Scalar rhs_full;
  Scalar rhs_simplified;
};

/// Compares <v o_j w, alpha> with the dual-basis expansion for even basis
/// tuples v, w and a basis tuple alpha. Throws DomainError for odd v or w.
VowaOutcome vowa_check(const SuperSpace& space, const DualBasisPair& duals, const BasisTuple& v,
                       const BasisTuple& w, std::size_t j, const BasisTuple& alpha);
/// Linear version for even tensors; alpha must be decomposable into
/// homogeneous basis vectors, given as a basis tuple.
bool vowa_check(const SuperSpace& space, const DualBasisPair& duals, const SuperTensor& v, const SuperTensor& w,
                std::size_t j, const BasisTuple& alpha);

}  // namespace zoll
