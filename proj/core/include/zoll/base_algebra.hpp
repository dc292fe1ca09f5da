#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "zoll/scalar.hpp"

namespace zoll {

/// Coordinates of an algebra element with respect to the algebra basis.
using AlgElement = std::vector<Scalar>;

/// Finite-dimensional graded commutative Q-algebra given by structure
/// constants on a named basis.
class GradedAlgebra {
 public:
  struct BasisVector {
    std::string name;
    int degree = 0;
  };

  /// products[a][b] = basis_a * basis_b. Throws ConfigError on any law
  /// violation (commutativity, associativity, unit, degree additivity),
  /// naming the failing pair or triple.
  GradedAlgebra(std::vector<BasisVector> basis, std::vector<std::vector<AlgElement>> products,
                std::size_t unit);

  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<BasisVector>& basis() const noexcept { return basis_; }
  std::size_t unit_index() const noexcept { return unit_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  AlgElement zero() const { return AlgElement(dimension(), 0); }
  AlgElement unit() const;
  AlgElement basis_element(std::size_t i) const;

  AlgElement mul(const AlgElement& x, const AlgElement& y) const;
  const AlgElement& basis_product(std::size_t a, std::size_t b) const { return products_[a][b]; }
  AlgElement pow(const AlgElement& x, unsigned k) const;

  /// Degree if x is nonzero and homogeneous.
  std::optional<int> homogeneous_degree(const AlgElement& x) const;
  bool is_homogeneous_of_degree(const AlgElement& x, int degree) const;

  std::string format(const AlgElement& x) const;

 private:
  void validate() const;

  std::vector<BasisVector> basis_;
  std::vector<std::vector<AlgElement>> products_;
  std::size_t unit_;
};

AlgElement alg_mul(const GradedAlgebra& algebra, const AlgElement& x, const AlgElement& y);
AlgElement add(const AlgElement& x, const AlgElement& y);
AlgElement scale(const Scalar& c, const AlgElement& x);
bool is_zero(const AlgElement& x);

/// Permutation of {0,...,n} in one-line notation: perm[i] = pi(i).
using Permutation = std::vector<std::size_t>;

/// Stand-in for the homology operad of the stable genus-zero moduli
/// spaces: one algebra per arity n >= 2 (the space with n+1 points),
/// phi classes, an action of the permutations of {0..n}, and clutching maps.
class BaseOperadConfig {
 public:
  struct Arity {
    GradedAlgebra algebra;
    /// phi[i] for i = 0..n, each homogeneous of degree 1.
    std::vector<AlgElement> phi;
    /// Images of basis vectors under listed permutations; unlisted
    /// permutations (and unlisted basis vectors) act as the identity.
    std::map<Permutation, std::vector<AlgElement>> action;
  };

  BaseOperadConfig() = default;

  /// B_n = Q, phi = 0, clutching = multiplication, trivial action, for
  /// arities 2..max_arity.
  static BaseOperadConfig trivial(std::size_t max_arity = 12);
  /// Q[h]/h^2 with every phi_i = h, trivial action; clutching is the
  /// tensor product composed with h (x) 1, 1 (x) h -> h, h (x) h -> 0.
  static BaseOperadConfig truncated_rank2(std::size_t max_arity = 4);

  bool has_arity(std::size_t n) const { return arities_.count(n) != 0; }
  const Arity& arity(std::size_t n) const;
  const GradedAlgebra& algebra(std::size_t n) const { return arity(n).algebra; }
  const AlgElement& phi(std::size_t n, std::size_t i) const;
  std::vector<std::size_t> arities() const;

  /// pi acting on an element of B_n.
  AlgElement act(const Permutation& pi, const AlgElement& x) const;

  bool has_clutching(std::size_t m, std::size_t n, std::size_t j) const;
  /// Clutching B_m (x) B_n -> B_{m+n-1} at slot j; ConfigError if absent.
  AlgElement clutch(std::size_t m, std::size_t n, std::size_t j, const AlgElement& x,
                    const AlgElement& y) const;

  const std::string& name() const noexcept { return name_; }

  // Builders used by the loader and the built-in configurations.
  void set_name(std::string name) { name_ = std::move(name); }
  void add_arity(std::size_t n, Arity data);
  /// table[a][b] is the image of basis_a (x) basis_b in B_{m+n-1}.
  void add_clutching(std::size_t m, std::size_t n, std::size_t j,
                     std::vector<std::vector<AlgElement>> table);
  /// Checks phi degrees, the group-action law and clutching shapes.
  void validate() const;

 private:
  std::string name_ = "custom";
  std::map<std::size_t, Arity> arities_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<std::vector<AlgElement>>>
      clutching_;
};

/// Parses the line-oriented base configuration format (see README).
BaseOperadConfig parse_base_config(std::string_view text);
BaseOperadConfig load_config(const std::filesystem::path& path);

/// Composition of permutations: (pi * rho)(i) = pi(rho(i)).
Permutation compose(const Permutation& pi, const Permutation& rho);
Permutation inverse(const Permutation& pi);
Permutation identity_permutation(std::size_t n);
/// All permutations of {0..n}.
std::vector<Permutation> all_permutations(std::size_t n);
/// All permutations of {0..n} fixing 0.
std::vector<Permutation> permutations_fixing_zero(std::size_t n);
/// The cycle (0 1 ... n): i -> i+1 mod n+1.
Permutation cyclic_tau(std::size_t n);
/// pi o_j rho as a permutation of {0..m+n-1}, built from the explicit
/// formula for its inverse. pi permutes {0..m}, rho permutes {0..n}, both
/// fix 0.
Permutation operadic_composite(const Permutation& pi, const Permutation& rho, std::size_t j);

}  // namespace zoll
