#pragma once

#include <span>
#include <string>
#include <vector>

#include "pke/errors.hpp"
#include "pke/geometry.hpp"
#include "pke/multipoly.hpp"

namespace pke {

/// A product-of-projective-spaces solution together with one admissible
/// power K of its diastasis.
struct SolutionRecord {
  std::string name;
  std::vector<unsigned> partition;  ///< block sizes n_1..n_k
  unsigned n = 0;                   ///< sum of the block sizes
  MultiPoly P;                      ///< prod_i (1 + (sum of block i)/(n_i+1))^(n_i+1)
  unsigned h = 1;                   ///< gcd of the n_i + 1
  unsigned K = 1;
  ToricPotential potential;
  unsigned min_embedding_dim = 0;
  std::string manifold_label;
};

/// P = prod_i (1 + (x_j + ... over block i)/(n_i + 1))^(n_i + 1), blocks
/// taken consecutively in partition order.
MultiPoly product_solution(std::span<const unsigned> partition);

/// gcd of {n_i + 1}.
unsigned partition_gcd(std::span<const unsigned> partition);

/// log P with P = prod_i (block_i)^(K (n_i + 1) / h); the power is folded
/// into P so the exponent k is 1.
ToricPotential potential_for_power(std::span<const unsigned> partition, unsigned K);

/// Sign representative under P -> -P and x_i -> -x_i: P(0) = 1 and every
/// linear coefficient non-negative. A zero linear coefficient is accepted
/// only when P is even in that variable; otherwise AmbiguousCanonicalForm.
MultiPoly canonicalize(const MultiPoly& p);

/// (number of monomials of the expanded P^k) - 1, for log potentials whose
/// exponent k is a positive integer.
unsigned min_embedding_dim(const ToricPotential& potential);

/// "DP^1 × DP^2" style label.
std::string manifold_label(std::span<const unsigned> partition);

SolutionRecord make_record(std::span<const unsigned> partition, unsigned K);

/// Partitions of n with non-decreasing parts, e.g. 3 -> [1,1,1], [1,2], [3].
std::vector<std::vector<unsigned>> partitions_of(unsigned n);

/// Ordered compositions of n (every block order).
std::vector<std::vector<unsigned>> compositions_of(unsigned n);

/// Records for every partition of every n in [1, max_n] at power K.
std::vector<SolutionRecord> catalog_list(unsigned max_n, unsigned K);

/// Canonical representatives of a solution list, distinct and sorted.
std::vector<MultiPoly> canonical_classes(std::span<const MultiPoly> solutions);

}  // namespace pke
