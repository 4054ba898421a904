#include "pke/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pke/algebra.hpp"

namespace pke {
namespace {

void check_partition(std::span<const unsigned> partition) {
  if (partition.empty()) throw std::invalid_argument("partition must be non-empty");
  for (unsigned part : partition) {
    if (part == 0) throw std::invalid_argument("partition blocks must be positive");
  }
}

// 1 + (x_first + ... + x_{first+size-1}) / (size + 1)
MultiPoly block_factor(std::size_t nvars, std::size_t first, unsigned size) {
  MultiPoly f = MultiPoly::constant(nvars, Rational(1));
  const Rational w(1, size + 1);
  for (std::size_t j = first; j < first + size; ++j) f += MultiPoly::variable(nvars, j) * w;
  return f;
}

void compositions_rec(unsigned remaining, std::vector<unsigned>& prefix, std::vector<std::vector<unsigned>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (unsigned part = 1; part <= remaining; ++part) {
    prefix.push_back(part);
    compositions_rec(remaining - part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

unsigned partition_gcd(std::span<const unsigned> partition) {
  check_partition(partition);
  unsigned h = 0;
  for (unsigned part : partition) h = std::gcd(h, part + 1);
  return h;
}

MultiPoly product_solution(std::span<const unsigned> partition) {
  check_partition(partition);
  const std::size_t n = std::accumulate(partition.begin(), partition.end(), std::size_t{0});
  MultiPoly p = MultiPoly::constant(n, Rational(1));
  std::size_t first = 0;
  for (unsigned part : partition) {
    p *= block_factor(n, first, part).pow(part + 1);
    first += part;
  }
  return p;
}

ToricPotential potential_for_power(std::span<const unsigned> partition, unsigned K) {
  if (K == 0) throw std::invalid_argument("potential_for_power: K must be positive");
  const unsigned h = partition_gcd(partition);
  const std::size_t n = std::accumulate(partition.begin(), partition.end(), std::size_t{0});
  MultiPoly p = MultiPoly::constant(n, Rational(1));
  std::size_t first = 0;
  for (unsigned part : partition) {
    p *= block_factor(n, first, part).pow(K * (part + 1) / h);
    first += part;
  }
  return ToricPotential::logarithmic(std::move(p), Rational(1));
}

MultiPoly canonicalize(const MultiPoly& p) {
  const Rational c = p.constant_term();
  if (c != 1 && c != -1) throw std::invalid_argument("canonicalize: constant term must be +-1");
  MultiPoly out = c > 0 ? p : -p;
  const std::size_t n = out.nvars();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> flip(n, Rational(1));
    flip[i] = -1;
    const Rational linear = out.coefficient(Monomial::variable(n, i));
    if (linear < 0) {
      out = scale_vars(out, flip);
    } else if (linear == 0 && scale_vars(out, flip) != out) {
      throw AmbiguousCanonicalForm("x" + std::to_string(i + 1) +
                                   " has no linear term but higher terms are not even in it");
    }
  }
  return out;
}

unsigned min_embedding_dim(const ToricPotential& potential) {
  if (potential.kind() != PotentialKind::Log) throw std::invalid_argument("min_embedding_dim: needs a log potential");
  const Rational& k = potential.k();
  if (k.get_den() != 1 || k <= 0) {
    throw std::invalid_argument("min_embedding_dim: exponent must be a positive integer");
  }
  const MultiPoly expanded = potential.P().pow(static_cast<unsigned>(k.get_num().get_ui()));
  return static_cast<unsigned>(expanded.term_count() - 1);
}

std::string manifold_label(std::span<const unsigned> partition) {
  check_partition(partition);
  std::string label;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (i > 0) label += " × ";
    label += "DP^" + std::to_string(partition[i]);
  }
  return label;
}

SolutionRecord make_record(std::span<const unsigned> partition, unsigned K) {
  ToricPotential potential = potential_for_power(partition, K);
  std::string name = "product";
  for (unsigned part : partition) name += "-" + std::to_string(part);
  name += "-K" + std::to_string(K);
  const unsigned dim = min_embedding_dim(potential);
  return SolutionRecord{
      std::move(name),
      std::vector<unsigned>(partition.begin(), partition.end()),
      static_cast<unsigned>(std::accumulate(partition.begin(), partition.end(), 0u)),
      product_solution(partition),
      partition_gcd(partition),
      K,
      std::move(potential),
      dim,
      manifold_label(partition),
  };
}

std::vector<std::vector<unsigned>> compositions_of(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> prefix;
  compositions_rec(n, prefix, out);
  return out;
}

std::vector<std::vector<unsigned>> partitions_of(unsigned n) {
  auto all = compositions_of(n);
  std::vector<std::vector<unsigned>> out;
  for (auto& c : all) {
    if (std::is_sorted(c.begin(), c.end())) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return out;
}

std::vector<SolutionRecord> catalog_list(unsigned max_n, unsigned K) {
  std::vector<SolutionRecord> out;
  for (unsigned n = 1; n <= max_n; ++n) {
    for (const auto& partition : partitions_of(n)) out.push_back(make_record(partition, K));
  }
  return out;
}

std::vector<MultiPoly> canonical_classes(std::span<const MultiPoly> solutions) {
  std::vector<MultiPoly> out;
  for (const auto& p : solutions) out.push_back(canonicalize(p));
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace pke
