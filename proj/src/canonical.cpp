#include "symrank/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace symrank {

int JordanBlockGroup::multiplicity() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

void JordanSpec::validate() const {
  if (n < 1) throw std::invalid_argument("jordan spec: n must be at least 1");
  if (blocks.empty()) throw std::invalid_argument("jordan spec: no eigenvalue groups");
  int total = 0;
  for (std::size_t g = 0; g < blocks.size(); ++g) {
    const auto& group = blocks[g];
    if (group.sizes.empty()) {
      throw std::invalid_argument("jordan spec: eigenvalue " + group.eigenvalue.str() + " has no blocks");
    }
    for (std::size_t b = 0; b < group.sizes.size(); ++b) {
      if (group.sizes[b] < 1) throw std::invalid_argument("jordan spec: block sizes must be positive");
      if (b > 0 && group.sizes[b] < group.sizes[b - 1]) {
        throw std::invalid_argument("jordan spec: block sizes of " + group.eigenvalue.str() +
                                    " must be ascending");
      }
    }
    for (std::size_t h = 0; h < g; ++h) {
      if (blocks[h].eigenvalue == group.eigenvalue) {
        throw std::invalid_argument("jordan spec: repeated eigenvalue " + group.eigenvalue.str());
      }
    }
    total += group.multiplicity();
  }
  if (total != n) {
    throw std::invalid_argument("jordan spec: block sizes sum to " + std::to_string(total) + ", expected n = " +
                                std::to_string(n));
  }
}

const JordanBlockGroup& JordanSpec::group(const GaussianRational& lambda) const {
  for (const auto& g : blocks) {
    if (g.eigenvalue == lambda) return g;
  }
  throw std::invalid_argument("eigenvalue " + lambda.str() + " is not in the spectrum");
}

std::string JordanSpec::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t g = 0; g < blocks.size(); ++g) {
    if (g) os << ", ";
    os << blocks[g].eigenvalue.str() << ":[";
    for (std::size_t b = 0; b < blocks[g].sizes.size(); ++b) os << (b ? "," : "") << blocks[g].sizes[b];
    os << ']';
  }
  os << '}';
  return os.str();
}

void FrobeniusSpec::validate() const {
  if (invariant_factors.empty()) throw std::invalid_argument("frobenius spec: no invariant factors");
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    const auto& p = invariant_factors[i];
    if (p.degree() < 1 || !p.is_monic()) {
      throw std::invalid_argument("frobenius spec: invariant factor " + std::to_string(i + 1) +
                                  " must be monic of degree >= 1");
    }
    if (i > 0 && !divides(invariant_factors[i - 1], p)) {
      throw std::invalid_argument("frobenius spec: invariant factor " + std::to_string(i) + " does not divide factor " +
                                  std::to_string(i + 1));
    }
  }
}

int FrobeniusSpec::n() const {
  int total = 0;
  for (const auto& p : invariant_factors) total += p.degree();
  return total;
}

ExactMatrix build_jordan(const JordanSpec& spec) {
  spec.validate();
  std::vector<ExactMatrix> blocks;
  for (const auto& group : spec.blocks) {
    for (int size : group.sizes) {
      const auto s = static_cast<std::size_t>(size);
      ExactMatrix j(s, s);
      for (std::size_t i = 0; i < s; ++i) {
        j(i, i) = group.eigenvalue;
        if (i + 1 < s) j(i, i + 1) = GaussianRational(1);
      }
      blocks.push_back(std::move(j));
    }
  }
  return block_diagonal(blocks);
}

int min_poly_degree(const JordanSpec& spec) {
  spec.validate();
  int m = 0;
  for (const auto& group : spec.blocks) m += group.largest();
  return m;
}

JordanCombinatorics jordan_combinatorics(const JordanSpec& spec, const GaussianRational& lambda) {
  spec.validate();
  const JordanBlockGroup& group = spec.group(lambda);
  JordanCombinatorics out;
  out.multiplicity = group.multiplicity();
  int start = 1;
  for (int size : group.sizes) {
    out.block_starts.push_back(start);
    start += size;
  }
  out.block_count = static_cast<int>(group.sizes.size());
  out.last_block_start = out.block_starts.back();
  out.largest_block = out.multiplicity + 1 - out.last_block_start;

  const int m = out.multiplicity;
  for (int i = 1; i <= m; ++i) {
    const int lo = m - i + 2;
    const auto hits = std::count_if(out.block_starts.begin(), out.block_starts.end(),
                                    [&](int b) { return b >= lo && b <= m; });
    out.d.push_back(1 + static_cast<int>(hits));
  }
  return out;
}

FrobeniusSpec jordan_to_frobenius(const JordanSpec& spec) {
  spec.validate();
  std::size_t factors = 0;
  for (const auto& group : spec.blocks) factors = std::max(factors, group.sizes.size());

  FrobeniusSpec out;
  // Factor r (0 = smallest) takes the (factors - r)-th largest block of each eigenvalue.
  for (std::size_t r = 0; r < factors; ++r) {
    const std::size_t rank_from_top = factors - 1 - r;
    ExactPolynomial p(GaussianRational(1));
    for (const auto& group : spec.blocks) {
      if (rank_from_top < group.sizes.size()) {
        const int size = group.sizes[group.sizes.size() - 1 - rank_from_top];
        p *= ExactPolynomial::from_root(group.eigenvalue, size);
      }
    }
    out.invariant_factors.push_back(std::move(p));
  }
  return out;
}

ExactMatrix build_frobenius(const FrobeniusSpec& spec) {
  spec.validate();
  std::vector<ExactMatrix> blocks;
  for (const auto& p : spec.invariant_factors) blocks.push_back(build_companion(p));
  return block_diagonal(blocks);
}

std::size_t min_poly_degree_numeric(const FloatMatrix& m, std::optional<double> tol) {
  require_square(m, "min_poly_degree_numeric");
  const std::size_t n = m.rows();
  std::vector<FloatMatrix> powers{FloatMatrix::identity(n)};
  std::size_t previous_rank = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(m * powers.back());
    FloatMatrix columns(n * n, k + 1);
    for (std::size_t c = 0; c <= k; ++c) {
      double norm = 0.0;
      for (const auto& x : powers[c].data()) norm = std::max(norm, std::abs(x));
      const double scale = norm > 0.0 ? 1.0 / norm : 1.0;
      const auto flat = powers[c].data();
      for (std::size_t r = 0; r < n * n; ++r) columns(r, c) = flat[r] * scale;
    }
    const std::size_t rank = rank_numeric(columns, tol).rank;
    if (rank == previous_rank) return k;
    previous_rank = rank;
  }
  return n;
}

Unimodular random_unimodular(std::size_t n, std::uint64_t seed, int magnitude) {
  if (magnitude < 1) throw std::invalid_argument("random_unimodular: magnitude must be at least 1");
  Unimodular u{ExactMatrix::identity(n), ExactMatrix::identity(n)};
  if (n < 2) return u;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> index(0, n - 1);
  std::uniform_int_distribution<int> coefficient(1, magnitude);
  std::bernoulli_distribution negative(0.5);
  for (std::size_t step = 0; step < 2 * n; ++step) {
    const std::size_t i = index(rng);
    std::size_t j = index(rng);
    while (j == i) j = index(rng);
    const int c = negative(rng) ? -coefficient(rng) : coefficient(rng);
    const GaussianRational gc(c);
    // Left-multiply q by (I + c E_ij): row i += c * row j.
    for (std::size_t col = 0; col < n; ++col) u.q(i, col) += gc * u.q(j, col);
    // Right-multiply q_inverse by (I - c E_ij): column j -= c * column i.
    for (std::size_t row = 0; row < n; ++row) u.q_inverse(row, j) -= gc * u.q_inverse(row, i);
  }
  return u;
}

ExactMatrix random_similarity(const ExactMatrix& m, std::uint64_t seed, int magnitude) {
  require_square(m, "random_similarity");
  const Unimodular u = random_unimodular(m.rows(), seed, magnitude);
  return u.q * m * u.q_inverse;
}

}  // namespace symrank
