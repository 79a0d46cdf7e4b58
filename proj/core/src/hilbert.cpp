#include "k3/hilbert.hpp"

#include <map>

#include "k3/binary_form.hpp"
#include "k3/invariants.hpp"
#include "k3/matrix.hpp"
#include "k3/modarith.hpp"
#include "k3/weierstrass.hpp"

namespace k3 {

std::vector<TorusWeight> torus_weight_table() {
  const auto& vars = *surface_variables();
  std::vector<TorusWeight> table;
  for (int i = 0; i <= kG2Degree; ++i) table.push_back({2 * i - kG2Degree, vars.weight(table.size())});
  for (int i = 0; i <= kG3Degree; ++i) table.push_back({2 * i - kG3Degree, vars.weight(table.size())});
  return table;
}

HilbertSeries molien_series(int N) {
  if (N < 0) throw PreconditionError("truncation order must be nonnegative");
  const auto table = torus_weight_table();
  // |q| <= 2 t for every monomial, since |a| <= 2 b for each factor.
  const int offset = 2 * N;
  const int width = 4 * N + 1;
  std::vector<std::vector<mpz_class>> c(static_cast<std::size_t>(N) + 1,
                                        std::vector<mpz_class>(static_cast<std::size_t>(width)));
  c[0][offset] = 1;
  for (const auto& [a, b] : table) {
    if (2 * b < (a < 0 ? -a : a)) throw std::logic_error("torus weight outside the q-range bound");
    for (int t = b; t <= N; ++t) {
      auto& row = c[t];
      const auto& prev = c[t - b];
      const int lo = std::max(0, a);
      const int hi = std::min(width, width + a);
      for (int q = lo; q < hi; ++q) {
        if (prev[q - a] != 0) row[q] += prev[q - a];
      }
    }
  }
  HilbertSeries h;
  h.coefficients.reserve(static_cast<std::size_t>(N) + 1);
  for (int t = 0; t <= N; ++t) {
    const mpz_class below = offset >= 2 ? c[t][offset - 2] : mpz_class(0);
    mpz_class dim = c[t][offset] - below;
    if (dim < 0) throw std::logic_error("negative Hilbert series coefficient at t^" + std::to_string(t));
    h.coefficients.push_back(std::move(dim));
  }
  return h;
}

namespace {

std::vector<MultiPoly> derive_raising_images() {
  // Coefficient ring Z[u, eps]; read off the eps^1 part of gamma_eps . f.
  const auto& uvars = *surface_variables();
  std::vector<std::string> names;
  std::vector<int> weights;
  for (std::size_t i = 0; i < uvars.size(); ++i) {
    names.push_back(uvars.name(i));
    weights.push_back(uvars.weight(i));
  }
  names.push_back("eps");
  weights.push_back(0);
  const auto vars = VariableTable::make(names, weights);
  const std::size_t eps = uvars.size();
  const CoeffRing zz = CoeffRing::integers();

  const MultiPoly zero(vars, zz);
  const MultiPoly one = MultiPoly::constant(vars, Scalar(1));
  const Mat2<MultiPoly> gamma{one, zero, MultiPoly::variable(vars, zz, eps), one};

  std::vector<MultiPoly> images;
  std::size_t offset = 0;
  for (int degree : {kG2Degree, kG3Degree}) {
    std::vector<MultiPoly> coeffs;
    for (int j = 0; j <= degree; ++j) coeffs.push_back(MultiPoly::variable(vars, zz, offset + j));
    const auto moved = binary_substitute(BinaryForm<MultiPoly>(std::move(coeffs)), gamma);
    for (int j = 0; j <= degree; ++j) {
      MultiPoly image(surface_variables(), zz);
      for (const auto& [e, c] : moved[j].terms()) {
        if (e[eps] != 1) continue;
        image.add_term(Exponents(e.begin(), e.begin() + static_cast<long>(eps)), c);
      }
      images.push_back(std::move(image));
    }
    offset += static_cast<std::size_t>(degree) + 1;
  }
  return images;
}

}  // namespace

const std::vector<MultiPoly>& raising_images() {
  static const std::vector<MultiPoly> images = derive_raising_images();
  return images;
}

MultiPoly raising_operator(const MultiPoly& p) {
  if (!(p.variables() == *surface_variables())) {
    throw DomainError("raising operator needs a polynomial in the surface variables");
  }
  const auto& images = raising_images();
  const Scalar one = p.ring().one();
  MultiPoly out(p.variable_table(), p.ring());
  for (std::size_t j = 0; j < images.size(); ++j) {
    const MultiPoly dp = p.derivative(j);
    if (dp.is_zero()) continue;
    MultiPoly image(p.variable_table(), p.ring());
    for (const auto& [e, c] : images[j].terms()) image.add_term(e, lift_like(one, c));
    out += image * dp;
  }
  return out;
}

namespace {

// Monomials of the given degree in `count` variables, bucketed by q-weight.
std::map<int, std::vector<Exponents>> monomials_by_weight(int count, int degree,
                                                          const std::vector<TorusWeight>& table,
                                                          std::size_t first) {
  std::map<int, std::vector<Exponents>> out;
  Exponents e(static_cast<std::size_t>(count), 0);
  auto rec = [&](auto&& self, int var, int left, int weight) -> void {
    if (var == count - 1) {
      e[var] = static_cast<std::uint32_t>(left);
      out[weight + left * table[first + var].q].push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = static_cast<std::uint32_t>(k);
      self(self, var + 1, left - k, weight + k * table[first + var].q);
    }
  };
  rec(rec, 0, degree, 0);
  return out;
}

}  // namespace

std::size_t invariant_dimension_oracle(int d, int bound) {
  if (d < 0) throw PreconditionError("negative degree");
  if (d > bound) {
    throw PreconditionError("degree " + std::to_string(d) + " exceeds the oracle feasibility bound " +
                            std::to_string(bound));
  }
  const auto table = torus_weight_table();
  const auto& images = raising_images();
  const int n2 = kG2Degree + 1;
  const int n3 = kG3Degree + 1;
  const int w2 = table.front().t;
  const int w3 = table.back().t;
  const std::uint64_t p = modarith::kDefaultPrime;

  std::size_t kernel = 0;
  for (int a = 0; a * w2 <= d; ++a) {
    if ((d - a * w2) % w3 != 0) continue;
    const int b = (d - a * w2) / w3;
    const auto left = monomials_by_weight(n2, a, table, 0);
    const auto right = monomials_by_weight(n3, b, table, static_cast<std::size_t>(n2));

    std::vector<Exponents> rows;
    for (const auto& [weight, ms] : left) {
      auto it = right.find(-weight);
      if (it == right.end()) continue;
      for (const auto& m2 : ms) {
        for (const auto& m3 : it->second) {
          Exponents e = m2;
          e.insert(e.end(), m3.begin(), m3.end());
          rows.push_back(std::move(e));
        }
      }
    }
    if (rows.empty()) continue;

    // Image of each basis monomial m: sum_j e_j (m / u_j) L_j.
    std::map<Exponents, std::size_t> column_of;
    std::vector<std::vector<std::pair<std::size_t, mpz_class>>> sparse(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::map<std::size_t, mpz_class> acc;
      for (std::size_t j = 0; j < rows[r].size(); ++j) {
        if (rows[r][j] == 0) continue;
        for (const auto& [le, lc] : images[j].terms()) {
          Exponents target = rows[r];
          target[j] -= 1;
          for (std::size_t k = 0; k < target.size(); ++k) target[k] += le[k];
          const auto [it, inserted] = column_of.emplace(std::move(target), column_of.size());
          acc[it->second] += mpz_class(rows[r][j]) * lc.integer();
        }
      }
      for (auto& [col, v] : acc) {
        if (v != 0) sparse[r].emplace_back(col, std::move(v));
      }
    }
    const std::size_t nrows = rows.size();
    const std::size_t ncols = column_of.size();
    std::size_t rank = 0;
    if (ncols > 0) {
      std::vector<std::uint64_t> residues(nrows * ncols, 0);
      for (std::size_t r = 0; r < nrows; ++r) {
        for (const auto& [col, v] : sparse[r]) residues[r * ncols + col] = modarith::reduce(v, p);
      }
      rank = rank_mod_p(std::move(residues), nrows, ncols, p);
      // rank over Q >= rank mod p, and never exceeds min(rows, cols).
      if (rank != std::min(nrows, ncols)) {
        std::vector<mpz_class> entries(nrows * ncols);
        for (std::size_t r = 0; r < nrows; ++r) {
          for (const auto& [col, v] : sparse[r]) entries[r * ncols + col] = v;
        }
        rank = integer_rank(std::move(entries), nrows, ncols);
      }
    }
    kernel += nrows - rank;
  }
  return kernel;
}

CharacterSeries character_series(int N) {
  const int shift = character_extension().extension_generator_weight;
  CharacterSeries out{molien_series(N), {}};
  out.with_characters = out.plain;
  for (int k = shift; k <= N; ++k) out.with_characters.coefficients[k] += out.plain[k - shift];
  return out;
}

}  // namespace k3
