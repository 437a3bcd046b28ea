#include "zinbiel/linear_system.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace zinbiel {

namespace {

// Primes stay below 2^25 so a lazily accumulated row of up to 8192 axpy
// steps (each adding a product < 2^50) cannot overflow a uint64.
constexpr std::uint32_t kPrimeCeiling = 1u << 25;
constexpr int kMaxAmbient = 8192;
constexpr int kExactMaxCols = 96;
constexpr int kMaxReferenceRotations = 6;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    const std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> table = [] {
    std::vector<std::uint32_t> out;
    std::vector<bool> sieve(5800, true);
    for (std::uint32_t i = 2; i < sieve.size(); ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (std::uint32_t j = i * i; j < sieve.size(); j += i) sieve[j] = false;
    }
    return out;
  }();
  return table;
}

bool is_prime_25bit(std::uint32_t n) {
  for (std::uint32_t q : trial_primes()) {
    if (static_cast<std::uint64_t>(q) * q > n) break;
    if (n % q == 0) return false;
  }
  return n > 1;
}

// Fixed descending sequence of primes just under 2^25; deterministic, so
// repeated solves of the same system produce identical output.
std::uint32_t prime_at(std::size_t index) {
  static std::vector<std::uint32_t> pool;
  static std::uint32_t cursor = kPrimeCeiling - 1;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (pool.size() <= index) {
    while (!is_prime_25bit(cursor)) cursor -= 2;
    pool.push_back(cursor);
    cursor -= 2;
  }
  return pool[index];
}

inline void axpy(std::uint64_t* __restrict dst, const std::uint64_t* __restrict piv,
                 std::uint32_t m, std::size_t from, std::size_t to) {
  const std::uint64_t m64 = m;
  for (std::size_t j = from; j < to; ++j) {
    dst[j] += m64 * static_cast<std::uint32_t>(piv[j]);
  }
}

struct EchelonShot {
  std::uint32_t p = 0;
  std::uint64_t det = 0;                    // product of pivots, mod p
  std::vector<std::pair<int, int>> pivots;  // (row index, column), in column order
  std::vector<std::uint64_t> ufree;         // rank x |free columns|, row-major
};

// Right-looking elimination mod p with a fixed deterministic row order.
// Rows arrive reduced (< p). Returns the pivot sequence plus the
// back-substituted reduced-echelon entries at the free columns.
EchelonShot echelon_mod_p(std::vector<std::vector<std::uint64_t>> mat, std::uint32_t p, int cols) {
  EchelonShot shot;
  shot.p = p;
  shot.det = 1 % p;
  const int nrows = static_cast<int>(mat.size());
  std::vector<int> order(nrows);
  for (int i = 0; i < nrows; ++i) order[i] = i;
  int npiv = 0;
  for (int c = 0; c < cols && npiv < nrows; ++c) {
    int found = -1;
    for (int i = npiv; i < nrows; ++i) {
      if (mat[order[i]][c] % p != 0) {
        found = i;
        break;
      }
    }
    if (found < 0) continue;
    std::swap(order[npiv], order[found]);
    const int r = order[npiv];
    auto& prow = mat[r];
    for (int j = c; j < cols; ++j) prow[j] %= p;
    shot.det = mul_mod(shot.det, prow[c], p);
    const std::uint64_t inv = inv_mod(prow[c], p);
    for (int j = c; j < cols; ++j) prow[j] = mul_mod(prow[j], inv, p);
    for (int i = npiv + 1; i < nrows; ++i) {
      auto& row = mat[order[i]];
      const std::uint64_t v = row[c] % p;
      row[c] = 0;
      if (v == 0) continue;
      axpy(row.data(), prow.data(), static_cast<std::uint32_t>(p - v), c + 1, cols);
    }
    shot.pivots.emplace_back(r, c);
    ++npiv;
  }

  std::vector<int> free_cols;
  {
    std::vector<bool> is_pivot(cols, false);
    for (const auto& pc : shot.pivots) is_pivot[pc.second] = true;
    for (int c = 0; c < cols; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
  }
  const int rank = npiv;
  const int nf = static_cast<int>(free_cols.size());
  shot.ufree.assign(static_cast<std::size_t>(rank) * nf, 0);
  std::vector<std::uint64_t> acc(nf);
  for (int k = rank - 1; k >= 0; --k) {
    const auto& prow = mat[shot.pivots[k].first];
    std::fill(acc.begin(), acc.end(), 0);
    for (int l = k + 1; l < rank; ++l) {
      const std::uint64_t m = prow[shot.pivots[l].second];
      if (m == 0) continue;
      axpy(acc.data(), shot.ufree.data() + static_cast<std::size_t>(l) * nf,
           static_cast<std::uint32_t>(m), 0, nf);
    }
    std::uint64_t* out = shot.ufree.data() + static_cast<std::size_t>(k) * nf;
    for (int fi = 0; fi < nf; ++fi) {
      const std::uint64_t s = acc[fi] % p;
      out[fi] = (prow[free_cols[fi]] + p - s) % p;
    }
  }
  return shot;
}

void crt_step(mpz_class& value, const mpz_class& modulus, std::uint64_t residue, std::uint32_t p) {
  const std::uint64_t cur = mpz_fdiv_ui(value.get_mpz_t(), p);
  const std::uint64_t minv = inv_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
  const std::uint64_t delta = mul_mod((residue + p - cur) % p, minv, p);
  mpz_addmul_ui(value.get_mpz_t(), modulus.get_mpz_t(), delta);
}

mpz_class crt_lift(const std::vector<std::uint64_t>& residues,
                   const std::vector<std::uint32_t>& primes) {
  mpz_class value(static_cast<unsigned long>(residues[0]));
  mpz_class modulus(static_cast<unsigned long>(primes[0]));
  for (std::size_t i = 1; i < residues.size(); ++i) {
    crt_step(value, modulus, residues[i], primes[i]);
    mpz_mul_ui(modulus.get_mpz_t(), modulus.get_mpz_t(), primes[i]);
  }
  mpz_class twice = value * 2;
  if (twice > modulus) value -= modulus;  // symmetric representative
  return value;
}

}  // namespace

LinearSystem::LinearSystem(int cols) : cols_(cols) {
  if (cols < 1 || cols > kMaxAmbient) throw std::invalid_argument("LinearSystem: unsupported column count");
}

void LinearSystem::add_dense_row(const std::vector<Rational>& row) {
  SparseRowQ terms;
  for (std::uint32_t c = 0; c < row.size(); ++c) {
    if (row[c] != 0) terms.emplace_back(c, row[c]);
  }
  add_row(terms);
}

void LinearSystem::add_row(const SparseRowQ& terms) {
  SparseRowQ merged = terms;
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRowQ compact;
  for (const auto& [c, v] : merged) {
    if (c >= static_cast<std::uint32_t>(cols_)) throw std::invalid_argument("add_row: column out of range");
    if (!compact.empty() && compact.back().first == c) {
      compact.back().second += v;
    } else {
      compact.emplace_back(c, v);
    }
  }

  IntRow row;
  mpz_class den_lcm = 1;
  for (const auto& [c, v] : compact) {
    if (v == 0) continue;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    den_lcm = l;
  }
  for (const auto& [c, v] : compact) {
    if (v == 0) continue;
    row.terms.emplace_back(c, mpz_class(v.get_num() * (den_lcm / v.get_den())));
  }
  if (row.terms.empty()) return;

  mpz_class content = 0;
  for (const auto& [c, v] : row.terms) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    content = g;
  }
  const bool flip = sgn(row.terms.front().second) < 0;
  for (auto& [c, v] : row.terms) {
    v /= content;
    if (flip) v = -v;
  }

  std::uint64_t h = 1469598103934665603ull;
  for (const auto& [c, v] : row.terms) {
    h = (h ^ c) * 1099511628211ull;
    h = (h ^ mpz_fdiv_ui(v.get_mpz_t(), 0xFFFFFFFBu)) * 1099511628211ull;
    h = (h ^ static_cast<std::uint64_t>(sgn(v) + 1)) * 1099511628211ull;
  }
  row.hash = h;

  for (auto [it, end] = dedupe_.equal_range(h); it != end; ++it) {
    if (rows_[it->second].terms == row.terms) return;  // equation already stored
  }
  dedupe_.emplace(h, static_cast<std::uint32_t>(rows_.size()));
  rows_.push_back(std::move(row));
}

LinearSystem::KernelResult LinearSystem::solve_kernel() {
  if (rows_.empty()) {
    return KernelResult{Subspace::full(cols_), 0};
  }

  const auto reversed_image = [&](const IntRow& row, std::uint32_t p) {
    std::vector<std::uint64_t> dense(cols_, 0);
    for (const auto& [c, v] : row.terms) dense[cols_ - 1 - c] = mpz_fdiv_ui(v.get_mpz_t(), p);
    return dense;
  };

  // Exact gate: true iff every stored equation annihilates every row of
  // the candidate basis. This is the only acceptance criterion; failed
  // candidates send us back for more primes or a new sieve prime.
  const auto verifies = [&](const MatrixQ& candidate) {
    for (const IntRow& row : rows_) {
      for (int r = 0; r < candidate.rows(); ++r) {
        Rational dot = 0;
        for (const auto& [c, v] : row.terms) {
          const Rational& b = candidate.at(r, c);
          if (b != 0) dot += Rational(v) * b;
        }
        if (dot != 0) return false;
      }
    }
    return true;
  };

  const auto finish = [&](MatrixQ candidate) {
    Subspace kernel = candidate.rows() == 0
                          ? Subspace::zero(cols_)
                          : Subspace::from_canonical_rows(cols_, std::move(candidate));
    const int dim = kernel.dim();
    return KernelResult{std::move(kernel), cols_ - dim};
  };

  std::size_t reference_prime_index = 0;
  for (int rotation = 0; rotation < kMaxReferenceRotations; ++rotation) {
    const std::uint32_t p0 = prime_at(reference_prime_index);

    // Sieve: keep rows that extend a mod-p0 echelon, defer the rest.
    std::vector<int> accepted;
    std::vector<std::vector<std::uint64_t>> ref_rows;
    std::vector<int> pivot_row_of_col(cols_, -1);
    for (int ri = 0; ri < static_cast<int>(rows_.size()); ++ri) {
      std::vector<std::uint64_t> dense = reversed_image(rows_[ri], p0);
      for (int c = 0; c < cols_; ++c) {
        const std::uint64_t v = dense[c] % p0;
        dense[c] = 0;
        if (v == 0) continue;
        const int pr = pivot_row_of_col[c];
        if (pr >= 0) {
          axpy(dense.data(), ref_rows[pr].data(), static_cast<std::uint32_t>(p0 - v), c + 1, cols_);
        } else {
          dense[c] = v;
          for (int j = c + 1; j < cols_; ++j) dense[j] %= p0;
          const std::uint64_t inv = inv_mod(v, p0);
          for (int j = c; j < cols_; ++j) dense[j] = mul_mod(dense[j], inv, p0);
          pivot_row_of_col[c] = static_cast<int>(ref_rows.size());
          ref_rows.push_back(std::move(dense));
          accepted.push_back(ri);
          break;
        }
      }
    }
    ref_rows.clear();

    if (cols_ <= kExactMaxCols) {
      // Plain exact elimination on the accepted rows, in reversed column
      // order so the free-column construction is already canonical.
      MatrixQ m(static_cast<int>(accepted.size()), cols_);
      for (int i = 0; i < m.rows(); ++i) {
        for (const auto& [c, v] : rows_[accepted[i]].terms) m.at(i, cols_ - 1 - c) = Rational(v);
      }
      RrefResult red = rref(std::move(m));
      std::vector<bool> is_pivot(cols_, false);
      for (int c : red.pivot_cols) is_pivot[c] = true;
      std::vector<int> free_cols;
      for (int c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
      MatrixQ candidate(static_cast<int>(free_cols.size()), cols_);
      int out = 0;
      for (auto it = free_cols.rbegin(); it != free_cols.rend(); ++it, ++out) {
        const int f = *it;
        candidate.at(out, cols_ - 1 - f) = 1;
        for (int k = 0; k < red.rank; ++k) {
          const Rational& u = red.matrix.at(k, f);
          if (u != 0) candidate.at(out, cols_ - 1 - red.pivot_cols[k]) = -u;
        }
      }
      if (verifies(candidate)) return finish(std::move(candidate));
      ++reference_prime_index;  // a deferred row was exactly independent
      continue;
    }

    // Multi-modular path on the accepted rows.
    std::vector<std::vector<std::uint64_t>> images;
    images.reserve(accepted.size());
    for (int ri : accepted) images.push_back(reversed_image(rows_[ri], p0));
    EchelonShot reference = echelon_mod_p(std::move(images), p0, cols_);
    const int rank = static_cast<int>(reference.pivots.size());
    std::vector<int> free_cols;
    {
      std::vector<bool> is_pivot(cols_, false);
      for (const auto& pc : reference.pivots) is_pivot[pc.second] = true;
      for (int c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    const int nf = static_cast<int>(free_cols.size());
    if (nf == 0) {
      // rank(A) >= rank_p0(accepted) = cols: the kernel is trivial.
      return KernelResult{Subspace::zero(cols_), cols_};
    }

    // Hadamard bound over the pivot rows caps every minor, hence every
    // determinant-scaled kernel entry we lift.
    mpz_class norm_product = 1;
    for (const auto& pc : reference.pivots) {
      mpz_class norm2 = 0;
      for (const auto& [c, v] : rows_[accepted[pc.first]].terms) norm2 += v * v;
      norm_product *= norm2;
    }
    const std::size_t target_bits = mpz_sizeinbase(norm_product.get_mpz_t(), 2) / 2 + 4;
    const std::size_t max_primes = target_bits / 24 + 2;

    std::vector<EchelonShot> shots;
    std::vector<std::uint32_t> shot_primes;
    shots.push_back(std::move(reference));
    shot_primes.push_back(p0);

    bool done = false;
    MatrixQ verified_candidate;
    std::size_t next_checkpoint = 4;
    std::size_t prime_cursor = reference_prime_index + 1;
    int discarded = 0;
    while (true) {
      const bool exhausted = shots.size() >= max_primes;
      if (exhausted || shots.size() >= next_checkpoint) {
        next_checkpoint = shots.size() * 2;
        std::vector<std::uint64_t> det_res(shots.size());
        for (std::size_t s = 0; s < shots.size(); ++s) det_res[s] = shots[s].det;
        const mpz_class det = crt_lift(det_res, shot_primes);
        MatrixQ cand(nf, cols_);
        std::vector<std::uint64_t> res(shots.size());
        for (int out = 0; out < nf; ++out) {
          const int fi = nf - 1 - out;  // descending free column = ascending pivot
          cand.at(out, cols_ - 1 - free_cols[fi]) = 1;
          for (int k = 0; k < rank; ++k) {
            for (std::size_t s = 0; s < shots.size(); ++s) {
              const EchelonShot& sh = shots[s];
              const std::uint64_t u = sh.ufree[static_cast<std::size_t>(k) * nf + fi];
              res[s] = (u == 0) ? 0 : mul_mod(sh.det, sh.p - u, sh.p);
            }
            const mpz_class w = crt_lift(res, shot_primes);
            if (w != 0) {
              Rational q(w, det);
              q.canonicalize();
              cand.at(out, cols_ - 1 - shots[0].pivots[k].second) = std::move(q);
            }
          }
        }
        if (is_canonical_rref(cand) && verifies(cand)) {
          verified_candidate = std::move(cand);
          done = true;
          break;
        }
        if (exhausted) break;
      }
      const std::uint32_t p = prime_at(prime_cursor++);
      images.clear();
      for (int ri : accepted) images.push_back(reversed_image(rows_[ri], p));
      EchelonShot shot = echelon_mod_p(std::move(images), p, cols_);
      if (shot.pivots == shots[0].pivots) {
        shots.push_back(std::move(shot));
        shot_primes.push_back(p);
      } else if (++discarded > 32) {
        break;  // reference prime looks unlucky
      }
    }
    if (done) return finish(std::move(verified_candidate));
    ++reference_prime_index;
  }
  throw std::runtime_error("LinearSystem::solve_kernel: failed to certify a kernel basis");
}

}  // namespace zinbiel
