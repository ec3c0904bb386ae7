#include "minspan/profiles.hpp"

#include <cstdint>

#include "minspan/errors.hpp"

namespace minspan {

DimensionProfiles profiles_from_basis(const ShortestBasis& b) {
  if (!b.certified) throw PreconditionError("profiles require a certified shortest basis");
  const std::size_t n = b.matrix.spec().n_symbols();
  DimensionProfiles p;
  p.state_dims.assign(n + 1, 0);
  p.transition_dims.assign(n, 0);
  p.in_dims.assign(n, 0);
  p.out_dims.assign(n, 0);
  for (const Span& s : b.spans) {
    if (s.empty) continue;
    for (std::size_t k = s.start + 1; k <= s.end; ++k) ++p.state_dims[k];
    for (std::size_t k = s.start; k <= s.end; ++k) ++p.transition_dims[k];
    ++p.in_dims[s.start];
    ++p.out_dims[s.end];
  }
  return p;
}

namespace {

// rank of the columns of g at symbol times in [from, to)
std::size_t range_rank(const GeneratorMatrix& g, std::size_t from, std::size_t to) {
  const CodeSpec& spec = g.spec();
  if (from >= to || g.n_rows() == 0) return 0;
  std::vector<std::size_t> cols;
  for (std::size_t k = from; k < to; ++k)
    for (std::size_t i = 0; i < spec.section_size(k); ++i) cols.push_back(spec.offset(k) + i);
  return rank_of(g.matrix().columns(cols));
}

}  // namespace

std::vector<std::size_t> oracle_state_dims(const GeneratorMatrix& g) {
  const std::size_t n = g.spec().n_symbols();
  const std::size_t k_rows = g.n_rows();
  std::vector<std::size_t> dims(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) {
    // dim C_{k-} = k_rows - rank(cols at times >= k); dim C_{k+} symmetric.
    std::size_t past = k_rows - range_rank(g, k, n);
    std::size_t future = k_rows - range_rank(g, 0, k);
    dims[k] = k_rows - past - future;
  }
  return dims;
}

std::vector<std::size_t> oracle_transition_dims(const GeneratorMatrix& g) {
  const std::size_t n = g.spec().n_symbols();
  const std::size_t k_rows = g.n_rows();
  std::vector<std::size_t> dims(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t past = k_rows - range_rank(g, k, n);        // zero at times >= k
    std::size_t future = k_rows - range_rank(g, 0, k + 1);  // zero at times <= k
    dims[k] = k_rows - past - future;
  }
  return dims;
}

DimensionProfiles oracle_profiles(const GeneratorMatrix& g) {
  const std::size_t n = g.spec().n_symbols();
  const std::size_t k_rows = g.n_rows();
  DimensionProfiles p;
  p.state_dims = oracle_state_dims(g);
  p.transition_dims = oracle_transition_dims(g);
  p.in_dims.assign(n, 0);
  p.out_dims.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    // dim I_k = dim C_{k+} - dim C_{(k+1)+};  dim O_k = dim C_{(k+1)-} - dim C_{k-}
    std::size_t fut_k = k_rows - range_rank(g, 0, k);
    std::size_t fut_k1 = k_rows - range_rank(g, 0, k + 1);
    std::size_t past_k = k_rows - range_rank(g, k, n);
    std::size_t past_k1 = k_rows - range_rank(g, k + 1, n);
    p.in_dims[k] = fut_k - fut_k1;
    p.out_dims[k] = past_k1 - past_k;
  }
  return p;
}

DimensionProfiles enumeration_profiles(const GeneratorMatrix& g) {
  const CodeSpec& spec = g.spec();
  const std::size_t n = spec.n_symbols();
  const std::uint64_t p = spec.field().modulus();
  const std::size_t k_rows = g.n_rows();

  std::uint64_t count = 1;
  for (std::size_t i = 0; i < k_rows; ++i) {
    count *= p;
    if (count > 4096) throw CapExceededError("enumeration oracle limited to p^k <= 4096");
  }

  // Enumerate all codewords once.
  const PrimeField& f = spec.field();
  std::vector<std::vector<std::uint32_t>> words;
  words.reserve(count);
  std::vector<std::uint32_t> coeff(k_rows, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t t = idx;
    for (std::size_t i = 0; i < k_rows; ++i) {
      coeff[i] = std::uint32_t(t % p);
      t /= p;
    }
    std::vector<std::uint32_t> w(spec.total_cols(), 0);
    for (std::size_t i = 0; i < k_rows; ++i) {
      if (coeff[i] == 0) continue;
      for (std::size_t c = 0; c < spec.total_cols(); ++c)
        w[c] = f.add(w[c], f.mul(coeff[i], g.matrix()(i, c)));
    }
    words.push_back(std::move(w));
  }

  // dim of the subcode supported inside symbol times [from, to), by counting.
  auto sub_dim = [&](std::size_t from, std::size_t to) {
    std::uint64_t inside = 0;
    for (const auto& w : words) {
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) {
        if (k >= from && k < to) continue;
        for (std::size_t i = 0; i < spec.section_size(k); ++i)
          if (w[spec.offset(k) + i] != 0) {
            ok = false;
            break;
          }
      }
      if (ok) ++inside;
    }
    std::size_t d = 0;
    while (inside > 1) {
      inside /= p;
      ++d;
    }
    return d;
  };

  DimensionProfiles out;
  out.state_dims.assign(n + 1, 0);
  out.transition_dims.assign(n, 0);
  out.in_dims.assign(n, 0);
  out.out_dims.assign(n, 0);
  for (std::size_t k = 0; k <= n; ++k)
    out.state_dims[k] = k_rows - sub_dim(0, k) - sub_dim(k, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.transition_dims[k] = k_rows - sub_dim(0, k) - sub_dim(k + 1, n);
    out.in_dims[k] = sub_dim(k, n) - sub_dim(k + 1, n);
    out.out_dims[k] = sub_dim(0, k + 1) - sub_dim(0, k);
  }
  return out;
}

}  // namespace minspan
