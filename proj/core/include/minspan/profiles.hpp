#ifndef MINSPAN_PROFILES_HPP
#define MINSPAN_PROFILES_HPP

#include <cstddef>
#include <vector>

#include "minspan/span_basis.hpp"

namespace minspan {

/// Dimension profiles of a code on a time axis of n symbol times:
/// minimal state space dims at state times 0..n, minimal transition space
/// dims and in/out space dims at symbol times 0..n-1.
struct DimensionProfiles {
  std::vector<std::size_t> state_dims;       // n + 1 entries
  std::vector<std::size_t> transition_dims;  // n entries
  std::vector<std::size_t> in_dims;          // n entries
  std::vector<std::size_t> out_dims;         // n entries
  bool operator==(const DimensionProfiles&) const = default;
};

/// Read the profiles off a certified shortest basis: a generator with span
/// [s, e] is active at state times s < k <= e and symbol times s <= k <= e;
/// it enters at s and is forgotten at e.
DimensionProfiles profiles_from_basis(const ShortestBasis& b);

/// State dims from the quotient definition Sigma_k = C / (C_{k-} x C_{k+}),
/// computed by column-restricted ranks. Works for any basis of the code,
/// shortest or not.
std::vector<std::size_t> oracle_state_dims(const GeneratorMatrix& g);

/// Transition dims from T_k = C / (C_{k-} x C_{(k+1)+}).
std::vector<std::size_t> oracle_transition_dims(const GeneratorMatrix& g);

/// All four profiles via the quotient/rank route.
DimensionProfiles oracle_profiles(const GeneratorMatrix& g);

/// Fully exhaustive third route: enumerate all p^k codewords and measure the
/// past/future subcode dimensions by counting. Requires p^k <= 4096.
DimensionProfiles enumeration_profiles(const GeneratorMatrix& g);

}  // namespace minspan

#endif
