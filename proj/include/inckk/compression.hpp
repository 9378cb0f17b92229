#pragma once

#include "inckk/core.hpp"

// Compression machinery: initial segments, Borel ideals, compression in a
// shifted ambient, the left/right partial compressions that fix the smallest
// (resp. largest) element of each member, and the alternating fixpoint.

namespace inckk {

/// All d-sets squashed-<= u; cardinality rank(u). Throws std::length_error
/// when the segment would exceed the enumeration guard.
Family initial_segment(const DSet& u);

/// All d-sets coordinatewise <= u.
Family borel_ideal(const DSet& u);

/// The initial segment of the same size as f.
Family compress(const Family& f);

/// The compressed d-family of size m: the first m d-sets in squashed order.
Family compressed_family(uint64_t m, int d);

/// The |f| smallest d-sets with all elements > k. Every member of f must
/// already have all elements > k.
Family compress_above(const Family& f, int k);

/// f is an initial segment of the squashed order.
bool is_compressed(const Family& f);

/// f is downward closed in the Borel order.
bool is_shifted(const Family& f);

/// Members with smallest element k, with that element removed. Requires d >= 2.
Family slice_first(const Family& f, int k);

/// Members with largest element k, with that element removed. Requires d >= 2.
Family slice_last(const Family& f, int k);

/// Compresses each fixed-smallest-element slice within the elements > k.
/// Requires d >= 2; preserves cardinality.
Family left_compress(const Family& f);

/// Compresses each fixed-largest-element slice in the plain squashed order.
/// Requires d >= 2; preserves cardinality.
Family right_compress(const Family& f);

bool is_left_compressed(const Family& f);
bool is_right_compressed(const Family& f);

/// Alternates left and right partial compressions starting from f until two
/// consecutive iterates coincide. The result is left- and right-compressed
/// (hence shifted) and has the same size as f. For d = 1 this is compress(f).
/// iteration_cap = 0 picks the default 10*|f|*d + 16; exceeding the cap
/// raises std::runtime_error (it would indicate an implementation bug).
Family fixpoint(const Family& f, uint64_t iteration_cap = 0);

/// Guard on materialized segment/ideal sizes (elements, not bytes).
inline constexpr uint64_t kEnumerationGuard = 1u << 25;

}  // namespace inckk
