#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gaussindex/exponential_sum.hpp"
#include "gaussindex/gauss.hpp"
#include "gaussindex/laurent.hpp"

namespace gaussindex {

/// Index function of one chord: the polynomial before reduction and its
/// normal form in Z[s, s^-1]/(s^|Ind| - 1).
struct IndexFunction {
  LaurentPolynomial raw;
  ExponentKey key;
};

struct ChordReport {
  ChordId chord;
  Sign sign = Sign::Positive;
  std::int64_t index = 0;
  IndexFunction function;
};

/// Per-chord sign, index and index function, plus the writhe of the diagram.
struct IndexReport {
  std::vector<ChordReport> chords;
  std::int64_t writhe = 0;
};

/// Computes every chord's index and index function in one pass.
IndexReport index_report(const GaussDiagram& d);

/// Ind(c) = r+ - r- - l+ + l-.
std::int64_t chord_index(const GaussDiagram& d, ChordId c);

/// All chord indices, ordered by chord id.
std::vector<std::int64_t> chord_indices(const GaussDiagram& d);

/// g_c(s) = sum over left-to-right chords of w s^{Ind mod m} minus sum over
/// right-to-left chords of w s^{-Ind mod m}, where m = |Ind(c)| (no reduction
/// when m = 0).
IndexFunction index_function(const GaussDiagram& d, ChordId c);

std::int64_t writhe(const GaussDiagram& d);
/// W(t) = sum over chords with nonzero index of w t^Ind.
LaurentPolynomial writhe_poly(const GaussDiagram& d);
/// Q = sum of the signs of chords with nonzero index.
std::int64_t q_scalar(const GaussDiagram& d);

std::int64_t odd_writhe(const GaussDiagram& d);
LaurentPolynomial odd_writhe_poly(const GaussDiagram& d);
/// Coefficient of t^n in W(t). Throws std::invalid_argument for n = 0.
std::int64_t nth_parity_writhe(const GaussDiagram& d, std::int64_t n);

/// Parity writhe polynomial split as x-part (odd indices, including the
/// -w(K) x term) and y-part (even indices).
struct ParityWrithePolynomial {
  LaurentPolynomial x_part;
  LaurentPolynomial y_part;
  friend bool operator==(const ParityWrithePolynomial&, const ParityWrithePolynomial&) = default;
};
ParityWrithePolynomial parity_writhe_poly(const GaussDiagram& d);
/// The parity writhe polynomial with y = x, i.e. (W(x) - Q) x. The two-part
/// form above is not preserved by R1 (an isolated chord adds w y and -w x);
/// this collapse is.
LaurentPolynomial collapse(const ParityWrithePolynomial& p);

/// P(t) = W(t) - Q.
LaurentPolynomial affine_index_poly(const GaussDiagram& d);
/// Z(t) = sum over index-zero chords of w (t^{g0} - 1), g0 counting only
/// index-zero crossing chords.
LaurentPolynomial zero_poly(const GaussDiagram& d);

struct TranscendentalInvariant {
  ExponentialSum w;  ///< W(t,s)
  ExponentialSum q;  ///< Q(t,s) = w(K) - sum over index-zero chords of w t^{g}
  ExponentialSum f;  ///< F(t,s) = W - Q
};
TranscendentalInvariant transcendental(const GaussDiagram& d);

/// Shorthand for transcendental(d).f.
ExponentialSum f_invariant(const GaussDiagram& d);

/// Lower bound for the real crossing number: sum of |coefficient| over all
/// terms except the constant one.
Integer crossing_bound(const ExponentialSum& f);

/// Alternating sum over the 2^m sign resolutions of the marked chords.
/// Resolution 0 keeps the chord's roles with sign +; resolution 1 is its
/// crossing switch (sign -, roles swapped).
ExponentialSum finite_type_altsum(const GaussDiagram& d, std::span<const ChordId> marked);

}  // namespace gaussindex
