#ifndef ESPOINTS_CONSTRUCTIONS_HPP
#define ESPOINTS_CONSTRUCTIONS_HPP

#include <cstdint>
#include <string>

#include "espoints/geometry.hpp"

namespace espoints {

enum class GeneratorKind { Random, Parabola, CupCapExtremal, EsLower };

/// Deterministic generator description: the same spec always reproduces the
/// same point set, byte for byte, for a given build of this library.
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::Random;
    int n = 0;                             // point count (Random/Parabola) or target n (EsLower)
    int k = 0;                             // cup parameter (CupCapExtremal)
    int l = 0;                             // cap parameter (CupCapExtremal)
    std::uint64_t seed = 0;                // Random only
    std::int64_t range = kSmallCoordLimit; // Random only: |x|,|y| <= range
};

PointSet generate(const GeneratorSpec& spec);

/// Short "key=value ..." record naming the generator and PRNG, for the
/// metadata comments of emitted files.
std::string generator_metadata(const GeneratorSpec& spec);

/// N uniform integer points with |x|,|y| <= range, resampling any point that
/// would duplicate another or complete a collinear triple. Throws after a
/// bounded number of rejections (range too small for N).
PointSet random_general_position(int n, std::int64_t range, std::uint64_t seed);

/// (i, i^2) for i = 1..n; the canonical all-cup fixture.
PointSet parabola_points(int n);

/// The extremal set of size C(k+l-4, k-2) with no k-cup and no l-cap,
/// built by the two-part recursion with cross slopes exceeding all
/// within-part slopes. Coordinates grow exponentially; requires k+l <= 14.
PointSet extremal_cupcap_set(int k, int l);

/// 2^(n-2) points whose largest convex subset has exactly n-1 points:
/// blocks with no (i+2)-cup and no (n-i)-cap, laid out left to right in
/// decreasing i with tower-growing depth offsets. Requires 3 <= n <= 12.
PointSet es_lower_bound_set(int n);

}  // namespace espoints

#endif
