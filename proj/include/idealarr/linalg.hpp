#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace idealarr {

using Rational = boost::rational<std::int64_t>;
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<std::int64_t>;

/// Exact integer linear algebra. Every routine is fraction free; an
/// intermediate that leaves the int64 range raises std::overflow_error
/// instead of wrapping.
namespace linalg {

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// Rank of the matrix whose rows are `rows` (Bareiss elimination).
int rank(std::span<const IntVector> rows);

/// Divides out the content and makes the first nonzero entry positive.
/// The zero vector is returned unchanged.
IntVector primitive(IntVector v);

/// Smallest integer multiple of a rational vector, made primitive.
IntVector to_primitive_integer(const RationalVector& v);

RationalVector to_rational(const IntVector& v);

/// Replaces `basis` (spanning a subspace X) by a basis of X ∩ ker(normal).
/// Returns false, leaving the basis untouched, when X already lies in the
/// hyperplane.
bool intersect_with_hyperplane(std::vector<IntVector>& basis, std::span<const std::int64_t> normal);

/// Integer basis of {x : row · x = 0 for every row}.
std::vector<IntVector> kernel_basis(std::span<const IntVector> rows, std::size_t dim);

/// True when the two nonzero vectors are proportional.
bool proportional(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

}  // namespace linalg
}  // namespace idealarr
