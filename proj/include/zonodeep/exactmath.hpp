#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "zonodeep/errors.hpp"

namespace zonodeep {

// All arithmetic in the library is exact. `Rat` values are kept canonical:
// reduced to lowest terms with a positive denominator.
using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

Rat make_rat(const Int& num, const Int& den);  // Domain if den == 0
Rat parse_rat(const std::string& text);        // "p/q" or "p"; Parse on garbage
Int parse_int(const std::string& text);
std::string to_string(const Rat& q);  // "p/q", or "p" when q is integral

Int floor_rat(const Rat& q);
Rat frac_part(const Rat& q);  // q - floor(q), in [0, 1)
bool is_integral(const Rat& q);

// Distance from q to the nearest integer, in [0, 1/2].
Rat dist_to_nearest_int(const Rat& q);

RatVec to_rat(const IntVec& v);
IntVec to_int(const RatVec& v);  // Domain unless every entry is integral
bool is_integral(const RatVec& v);

RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& s, const RatVec& v);
Rat dot(const RatVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);

std::string render_vector(const IntVec& v);  // "1,2,3"
std::string render_vector(const RatVec& v);

// Dense matrix of rationals with immutable shape.
class RatMat {
 public:
  RatMat(std::size_t rows, std::size_t cols);
  static RatMat from_columns(const std::vector<RatVec>& cols);
  static RatMat from_columns(const std::vector<IntVec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rat> a_;
};

// Solves Ax = b exactly by Gaussian elimination; the pivot for each column is
// the first row with a nonzero entry. SingularMatrix if A is singular.
RatVec solve_linear(const RatMat& a, const RatVec& b);

// Rank of a list of vectors of the given dimension.
std::size_t rank_of(const std::vector<RatVec>& vectors, std::size_t dim);
std::size_t rank_of(const std::vector<IntVec>& vectors, std::size_t dim);

Rat determinant(const RatMat& a);

// Primitive integer normal of the hyperplane spanned by dim-1 vectors in
// dimension dim, sign-normalized so the first nonzero entry is positive.
// RankDeficient if the vectors do not span a hyperplane.
IntVec kernel_normal(const std::vector<RatVec>& spanning, std::size_t dim);

// gcd of the absolute values of all i x i minors of an integer matrix.
// The 0-minor gcd is 1; the gcd of an empty set of minors is 0.
Int gcd_of_minors(const RatMat& v, std::size_t i);

Int lcm_of_denominators(const RatVec& v);

// Divides out the gcd and flips signs so the first nonzero entry is positive.
// Domain if v is the zero vector.
IntVec primitive_vector(const IntVec& v);

// Visits all k-subsets of {0, ..., n-1} in lexicographic order.
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn);

// Number of lattice points allowed in a single enumeration; reads
// ZONODEEP_MAX_BOX once, defaults to 10^7.
const Int& enumeration_guard();

}  // namespace zonodeep
