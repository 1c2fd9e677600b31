#pragma once

#include <vector>

#include "exterior.hpp"

namespace torelli::ext {

using IntRow = std::vector<i64>;
using IntRows = std::vector<IntRow>;

struct SmithResult {
    int rank = 0;
    std::vector<i64> divisors; // positive, divisibility chain, rank entries
};

/// Fraction-free Smith normal form over the integers. Pivots are chosen by
/// minimal absolute value to contain coefficient growth; arithmetic faults on
/// 64-bit overflow instead of wrapping.
SmithResult smith_normal_form(IntRows m);

/// Same elimination, additionally accumulating the unimodular column
/// transform V so that x -> xV carries ambient coordinates to ones where the
/// input row lattice is spanned by d_i * e_i, i < rank.
struct SmithWithTransform {
    SmithResult snf;
    IntRows col_transform; // cols x cols
};
SmithWithTransform smith_with_col_transform(IntRows m, int cols);

/// Outcome of a span/saturation check: a set of integer vectors is saturated
/// in the ambient lattice iff every elementary divisor equals 1.
struct LatticeVerdict {
    int rank = 0;
    std::vector<i64> elementary_divisors;
    bool saturated = false;
};

LatticeVerdict verdict_from_snf(const SmithResult& s);

/// Row-echelon integer lattice with incremental insertion; used as the
/// running span during orbit expansion. add() returns true iff the lattice
/// strictly grew. Membership and reduction are exact.
class LatticeAccumulator {
  public:
    explicit LatticeAccumulator(int cols) : cols_(cols) {}

    bool add(IntRow v);
    bool contains(IntRow v) const;
    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    const IntRows& rows() const { return rows_; }
    SmithResult snf() const;

  private:
    int cols_;
    IntRows rows_;               // sorted by strictly increasing pivot column
    std::vector<int> pivots_;    // pivot column per row; entry positive there
};

LatticeVerdict lattice_saturation_rows(const IntRows& rows, int ambient_dim);

/// Smith-normal-form verdict for vectors in the third exterior power.
/// ambient_dim must equal C(2g, 3); the list must be nonempty.
LatticeVerdict lattice_saturation(const std::vector<Wedge3>& vectors, int ambient_dim);

/// Coordinates on the quotient of the third exterior power by the
/// omega-image of H. Built once per genus from the Smith column transform of
/// the omega rows (which are saturated of rank 2g for g >= 3, a fact the
/// constructor re-verifies).
class QuotientContext {
  public:
    static QuotientContext for_genus(int genus);

    int genus() const { return genus_; }
    int ambient_dim() const { return ambient_; }
    int omega_rank() const { return omega_rank_; }
    int quotient_dim() const { return ambient_ - omega_rank_; }

    IntRow project(const IntRow& x) const; // length quotient_dim()
    bool in_omega_image(const Wedge3& w) const;

  private:
    int genus_ = 0;
    int ambient_ = 0;
    int omega_rank_ = 0;
    IntRows col_transform_;
};

/// Saturation verdict of the given vectors inside the quotient lattice.
/// The reported rank always equals rank(vectors + omega rows) - rank(omega
/// rows); the divisors come from canonical quotient coordinates.
LatticeVerdict quotient_mod_H(const std::vector<Wedge3>& vectors, int genus);

} // namespace torelli::ext
