#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "symplectic.hpp"

namespace torelli::ext {

using sym::HClass;
using sym::HEndo;

/// Strictly increasing basis-index triple p < q < r.
struct Triple {
    std::array<int, 3> idx;
    auto operator<=>(const Triple&) const = default;
};

int triple_count(int dim); // C(dim, 3)

/// Colexicographic rank of a triple over a 2g-dimensional basis; the rank is
/// the coordinate used for every dense row and every serialized vector.
int triple_rank(const Triple& t);
Triple triple_unrank(int rank, int dim);

/// A vector in the third exterior power of H: sparse integer coefficients on
/// canonically ordered triples. Zero coefficients are never stored.
class Wedge3 {
  public:
    Wedge3() = default;
    explicit Wedge3(int genus) : genus_(genus) {}

    int genus() const { return genus_; }
    int dim() const { return 2 * genus_; }
    bool is_zero() const { return coeffs_.empty(); }
    size_t monomial_count() const { return coeffs_.size(); }

    void add_term(const Triple& t, i64 c); // canonical triples only
    i64 coeff(const Triple& t) const;
    const std::map<Triple, i64>& terms() const { return coeffs_; }

    Wedge3 operator+(const Wedge3& o) const;
    Wedge3 operator-(const Wedge3& o) const;
    Wedge3 operator*(i64 s) const;
    bool operator==(const Wedge3& o) const = default;

    std::vector<i64> dense() const; // length C(2g,3), colex order
    static Wedge3 from_dense(int genus, const std::vector<i64>& row);

    std::string to_string() const; // e.g. "a1^b1^b2 - b1^b2^b3"

  private:
    int genus_ = 0;
    std::map<Triple, i64> coeffs_;
};

/// Alternating trilinear product; monomials are canonicalized by sorting
/// indices with sign.
Wedge3 wedge(const HClass& x, const HClass& y, const HClass& z);

/// Functorial action of f on the third exterior power, evaluated monomial by
/// monomial as f(e_p) ^ f(e_q) ^ f(e_r).
Wedge3 induced_cube_apply(const HEndo& f, const Wedge3& w);

/// The action of f on the whole triple basis as sparse columns, for repeated
/// application inside orbit expansion.
struct CubeMatrix {
    int genus = 0;
    // columns[t] lists (row_rank, coeff) of the image of basis triple t
    std::vector<std::vector<std::pair<int, i64>>> columns;

    static CubeMatrix from_endo(const HEndo& f);
    std::vector<i64> apply_dense(const std::vector<i64>& row) const;
};

/// c ^ omega with omega = sum_i a_i ^ b_i; the embedding of H into the third
/// exterior power used for the closed-surface quotient.
Wedge3 wedge_omega(const HClass& c);

std::string basis_name(int index); // "a1", "b1", ...

} // namespace torelli::ext
