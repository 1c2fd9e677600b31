#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace torelli::fg {

/// A freely reduced word in the rank-3 free group. Letters are +-1..3, the
/// sign giving the exponent.
class FreeWord {
  public:
    FreeWord() = default;
    FreeWord(std::initializer_list<int> letters);
    static FreeWord generator(int i, int exp = 1); // i in 1..3

    const std::vector<std::int8_t>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    size_t length() const { return letters_.size(); }

    FreeWord operator*(const FreeWord& o) const;
    FreeWord inverse() const;
    FreeWord conjugated_by(const FreeWord& u) const; // u * w * u^-1
    FreeWord cyclic_reduction() const;

    bool operator==(const FreeWord&) const = default;
    std::string str() const; // "x1 x2^-1 x3", empty word prints "1"

    static FreeWord reduce(std::vector<std::int8_t> raw);

  private:
    std::vector<std::int8_t> letters_;
};

/// An automorphism of the free group, stored with the images of the three
/// generators under it and under its inverse. Construction verifies the two
/// compose to the identity on generators.
class FreeAut {
  public:
    FreeAut(); // identity
    FreeAut(std::array<FreeWord, 3> images, std::array<FreeWord, 3> inverse_images);

    static FreeAut identity();
    static FreeAut conjugation_by(const FreeWord& u);
    /// Conjugates the generators listed in `which` (1..3) by u, fixes the
    /// rest. Valid only when the resulting map fixes u, which the
    /// constructor's identity check enforces.
    static FreeAut conjugating(std::initializer_list<int> which, const FreeWord& u);

    const std::array<FreeWord, 3>& images() const { return images_; }

    FreeWord apply(const FreeWord& w) const;
    FreeWord apply_inverse(const FreeWord& w) const;
    FreeAut compose(const FreeAut& inner) const; // this after inner
    FreeAut inverse() const;

    bool operator==(const FreeAut& o) const { return images_ == o.images_; }

    /// Each generator maps to a conjugate of itself and the boundary word
    /// x1 x2 x3 maps to a conjugate of itself.
    bool is_peripheral() const;

  private:
    std::array<FreeWord, 3> images_;
    std::array<FreeWord, 3> inverse_images_;
};

inline bool aut_equal(const FreeAut& f, const FreeAut& h) { return f == h; }

/// The outer boundary word x1 x2 x3.
FreeWord boundary_word();

} // namespace torelli::fg
