#include "free_group.hpp"

#include <algorithm>

#include "errors.hpp"

namespace torelli::fg {

FreeWord FreeWord::reduce(std::vector<std::int8_t> raw) {
    FreeWord w;
    auto& out = w.letters_;
    for (const std::int8_t l : raw) {
        if (l == 0 || l < -3 || l > 3) throw ParameterError("free word letter out of range");
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return w;
}

FreeWord::FreeWord(std::initializer_list<int> letters) {
    std::vector<std::int8_t> raw;
    raw.reserve(letters.size());
    for (int l : letters) raw.push_back(static_cast<std::int8_t>(l));
    *this = reduce(std::move(raw));
}

FreeWord FreeWord::generator(int i, int exp) {
    if (i < 1 || i > 3 || (exp != 1 && exp != -1)) throw ParameterError("bad generator index or exponent");
    FreeWord w;
    w.letters_.push_back(static_cast<std::int8_t>(exp * i));
    return w;
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
    std::vector<std::int8_t> raw = letters_;
    raw.insert(raw.end(), o.letters_.begin(), o.letters_.end());
    return reduce(std::move(raw));
}

FreeWord FreeWord::inverse() const {
    FreeWord w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back(static_cast<std::int8_t>(-*it));
    return w;
}

FreeWord FreeWord::conjugated_by(const FreeWord& u) const { return u * *this * u.inverse(); }

FreeWord FreeWord::cyclic_reduction() const {
    std::vector<std::int8_t> v = letters_;
    while (v.size() >= 2 && v.front() == -v.back()) {
        v.erase(v.begin());
        v.pop_back();
    }
    FreeWord w;
    w.letters_ = std::move(v);
    return w;
}

std::string FreeWord::str() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (auto l : letters_) {
        if (!out.empty()) out += " ";
        out += "x" + std::to_string(l > 0 ? l : -l);
        if (l < 0) out += "^-1";
    }
    return out;
}

namespace {

FreeWord substitute(const std::array<FreeWord, 3>& images, const FreeWord& w) {
    std::vector<std::int8_t> raw;
    for (auto l : w.letters()) {
        const auto& img = images[static_cast<size_t>((l > 0 ? l : -l) - 1)];
        if (l > 0)
            raw.insert(raw.end(), img.letters().begin(), img.letters().end());
        else {
            const FreeWord inv = img.inverse();
            raw.insert(raw.end(), inv.letters().begin(), inv.letters().end());
        }
    }
    return FreeWord::reduce(std::move(raw));
}

} // namespace

FreeAut::FreeAut() {
    for (int i = 1; i <= 3; ++i) {
        images_[static_cast<size_t>(i - 1)] = FreeWord::generator(i);
        inverse_images_[static_cast<size_t>(i - 1)] = FreeWord::generator(i);
    }
}

FreeAut::FreeAut(std::array<FreeWord, 3> images, std::array<FreeWord, 3> inverse_images)
    : images_(std::move(images)), inverse_images_(std::move(inverse_images)) {
    for (int i = 1; i <= 3; ++i) {
        const auto gen = FreeWord::generator(i);
        if (substitute(images_, inverse_images_[static_cast<size_t>(i - 1)]) != gen ||
            substitute(inverse_images_, images_[static_cast<size_t>(i - 1)]) != gen)
            throw ParameterError("free automorphism images and inverse images do not compose to the identity");
    }
}

FreeAut FreeAut::identity() { return FreeAut(); }

FreeAut FreeAut::conjugation_by(const FreeWord& u) {
    std::array<FreeWord, 3> img, inv;
    for (int i = 1; i <= 3; ++i) {
        img[static_cast<size_t>(i - 1)] = FreeWord::generator(i).conjugated_by(u);
        inv[static_cast<size_t>(i - 1)] = FreeWord::generator(i).conjugated_by(u.inverse());
    }
    return FreeAut(std::move(img), std::move(inv));
}

FreeAut FreeAut::conjugating(std::initializer_list<int> which, const FreeWord& u) {
    std::array<FreeWord, 3> img, inv;
    for (int i = 1; i <= 3; ++i) {
        img[static_cast<size_t>(i - 1)] = FreeWord::generator(i);
        inv[static_cast<size_t>(i - 1)] = FreeWord::generator(i);
    }
    for (int i : which) {
        img[static_cast<size_t>(i - 1)] = FreeWord::generator(i).conjugated_by(u);
        inv[static_cast<size_t>(i - 1)] = FreeWord::generator(i).conjugated_by(u.inverse());
    }
    return FreeAut(std::move(img), std::move(inv));
}

FreeWord FreeAut::apply(const FreeWord& w) const { return substitute(images_, w); }
FreeWord FreeAut::apply_inverse(const FreeWord& w) const { return substitute(inverse_images_, w); }

FreeAut FreeAut::compose(const FreeAut& inner) const {
    std::array<FreeWord, 3> img, inv;
    for (size_t i = 0; i < 3; ++i) {
        img[i] = apply(inner.images_[i]);
        inv[i] = inner.apply_inverse(inverse_images_[i]);
    }
    return FreeAut(std::move(img), std::move(inv));
}

FreeAut FreeAut::inverse() const { return FreeAut(inverse_images_, images_); }

bool FreeAut::is_peripheral() const {
    for (int i = 1; i <= 3; ++i)
        if (images_[static_cast<size_t>(i - 1)].cyclic_reduction() != FreeWord::generator(i)) return false;
    const FreeWord w = boundary_word();
    const FreeWord img = apply(w).cyclic_reduction();
    const std::array<FreeWord, 3> rotations = {FreeWord{1, 2, 3}, FreeWord{2, 3, 1}, FreeWord{3, 1, 2}};
    return std::any_of(rotations.begin(), rotations.end(), [&](const FreeWord& r) { return img == r; });
}

FreeWord boundary_word() { return FreeWord{1, 2, 3}; }

} // namespace torelli::fg
