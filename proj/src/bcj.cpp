#include "bcj.hpp"

#include <algorithm>
#include <bit>

#include "errors.hpp"

namespace torelli::bcj {

namespace {

constexpr std::uint64_t even_bits = 0x5555555555555555ull;

std::uint64_t pair_swap(std::uint64_t m) { return ((m & even_bits) << 1) | ((m >> 1) & even_bits); }

int popcount(std::uint64_t m) { return std::popcount(m); }

} // namespace

int pairing_mod2(const F2Class& x, const F2Class& y) {
    if (x.genus != y.genus) throw ParameterError("mod-2 classes have mismatched genus");
    return popcount(x.bits & pair_swap(y.bits)) & 1;
}

F2Endo F2Endo::identity(int genus) {
    F2Endo f;
    f.genus = genus;
    f.cols.resize(size_t(2 * genus));
    for (int q = 0; q < 2 * genus; ++q) f.cols[size_t(q)] = std::uint64_t{1} << q;
    return f;
}

F2Endo F2Endo::from_endo(const HEndo& m) {
    F2Endo f;
    f.genus = m.dim / 2;
    f.cols.resize(size_t(m.dim));
    for (int q = 0; q < m.dim; ++q) {
        std::uint64_t col = 0;
        for (int p = 0; p < m.dim; ++p)
            if (m.at(p, q) % 2 != 0) col |= std::uint64_t{1} << p;
        f.cols[size_t(q)] = col;
    }
    return f;
}

F2Class F2Endo::apply(const F2Class& x) const {
    if (x.genus != genus) throw ParameterError("mod-2 endomorphism genus mismatch");
    std::uint64_t out = 0;
    std::uint64_t bits = x.bits;
    while (bits) {
        const int v = std::countr_zero(bits);
        bits &= bits - 1;
        out ^= cols[size_t(v)];
    }
    return {genus, out};
}

F2Endo F2Endo::compose(const F2Endo& inner) const {
    if (genus != inner.genus) throw ParameterError("mod-2 endomorphism genus mismatch");
    F2Endo r;
    r.genus = genus;
    r.cols.resize(cols.size());
    for (size_t q = 0; q < cols.size(); ++q) r.cols[q] = apply(F2Class{genus, inner.cols[q]}).bits;
    return r;
}

bool is_symplectic_mod2(const F2Endo& f) {
    const int d = 2 * f.genus;
    for (int p = 0; p < d; ++p)
        for (int q = p + 1; q < d; ++q) {
            const int expected = pairing_mod2(F2Class::basis(f.genus, p), F2Class::basis(f.genus, q));
            const int got = pairing_mod2(F2Class{f.genus, f.cols[size_t(p)]}, F2Class{f.genus, f.cols[size_t(q)]});
            if (expected != got) return false;
        }
    return true;
}

BPoly BPoly::one(int genus) {
    BPoly p(genus);
    p.toggle(0);
    return p;
}

BPoly BPoly::variable(int genus, int index) {
    if (index < 0 || index >= 2 * genus) throw ParameterError("variable index out of range");
    BPoly p(genus);
    p.toggle(std::uint64_t{1} << index);
    return p;
}

int BPoly::degree() const {
    int d = 0;
    for (auto m : monomials_) d = std::max(d, popcount(m));
    return d;
}

void BPoly::toggle(std::uint64_t mask) {
    if (popcount(mask) > 3) throw ParameterError("BPoly monomials are limited to degree 3");
    auto it = std::lower_bound(monomials_.begin(), monomials_.end(), mask);
    if (it != monomials_.end() && *it == mask)
        monomials_.erase(it);
    else
        monomials_.insert(it, mask);
}

std::string BPoly::to_string() const {
    if (monomials_.empty()) return "0";
    std::string out;
    for (auto m : monomials_) {
        if (!out.empty()) out += " + ";
        if (m == 0) {
            out += "1";
            continue;
        }
        std::uint64_t bits = m;
        while (bits) {
            const int v = std::countr_zero(bits);
            bits &= bits - 1;
            out += ext::basis_name(v) + "~";
        }
    }
    return out;
}

BPoly bpoly_add(const BPoly& p, const BPoly& q) {
    if (p.genus() != q.genus()) throw ParameterError("BPoly genus mismatch");
    BPoly r = p;
    for (auto m : q.monomials()) r.toggle(m);
    return r;
}

BPoly bpoly_mul(const BPoly& p, const BPoly& q, int truncate_deg) {
    if (p.genus() != q.genus()) throw ParameterError("BPoly genus mismatch");
    BPoly r(p.genus());
    for (auto mp : p.monomials())
        for (auto mq : q.monomials()) {
            const std::uint64_t prod = mp | mq; // idempotent union
            if (popcount(prod) > truncate_deg) continue;
            r.toggle(prod);
        }
    return r;
}

BPoly bar(const F2Class& c) {
    BPoly out(c.genus);
    F2Class acc{c.genus, 0};
    std::uint64_t bits = c.bits;
    while (bits) {
        const int v = std::countr_zero(bits);
        bits &= bits - 1;
        const F2Class e = F2Class::basis(c.genus, v);
        out.toggle(std::uint64_t{1} << v);
        if (pairing_mod2(acc, e)) out.toggle(0); // the i(a,b) scalar lives in degree 0
        acc.bits ^= e.bits;
    }
    return out;
}

BPoly sigma_septwist(const std::vector<std::pair<F2Class, F2Class>>& subsurface_basis) {
    if (subsurface_basis.empty()) throw ParameterError("sigma_septwist requires at least one basis pair");
    const int genus = subsurface_basis.front().first.genus;
    for (size_t i = 0; i < subsurface_basis.size(); ++i) {
        const auto& [ai, bi] = subsurface_basis[i];
        if (ai.genus != genus || bi.genus != genus) throw ParameterError("basis pair genus mismatch");
        if (pairing_mod2(ai, bi) != 1)
            throw ParameterError("subsurface basis pair is not symplectic mod 2: i(a_i, b_i) must be 1");
        for (size_t j = i + 1; j < subsurface_basis.size(); ++j) {
            const auto& [aj, bj] = subsurface_basis[j];
            if (pairing_mod2(ai, aj) || pairing_mod2(ai, bj) || pairing_mod2(bi, aj) || pairing_mod2(bi, bj))
                throw ParameterError("subsurface basis pairs must have zero cross pairings mod 2");
        }
    }
    BPoly out(genus);
    for (const auto& [a, b] : subsurface_basis) out = bpoly_add(out, bpoly_mul(bar(a), bar(b)));
    return out;
}

BPoly sp2_action(const F2Endo& f, const BPoly& p) {
    if (!is_symplectic_mod2(f)) throw ParameterError("sp2_action requires a mod-2 symplectic map");
    if (f.genus != p.genus()) throw ParameterError("sp2_action genus mismatch");
    BPoly out(p.genus());
    for (auto mono : p.monomials()) {
        BPoly term = BPoly::one(p.genus());
        std::uint64_t bits = mono;
        while (bits) {
            const int v = std::countr_zero(bits);
            bits &= bits - 1;
            term = bpoly_mul(term, bar(f.apply(F2Class::basis(f.genus, v))));
        }
        out = bpoly_add(out, term);
    }
    return out;
}

int bpoly_space_dim(int genus) {
    const int n = 2 * genus;
    return 1 + n + n * (n - 1) / 2 + ext::triple_count(n);
}

int monomial_rank(std::uint64_t mask, int genus) {
    const int n = 2 * genus;
    const int deg = popcount(mask);
    int v[3] = {0, 0, 0};
    std::uint64_t bits = mask;
    for (int i = 0; i < deg; ++i) {
        v[i] = std::countr_zero(bits);
        bits &= bits - 1;
    }
    switch (deg) {
        case 0: return 0;
        case 1: return 1 + v[0];
        case 2: return 1 + n + v[0] + v[1] * (v[1] - 1) / 2;
        case 3: return 1 + n + n * (n - 1) / 2 + ext::triple_rank(ext::Triple{{v[0], v[1], v[2]}});
        default: throw ParameterError("monomial exceeds degree 3");
    }
}

std::uint64_t monomial_unrank(int rank, int genus) {
    const int n = 2 * genus;
    if (rank == 0) return 0;
    rank -= 1;
    if (rank < n) return std::uint64_t{1} << rank;
    rank -= n;
    if (rank < n * (n - 1) / 2) {
        for (int q = 1; q < n; ++q) {
            if (rank >= q * (q - 1) / 2 + q) continue;
            const int p = rank - q * (q - 1) / 2;
            return (std::uint64_t{1} << p) | (std::uint64_t{1} << q);
        }
    }
    rank -= n * (n - 1) / 2;
    const auto t = ext::triple_unrank(rank, n);
    return (std::uint64_t{1} << t.idx[0]) | (std::uint64_t{1} << t.idx[1]) | (std::uint64_t{1} << t.idx[2]);
}

F2Row bpoly_to_row(const BPoly& p) {
    F2Row row(bpoly_space_dim(p.genus()));
    for (auto m : p.monomials()) row.flip(monomial_rank(m, p.genus()));
    return row;
}

BPoly bpoly_from_row(const F2Row& row, int genus) {
    BPoly p(genus);
    for (int i = 0; i < bpoly_space_dim(genus); ++i)
        if (row.get(i)) p.toggle(monomial_unrank(i, genus));
    return p;
}

F2Row mod2_bridge(const BPoly& p, int genus) {
    F2Row row(ext::triple_count(2 * genus));
    for (auto m : p.monomials()) {
        if (popcount(m) != 3) continue;
        int v[3];
        std::uint64_t bits = m;
        for (int i = 0; i < 3; ++i) {
            v[i] = std::countr_zero(bits);
            bits &= bits - 1;
        }
        row.flip(ext::triple_rank(ext::Triple{{v[0], v[1], v[2]}}));
    }
    return row;
}

namespace {

std::vector<F2Endo> mod2_generators(int genus) {
    std::vector<F2Endo> out;
    for (const auto& f : sym::sp_generators(genus)) {
        F2Endo m = F2Endo::from_endo(f);
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
    }
    return out;
}

} // namespace

B2GenerationReport b2_generation_from_seed(int genus, const BPoly& seed, const OrbitBudget& budget) {
    if (genus < 3) throw ParameterError("B2 generation requires g >= 3");
    const int n = 2 * genus;
    B2GenerationReport rep;
    rep.genus = genus;
    rep.expected_dim = 1 + n + n * (n - 1) / 2;

    const auto gens = mod2_generators(genus);
    rep.generator_count = static_cast<int>(gens.size());
    const int width = bpoly_space_dim(genus);

    // per-generator action table over the monomial basis
    std::vector<std::function<F2Row(const F2Row&)>> actions;
    actions.reserve(gens.size());
    for (const auto& f : gens) {
        std::vector<F2Row> table(static_cast<size_t>(width), F2Row(width));
        for (int m = 0; m < width; ++m) {
            BPoly mono(genus);
            mono.toggle(monomial_unrank(m, genus));
            table[size_t(m)] = bpoly_to_row(sp2_action(f, mono));
        }
        actions.push_back([table = std::move(table), width](const F2Row& v) {
            F2Row out(width);
            for (size_t w = 0; w < v.bits.size(); ++w) {
                std::uint64_t bits = v.bits[w];
                while (bits) {
                    const int b = std::countr_zero(bits);
                    bits &= bits - 1;
                    out ^= table[w * 64 + size_t(b)];
                }
            }
            return out;
        });
    }

    const auto outcome = ext::f2_span_closure({bpoly_to_row(seed)}, actions, width, budget);
    rep.achieved_dim = outcome.dimension;
    rep.orbit_size = outcome.orbit_size;
    rep.examined = outcome.examined;
    rep.conclusive = outcome.conclusive;
    rep.pass = rep.conclusive && rep.achieved_dim == rep.expected_dim;
    return rep;
}

B2GenerationReport verify_B2_generation(int genus, const OrbitBudget& budget) {
    const BPoly seed = bpoly_mul(BPoly::variable(genus, sym::a_index(1)), BPoly::variable(genus, sym::b_index(1)));
    return b2_generation_from_seed(genus, seed, budget);
}

SigmaSurjectivityReport verify_sigma_surjectivity(const SurfaceParams& params, const OrbitBudget& budget) {
    params.validate();
    if (params.kind != sym::SurfaceKind::bordered)
        throw ParameterError("sigma is defined on the bordered Torelli group; surface must be bordered");

    SigmaSurjectivityReport rep;
    rep.params = params;
    rep.b2 = verify_B2_generation(params.genus, budget);

    const int g = params.genus;
    const int width = ext::triple_count(2 * g);
    rep.wedge_expected_dim = width;

    // mod-2 reduction of the tau orbit: same seeds, induced cube action mod 2
    const auto x = tau::bp_tau_standard({g, params.k, sym::SurfaceKind::bordered}).value;
    const auto phi = sym::factor_mix(g, 1, params.k + 2);
    const auto diff = ext::induced_cube_apply(phi, x) - x;

    auto to_row = [width](const ext::Wedge3& w) {
        F2Row row(width);
        const auto dense = w.dense();
        for (int i = 0; i < width; ++i)
            if (dense[size_t(i)] % 2 != 0) row.flip(i);
        return row;
    };

    std::vector<std::function<F2Row(const F2Row&)>> actions;
    for (const auto& f : sym::sp_generators(g)) {
        const auto cube = ext::CubeMatrix::from_endo(f);
        std::vector<F2Row> cols(static_cast<size_t>(width), F2Row(width));
        for (int t = 0; t < width; ++t)
            for (const auto& [r, c] : cube.columns[size_t(t)])
                if (c % 2 != 0) cols[size_t(t)].flip(r);
        actions.push_back([cols = std::move(cols), width](const F2Row& v) {
            F2Row out(width);
            for (size_t w = 0; w < v.bits.size(); ++w) {
                std::uint64_t bits = v.bits[w];
                while (bits) {
                    const int b = std::countr_zero(bits);
                    bits &= bits - 1;
                    out ^= cols[w * 64 + size_t(b)];
                }
            }
            return out;
        });
    }

    const auto outcome = ext::f2_span_closure({to_row(x), to_row(diff)}, actions, width, budget);
    rep.wedge_achieved_dim = outcome.dimension;
    rep.wedge_orbit_size = outcome.orbit_size;
    rep.conclusive = rep.b2.conclusive && outcome.conclusive;
    rep.total_dim = rep.b2.achieved_dim + rep.wedge_achieved_dim;
    rep.pass = rep.conclusive && rep.b2.pass && rep.wedge_achieved_dim == rep.wedge_expected_dim;
    return rep;
}

} // namespace torelli::bcj
