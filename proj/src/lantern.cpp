#include "lantern.hpp"

#include <algorithm>

#include "errors.hpp"

namespace torelli::lantern {

using fg::FreeAut;
using fg::FreeWord;

const std::array<TwistName, 7> all_twists = {TwistName::a, TwistName::b, TwistName::c, TwistName::d,
                                             TwistName::x, TwistName::y, TwistName::z};

std::string name_str(TwistName n) {
    switch (n) {
        case TwistName::a: return "a";
        case TwistName::b: return "b";
        case TwistName::c: return "c";
        case TwistName::d: return "d";
        case TwistName::x: return "x";
        case TwistName::y: return "y";
        case TwistName::z: return "z";
    }
    return "?";
}

TwistWord TwistWord::inverse() const {
    TwistWord w;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back({it->name, -it->exp});
    return w;
}

TwistWord TwistWord::operator*(const TwistWord& o) const {
    TwistWord w = *this;
    w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
    return w;
}

std::string TwistWord::str() const {
    std::string out;
    for (const auto& l : letters) {
        if (!out.empty()) out += " ";
        out += "T" + name_str(l.name);
        if (l.exp < 0) out += "^-1";
    }
    return out.empty() ? "1" : out;
}

TwistNormalForm lantern_normal_form(const TwistWord& w, bool b_trivial) {
    TwistNormalForm nf;
    std::vector<std::int8_t> raw;
    auto central = [&nf](TwistName n, i64 e) {
        const size_t idx = static_cast<size_t>(n); // a, b, c, d are 0..3
        nf.central[idx] = checked_add(nf.central[idx], e);
    };
    for (const auto& l : w.letters) {
        switch (l.name) {
            case TwistName::a:
            case TwistName::b:
            case TwistName::c:
            case TwistName::d:
                central(l.name, l.exp);
                break;
            case TwistName::x:
                raw.push_back(static_cast<std::int8_t>(l.exp));
                break;
            case TwistName::y:
                raw.push_back(static_cast<std::int8_t>(2 * l.exp));
                break;
            case TwistName::z:
                // z = y^-1 x^-1 (abcd) by the lantern relation
                if (l.exp > 0) {
                    raw.push_back(-2);
                    raw.push_back(-1);
                    for (auto n : {TwistName::a, TwistName::b, TwistName::c, TwistName::d}) central(n, 1);
                } else {
                    raw.push_back(1);
                    raw.push_back(2);
                    for (auto n : {TwistName::a, TwistName::b, TwistName::c, TwistName::d}) central(n, -1);
                }
                break;
        }
    }
    if (b_trivial) nf.central[static_cast<size_t>(TwistName::b)] = 0;
    // free reduction over the two surviving letters
    for (const std::int8_t l : raw) {
        if (!nf.word.empty() && nf.word.back() == -l)
            nf.word.pop_back();
        else
            nf.word.push_back(l);
    }
    return nf;
}

bool equal_mod_lantern(const TwistWord& lhs, const TwistWord& rhs, bool b_trivial) {
    return lantern_normal_form(lhs, b_trivial) == lantern_normal_form(rhs, b_trivial);
}

namespace {

// pinned conventions: generator x1 loops hole a, x2 loops hole c, x3 loops
// hole b; the outer boundary word is x1 x2 x3. Interior curves cut off
// (pants-side) x:{a,d}, y:{b,d}, z:{c,d}; equivalently x encircles the inner
// holes {b,c}, y encircles {a,c}, z encircles {a,b}.
FreeAut twist_x() { return FreeAut::conjugating({2, 3}, FreeWord{2, 3}); }
FreeAut twist_y() { return FreeAut::conjugating({1, 2}, FreeWord{1, 2}); }

FreeAut half_twist_sigma2() {
    using W = FreeWord;
    return FreeAut({W{1}, W{2, 3, -2}, W{2}}, {W{1}, W{3}, W{-3, 2, 3}});
}

FreeAut twist_z() {
    const FreeAut s2 = half_twist_sigma2();
    return s2.compose(twist_y()).compose(s2.inverse());
}

} // namespace

LanternTwists lantern_twists(bool mirror) {
    LanternTwists tw;
    tw.mirrored = mirror;
    const FreeAut id = FreeAut::identity();
    const FreeAut tx = twist_x(), ty = twist_y(), tz = twist_z();
    const FreeAut td = FreeAut::conjugation_by(fg::boundary_word());
    tw.auts.emplace(TwistName::a, id);
    tw.auts.emplace(TwistName::b, id);
    tw.auts.emplace(TwistName::c, id);
    if (!mirror) {
        tw.auts.emplace(TwistName::d, td);
        tw.auts.emplace(TwistName::x, tx);
        tw.auts.emplace(TwistName::y, ty);
        tw.auts.emplace(TwistName::z, tz);
    } else {
        // reflection inverts every twist; the non-adjacent interior curve z
        // reflects to its conjugate on the other side of the lantern
        tw.auts.emplace(TwistName::d, td.inverse());
        tw.auts.emplace(TwistName::x, tx.inverse());
        tw.auts.emplace(TwistName::y, ty.inverse());
        tw.auts.emplace(TwistName::z, tx.inverse().compose(tz.inverse()).compose(tx));
    }
    return tw;
}

fg::FreeAut evaluate(const LanternTwists& tw, const TwistWord& w) {
    FreeAut out = FreeAut::identity();
    for (const auto& l : w.letters) {
        const FreeAut& f = tw.at(l.name);
        out = out.compose(l.exp > 0 ? f : f.inverse());
    }
    return out;
}

static TwistWord relation_lhs() {
    return TwistWord{{{TwistName::a, 1}, {TwistName::b, 1}, {TwistName::c, 1}, {TwistName::d, 1}}};
}
static TwistWord relation_rhs() {
    return TwistWord{{{TwistName::x, 1}, {TwistName::y, 1}, {TwistName::z, 1}}};
}

LanternRelationReport verify_lantern_relation(bool mirror) {
    LanternRelationReport rep;
    rep.mirrored = mirror;
    const LanternTwists tw = lantern_twists(mirror);
    const FreeAut lhs = evaluate(tw, relation_lhs());
    const FreeAut rhs = evaluate(tw, relation_rhs());
    rep.pass = aut_equal(lhs, rhs);
    for (int i = 0; i < 3; ++i)
        rep.transcript.emplace_back(lhs.images()[size_t(i)].str(), rhs.images()[size_t(i)].str());

    // mutation control: one extra conjugation on T_x must break the relation
    LanternTwists mutated = tw;
    mutated.auts.at(TwistName::x) =
        FreeAut::conjugation_by(FreeWord{1}).compose(mutated.auts.at(TwistName::x));
    rep.mutation_control_fails = !aut_equal(evaluate(mutated, relation_lhs()), evaluate(mutated, relation_rhs()));

    const TwistWord reversed{{{TwistName::z, 1}, {TwistName::y, 1}, {TwistName::x, 1}}};
    rep.reversed_composition_passes = aut_equal(lhs, evaluate(tw, reversed));
    return rep;
}

std::string prop_id_str(PropId id) {
    switch (id) {
        case PropId::p31a: return "3.1a";
        case PropId::p31b: return "3.1b";
        case PropId::p32: return "3.2";
        case PropId::p33: return "3.3";
    }
    return "?";
}

TwistWord factorization_lhs(PropId id) {
    switch (id) {
        case PropId::p31a:
        case PropId::p31b: return TwistWord{{{TwistName::d, 1}}};
        case PropId::p32:
        case PropId::p33: return TwistWord{{{TwistName::y, 1}}};
    }
    throw ParameterError("unknown proposition id");
}

TwistWord factorization_rhs(PropId id) {
    switch (id) {
        case PropId::p31a:
        case PropId::p31b:
            // (T_x T_a^-1)(T_y T_b^-1)(T_z T_c^-1)
            return TwistWord{{{TwistName::x, 1},
                              {TwistName::a, -1},
                              {TwistName::y, 1},
                              {TwistName::b, -1},
                              {TwistName::z, 1},
                              {TwistName::c, -1}}};
        case PropId::p32:
        case PropId::p33:
            // (T_a T_x^-1)(T_c T_z^-1) T_b T_d
            return TwistWord{{{TwistName::a, 1},
                              {TwistName::x, -1},
                              {TwistName::c, 1},
                              {TwistName::z, -1},
                              {TwistName::b, 1},
                              {TwistName::d, 1}}};
    }
    throw ParameterError("unknown proposition id");
}

FactorizationReport verify_factorization(PropId id, bool mirror) {
    FactorizationReport rep;
    rep.id = id;
    const TwistWord lhs = factorization_lhs(id), rhs = factorization_rhs(id);
    rep.rewriting_ok = equal_mod_lantern(lhs, rhs, false);

    const LanternTwists tw = lantern_twists(mirror);
    rep.automorphism_ok = aut_equal(evaluate(tw, lhs), evaluate(tw, rhs));

    if (id == PropId::p33) {
        // punctured case: the boundary twist T_b is trivial
        bool ok = equal_mod_lantern(lhs, rhs, true);
        LanternTwists punctured = tw;
        punctured.auts.at(TwistName::b) = FreeAut::identity();
        ok = ok && aut_equal(evaluate(punctured, lhs), evaluate(punctured, rhs));
        rep.punctured_variant_ok = ok;
    }
    rep.pass = rep.rewriting_ok && rep.automorphism_ok && rep.punctured_variant_ok;
    return rep;
}

std::string figure_str(Figure f) {
    switch (f) {
        case Figure::fig1_left: return "fig1_left";
        case Figure::fig1_right: return "fig1_right";
        case Figure::fig2_left: return "fig2_left";
        case Figure::fig2_right: return "fig2_right";
    }
    return "?";
}

Figure figure_for(PropId id) {
    switch (id) {
        case PropId::p31a: return Figure::fig1_left;
        case PropId::p31b: return Figure::fig1_right;
        case PropId::p32: return Figure::fig2_left;
        case PropId::p33: return Figure::fig2_right;
    }
    throw ParameterError("unknown proposition id");
}

namespace {

HClass neg(const HClass& v) { return HClass(v.genus()) - v; }

CurveInfo separating(int genus, int label) {
    CurveInfo ci;
    ci.homology = HClass(genus);
    ci.separating = true;
    ci.sep_genus = label;
    return ci;
}

CurveInfo bp(const HClass& cls, TwistName partner) {
    CurveInfo ci;
    ci.homology = cls;
    ci.partner = partner;
    return ci;
}

} // namespace

LanternConfig build_config(Figure figure, const SurfaceParams& params) {
    params.validate();
    const int g = params.genus, k = params.k;

    LanternConfig cfg;
    cfg.figure = figure;
    cfg.params = params;

    const auto bvec = [g](int i) { return HClass::basis(g, sym::b_index(i)); };

    switch (figure) {
        case Figure::fig1_left: {
            const HClass ca = bvec(k + 1), cb = bvec(k + 2), cc = neg(bvec(k + 1) + bvec(k + 2));
            cfg.curves[TwistName::a] = bp(ca, TwistName::x);
            cfg.curves[TwistName::b] = bp(cb, TwistName::y);
            cfg.curves[TwistName::c] = bp(cc, TwistName::z);
            cfg.curves[TwistName::d] = separating(g, k);
            cfg.curves[TwistName::x] = bp(ca, TwistName::a);
            cfg.curves[TwistName::y] = bp(cb, TwistName::b);
            cfg.curves[TwistName::z] = bp(cc, TwistName::c);
            cfg.complement = {{k, {TwistName::d}, false}, {g - k - 2, {TwistName::a, TwistName::b, TwistName::c}, true}};
            break;
        }
        case Figure::fig1_right: {
            const HClass ca = bvec(k + 1), cb = bvec(k + 2), cc = neg(bvec(k + 1) + bvec(k + 2));
            cfg.curves[TwistName::a] = bp(ca, TwistName::x);
            cfg.curves[TwistName::b] = bp(cb, TwistName::y);
            cfg.curves[TwistName::c] = bp(cc, TwistName::z);
            cfg.curves[TwistName::d] = separating(g, k + 1);
            cfg.curves[TwistName::x] = bp(ca, TwistName::a);
            cfg.curves[TwistName::y] = bp(cb, TwistName::b);
            cfg.curves[TwistName::z] = bp(cc, TwistName::c);
            cfg.complement = {{g - k - 1, {TwistName::d}, true}, {k - 1, {TwistName::a, TwistName::b, TwistName::c}, false}};
            break;
        }
        case Figure::fig2_left: {
            const HClass ca = bvec(k + 1), cc = neg(bvec(k + 1));
            cfg.curves[TwistName::a] = bp(ca, TwistName::x);
            cfg.curves[TwistName::b] = separating(g, k + 1);
            cfg.curves[TwistName::c] = bp(cc, TwistName::z);
            cfg.curves[TwistName::d] = separating(g, k);
            cfg.curves[TwistName::x] = bp(ca, TwistName::a);
            cfg.curves[TwistName::y] = separating(g, 1);
            cfg.curves[TwistName::z] = bp(cc, TwistName::c);
            cfg.complement = {{k, {TwistName::d}, false},
                              {g - k - 1, {TwistName::b}, true},
                              {0, {TwistName::a, TwistName::c}, false}};
            break;
        }
        case Figure::fig2_right: {
            if (params.kind == sym::SurfaceKind::closed)
                throw ParameterError("fig2_right requires a punctured or bordered surface");
            if (g < 4) throw ParameterError("fig2_right requires g >= 4");
            if (k != g - 2) throw ParameterError("fig2_right is the k = g-2 configuration");
            const HClass ca = bvec(g - 1), cc = neg(bvec(g - 1));
            cfg.curves[TwistName::a] = bp(ca, TwistName::x);
            cfg.curves[TwistName::b] = separating(g, g);
            cfg.curves[TwistName::c] = bp(cc, TwistName::z);
            cfg.curves[TwistName::d] = separating(g, g - 2);
            cfg.curves[TwistName::x] = bp(ca, TwistName::a);
            cfg.curves[TwistName::y] = separating(g, 2);
            cfg.curves[TwistName::z] = bp(cc, TwistName::c);
            cfg.complement = {{g - 2, {TwistName::d}, false},
                              {0, {TwistName::b}, true},
                              {1, {TwistName::a, TwistName::c}, false}};
            break;
        }
    }

    // pants sides are figure-independent: x cuts off {a,d}, y {b,d}, z {c,d}
    cfg.curves[TwistName::x].pants_side = {TwistName::a, TwistName::d};
    cfg.curves[TwistName::y].pants_side = {TwistName::b, TwistName::d};
    cfg.curves[TwistName::z].pants_side = {TwistName::c, TwistName::d};
    return cfg;
}

ConfigCheck check_config(const LanternConfig& cfg) {
    ConfigCheck out;
    const int g = cfg.params.genus;
    const bool marked = cfg.params.kind != sym::SurfaceKind::closed;

    HClass sum(g);
    for (auto n : {TwistName::a, TwistName::b, TwistName::c, TwistName::d})
        sum = sum + cfg.curves.at(n).homology;
    out.boundary_sum_zero = sum.is_zero();

    out.separating_classes_zero = true;
    out.bp_pairs_match = true;
    for (const auto& [n, ci] : cfg.curves) {
        if (ci.separating) {
            if (!ci.homology.is_zero()) out.separating_classes_zero = false;
        } else {
            const auto& partner = cfg.curves.at(ci.partner);
            if (partner.separating || partner.partner != n || !(partner.homology == ci.homology) ||
                ci.homology.is_zero())
                out.bp_pairs_match = false;
        }
    }

    out.enclosure_sums_ok = true;
    for (auto n : {TwistName::x, TwistName::y, TwistName::z}) {
        const auto& ci = cfg.curves.at(n);
        HClass s(g);
        for (auto m : ci.pants_side) s = s + cfg.curves.at(m).homology;
        if (!(s == ci.homology)) out.enclosure_sums_ok = false;
    }

    // chi(lantern) = -2; pieces contribute 2 - 2*genus - #boundaries, minus 1
    // if they carry the puncture or border
    i64 chi = -2;
    int marked_pieces = 0;
    for (const auto& p : cfg.complement) {
        chi += 2 - 2 * static_cast<i64>(p.genus) - static_cast<i64>(p.boundary.size());
        if (p.has_marking && marked) {
            chi -= 1;
            ++marked_pieces;
        }
    }
    const i64 chi_surface = marked ? 1 - 2 * static_cast<i64>(g) : 2 - 2 * static_cast<i64>(g);
    out.euler_ok = (chi == chi_surface) && (!marked || marked_pieces == 1);

    // separating-genus labels, computed from the complementary pieces
    auto piece_with = [&](TwistName n) -> const Piece* {
        for (const auto& p : cfg.complement)
            if (p.boundary.size() == 1 && p.boundary[0] == n) return &p;
        return nullptr;
    };
    auto label_ok = [&](TwistName n) {
        const auto& ci = cfg.curves.at(n);
        if (!ci.separating) return true;
        int side = 0;
        bool side_marked = false;
        if (n == TwistName::y) {
            for (auto m : {TwistName::b, TwistName::d}) {
                const Piece* p = piece_with(m);
                if (!p) return false;
                side += p->genus;
                side_marked = side_marked || p->has_marking;
            }
        } else {
            const Piece* p = piece_with(n);
            if (!p) return false;
            side = p->genus;
            side_marked = p->has_marking;
        }
        const int other = g - side;
        if (marked) return ci.sep_genus == (side_marked ? other : side);
        return ci.sep_genus == side || ci.sep_genus == other;
    };
    out.genus_labels_ok = label_ok(TwistName::b) && label_ok(TwistName::d) && label_ok(TwistName::y);

    return out;
}

HEndo transvection_product(const TwistWord& word, const LanternConfig& config) {
    HEndo out = HEndo::identity(2 * config.params.genus);
    for (const auto& l : word.letters) {
        const auto it = config.curves.find(l.name);
        if (it == config.curves.end())
            throw ParameterError("twist word names a curve absent from the configuration");
        const HClass& v = it->second.homology;
        if (v.is_zero()) continue; // separating twists act trivially on H
        out = out.compose(l.exp > 0 ? sym::transvection(v) : sym::transvection_inverse(v));
    }
    return out;
}

} // namespace torelli::lantern
