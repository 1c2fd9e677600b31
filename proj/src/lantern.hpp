#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "free_group.hpp"
#include "symplectic.hpp"

namespace torelli::lantern {

using sym::HClass;
using sym::HEndo;
using sym::SurfaceParams;

/// The seven curves of a lantern: boundary curves a, b, c, d (d outer) and
/// interior curves x, y, z.
enum class TwistName { a, b, c, d, x, y, z };
std::string name_str(TwistName n);
extern const std::array<TwistName, 7> all_twists;

struct TwistLetter {
    TwistName name;
    int exp = 1; // +-1
};

/// A word in the seven twist generators. The boundary twists a, b, c, d
/// commute with all seven (their curves are disjoint from every curve in the
/// lantern), which the normal form exploits.
struct TwistWord {
    std::vector<TwistLetter> letters;

    TwistWord inverse() const;
    TwistWord operator*(const TwistWord& o) const;
    std::string str() const;
};

/// Canonical form in the group <x, y, z, central a..d | xyz = abcd>, i.e.
/// free on {x, y} times Z^4 after eliminating z through the lantern
/// relation. Two twist words are equal modulo the relation and centrality
/// iff their normal forms coincide.
struct TwistNormalForm {
    std::vector<std::int8_t> word;  // letters +-1 = x, +-2 = y, freely reduced
    std::array<i64, 4> central{};   // exponents of a, b, c, d

    bool operator==(const TwistNormalForm&) const = default;
};

TwistNormalForm lantern_normal_form(const TwistWord& w, bool b_trivial = false);
bool equal_mod_lantern(const TwistWord& lhs, const TwistWord& rhs, bool b_trivial = false);

/// The seven twists realized on pi_1 of the four-holed sphere with basepoint
/// on the outer boundary d. Inner boundary twists act trivially there; T_d
/// is global conjugation by the boundary word. The mirrored set inverts all
/// seven twists (with the interior curve z replaced by its reflection).
struct LanternTwists {
    bool mirrored = false;
    std::map<TwistName, fg::FreeAut> auts;

    const fg::FreeAut& at(TwistName n) const { return auts.at(n); }
};

LanternTwists lantern_twists(bool mirror = false);

/// Composes a twist word into a free-group automorphism (rightmost twist
/// applies first).
fg::FreeAut evaluate(const LanternTwists& tw, const TwistWord& w);

struct LanternRelationReport {
    bool pass = false;
    bool mirrored = false;
    bool mutation_control_fails = false;     // perturbed T_x must break the relation
    bool reversed_composition_passes = false; // T_z T_y T_x, expected false
    // generator images on both sides, for the certificate transcript
    std::vector<std::pair<std::string, std::string>> transcript;
};

LanternRelationReport verify_lantern_relation(bool mirror = false);

enum class PropId { p31a, p31b, p32, p33 };
std::string prop_id_str(PropId id);

TwistWord factorization_lhs(PropId id);
TwistWord factorization_rhs(PropId id);

struct FactorizationReport {
    PropId id{};
    bool rewriting_ok = false;
    bool automorphism_ok = false;
    bool punctured_variant_ok = true; // only 3.3 re-verifies with T_b trivial
    bool pass = false;
};

FactorizationReport verify_factorization(PropId id, bool mirror = false);

// --- embedded configurations (Figures 1 and 2) ------------------------------

enum class Figure { fig1_left, fig1_right, fig2_left, fig2_right };
std::string figure_str(Figure f);
Figure figure_for(PropId id);

struct CurveInfo {
    HClass homology;
    bool separating = false;
    int sep_genus = -1;               // labeled genus for separating curves
    TwistName partner{};              // bounding-pair partner otherwise
    std::vector<TwistName> pants_side; // boundary curves the interior curve cuts off
};

struct Piece {
    int genus = 0;
    std::vector<TwistName> boundary; // lantern boundary curves it attaches to
    bool has_marking = false;        // carries the puncture or border
};

struct LanternConfig {
    Figure figure{};
    SurfaceParams params;
    std::map<TwistName, CurveInfo> curves;
    std::vector<Piece> complement;
};

/// Canonical homology assignment for a figure: bounding-pair classes follow
/// the standard position of the bounding-pair tau value, separating curves
/// carry zero.
LanternConfig build_config(Figure figure, const SurfaceParams& params);

struct ConfigCheck {
    bool boundary_sum_zero = false;
    bool separating_classes_zero = false;
    bool bp_pairs_match = false;
    bool enclosure_sums_ok = false;
    bool euler_ok = false;
    bool genus_labels_ok = false;

    bool all() const {
        return boundary_sum_zero && separating_classes_zero && bp_pairs_match && enclosure_sums_ok &&
               euler_ok && genus_labels_ok;
    }
};

ConfigCheck check_config(const LanternConfig& config);

/// Homology shadow of a twist word: the composite of transvections along the
/// curves' classes (separating letters act trivially).
HEndo transvection_product(const TwistWord& word, const LanternConfig& config);

} // namespace torelli::lantern
