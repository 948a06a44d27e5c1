#pragma once

#include "rankdrop/facesplit.hpp"
#include "rankdrop/invariants.hpp"

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rankdrop {

/// The geometric reasons a k×9 (or k×4) matrix can drop rank, one per
/// theorem clause. Kinds up to BothSidesCollinearCrossRatio cover k ≤ 4,
/// the K5/K6 kinds cover the two larger cases, and the last three are
/// structural observations attached to reports for context.
enum class ConditionKind {
    RepeatedPair,
    CoincidentTripleOppositeLine,
    AllCoincident,
    BothSidesCollinearCrossRatio,
    K5LineAndBrackets,
    K6Brackets,
    K6LineJoubert,
    K6InvariantProportional,
    HomographyRelated,
    AsymmetricDoubleTriangle,
    Inherited,
};

/// Which side of a configuration a witness refers to.
enum class Side { X, Y };

const char* condition_kind_name(ConditionKind k);
const char* side_name(Side s);

/// One independently re-verifiable reason recorded in a Report. Field use by
/// kind:
///  - RepeatedPair: indices = the two coinciding rows.
///  - CoincidentTripleOppositeLine, AllCoincident: side = the coincident
///    side, indices = the rows involved.
///  - BothSidesCollinearCrossRatio: residuals = {the bracket residual}.
///  - K5LineAndBrackets: side = the collinear side, residuals = the 5 values.
///  - K6Brackets: residuals = the 30 values.
///  - K6LineJoubert: side = the collinear side, residuals = {the pairing}.
///  - K6InvariantProportional: the sextuples are in the report's
///    invariant_summary.
///  - HomographyRelated: homography or homography_p1 = the verified map.
///  - AsymmetricDoubleTriangle: indices = a reordering exhibiting the
///    coincidence pattern y₁=y₂, y₃=y₄, y₅=y₆, x₁=x₄, x₂=x₅, x₃=x₆.
///  - Inherited: indices = the deficient proper row subset, inner = the
///    subconfiguration's own reason.
struct Condition {
    ConditionKind kind;
    std::optional<Side> side;
    std::vector<std::size_t> indices;
    std::vector<Rat> residuals;
    std::optional<Homography> homography;
    std::optional<HomographyP1> homography_p1;
    std::shared_ptr<const Condition> inner;
};

/// Classification result. The rank is ground truth: deficient ⇔ rank < k.
/// Conditions are the explanation; a deficient report with no
/// deficiency-certifying condition is flagged unexplained instead of
/// guessing.
struct Report {
    std::size_t k = 0;
    std::size_t rank = 0;
    bool deficient = false;
    bool unexplained = false;
    std::vector<Condition> conditions;
    /// For k = 6: the bar-invariant sextuples of the x side and the y side.
    std::optional<std::pair<Sextuple, Sextuple>> invariant_summary;
};

/// True for kinds that by themselves imply rank deficiency (everything
/// except the contextual HomographyRelated / AsymmetricDoubleTriangle).
bool certifies_deficiency(ConditionKind k);

/// Full classification of 2..6 pairs in P²×P²: exact rank, inherited
/// conditions from proper subsets, and the new condition of the matching
/// theorem clause for the full index set.
Report classify(const Config& c);

/// Conditions Inherited(S, inner) for proper row subsets S with deficient
/// Z_S. With minimal_only (the default), a subset is suppressed when a
/// reported subset is contained in it; pass false for the full lattice.
std::vector<Condition> inherited_conditions(const Config& c, bool minimal_only = true);

/// The line-pair counterpart of inherited_conditions.
std::vector<Condition> inherited_conditions_p1(const ConfigP1& c, bool minimal_only = true);

/// The k = 4 residual [13]ₓ[24]ₓ[14]ᵧ[23]ᵧ − [14]ₓ[23]ₓ[13]ᵧ[24]ᵧ computed
/// on the P¹ reductions of the two (required collinear) sides. Zero together
/// with collinearity decides deficiency of the four pairs.
Rat check_k4_bracket(const Config& c);

/// The five k = 5 residuals, one per omitted index j (ascending): with
/// (i₁..i₄) the remaining indices ascending and the named side on a line,
///   [i₁i₃j][i₂i₄j]·⟨i₁i₄⟩⟨i₂i₃⟩ − [i₁i₄j][i₂i₃j]·⟨i₁i₃⟩⟨i₂i₄⟩,
/// where [··· ] are plane brackets of the other side and ⟨··⟩ are line
/// brackets of the named side's P¹ reduction.
std::array<Rat, 5> check_k5_brackets(const Config& c, Side line_side);

/// The thirty k = 6 residuals, one per ordered pair (p, s) of distinct
/// indices in lexicographic order: with (i, j, k, r) the remaining indices
/// ascending,
///   [ikp]ₓ[jrp]ₓ[irs]ᵧ[jks]ᵧ − [irp]ₓ[jkp]ₓ[iks]ᵧ[jrs]ᵧ.
std::array<Rat, 30> check_k6_brackets(const Config& c);

/// True when each side consists of exactly 3 distinct points, each appearing
/// exactly twice, with all six (x, y) pairs distinct — equivalent to the
/// reordered pattern y₁=y₂, y₃=y₄, y₅=y₆, x₁=x₄, x₂=x₅, x₃=x₆.
bool is_asymmetric_double_triangle(const Config& c);

/// True when the bar invariants of the two sides are proportional (all 15
/// cross products vanish). Requires both sides in general position.
bool check_invariant_proportionality(const Config& c);

/// Classification of 2..4 pairs in P¹×P¹ against the k×4 matrix.
Report classify_p1(const ConfigP1& c);

} // namespace rankdrop
