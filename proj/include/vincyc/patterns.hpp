#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "vincyc/permutation.hpp"

namespace vincyc {

/// A classical pattern plus adjacency bonds and boundary anchors. Bond i
/// (1-based, i in 1..k-1) forces pattern entries i and i+1 onto consecutive
/// text positions. anchor_first pins entry 1 of the pattern to text position
/// 1; anchor_last pins the final entry to text position n.
struct VincularPattern {
    Permutation base;
    std::vector<int> bonds;  // sorted, distinct
    bool anchor_first = false;
    bool anchor_last = false;

    /// Grammar: optional '^', then groups (a bare digit, or '[...]' whose
    /// entries are pairwise bonded in order), then optional '$'. Entries above
    /// 9 are written comma-separated inside brackets. Examples: "[32][41]",
    /// "[21]3$", "^1[32]", "2[31]", "[231]".
    static VincularPattern parse(std::string_view text);

    /// Canonical spelling in the grammar above.
    std::string str() const;

    bool bonded(int slot) const;  // is (slot, slot+1) bonded, slot 1-based
};

VincularPattern parse_pattern(std::string_view text);

/// One concrete occurrence: the chosen text positions (ascending) and the
/// text values found there.
struct Occurrence {
    std::vector<int> positions;
    std::vector<int> values;
};

long long count_vincular(const Permutation& text, const VincularPattern& pat);
bool contains_vincular(const Permutation& text, const VincularPattern& pat);
std::optional<Occurrence> find_vincular(const Permutation& text, const VincularPattern& pat);

/// Pattern on a k-element witness set X = {x_1 < ... < x_k} of which only the
/// ranks in `indices` are visible in the text. The visible part behaves like
/// a vincular pattern (bonds on consecutive string slots, optional anchors);
/// every arrow (b, c) additionally requires sigma(x_b) = x_c where
/// sigma = theta_inv(text). Ranks that are not visible and not pinned by an
/// arrow only need room inside {1..n} to exist.
struct ArrowPattern {
    int k = 0;
    std::vector<int> indices;  // distinct ranks in 1..k, in text order
    std::vector<int> bonds;    // on string slots, 1..m-1
    bool anchor_first = false;
    bool anchor_last = false;
    std::vector<std::pair<int, int>> arrows;

    /// The visible part reduced to a permutation, carrying bonds and anchors.
    VincularPattern core() const;

    std::string str() const;  // e.g. "[23]1{1->4}"
};

/// Builds an arrow pattern from the vincular grammar, except that entries are
/// witness ranks and need not form a permutation ("2[41]" is valid). Every
/// rank in 1..k must be visible or touched by an arrow.
ArrowPattern make_arrow(std::string_view spelling, int k,
                        std::vector<std::pair<int, int>> arrows);

long long count_arrow(const Permutation& text, const ArrowPattern& pat);
bool contains_arrow(const Permutation& text, const ArrowPattern& pat);
std::optional<Occurrence> find_arrow(const Permutation& text, const ArrowPattern& pat);

/// Integer linear combination of pattern counts.
struct PatternTerm {
    long long coeff = 1;
    std::variant<VincularPattern, ArrowPattern> pattern;
};

struct PatternExpression {
    std::vector<PatternTerm> terms;
};

long long evaluate_expression(const Permutation& text, const PatternExpression& expr);

/// Reversal duality: counting pat in text equals counting
/// reverse_pattern(pat) in reverse(text). Bonds mirror, anchors swap.
VincularPattern reverse_pattern(const VincularPattern& pat);

/// The five obstructions whose absence in theta(p), together with
/// theta(p) starting with n, characterizes the 321-avoiding cyclic
/// permutations: [32][41], [14][23], [41][32], [23][14], [23]1$.
const std::vector<VincularPattern>& theorem_set();

/// theorem_set plus ^1[32]; a word avoids these six exactly when prepending
/// n+1 to it gives the theta-image of a member.
const std::vector<VincularPattern>& a_set();

/// Seven-term balance that vanishes exactly on members among cyclic
/// permutations' theta-images:
/// [231]+[23][41]+[24][31]+[32][41]+[14][23]+[41][32]-[24][13].
const PatternExpression& eq1_expression();

/// [32][41]+[14][23]+[41][32]+arrow([23]1,1->4); vanishes exactly on members
/// among cyclic permutations' theta-images.
const PatternExpression& arrow_obstruction_expression();

/// Excess of depth over n-1 for cyclic p, evaluated on theta(p):
/// 2[31]+[14][23]+[41][32]+[24][13]+[31][42].
const PatternExpression& depth_excess_expression();

/// Half the excess of inversion count over n-1 for cyclic p, on theta(p):
/// 2[31]+[14][23]+[41][32].
const PatternExpression& length_excess_expression();

// The arrow patterns used by the membership analysis and its identities.
const ArrowPattern& arrow_23_1_1to4();  // "[23]1", sigma(x1) = x4
const ArrowPattern& arrow_2_31_2to2();  // "2[31]", sigma(x2) = x2
const ArrowPattern& arrow_2_41_2to3();  // "2[41]", sigma(x2) = x3
const ArrowPattern& arrow_2_31_2to4();  // "2[31]", sigma(x2) = x4
const ArrowPattern& arrow_231_2to3();   // "[231]", sigma(x2) = x3

}  // namespace vincyc
