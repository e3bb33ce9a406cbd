#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "vincyc/patterns.hpp"
#include "vincyc/permutation.hpp"

namespace vincyc {

/// Linear scan for a descending triple.
bool avoids_classical_321(const Permutation& p);

// Five equivalent membership tests for the 321-avoiding cyclic permutations.
// They agree on every input; each takes a different route.

/// Cyclic and avoids classical 321.
bool is_member_direct(const Permutation& p);

/// theta(p) starts with n and avoids the five obstructions in theorem_set().
bool is_member_theorem(const Permutation& p);

/// Cyclic and depth equals inversion count.
bool is_member_depth(const Permutation& p);

/// theta(p) starts with n and the seven-term balance eq1_expression()
/// vanishes on it.
bool is_member_eq1(const Permutation& p);

/// theta(p) starts with n and the three obstructions plus the arrow term of
/// arrow_obstruction_expression() all vanish on it.
bool is_member_arrow(const Permutation& p);

/// Avoids all six patterns in a_set(). A word tau lies here exactly when
/// theta_inv(skew_sum(1, tau)) is a member one size up.
bool in_A(const Permutation& p);

struct PatternWitness {
    std::string pattern;
    std::vector<int> positions;
    std::vector<int> values;
};

struct MembershipReport {
    Permutation perm;
    bool direct = false;
    bool theorem = false;
    bool depth = false;
    bool eq1 = false;
    bool arrow = false;
    /// On failure: one witness per violated obstruction. The classical-321
    /// witness indexes into p itself; pattern witnesses index into theta(p).
    std::vector<PatternWitness> witnesses = {};
    std::vector<Cycle> cycles = {};

    bool member() const { return direct; }
    nlohmann::json to_json() const;
    std::string str() const;
};

MembershipReport explain(const Permutation& p);

}  // namespace vincyc
